#include <doctest.h>

#include <cmath>

#include "fracsg/errors.hpp"
#include "fracsg/quadrature.hpp"

using namespace fracsg;

TEST_CASE("gauss-legendre: weights and exactness") {
  for (int n : {1, 2, 5, 20, 40}) {
    const GaussRule r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for polynomials of degree 2n - 1.
    const int deg = 2 * n - 1;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weights[i] * std::pow(r.nodes[i], deg - 1);
    CHECK(acc == doctest::Approx(2.0 / deg).epsilon(1e-13));
  }
}

TEST_CASE("composite rule converges and reports failures") {
  QuadSpec q;
  q.tol = 1e-13;
  auto res = integrate_doubling<double>([](double x) { return std::exp(-x) * std::cos(3 * x); },
                                        0.0, 20.0, q);
  const double exact = 0.1 + std::exp(-20.0) * (3 * std::sin(60.0) - std::cos(60.0)) / 10.0;
  CHECK(res.value == doctest::Approx(exact).epsilon(1e-12));
  q.max_panels = 8;
  q.nodes_per_panel = 2;
  CHECK_THROWS_AS(integrate_doubling<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0, q),
                  ConvergenceError);
  QuadSpec bad;
  bad.tol = -1.0;
  CHECK_THROWS_AS(validate(bad), DomainError);
}
