#ifndef FRACSG_QUADRATURE_HPP_
#define FRACSG_QUADRATURE_HPP_

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "fracsg/errors.hpp"

namespace fracsg {

// Discretization of an integral over [0, z_max] standing in for [0, inf).
// z_max <= 0 asks the caller to pick the truncation point itself.
struct QuadSpec {
  double z_max = 0.0;
  int panels = 4;
  int nodes_per_panel = 20;
  double tol = 1e-10;
  int max_panels = 1 << 14;
};

void validate(const QuadSpec& quad);

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

template <typename T>
struct QuadResult {
  T value;
  double error_estimate = 0.0;  // |I_{2m} - I_m| at termination
  int panels = 0;
  int evaluations = 0;
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Eigen::VectorXd& x) { return x.norm(); }

template <typename T>
T zero_like(const T& sample) {
  if constexpr (std::is_same_v<T, double>) {
    (void)sample;
    return 0.0;
  } else {
    return T::Zero(sample.size());
  }
}

}  // namespace detail

// Composite Gauss-Legendre over `panels` equal panels of [a, b].
template <typename T, typename F>
T integrate_panels(F&& f, double a, double b, int panels, const GaussRule& rule) {
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  T total{};
  bool first = true;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      T value = f(mid + half * rule.nodes[i]);
      if (first) {
        total = detail::zero_like(value);
        first = false;
      }
      total += (half * rule.weights[i]) * value;
    }
  }
  return total;
}

// Composite Gauss-Legendre with panel doubling: stops once two successive
// estimates differ by less than quad.tol (absolute).
template <typename T, typename F>
QuadResult<T> integrate_doubling(F&& f, double a, double b, const QuadSpec& quad) {
  validate(quad);
  const GaussRule rule = gauss_legendre(quad.nodes_per_panel);
  int panels = quad.panels;
  QuadResult<T> result{integrate_panels<T>(f, a, b, panels, rule), 0.0, panels,
                       panels * quad.nodes_per_panel};
  while (panels < quad.max_panels) {
    panels *= 2;
    T refined = integrate_panels<T>(f, a, b, panels, rule);
    result.evaluations += panels * quad.nodes_per_panel;
    const double diff = detail::magnitude(T(refined - result.value));
    result.value = std::move(refined);
    result.error_estimate = diff;
    result.panels = panels;
    if (diff < quad.tol) return result;
  }
  throw ConvergenceError("composite Gauss-Legendre did not reach tol=" +
                         std::to_string(quad.tol) + " within " +
                         std::to_string(quad.max_panels) + " panels");
}

}  // namespace fracsg

#endif  // FRACSG_QUADRATURE_HPP_
