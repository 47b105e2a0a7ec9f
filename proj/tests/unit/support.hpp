#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace testsupport {

// Hand-rolled generators for property tests; fixed seeds keep runs reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Eigen::VectorXd vector(int n, double scale = 1.0) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = uniform(-scale, scale);
    return v;
  }
  Eigen::MatrixXd matrix(int n, double scale = 1.0) {
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) a(i, j) = uniform(-scale, scale);
    return a;
  }
  // Vector with occasional exact zeros and exact ties, which exercise the
  // tie / zero branches of the closed forms.
  Eigen::VectorXd vector_with_ties(int n) {
    Eigen::VectorXd v = vector(n);
    for (int i = 0; i < n; ++i) {
      const double r = uniform(0.0, 1.0);
      if (r < 0.1) v[i] = 0.0;
      else if (r < 0.2 && i > 0) v[i] = -v[i - 1];
    }
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace testsupport
