#ifndef FRACSG_FRACODE_HPP_
#define FRACSG_FRACODE_HPP_

#include <vector>

#include "fracsg/normcore.hpp"
#include "fracsg/semigroup.hpp"

namespace fracsg {

// (1/h^2) tridiag(1, -2, 1), h = 1/(N+1): Dirichlet Laplacian on (0, 1).
Generator laplacian_1d(int n);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<double> norm_history;  // ||states[k]||_2
};

// u(t) = u0 + 1/Gamma(alpha) int_0^t (t-s)^(alpha-1) A u(s) ds on the grid
// t_k = k T / steps. L1 weights b_j = (j+1)^(1-alpha) - j^(1-alpha):
//   (I - h^alpha Gamma(2-alpha) A) u_n = u_{n-1} - sum_{j=1}^{n-1} b_j (u_{n-j} - u_{n-j-1})
// with one LU factorization reused for every step. alpha = 1 is implicit Euler.
// T = 0 returns the single state u0.
Trajectory solve_volterra(const Generator& a, double alpha, const Vector& u0, double t_final,
                          int steps);

struct ContractionResult {
  Trajectory trajectory;
  std::vector<BoundReport> contraction;  // ||u(t_k)|| <= ||u0||
  std::vector<BoundReport> growth;       // ||u(t_k)|| <= E_{alpha,1}(t_k^alpha mu) ||u0||
  bool monotone = true;                  // norm_history non-increasing to 1e-10
  double max_norm_ratio = 0.0;           // max_k ||u(t_k)|| / ||u0||
  bool pass() const;                     // monotone and every contraction report holds
};

// Grid sample of sin(pi x) + perturbation * sin(3 pi x), x_i = i h.
Vector heat_initial_state(int n, double perturbation);

ContractionResult contraction_demo(int n, double alpha, double t_final, int steps,
                                   double perturbation = 0.0,
                                   const NormSpec& spec = NormSpec::p2());

}  // namespace fracsg

#endif  // FRACSG_FRACODE_HPP_
