#ifndef FRACSG_SEMIGROUP_HPP_
#define FRACSG_SEMIGROUP_HPP_

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "fracsg/normcore.hpp"
#include "fracsg/quadrature.hpp"

namespace fracsg {

// Eigendecomposition A = V diag(lambda) V^-1.
struct SpectralData {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd vectors;
  Eigen::MatrixXcd inverse;
  double condition = 1.0;  // ||V||_1 ||V^-1||_1
};

// Dense N x N generator with its eigendecomposition computed once at
// construction. Immutable afterwards.
class Generator {
 public:
  static constexpr double kMaxCondition = 1e8;

  explicit Generator(Matrix a);

  const Matrix& matrix() const { return a_; }
  Eigen::Index dim() const { return a_.rows(); }
  bool symmetric() const { return symmetric_; }
  // Set only when the cache exists and its condition estimate is below 1e8.
  bool diagonalizable() const { return diagonalizable_; }
  const std::optional<SpectralData>& spectral() const { return spectral_; }

 private:
  Matrix a_;
  bool symmetric_ = false;
  bool diagonalizable_ = false;
  std::optional<SpectralData> spectral_;
};

// exp(A) by scaling and squaring around the degree-13 Pade approximant; the
// squaring count comes from ||A||_1. Throws OverflowError on non-finite output.
Matrix expm(const Matrix& a);

// exp(tA) x, t >= 0.
Vector expm_action(const Generator& a, double t, const Vector& x);

// E_{alpha,beta}(t^alpha A) x = V diag(E_{alpha,beta}(t^alpha lambda_k)) V^-1 x
// for alpha, beta in (0, 1]. Throws NotDiagonalizableError without a usable
// eigenbasis.
Vector frac_action_spectral(const Generator& a, double alpha, double beta, double t,
                            const Vector& x);

// integral_0^inf Psi_{-alpha,beta-alpha}(z) exp(t^alpha z A) x dz for
// alpha in (0, 1), by composite Gauss-Legendre on [0, z_max]. With
// quad.z_max <= 0 the truncation point is found by doubling the decay
// exponent Y(z) and bisecting back to where
// |Psi(z)| exp(t^alpha z max(mu_2(A), 0)) < 1e-2 tol. The quadrature
// tolerance is quad.tol * ||x||_2. Throws ConvergenceError when the estimated
// tail exceeds that tolerance.
Vector frac_action_subordination(const Generator& a, double alpha, double beta, double t,
                                 const Vector& x, const QuadSpec& quad = {});

enum class ActionMethod { Spectral, Subordination };

const char* to_string(ActionMethod method);
ActionMethod parse_action_method(const std::string& text);

// One row of a verification sweep for ||S_t x|| <= E_{alpha,beta}(t^alpha mu) ||x||.
struct BoundReport {
  double alpha = 1.0;
  double beta = 1.0;
  double t = 0.0;
  NormSpec norm = NormSpec::p2();
  double mu = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = false;
  std::string status = "ok";
};

// lhs <= rhs (1 + 1e-8) + 1e-12.
bool bound_holds(double lhs, double rhs);

// Fills a BoundReport from lhs = ||S_t^{alpha,beta}(A) x||, mu = log_norm(A),
// rhs = E_{alpha,beta}(t^alpha mu) ||x||. With the subordination method and
// alpha = 1 the classical semigroup exp(tA) is used (requires beta = 1).
BoundReport bound_check(const Generator& a, double alpha, double beta, double t,
                        const Vector& x, const NormSpec& spec,
                        ActionMethod method = ActionMethod::Spectral,
                        const QuadSpec& quad = {});

}  // namespace fracsg

#endif  // FRACSG_SEMIGROUP_HPP_
