#ifndef FRACSG_NORMCORE_HPP_
#define FRACSG_NORMCORE_HPP_

#include <functional>
#include <string>

#include <Eigen/Dense>

namespace fracsg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Which l^p norm a computation uses. P1, P2 and PInf select closed forms.
class NormSpec {
 public:
  enum class Kind { P1, P2, PInf, General };

  static NormSpec p1() { return NormSpec(Kind::P1, 1.0); }
  static NormSpec p2() { return NormSpec(Kind::P2, 2.0); }
  static NormSpec pinf() { return NormSpec(Kind::PInf, 0.0); }
  // p in [1, inf); p = 1 and p = 2 collapse onto P1 / P2.
  static NormSpec general(double p);
  // Parses "1", "2", "inf" or any p >= 1.
  static NormSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  bool has_closed_form() const { return kind_ != Kind::General; }
  std::string label() const;

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  NormSpec(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

// Value of a one-sided limit together with an uncertainty estimate.
struct LimitEstimate {
  double value = 0.0;
  double uncertainty = 0.0;
  bool converged = false;
};

double norm(const Vector& v, const NormSpec& spec);

// Operator norm induced by `spec`: max column sum (P1), largest singular value
// (P2, power iteration), max row sum (PInf).
double operator_norm(const Matrix& a, const NormSpec& spec);

// One evaluation of a difference quotient and a bound on its floating-point
// error.
struct QuotientSample {
  double value = 0.0;
  double error = 0.0;
};

// lim_{eps -> 0+} q(eps) for a difference quotient that is linear in eps to
// leading order. Samples eps_k = 1e-2 * 2^-k, k = 0..20, applies two levels
// of Richardson extrapolation and stops when successive extrapolants differ
// by less than 1e-9.
LimitEstimate one_sided_limit(const std::function<QuotientSample(double)>& quotient);

// Largest eigenvalue of a symmetric matrix by shifted power iteration
// (relative Rayleigh-quotient change 1e-12, at most 10000 iterations).
QuotientSample symmetric_power_iteration(const Matrix& sym);

// Right defined semi-inner-product
//   <v, w> = [lim_{eps->0+} (||w + eps v|| - ||w||) / eps] ||w||,
// evaluated numerically. <v, 0> = 0.
LimitEstimate semi_inner_limit(const Vector& v, const Vector& w, const NormSpec& spec);

// Closed forms of the same quantity for P1, P2 and PInf. Throws
// UnsupportedNormError for General(p).
double semi_inner(const Vector& v, const Vector& w, const NormSpec& spec);

// |D_t^+ ||v(t)|| - <v'(t), v(t)> / ||v(t)|||, with the Dini derivative
// estimated from forward differences. Throws DomainError when ||v(t)|| = 0.
double dini_derivative_check(const std::function<Vector(double)>& v,
                             const std::function<Vector(double)>& dv, double t,
                             const NormSpec& spec);

// Logarithmic norm mu(A) = sup <Av, v> / ||v||^2 by closed form:
// P2 -> largest eigenvalue of (A + A^T)/2, P1 -> max column of
// a_jj + sum_{i != j} |a_ij|, PInf -> the same over rows.
double log_norm(const Matrix& a, const NormSpec& spec);

// lim_{eps->0+} (||I + eps A||_op - 1) / eps, evaluated numerically.
LimitEstimate log_norm_limit(const Matrix& a, const NormSpec& spec);

}  // namespace fracsg

#endif  // FRACSG_NORMCORE_HPP_
