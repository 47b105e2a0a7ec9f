#ifndef FRACSG_SPECFUN_HPP_
#define FRACSG_SPECFUN_HPP_

#include <complex>
#include <memory>

#include "fracsg/quadrature.hpp"

namespace fracsg {

using Complex = std::complex<double>;

// Parameters (alpha, beta) of the two-parameter Mittag-Leffler function.
// Both must be real and strictly positive.
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
};

void validate(const MLParams& params);

// Gamma function. Throws PoleError at 0, -1, -2, ... and OverflowError when
// the result is not a finite double (x above ~171.6).
double gamma_fn(double x);

// 1 / Gamma(x), defined as 0 at the poles of Gamma. Finite for every finite x.
double rgamma(double x);

// E_{alpha,beta}(z) = sum_k z^k / Gamma(beta + alpha k).
//
// Small |z| uses the power series with Neumaier-compensated summation as long
// as the summation is well conditioned. Failing that, and for |z|^(1/alpha)
// up to 50, the series is retried in binary128 under the same conditioning
// test. Everything else goes through numerical
// inversion of the Laplace transform s^(alpha-beta) / (s^alpha - z) on an
// optimal parabolic contour, plus the residues of the poles it leaves to its
// right. Returns +inf (or a complex infinity) past the double range.
// Throws ConvergenceError when no admissible contour exists.
Complex ml_eval(const MLParams& params, Complex z);
double ml_eval(const MLParams& params, double z);

// d/dz E_{alpha,1}(lambda z^alpha) = lambda z^(alpha-1) E_{alpha,alpha}(lambda z^alpha)
// for alpha in (0, 1] and z > 0.
double ml_deriv(double alpha, double lambda, double z);

// Wright function Psi_{-alpha,beta}(z) = sum_k (-z)^k / (k! Gamma(beta - alpha k))
// for alpha in (0, 1), real beta and z >= 0.
//
// The series alternates through terms far larger than the sum, which decays
// like exp(-Y(z)), Y(z) = (1-alpha) (alpha^alpha z)^(1/(1-alpha)). Partial
// sums run in binary128; when the largest term is big enough for that to lose
// absolute accuracy below ~1e-22 the sum is redone in MPFR with enough bits
// to absorb the cancellation. Past the cutoff z_cut (the point in the
// decaying tail where |Psi| drops below 1e-18) operator() returns 0. Logically
// immutable; the lazily grown MPFR coefficient table is mutex-guarded, so
// instances are safe to share across threads.
class WrightFunction {
 public:
  static constexpr double kCutoffLevel = 1e-18;
  static constexpr int kMaxTerms = 10000;

  WrightFunction(double alpha, double beta);

  // Shared instance from a small process-wide cache; construction is the
  // expensive part (cutoff search, coefficient tables).
  static WrightFunction cached(double alpha, double beta);

  double operator()(double z) const;
  // Raw series value, no clipping at z_cut.
  double series(double z) const;

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double z_cut() const { return z_cut_; }

  // Exponent Y(z) of the super-exponential decay and its derivative.
  double decay_exponent(double z) const;
  double decay_rate(double z) const;
  // Inverse of decay_exponent.
  double point_with_decay(double y) const;

 private:
  struct Coefficients;

  double alpha_;
  double beta_;
  double z_cut_ = 0.0;
  std::shared_ptr<const Coefficients> coeffs_;
};

double wright_eval(double alpha, double beta, double z);

// integral_0^inf z^n Psi_{-alpha,beta}(z) dz by composite Gauss-Legendre on
// [0, z_max] (z_max = z_cut unless quad.z_max > 0). Throws ConvergenceError
// when the estimated tail beyond z_max exceeds quad.tol * max(1, |I|).
double wright_moment(double alpha, double beta, int n, const QuadSpec& quad = {});

// |integral_0^inf Psi_{-alpha,beta-alpha}(t) exp(-t z) dt - E_{alpha,beta}(-z)|.
double laplace_identity_residual(double alpha, double beta, double z,
                                 const QuadSpec& quad = {});

}  // namespace fracsg

#endif  // FRACSG_SPECFUN_HPP_
