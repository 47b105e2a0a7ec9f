#include "fracsg/specfun.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ml_inversion.hpp"

namespace fracsg {
namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Neumaier compensated sum, applied per component.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

constexpr double kSeriesRadius = 5.0;
constexpr int kSeriesMaxTerms = 2000;
// Accept the series only if eps * sum|terms| stays below this fraction of |E|.
constexpr double kSeriesConditionLimit = 1e-13;

// Returns false when the series is not usable at z (too many terms or
// too much cancellation); the caller then switches to contour inversion.
bool ml_series(double alpha, double beta, Complex z, Complex* out) {
  const double az = std::abs(z);
  if (az > kSeriesRadius || std::pow(az, 1.0 / alpha) > 40.0) return false;
  CompensatedSum re, im;
  double abs_sum = 0.0;
  Complex power(1.0, 0.0);
  const Complex log_z = std::log(z);
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const double arg = beta + alpha * k;
    Complex term;
    if (arg < 170.0) {
      term = power / std::tgamma(arg);
      power *= z;
    } else {
      term = std::exp(static_cast<double>(k) * log_z - std::lgamma(arg));
    }
    re.add(term.real());
    im.add(term.imag());
    const double mag = std::abs(term);
    abs_sum += mag;
    const double current = std::hypot(re.value(), im.value());
    // Terms are monotonically decreasing once (alpha k)^alpha exceeds |z|.
    const bool past_peak = std::pow(alpha * (k + 1), alpha) > 2.0 * az;
    if (past_peak && mag + prev <= 1e-17 * current) {
      if (abs_sum * std::numeric_limits<double>::epsilon() > kSeriesConditionLimit * current) {
        return false;
      }
      *out = Complex(re.value(), im.value());
      return true;
    }
    prev = mag;
  }
  return false;
}

// Same series in binary128 for moderate |z|^(1/alpha), where the double sum
// cancels too much (e.g. E_{1,1}(-20) = e^-20 from terms of size 20^20/20!).
constexpr double kQuadSeriesReach = 50.0;
constexpr double kQuadConditionLimit = 1e-15;

bool ml_series_quad(double alpha, double beta, Complex z, Complex* out) {
  const double az = std::abs(z);
  if (std::pow(az, 1.0 / alpha) > kQuadSeriesReach) return false;
  using quad = __float128;
  const quad zr = z.real(), zi = z.imag();
  quad sr = 0, si = 0, pr = 1, pi = 0, abs_sum = 0, prev = 0;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    const quad arg = static_cast<quad>(beta) + static_cast<quad>(alpha) * k;
    const quad c = arg < 1700 ? 1 / tgammaq(arg) : expq(-lgammaq(arg));
    const quad tr = pr * c, ti = pi * c;
    sr += tr;
    si += ti;
    const quad npr = pr * zr - pi * zi;
    pi = pr * zi + pi * zr;
    pr = npr;
    const quad mag = hypotq(tr, ti);
    abs_sum += mag;
    const quad current = hypotq(sr, si);
    const bool past_peak = std::pow(alpha * (k + 1), alpha) > 2.0 * az;
    if (past_peak && mag + prev <= static_cast<quad>(1e-20) * current) {
      if (abs_sum * FLT128_EPSILON > static_cast<quad>(kQuadConditionLimit) * current) return false;
      *out = Complex(static_cast<double>(sr), static_cast<double>(si));
      return true;
    }
    prev = mag;
  }
  return false;
}

}  // namespace

void validate(const MLParams& params) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    throw DomainError("Mittag-Leffler alpha must be finite and > 0, got " +
                      std::to_string(params.alpha));
  }
  if (!(params.beta > 0.0) || !std::isfinite(params.beta)) {
    throw DomainError("Mittag-Leffler beta must be finite and > 0, got " +
                      std::to_string(params.beta));
  }
}

double gamma_fn(double x) {
  if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
  }
  const double value = std::tgamma(x);
  if (!std::isfinite(value)) {
    throw OverflowError("gamma_fn: Gamma(" + std::to_string(x) + ") overflows");
  }
  return value;
}

double rgamma(double x) {
  if (std::isnan(x)) throw DomainError("rgamma: NaN argument");
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return std::exp(-std::lgamma(x));
  if (x < -170.0) {
    // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
    const double r = x - 2.0 * std::floor(0.5 * x);
    const double s = std::sin(std::numbers::pi * r);
    return s * std::exp(std::lgamma(1.0 - x)) / std::numbers::pi;
  }
  return 1.0 / std::tgamma(x);
}

Complex ml_eval(const MLParams& params, Complex z) {
  validate(params);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ml_eval: non-finite argument");
  }
  if (z == Complex(0.0, 0.0)) return {rgamma(params.beta), 0.0};
  Complex value;
  if (!ml_series(params.alpha, params.beta, z, &value) &&
      !ml_series_quad(params.alpha, params.beta, z, &value)) {
    value = detail::ml_laplace_inversion(params.alpha, params.beta, z);
  }
  if (z.imag() == 0.0) value.imag(0.0);
  if (std::isnan(value.real()) || std::isnan(value.imag())) {
    throw ConvergenceError("ml_eval: evaluation produced NaN");
  }
  return value;
}

double ml_eval(const MLParams& params, double z) { return ml_eval(params, Complex(z, 0.0)).real(); }

double ml_deriv(double alpha, double lambda, double z) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("ml_deriv: alpha must lie in (0, 1]");
  if (!(z > 0.0)) throw DomainError("ml_deriv: z must be > 0");
  if (lambda == 0.0) return 0.0;
  const double za = std::pow(z, alpha);
  return lambda * std::pow(z, alpha - 1.0) * ml_eval(MLParams{alpha, alpha}, lambda * za);
}

}  // namespace fracsg
