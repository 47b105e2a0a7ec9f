#include <mpfr.h>
#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fracsg/specfun.hpp"

namespace fracsg {

using quad_t = __float128;

namespace {

// Owning mpfr_t; movable so it can live in a vector.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  MpReal(MpReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  MpReal& operator=(MpReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  ~MpReal() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Largest term below which the binary128 sum is trusted (absolute error
// about 1e-34 * max term, so ~1e-22).
constexpr double kQuadTrustedPeak = 1e12;

}  // namespace

struct WrightFunction::Coefficients {
  double alpha;
  double beta;
  std::vector<quad_t> c;  // c_k = 1 / (k! Gamma(beta - alpha k))

  mutable std::mutex mp_mutex;
  mutable mpfr_prec_t mp_prec = 0;
  mutable std::vector<MpReal> mp_c;

  quad_t coefficient(int k) const {
    const quad_t y = static_cast<quad_t>(beta) - static_cast<quad_t>(alpha) * k;
    const quad_t log_fact = lgammaq(static_cast<quad_t>(k) + 1);
    if (y > 0) return expq(-log_fact - lgammaq(y));
    if (y == floorq(y)) return 0;  // 1/Gamma at a pole
    // 1/Gamma(y) = sin(pi y) Gamma(1 - y) / pi for y < 0.
    const quad_t r = y - 2 * floorq(y / 2);
    return sinq(M_PIq * r) / M_PIq * expq(lgammaq(1 - y) - log_fact);
  }

  quad_t at(int k) const {
    return k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : coefficient(k);
  }

  void extend_to(int k) {
    while (static_cast<int>(c.size()) <= k) c.push_back(coefficient(static_cast<int>(c.size())));
  }

  double peak_index(double z) const {
    return std::pow(std::pow(alpha, alpha) * z, 1.0 / (1.0 - alpha));
  }

  static bool converged(int k, double k_peak, double mag, double total) {
    return k >= 20 && k > k_peak && (mag <= 1e-16 * std::abs(total) || mag < 1e-60);
  }

  // Binary128 sum; *peak receives the largest |term|, *last the final index.
  quad_t sum_quad(double z, quad_t* peak, int* last) const {
    const double k_peak = peak_index(z);
    const quad_t minus_z = -static_cast<quad_t>(z);
    quad_t total = 0, power = 1, prev = 0;
    *peak = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
      const quad_t term = at(k) * power;
      total += term;
      power *= minus_z;
      *peak = std::max(*peak, fabsq(term));
      const quad_t mag = fabsq(term) + fabsq(prev);
      if (converged(k, k_peak, static_cast<double>(mag), static_cast<double>(total))) {
        *last = k;
        return total;
      }
      prev = term;
    }
    throw ConvergenceError("Wright series did not converge within " +
                           std::to_string(kMaxTerms) + " terms at z = " + std::to_string(z));
  }

  void mp_coefficient(int k, mpfr_ptr out, mpfr_prec_t prec) const {
    MpReal y(prec), g(prec), f(prec);
    mpfr_set_d(y.get(), alpha, MPFR_RNDN);
    mpfr_mul_ui(y.get(), y.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_d_sub(y.get(), beta, y.get(), MPFR_RNDN);
    mpfr_fac_ui(f.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    if (mpfr_sgn(y.get()) > 0) {
      mpfr_gamma(g.get(), y.get(), MPFR_RNDN);
      mpfr_mul(g.get(), g.get(), f.get(), MPFR_RNDN);
      mpfr_ui_div(out, 1, g.get(), MPFR_RNDN);
      return;
    }
    if (mpfr_integer_p(y.get())) {
      mpfr_set_zero(out, 1);
      return;
    }
    // 1/Gamma(y) = sin(pi y) Gamma(1 - y) / pi, reducing y mod 2 first.
    mpfr_ui_sub(g.get(), 1, y.get(), MPFR_RNDN);
    mpfr_gamma(g.get(), g.get(), MPFR_RNDN);
    mpfr_div(g.get(), g.get(), f.get(), MPFR_RNDN);
    mpfr_div_ui(f.get(), y.get(), 2, MPFR_RNDN);
    mpfr_floor(f.get(), f.get());
    mpfr_mul_ui(f.get(), f.get(), 2, MPFR_RNDN);
    mpfr_sub(y.get(), y.get(), f.get(), MPFR_RNDN);
    mpfr_const_pi(f.get(), MPFR_RNDN);
    mpfr_mul(y.get(), y.get(), f.get(), MPFR_RNDN);
    mpfr_sin(y.get(), y.get(), MPFR_RNDN);
    mpfr_mul(g.get(), g.get(), y.get(), MPFR_RNDN);
    mpfr_div(out, g.get(), f.get(), MPFR_RNDN);
  }

  // Coefficient table valid to at least `prec` bits and k <= k_max. Caller
  // holds mp_mutex.
  void mp_extend(int k_max, mpfr_prec_t prec) const {
    if (prec > mp_prec) {
      mp_c.clear();
      mp_prec = prec;
    }
    while (static_cast<int>(mp_c.size()) <= k_max) {
      MpReal v(mp_prec);
      mp_coefficient(static_cast<int>(mp_c.size()), v.get(), mp_prec);
      mp_c.push_back(std::move(v));
    }
  }

  double sum_mpfr(double z, double log2_peak, int k_hint) const {
    // Enough bits for the cancellation plus ~80 bits of the result.
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::ceil(log2_peak)) + 96;
    prec = (prec + 63) / 64 * 64;
    std::lock_guard<std::mutex> lock(mp_mutex);
    const double k_peak = peak_index(z);
    MpReal total(prec), power(prec), term(prec), minus_z(prec);
    mpfr_set_zero(total.get(), 1);
    mpfr_set_ui(power.get(), 1, MPFR_RNDN);
    mpfr_set_d(minus_z.get(), -z, MPFR_RNDN);
    double prev = 0.0;
    for (int k = 0; k < kMaxTerms; ++k) {
      if (k >= static_cast<int>(mp_c.size()) || prec > mp_prec) {
        mp_extend(std::max(k, k_hint + 8), prec);
      }
      mpfr_mul(term.get(), mp_c[static_cast<std::size_t>(k)].get(), power.get(), MPFR_RNDN);
      mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
      mpfr_mul(power.get(), power.get(), minus_z.get(), MPFR_RNDN);
      const double mag = std::abs(mpfr_get_d(term.get(), MPFR_RNDN));
      if (converged(k, k_peak, mag + prev, mpfr_get_d(total.get(), MPFR_RNDN))) {
        return mpfr_get_d(total.get(), MPFR_RNDN);
      }
      prev = mag;
    }
    throw ConvergenceError("Wright series did not converge within " +
                           std::to_string(kMaxTerms) + " terms at z = " + std::to_string(z));
  }

  double sum(double z) const {
    if (z == 0.0) return static_cast<double>(at(0));
    quad_t peak = 0;
    int last = 0;
    const quad_t total = sum_quad(z, &peak, &last);
    if (peak <= static_cast<quad_t>(kQuadTrustedPeak)) return static_cast<double>(total);
    return sum_mpfr(z, static_cast<double>(log2q(peak)), last);
  }
};

WrightFunction::WrightFunction(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("Wright function requires alpha in (0, 1), got " + std::to_string(alpha));
  }
  if (!std::isfinite(beta)) throw DomainError("Wright function requires finite beta");

  auto coeffs = std::make_shared<Coefficients>();
  coeffs->alpha = alpha;
  coeffs->beta = beta;
  coeffs->extend_to(32);

  auto magnitude = [&](double z) {
    // Warm the cache with the terms the cutoff search touches.
    coeffs->extend_to(std::min(kMaxTerms - 1, static_cast<int>(3.0 * coeffs->peak_index(z)) + 64));
    return std::abs(coeffs->sum(z));
  };

  // The tail is monotone once Y(z) is a few units: bracket the crossing of
  // kCutoffLevel by stepping the decay exponent (z itself is a poor scale
  // when alpha is close to 1), then bisect in z.
  double y = 4.0;
  double hi = point_with_decay(y);
  double lo = 0.0;
  if (magnitude(hi) < kCutoffLevel) {
    while (y > 1e-6 && magnitude(point_with_decay(y)) < kCutoffLevel) y *= 0.5;
    if (y <= 1e-6) {
      z_cut_ = hi;
      coeffs_ = std::move(coeffs);
      return;
    }
    lo = point_with_decay(y);
    hi = point_with_decay(2.0 * y);
  } else {
    while (magnitude(hi) >= kCutoffLevel) {
      lo = hi;
      y *= 1.25;
      hi = point_with_decay(y);
    }
  }
  while (hi - lo > 1e-7 * hi) {
    const double mid = 0.5 * (lo + hi);
    (magnitude(mid) >= kCutoffLevel ? lo : hi) = mid;
  }
  z_cut_ = hi;
  coeffs_ = std::move(coeffs);
}

WrightFunction WrightFunction::cached(double alpha, double beta) {
  static std::mutex mutex;
  static std::map<std::pair<double, double>, WrightFunction> cache;
  const auto key = std::make_pair(alpha, beta);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  WrightFunction fresh(alpha, beta);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() >= 256) cache.clear();
  return cache.emplace(key, std::move(fresh)).first->second;
}

double WrightFunction::decay_exponent(double z) const {
  return (1.0 - alpha_) * std::pow(std::pow(alpha_, alpha_) * z, 1.0 / (1.0 - alpha_));
}

double WrightFunction::decay_rate(double z) const {
  if (z <= 0.0) return 0.0;
  return std::pow(std::pow(alpha_, alpha_) * z, 1.0 / (1.0 - alpha_)) / z;
}

double WrightFunction::point_with_decay(double y) const {
  return std::pow(y / (1.0 - alpha_), 1.0 - alpha_) / std::pow(alpha_, alpha_);
}

double WrightFunction::series(double z) const {
  if (!(z >= 0.0)) throw DomainError("Wright function requires z >= 0");
  return coeffs_->sum(z);
}

double WrightFunction::operator()(double z) const {
  if (!(z >= 0.0)) throw DomainError("Wright function requires z >= 0");
  if (z > z_cut_) return 0.0;
  return series(z);
}

double wright_eval(double alpha, double beta, double z) {
  if (!(z >= 0.0)) throw DomainError("wright_eval: z must be >= 0");
  return WrightFunction(alpha, beta)(z);
}

namespace {

// Integrates f(z) Psi(z) over [0, z_max] and checks the tail beyond z_max,
// assuming f grows at most like z^n.
double wright_integral(const WrightFunction& psi, const QuadSpec& quad, double growth_power,
                       double extra_decay, const std::function<double(double)>& weight) {
  const double z_max = quad.z_max > 0.0 ? quad.z_max : psi.z_cut();
  auto integrand = [&](double z) { return weight(z) * psi.series(z); };
  const auto result = integrate_doubling<double>(integrand, 0.0, z_max, quad);

  // Tail of a super-exponentially decaying integrand: f(z)/|(log f)'(z)|.
  const double rate = psi.decay_rate(z_max) + extra_decay - growth_power / z_max;
  const double edge = std::abs(integrand(z_max));
  const double tail = rate > 0.0 ? edge / rate : std::numeric_limits<double>::infinity();
  if (tail > quad.tol * std::max(1.0, std::abs(result.value))) {
    throw ConvergenceError("Wright integral: tail estimate " + std::to_string(tail) +
                           " beyond z_max = " + std::to_string(z_max) + " exceeds tolerance");
  }
  return result.value;
}

}  // namespace

double wright_moment(double alpha, double beta, int n, const QuadSpec& quad) {
  if (n < 0) throw DomainError("wright_moment: n must be >= 0");
  const WrightFunction psi(alpha, beta);
  return wright_integral(psi, quad, n, 0.0, [n](double z) { return std::pow(z, n); });
}

double laplace_identity_residual(double alpha, double beta, double z, const QuadSpec& quad) {
  if (!(z >= 0.0)) throw DomainError("laplace_identity_residual: z must be >= 0");
  const WrightFunction psi(alpha, beta - alpha);
  const double transform =
      wright_integral(psi, quad, 0.0, z, [z](double t) { return std::exp(-t * z); });
  return std::abs(transform - ml_eval(MLParams{alpha, beta}, -z));
}

}  // namespace fracsg
