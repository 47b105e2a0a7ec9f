#include "ml_inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fracsg/errors.hpp"

namespace fracsg::detail {
namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
// log of the double round-off unit.
const double kLogEps = std::log(std::numeric_limits<double>::epsilon());

struct ContourParams {
  double mu = 0.0;
  double h = 0.0;
  double n = kInf;  // node count; inf marks an unusable region
};

// Region bounded by two singularities with phi values phi_j < phi_j1.
ContourParams optimal_bounded(double phi_j, double phi_j1, double p, double q,
                              double log_epsilon) {
  constexpr double fac = 1.01;
  const double f_max = std::exp(log_epsilon - kLogEps);
  const double sq_phi_j = std::sqrt(phi_j);
  const double threshold = 2.0 * std::sqrt(log_epsilon - kLogEps);
  const double sq_phi_j1 = std::min(std::sqrt(phi_j1), threshold - sq_phi_j);

  double sq_bar_j = 0.0, sq_bar_j1 = 0.0, f_bar = 1.0;
  bool admissible = false;
  if (p < 1e-14 && q < 1e-14) {
    sq_bar_j = sq_phi_j;
    sq_bar_j1 = sq_phi_j1;
    admissible = true;
  } else if (p < 1e-14) {
    sq_bar_j = sq_phi_j;
    const double f_min =
        sq_phi_j > 0.0 ? fac * std::pow(sq_phi_j / (sq_phi_j1 - sq_phi_j), q) : fac;
    if (f_min < f_max) {
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fq = std::pow(f_bar, -1.0 / q);
      sq_bar_j1 = (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq);
      admissible = true;
    }
  } else if (q < 1e-14) {
    sq_bar_j1 = sq_phi_j1;
    const double f_min = fac * std::pow(sq_phi_j1 / (sq_phi_j1 - sq_phi_j), p);
    if (f_min < f_max) {
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fp = std::pow(f_bar, -1.0 / p);
      sq_bar_j = (2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp);
      admissible = true;
    }
  } else {
    double f_min =
        fac * (sq_phi_j + sq_phi_j1) / std::pow(sq_phi_j1 - sq_phi_j, std::max(p, q));
    if (f_min < f_max) {
      f_min = std::max(f_min, 1.5);
      f_bar = f_min + f_min / f_max * (f_max - f_min);
      const double fp = std::pow(f_bar, -1.0 / p);
      const double fq = std::pow(f_bar, -1.0 / q);
      const double w = -phi_j1 / log_epsilon;
      const double den = 2.0 + w - (1.0 + w) * fp + fq;
      sq_bar_j = ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den;
      sq_bar_j1 = (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den;
      admissible = true;
    }
  }
  if (!admissible) return {};

  const double log_eps_bar = log_epsilon - std::log(f_bar);
  const double w = -sq_bar_j1 * sq_bar_j1 / log_eps_bar;
  const double mu = std::pow(((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w), 2);
  const double h = -2.0 * kPi / log_eps_bar * (sq_bar_j1 - sq_bar_j) /
                   ((1.0 + w) * sq_bar_j + sq_bar_j1);
  const double n = std::ceil(std::sqrt(1.0 - log_eps_bar / mu) / h);
  return {mu, h, n};
}

// Unbounded region to the right of the singularity with value phi_j.
ContourParams optimal_unbounded(double phi_j, double p, double log_epsilon) {
  const double sq_phi_j = std::sqrt(phi_j);
  double phibar = phi_j > 0.0 ? phi_j * 1.01 : 0.01;
  double sq_phibar = std::sqrt(phibar);
  constexpr double f_min = 1.0, f_max = 10.0, f_tar = 5.0;

  double n = 0.0, a = 0.0, sq_mu = 0.0;
  for (int iter = 0;; ++iter) {
    const double log_eps_phi = log_epsilon / phibar;
    n = std::ceil(phibar / kPi * (1.0 - 1.5 * log_eps_phi + std::sqrt(1.0 - 2.0 * log_eps_phi)));
    a = kPi * n / phibar;
    sq_mu = sq_phibar * std::abs(4.0 - a) / std::abs(7.0 - std::sqrt(1.0 + 12.0 * a));
    const double f_bar = std::pow((sq_phibar - sq_phi_j) / sq_mu, -p);
    if (p < 1e-14 || (f_min < f_bar && f_bar < f_max) || iter >= 200) break;
    sq_phibar = std::pow(f_tar, -1.0 / p) * sq_mu + sq_phi_j;
    phibar = sq_phibar * sq_phibar;
  }
  double mu = sq_mu * sq_mu;
  double h = (-3.0 * a - 2.0 + 2.0 * std::sqrt(1.0 + 12.0 * a)) / (4.0 - a) / n;

  // Keep round-off under control when mu grows past what exp(mu) tolerates.
  const double threshold = log_epsilon - kLogEps;
  if (mu > threshold) {
    const double q_shift = std::abs(p) < 1e-14 ? 0.0 : std::pow(f_tar, -1.0 / p) * std::sqrt(mu);
    phibar = std::pow(q_shift + sq_phi_j, 2);
    if (phibar < threshold) {
      const double w = std::sqrt(kLogEps / (kLogEps - log_epsilon));
      const double u = std::sqrt(-phibar / kLogEps);
      mu = threshold;
      n = std::ceil(w * log_epsilon / 2.0 / kPi / (u * w - 1.0));
      h = std::sqrt(kLogEps / (kLogEps - log_epsilon)) / n;
    } else {
      return {};
    }
  }
  return {mu, h, n};
}

}  // namespace

Complex ml_laplace_inversion(double alpha, double beta, Complex z) {
  double log_epsilon = std::log(1e-15);

  // Poles s^alpha = z on the principal sheet.
  const double theta = std::arg(z);
  const double kmin = std::ceil(-alpha / 2.0 - theta / (2.0 * kPi));
  const double kmax = std::floor(alpha / 2.0 - theta / (2.0 * kPi));
  const double radius = std::pow(std::abs(z), 1.0 / alpha);
  struct Singularity {
    Complex s;
    double phi;
  };
  std::vector<Singularity> poles;
  for (double k = kmin; k <= kmax; k += 1.0) {
    const Complex s = std::polar(radius, (theta + 2.0 * k * kPi) / alpha);
    const double phi = 0.5 * (s.real() + std::abs(s));
    if (phi > 1e-15) poles.push_back({s, phi});
  }
  std::sort(poles.begin(), poles.end(),
            [](const Singularity& a, const Singularity& b) { return a.phi < b.phi; });

  // Singularities: origin first, then poles by increasing phi.
  std::vector<Singularity> sing;
  sing.push_back({Complex(0.0, 0.0), 0.0});
  sing.insert(sing.end(), poles.begin(), poles.end());
  const std::size_t count = sing.size();
  std::vector<double> phi(count + 1);
  for (std::size_t j = 0; j < count; ++j) phi[j] = sing[j].phi;
  phi[count] = kInf;
  std::vector<double> p(count, 1.0), q(count, 1.0);
  p[0] = std::max(0.0, -2.0 * (alpha - beta + 1.0));
  q[count - 1] = kInf;

  std::vector<std::size_t> regions;
  for (std::size_t j = 0; j < count; ++j) {
    if (phi[j] < log_epsilon - kLogEps && phi[j] < phi[j + 1]) regions.push_back(j);
  }
  if (regions.empty()) {
    throw ConvergenceError("Mittag-Leffler inversion: no admissible integration region");
  }

  std::vector<ContourParams> params(count);
  std::size_t best = regions.front();
  for (int attempt = 0;; ++attempt) {
    for (std::size_t j : regions) {
      params[j] = (j + 1 < count) ? optimal_bounded(phi[j], phi[j + 1], p[j], q[j], log_epsilon)
                                  : optimal_unbounded(phi[j], p[j], log_epsilon);
    }
    best = regions.front();
    for (std::size_t j : regions) {
      if (params[j].n < params[best].n) best = j;
    }
    if (params[best].n <= 200.0) break;
    if (attempt >= 30) {
      throw ConvergenceError("Mittag-Leffler inversion: contour needs too many nodes");
    }
    log_epsilon += std::log(10.0);
  }

  const auto [mu, h, n_nodes] = params[best];
  const long n = static_cast<long>(n_nodes);
  Complex sum(0.0, 0.0);
  for (long k = -n; k <= n; ++k) {
    const double u = h * static_cast<double>(k);
    const Complex s = mu * std::pow(Complex(1.0, u), 2);
    const Complex ds(-2.0 * mu * u, 2.0 * mu);
    sum += std::exp(s) * std::pow(s, alpha - beta) / (std::pow(s, alpha) - z) * ds;
  }
  Complex result = h * sum / Complex(0.0, 2.0 * kPi);

  for (std::size_t j = best + 1; j < count; ++j) {
    const Complex s = sing[j].s;
    result += std::pow(s, 1.0 - beta) * std::exp(s) / alpha;
  }
  return result;
}

}  // namespace fracsg::detail
