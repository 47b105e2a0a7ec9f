#include "fracsg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "fracsg/errors.hpp"
#include "fracsg/fracode.hpp"

namespace fracsg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string status_of(const std::exception& e) {
  if (dynamic_cast<const NotDiagonalizableError*>(&e)) return "not_diagonalizable";
  if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "no_convergence";
  if (dynamic_cast<const PoleError*>(&e)) return "pole";
  if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
  return "error";
}

constexpr Ensemble kCycle[] = {Ensemble::GeneralRandom, Ensemble::SymmetricNegDef,
                               Ensemble::Tridiagonal};

SweepRow run_case(const SweepConfig& cfg, int index) {
  // Mixed-radix split of the case index over the parameter grids.
  std::size_t rest = static_cast<std::size_t>(index);
  auto pick = [&rest](std::size_t n) {
    const std::size_t i = rest % n;
    rest /= n;
    return i;
  };
  const double alpha = cfg.alphas[pick(cfg.alphas.size())];
  const double beta = cfg.betas[pick(cfg.betas.size())];
  const double t = cfg.times[pick(cfg.times.size())];
  const NormSpec spec = cfg.norms[pick(cfg.norms.size())];
  const Ensemble ens = cfg.ensemble == Ensemble::Mixed ? kCycle[pick(3)] : cfg.ensemble;

  CaseRng rng(cfg.seed, static_cast<std::uint64_t>(index));
  int n = rng.integer(1, cfg.dim_max);
  if (ens == Ensemble::Tridiagonal) n = std::max(n, 2);
  const Matrix a = random_matrix(ens, n, rng);
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);

  SweepRow row;
  row.case_index = index;
  row.dim = n;
  row.ensemble = ens;
  try {
    QuadSpec quad;
    quad.tol = cfg.tol;
    row.report = bound_check(Generator(a), alpha, beta, t, x, spec, cfg.method, quad);
  } catch (const std::exception& e) {
    BoundReport& r = row.report;
    r.alpha = alpha;
    r.beta = beta;
    r.t = t;
    r.norm = spec;
    r.mu = r.lhs = r.rhs = r.margin = std::nan("");
    r.holds = false;
    r.status = status_of(e);
  }
  return row;
}

}  // namespace

const char* to_string(Ensemble e) {
  switch (e) {
    case Ensemble::GeneralRandom:
      return "general";
    case Ensemble::SymmetricNegDef:
      return "symnegdef";
    case Ensemble::Tridiagonal:
      return "tridiagonal";
    case Ensemble::Mixed:
      break;
  }
  return "mixed";
}

Ensemble parse_ensemble(const std::string& text) {
  for (Ensemble e : {Ensemble::GeneralRandom, Ensemble::SymmetricNegDef, Ensemble::Tridiagonal,
                     Ensemble::Mixed}) {
    if (text == to_string(e)) return e;
  }
  throw ParseError("unknown ensemble '" + text + "' (general, symnegdef, tridiagonal, mixed)");
}

void validate(const SweepConfig& c) {
  if (c.cases < 1) throw DomainError("sweep: cases must be >= 1");
  if (c.dim_max < 1) throw DomainError("sweep: dim_max must be >= 1");
  if (c.alphas.empty() || c.betas.empty() || c.times.empty() || c.norms.empty()) {
    throw DomainError("sweep: parameter grids must be non-empty");
  }
  for (double a : c.alphas) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("sweep: alphas must lie in (0, 1]");
  }
  for (double b : c.betas) {
    if (!(b > 0.0 && b <= 1.0)) throw DomainError("sweep: betas must lie in (0, 1]");
  }
  for (double t : c.times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("sweep: times must be >= 0");
  }
  for (const NormSpec& s : c.norms) {
    if (!s.has_closed_form()) throw UnsupportedNormError("sweep: norms must be 1, 2 or inf");
  }
  if (!(c.tol > 0.0)) throw DomainError("sweep: tol must be positive");
}

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t case_index)
    : engine_(splitmix64(seed ^ splitmix64(case_index))) {}

double CaseRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double CaseRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int CaseRng::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Matrix random_matrix(Ensemble e, int n, CaseRng& rng) {
  if (n < 1) throw DomainError("random_matrix: n must be >= 1");
  auto uniform_block = [&] {
    Matrix b(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) b(i, j) = rng.uniform(-1.0, 1.0);
    }
    return b;
  };
  switch (e) {
    case Ensemble::GeneralRandom:
      return uniform_block();
    case Ensemble::SymmetricNegDef: {
      const Matrix b = uniform_block();
      Matrix a = -(b.transpose() * b + 0.1 * Matrix::Identity(n, n));
      // Exact symmetry so the symmetric eigensolver is used.
      return 0.5 * (a + a.transpose());
    }
    case Ensemble::Tridiagonal: {
      if (n < 2) throw DomainError("random_matrix: tridiagonal needs n >= 2");
      const double h = 1.0 / (n + 1);
      return laplacian_1d(n).matrix() * (h * h * rng.uniform(0.5, 2.0));
    }
    case Ensemble::Mixed:
      break;
  }
  throw DomainError("random_matrix: pick a concrete ensemble");
}

int sweep_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("FRACSG_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

SweepResult run_sweep(const SweepConfig& config, int threads) {
  validate(config);
  if (threads <= 0) threads = sweep_threads();
  threads = std::max(1, std::min(threads, config.cases));

  SweepResult result;
  result.rows.resize(static_cast<std::size_t>(config.cases));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.cases; i = next++) {
      result.rows[static_cast<std::size_t>(i)] = run_case(config, i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.max_rel_excess = -std::numeric_limits<double>::infinity();
  for (const SweepRow& row : result.rows) {
    const BoundReport& r = row.report;
    if (r.status != "ok") {
      ++result.failures;
      continue;
    }
    if (!r.holds) ++result.violations;
    if (std::isfinite(r.rhs)) {
      result.max_rel_excess =
          std::max(result.max_rel_excess, (r.lhs - r.rhs) / std::max(std::abs(r.rhs), DBL_MIN));
    }
  }
  return result;
}

}  // namespace fracsg
