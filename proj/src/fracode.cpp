#include "fracsg/fracode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracsg/errors.hpp"
#include "fracsg/specfun.hpp"

namespace fracsg {

Generator laplacian_1d(int n) {
  if (n < 2) throw DomainError("laplacian_1d: N must be >= 2");
  const double h = 1.0 / (n + 1);
  const double inv_h2 = 1.0 / (h * h);
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = -2.0 * inv_h2;
    if (i + 1 < n) {
      a(i, i + 1) = inv_h2;
      a(i + 1, i) = inv_h2;
    }
  }
  return Generator(std::move(a));
}

Trajectory solve_volterra(const Generator& a, double alpha, const Vector& u0, double t_final,
                          int steps) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("solve_volterra: alpha must lie in (0, 1]");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw DomainError("solve_volterra: T must be >= 0");
  }
  if (u0.size() != a.dim()) throw DomainError("solve_volterra: dimension mismatch");

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(u0);
  traj.norm_history.push_back(u0.norm());
  if (t_final == 0.0) return traj;
  if (steps < 4) throw DomainError("solve_volterra: steps must be >= 4");

  const double h = t_final / steps;
  const double w = std::pow(h, alpha) * gamma_fn(2.0 - alpha);
  const Eigen::Index n = a.dim();
  const Matrix system = Matrix::Identity(n, n) - w * a.matrix();
  const Eigen::PartialPivLU<Matrix> lu(system);
  if (!(std::abs(lu.determinant()) > 0.0)) {
    throw Error("solve_volterra: singular step matrix");
  }

  std::vector<double> b(static_cast<std::size_t>(steps));
  for (int j = 0; j < steps; ++j) {
    b[static_cast<std::size_t>(j)] = std::pow(j + 1.0, 1.0 - alpha) - std::pow(j, 1.0 - alpha);
  }
  // Differences u_{m+1} - u_m; the history sum is a convolution with b.
  std::vector<Vector> diffs;
  diffs.reserve(static_cast<std::size_t>(steps));
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);

  for (int step = 1; step <= steps; ++step) {
    Vector rhs = traj.states.back();
    for (int j = 1; j < step; ++j) {
      rhs -= b[static_cast<std::size_t>(j)] * diffs[static_cast<std::size_t>(step - 1 - j)];
    }
    Vector next = lu.solve(rhs);
    if (!next.allFinite()) throw Error("solve_volterra: non-finite state");
    diffs.push_back(next - traj.states.back());
    traj.times.push_back(step == steps ? t_final : step * h);
    traj.norm_history.push_back(next.norm());
    traj.states.push_back(std::move(next));
  }
  return traj;
}

bool ContractionResult::pass() const {
  return monotone && std::all_of(contraction.begin(), contraction.end(),
                                 [](const BoundReport& r) { return r.holds; });
}

Vector heat_initial_state(int n, double perturbation) {
  const double h = 1.0 / (n + 1);
  Vector u(n);
  for (int i = 0; i < n; ++i) {
    const double x = (i + 1) * h;
    u[i] = std::sin(std::numbers::pi * x) + perturbation * std::sin(3.0 * std::numbers::pi * x);
  }
  return u;
}

ContractionResult contraction_demo(int n, double alpha, double t_final, int steps,
                                   double perturbation, const NormSpec& spec) {
  const Generator lap = laplacian_1d(n);
  const Vector u0 = heat_initial_state(n, perturbation);
  ContractionResult out;
  out.trajectory = solve_volterra(lap, alpha, u0, t_final, steps);

  const double mu = log_norm(lap.matrix(), spec);
  const double n0 = norm(u0, spec);
  const MLParams params{alpha, 1.0};
  const auto& traj = out.trajectory;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const double t = traj.times[k];
    const double nk = norm(traj.states[k], spec);

    BoundReport c;
    c.alpha = alpha;
    c.beta = 1.0;
    c.t = t;
    c.norm = spec;
    c.mu = mu;
    c.lhs = nk;
    c.rhs = n0;
    c.margin = c.rhs - c.lhs;
    c.holds = bound_holds(c.lhs, c.rhs);
    out.contraction.push_back(c);

    BoundReport g = c;
    g.rhs = ml_eval(params, std::pow(t, alpha) * mu) * n0;
    g.margin = g.rhs - g.lhs;
    g.holds = bound_holds(g.lhs, g.rhs);
    out.growth.push_back(g);

    if (k > 0 && traj.norm_history[k] > traj.norm_history[k - 1] + 1e-10) out.monotone = false;
    out.max_norm_ratio = std::max(out.max_norm_ratio, n0 > 0.0 ? nk / n0 : 0.0);
  }
  return out;
}

}  // namespace fracsg
