#include "fracsg/normcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fracsg/errors.hpp"

namespace fracsg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTieTolerance = 1e-12;

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DomainError(std::string(who) + ": matrix must be square and non-empty");
  }
}

void require_same_size(const Vector& v, const Vector& w, const char* who) {
  if (v.size() != w.size()) throw DomainError(std::string(who) + ": vector sizes differ");
}

}  // namespace

NormSpec NormSpec::general(double p) {
  if (!(p >= 1.0) || std::isnan(p)) throw DomainError("NormSpec: p must be >= 1");
  if (std::isinf(p)) return pinf();
  if (p == 1.0) return p1();
  if (p == 2.0) return p2();
  return NormSpec(Kind::General, p);
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "pinf") return pinf();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot parse norm '" + text + "'");
  }
  if (used != text.size()) throw ParseError("cannot parse norm '" + text + "'");
  return general(p);
}

std::string NormSpec::label() const {
  switch (kind_) {
    case Kind::P1:
      return "1";
    case Kind::P2:
      return "2";
    case Kind::PInf:
      return "inf";
    case Kind::General:
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", p_);
  return buf;
}

double norm(const Vector& v, const NormSpec& spec) {
  switch (spec.kind()) {
    case NormSpec::Kind::P1:
      return v.lpNorm<1>();
    case NormSpec::Kind::P2:
      return v.stableNorm();
    case NormSpec::Kind::PInf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
    case NormSpec::Kind::General:
      break;
  }
  const double scale = v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x) / scale, spec.p());
  return scale * std::pow(acc, 1.0 / spec.p());
}

QuotientSample symmetric_power_iteration(const Matrix& sym) {
  const Eigen::Index n = sym.rows();
  // Shift by a spectral-radius bound so the iterated matrix is PSD.
  const double shift = sym.cwiseAbs().rowwise().sum().maxCoeff();
  if (shift == 0.0) return {0.0, 0.0};
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 1.0 + 0.25 * std::sin(1.0 + static_cast<double>(i));
  v.normalize();
  double rho = 0.0;
  double change = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 10000; ++iter) {
    Vector w = sym * v + shift * v;
    const double next = v.dot(w);
    const double wn = w.norm();
    if (wn == 0.0) break;
    v = w / wn;
    change = std::abs(next - rho);
    rho = next;
    if (iter > 0 && change <= 1e-12 * std::abs(rho)) break;
  }
  // Rayleigh quotient of the final iterate.
  const double lambda = v.dot(sym * v);
  return {lambda, change + 4.0 * kEps * shift * static_cast<double>(n)};
}

double operator_norm(const Matrix& a, const NormSpec& spec) {
  switch (spec.kind()) {
    case NormSpec::Kind::P1:
      return a.cwiseAbs().colwise().sum().maxCoeff();
    case NormSpec::Kind::PInf:
      return a.cwiseAbs().rowwise().sum().maxCoeff();
    case NormSpec::Kind::P2:
      return std::sqrt(std::max(0.0, symmetric_power_iteration(a.transpose() * a).value));
    case NormSpec::Kind::General:
      break;
  }
  throw UnsupportedNormError("operator_norm: no induced norm for p = " + spec.label());
}

LimitEstimate one_sided_limit(const std::function<QuotientSample(double)>& quotient) {
  constexpr int kLevels = 21;
  std::vector<double> d, r1, r2;
  std::vector<double> err;
  LimitEstimate est;
  double last_diff = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kLevels; ++k) {
    const double eps = 1e-2 * std::ldexp(1.0, -k);
    const QuotientSample s = quotient(eps);
    d.push_back(s.value);
    err.push_back(s.error);
    if (k >= 1) r1.push_back(2.0 * d[k] - d[k - 1]);
    if (k >= 2) r2.push_back((4.0 * r1[k - 1] - r1[k - 2]) / 3.0);
    if (k >= 3) {
      const double cur = r2.back();
      const double prev = r2[r2.size() - 2];
      last_diff = std::abs(cur - prev);
      // (8 d_k - 6 d_{k-1} + d_{k-2}) / 3 amplifies rounding by at most 5.
      const double rounding = 5.0 * std::max({err[k], err[k - 1], err[k - 2], err[k - 3]});
      est.value = cur;
      est.uncertainty = last_diff + rounding + 4.0 * kEps * std::abs(cur);
      if (last_diff < 1e-9 * std::max(1.0, std::abs(cur))) {
        est.converged = true;
        return est;
      }
    }
  }
  return est;
}

LimitEstimate semi_inner_limit(const Vector& v, const Vector& w, const NormSpec& spec) {
  require_same_size(v, w, "semi_inner_limit");
  const double nw = norm(w, spec);
  if (nw == 0.0) return {0.0, 0.0, true};
  const double nv = norm(v, spec);
  const double slack = (4.0 + static_cast<double>(w.size())) * kEps;
  LimitEstimate est = one_sided_limit([&](double eps) {
    const double q = (norm(w + eps * v, spec) - nw) / eps;
    return QuotientSample{q, slack * (nw + eps * nv) / eps};
  });
  est.value *= nw;
  est.uncertainty *= nw;
  return est;
}

double semi_inner(const Vector& v, const Vector& w, const NormSpec& spec) {
  require_same_size(v, w, "semi_inner");
  switch (spec.kind()) {
    case NormSpec::Kind::P2:
      return v.dot(w);
    case NormSpec::Kind::P1: {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < w.size(); ++i) {
        acc += w[i] > 0.0 ? v[i] : (w[i] < 0.0 ? -v[i] : std::abs(v[i]));
      }
      return w.lpNorm<1>() * acc;
    }
    case NormSpec::Kind::PInf: {
      const double nw = norm(w, spec);
      if (nw == 0.0) return 0.0;
      double best = -std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::abs(w[i]) >= (1.0 - kTieTolerance) * nw) {
          best = std::max(best, w[i] > 0.0 ? v[i] : -v[i]);
        }
      }
      return nw * best;
    }
    case NormSpec::Kind::General:
      break;
  }
  throw UnsupportedNormError("semi_inner: no closed form for p = " + spec.label() +
                             "; use semi_inner_limit");
}

double dini_derivative_check(const std::function<Vector(double)>& v,
                             const std::function<Vector(double)>& dv, double t,
                             const NormSpec& spec) {
  const Vector vt = v(t);
  const double nv = norm(vt, spec);
  if (nv == 0.0) throw DomainError("dini_derivative_check: ||v(t)|| = 0");
  const double slack = (4.0 + static_cast<double>(vt.size())) * kEps;
  const LimitEstimate dini = one_sided_limit([&](double eps) {
    const double q = (norm(v(t + eps), spec) - nv) / eps;
    return QuotientSample{q, slack * nv / eps};
  });
  const Vector dvt = dv(t);
  const double inner =
      spec.has_closed_form() ? semi_inner(dvt, vt, spec) : semi_inner_limit(dvt, vt, spec).value;
  return std::abs(dini.value - inner / nv);
}

double log_norm(const Matrix& a, const NormSpec& spec) {
  require_square(a, "log_norm");
  switch (spec.kind()) {
    case NormSpec::Kind::P2: {
      const Matrix sym = 0.5 * (a + a.transpose());
      Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) {
        throw ConvergenceError("log_norm: symmetric eigensolver did not converge");
      }
      return solver.eigenvalues().maxCoeff();
    }
    case NormSpec::Kind::P1: {
      const Matrix off = a.cwiseAbs();
      Vector col = off.colwise().sum().transpose();
      col += a.diagonal() - off.diagonal();
      return col.maxCoeff();
    }
    case NormSpec::Kind::PInf: {
      const Matrix off = a.cwiseAbs();
      Vector row = off.rowwise().sum();
      row += a.diagonal() - off.diagonal();
      return row.maxCoeff();
    }
    case NormSpec::Kind::General:
      break;
  }
  throw UnsupportedNormError("log_norm: no closed form for p = " + spec.label());
}

LimitEstimate log_norm_limit(const Matrix& a, const NormSpec& spec) {
  require_square(a, "log_norm_limit");
  const Eigen::Index n = a.rows();
  if (spec.kind() == NormSpec::Kind::P2) {
    // ||I + eps A||_2^2 = 1 + eps * lambda_max(A + A^T + eps A^T A), so
    // (||I + eps A||_2 - 1) / eps = lambda / (sqrt(1 + eps lambda) + 1)
    // without cancellation.
    const Matrix sym = a + a.transpose();
    const Matrix gram = a.transpose() * a;
    return one_sided_limit([&](double eps) {
      const QuotientSample lam = symmetric_power_iteration(sym + eps * gram);
      const double denom = std::sqrt(std::max(0.0, 1.0 + eps * lam.value)) + 1.0;
      return QuotientSample{lam.value / denom, lam.error};
    });
  }
  if (!spec.has_closed_form()) {
    throw UnsupportedNormError("log_norm_limit: no induced norm for p = " + spec.label());
  }
  const double scale = operator_norm(a, spec);
  const Matrix id = Matrix::Identity(n, n);
  return one_sided_limit([&](double eps) {
    const double q = (operator_norm(id + eps * a, spec) - 1.0) / eps;
    return QuotientSample{q, 4.0 * static_cast<double>(n) * kEps * (1.0 + eps * scale) / eps};
  });
}

}  // namespace fracsg
