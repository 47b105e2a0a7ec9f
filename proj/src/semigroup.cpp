#include "fracsg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fracsg/errors.hpp"
#include "fracsg/specfun.hpp"

namespace fracsg {
namespace {

void check_fractional_params(double alpha, double beta, double t, const char* who) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
  }
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError(std::string(who) + ": beta must lie in (0, 1]");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError(std::string(who) + ": t must be >= 0");
}

void check_dims(const Generator& a, const Vector& x, const char* who) {
  if (x.size() != a.dim()) throw DomainError(std::string(who) + ": dimension mismatch");
}

// E_{alpha,beta} applied to a conjugate-closed spectrum: the lower half-plane
// reuses the upper one so conjugate pairs stay exactly conjugate.
Complex ml_on_spectrum(const MLParams& p, Complex z) {
  if (z.imag() < 0.0) return std::conj(ml_eval(p, std::conj(z)));
  return ml_eval(p, z);
}

}  // namespace

Generator::Generator(Matrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) {
    throw DomainError("Generator: matrix must be square and non-empty");
  }
  if (!a_.allFinite()) throw DomainError("Generator: matrix has non-finite entries");
  symmetric_ = a_ == a_.transpose();

  SpectralData data;
  if (symmetric_) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a_);
    if (solver.info() != Eigen::Success) return;
    data.eigenvalues = solver.eigenvalues().cast<Complex>();
    data.vectors = solver.eigenvectors().cast<Complex>();
    data.inverse = solver.eigenvectors().transpose().cast<Complex>();
  } else {
    Eigen::EigenSolver<Matrix> solver(a_);
    if (solver.info() != Eigen::Success) return;
    data.eigenvalues = solver.eigenvalues();
    data.vectors = solver.eigenvectors();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(data.vectors);
    if (!lu.isInvertible()) return;
    data.inverse = lu.inverse();
  }
  auto norm1 = [](const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
  data.condition = norm1(data.vectors) * norm1(data.inverse);

  const Eigen::MatrixXcd rebuilt =
      data.vectors * data.eigenvalues.asDiagonal() * data.inverse;
  const double scale = a_.norm();
  const double residual = (rebuilt - a_.cast<Complex>()).norm();
  if (!(residual <= 1e-10 * std::max(scale, std::numeric_limits<double>::min())) &&
      !(scale == 0.0 && residual == 0.0)) {
    return;
  }
  diagonalizable_ = data.condition < kMaxCondition;
  spectral_ = std::move(data);
}

Matrix expm(const Matrix& a) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const Eigen::Index n = a.rows();
  if (!a.allFinite()) throw OverflowError("expm: non-finite input");
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  if (squarings > 1000) throw OverflowError("expm: ||A||_1 too large");
  const Matrix as = a / std::ldexp(1.0, squarings);
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = as * as;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  const Matrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                         b[3] * a2 + b[1] * id;
  const Matrix u = as * u_inner;
  const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                   b[2] * a2 + b[0] * id;
  Matrix r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  if (!r.allFinite()) throw OverflowError("expm: result overflows");
  return r;
}

Vector expm_action(const Generator& a, double t, const Vector& x) {
  check_dims(a, x, "expm_action");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("expm_action: t must be >= 0");
  if (t == 0.0) return x;
  return expm(t * a.matrix()) * x;
}

Vector frac_action_spectral(const Generator& a, double alpha, double beta, double t,
                            const Vector& x) {
  check_fractional_params(alpha, beta, t, "frac_action_spectral");
  check_dims(a, x, "frac_action_spectral");
  if (!a.diagonalizable()) {
    throw NotDiagonalizableError("frac_action_spectral: generator has no well-conditioned eigenbasis");
  }
  const SpectralData& s = *a.spectral();
  const MLParams params{alpha, beta};
  const double scale = std::pow(t, alpha);

  Eigen::VectorXcd coeff = s.inverse * x.cast<Complex>();
  for (Eigen::Index k = 0; k < coeff.size(); ++k) {
    coeff[k] *= ml_on_spectrum(params, scale * s.eigenvalues[k]);
  }
  const Eigen::VectorXcd y = s.vectors * coeff;
  const Vector re = y.real();
  const double re_norm = re.norm();
  const double im_norm = y.imag().norm();
  if (std::isfinite(re_norm) && im_norm > 1e-9 * re_norm + 1e-300) {
    throw Error("frac_action_spectral: imaginary residue " + std::to_string(im_norm) +
                " exceeds 1e-9 * ||result||");
  }
  return re;
}

Vector frac_action_subordination(const Generator& a, double alpha, double beta, double t,
                                 const Vector& x, const QuadSpec& quad) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("frac_action_subordination: alpha must lie in (0, 1)");
  }
  check_fractional_params(alpha, beta, t, "frac_action_subordination");
  check_dims(a, x, "frac_action_subordination");
  validate(quad);

  const WrightFunction psi = WrightFunction::cached(alpha, beta - alpha);
  const double x_norm = x.norm();
  if (x_norm == 0.0) return Vector::Zero(x.size());
  if (t == 0.0) return rgamma(beta) * x;

  const double scale = std::pow(t, alpha);
  const double growth = scale * std::max(0.0, log_norm(a.matrix(), NormSpec::p2()));
  const double level = 1e-2 * quad.tol;
  auto envelope = [&](double z) { return std::abs(psi.series(z)) * std::exp(growth * z); };

  double z_max = quad.z_max;
  if (!(z_max > 0.0)) {
    // Doubling on the decay exponent Y(z) rather than on z: for alpha near 1
    // Y grows like z^(1/(1-alpha)) and doubling z overshoots by orders of
    // magnitude.
    double y = 4.0;
    double lo = 0.0;
    z_max = psi.point_with_decay(y);
    while (envelope(z_max) >= level) {
      lo = z_max;
      y *= 2.0;
      if (y > 1e4) throw ConvergenceError("frac_action_subordination: no truncation point");
      z_max = psi.point_with_decay(y);
    }
    if (lo > 0.0) {
      for (int i = 0; i < 30 && z_max - lo > 1e-3 * z_max; ++i) {
        const double mid = 0.5 * (lo + z_max);
        (envelope(mid) < level ? z_max : lo) = mid;
      }
    }
  }

  const Matrix& m = a.matrix();
  auto integrand = [&](double z) -> Vector {
    return psi.series(z) * (expm((scale * z) * m) * x);
  };
  QuadSpec scaled = quad;
  scaled.tol = quad.tol * x_norm;
  const auto result = integrate_doubling<Vector>(integrand, 0.0, z_max, scaled);

  const double rate = psi.decay_rate(z_max) - growth;
  const double edge = integrand(z_max).norm();
  const double tail = rate > 0.0 ? edge / rate : std::numeric_limits<double>::infinity();
  if (tail > scaled.tol) {
    throw ConvergenceError("frac_action_subordination: truncation tail " + std::to_string(tail) +
                           " exceeds tolerance");
  }
  return result.value;
}

const char* to_string(ActionMethod method) {
  return method == ActionMethod::Spectral ? "spectral" : "subordination";
}

ActionMethod parse_action_method(const std::string& text) {
  if (text == "spectral") return ActionMethod::Spectral;
  if (text == "subordination") return ActionMethod::Subordination;
  throw ParseError("unknown action method '" + text + "'");
}

bool bound_holds(double lhs, double rhs) { return lhs <= rhs * (1.0 + 1e-8) + 1e-12; }

BoundReport bound_check(const Generator& a, double alpha, double beta, double t,
                        const Vector& x, const NormSpec& spec, ActionMethod method,
                        const QuadSpec& quad) {
  check_fractional_params(alpha, beta, t, "bound_check");
  check_dims(a, x, "bound_check");
  BoundReport report;
  report.alpha = alpha;
  report.beta = beta;
  report.t = t;
  report.norm = spec;

  Vector y;
  if (method == ActionMethod::Spectral) {
    y = frac_action_spectral(a, alpha, beta, t, x);
  } else if (alpha < 1.0) {
    y = frac_action_subordination(a, alpha, beta, t, x, quad);
  } else if (beta == 1.0) {
    y = expm_action(a, t, x);
  } else {
    throw DomainError("bound_check: subordination needs alpha < 1 unless alpha = beta = 1");
  }

  report.mu = log_norm(a.matrix(), spec);
  report.lhs = norm(y, spec);
  report.rhs = ml_eval(MLParams{alpha, beta}, std::pow(t, alpha) * report.mu) * norm(x, spec);
  report.margin = report.rhs - report.lhs;
  if (!std::isfinite(report.lhs)) {
    report.status = "overflow";
    report.holds = false;
  } else {
    report.holds = bound_holds(report.lhs, report.rhs);
  }
  return report;
}

}  // namespace fracsg
