#include <complex>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracsg/errors.hpp"
#include "fracsg/fracode.hpp"
#include "fracsg/io.hpp"
#include "fracsg/normcore.hpp"
#include "fracsg/quadrature.hpp"
#include "fracsg/semigroup.hpp"
#include "fracsg/specfun.hpp"
#include "fracsg/sweep.hpp"

namespace py = pybind11;
using namespace fracsg;

namespace {

QuadSpec quad_spec(double tol, double z_max) {
  QuadSpec q;
  q.tol = tol;
  q.z_max = z_max;
  return q;
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["alpha"] = r.alpha;
  d["beta"] = r.beta;
  d["t"] = r.t;
  d["norm"] = r.norm.label();
  d["mu"] = r.mu;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["margin"] = r.margin;
  d["holds"] = r.holds;
  d["status"] = r.status;
  return d;
}

py::dict trajectory_dict(const Trajectory& tr) {
  Matrix states(static_cast<Eigen::Index>(tr.states.size()),
                tr.states.empty() ? 0 : tr.states.front().size());
  for (std::size_t k = 0; k < tr.states.size(); ++k) states.row(static_cast<Eigen::Index>(k)) = tr.states[k];
  py::dict d;
  d["times"] = tr.times;
  d["states"] = states;
  d["norm_history"] = tr.norm_history;
  return d;
}

ActionMethod method_of(const std::string& s) { return parse_action_method(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional semigroup growth bounds: special functions, log norms, evaluators";
  m.attr("__version__") = FRACSG_VERSION;

  // Exception hierarchy mirrors the C++ one. Translators run newest first,
  // so bases are registered before their subclasses.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto& domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<NotDiagonalizableError>(m, "NotDiagonalizableError", error.ptr());
  py::register_exception<UnsupportedNormError>(m, "UnsupportedNormError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  // special functions
  m.def("gamma", &gamma_fn, py::arg("x"));
  m.def("rgamma", &rgamma, py::arg("x"));
  m.def(
      "ml_eval",
      [](double alpha, double beta, std::complex<double> z) -> py::object {
        if (z.imag() == 0.0) return py::float_(ml_eval(MLParams{alpha, beta}, z.real()));
        return py::cast(ml_eval(MLParams{alpha, beta}, z));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("z"),
      "E_{alpha,beta}(z); a float for real z, a complex otherwise.");
  m.def("ml_deriv", &ml_deriv, py::arg("alpha"), py::arg("lam"), py::arg("z"));
  m.def("wright_eval", &wright_eval, py::arg("alpha"), py::arg("beta"), py::arg("z"));
  m.def(
      "wright_z_cut", [](double alpha, double beta) { return WrightFunction::cached(alpha, beta).z_cut(); },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "wright_moment",
      [](double alpha, double beta, int n, double tol, double z_max) {
        return wright_moment(alpha, beta, n, quad_spec(tol, z_max));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("n"), py::arg("tol") = 1e-10, py::arg("z_max") = 0.0);
  m.def(
      "laplace_identity_residual",
      [](double alpha, double beta, double z, double tol) {
        return laplace_identity_residual(alpha, beta, z, quad_spec(tol, 0.0));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("z"), py::arg("tol") = 1e-10);

  // norms
  m.def(
      "norm", [](const Vector& v, const std::string& p) { return norm(v, NormSpec::parse(p)); },
      py::arg("v"), py::arg("p") = "2");
  m.def(
      "semi_inner",
      [](const Vector& v, const Vector& w, const std::string& p) { return semi_inner(v, w, NormSpec::parse(p)); },
      py::arg("v"), py::arg("w"), py::arg("p") = "2");
  m.def(
      "semi_inner_limit",
      [](const Vector& v, const Vector& w, const std::string& p) {
        const LimitEstimate e = semi_inner_limit(v, w, NormSpec::parse(p));
        return py::make_tuple(e.value, e.uncertainty, e.converged);
      },
      py::arg("v"), py::arg("w"), py::arg("p") = "2", "(value, uncertainty, converged)");
  m.def(
      "log_norm", [](const Matrix& a, const std::string& p) { return log_norm(a, NormSpec::parse(p)); },
      py::arg("a"), py::arg("p") = "2");
  m.def(
      "log_norm_limit",
      [](const Matrix& a, const std::string& p) {
        const LimitEstimate e = log_norm_limit(a, NormSpec::parse(p));
        return py::make_tuple(e.value, e.uncertainty, e.converged);
      },
      py::arg("a"), py::arg("p") = "2", "(value, uncertainty, converged)");
  m.def(
      "operator_norm", [](const Matrix& a, const std::string& p) { return operator_norm(a, NormSpec::parse(p)); },
      py::arg("a"), py::arg("p") = "2");

  // semigroups
  m.def("expm", &expm, py::arg("a"));
  m.def(
      "expm_action", [](const Matrix& a, double t, const Vector& x) { return expm_action(Generator(a), t, x); },
      py::arg("a"), py::arg("t"), py::arg("x"));
  m.def(
      "frac_action",
      [](const Matrix& a, double alpha, double beta, double t, const Vector& x, const std::string& method,
         double tol) {
        const Generator g(a);
        if (method_of(method) == ActionMethod::Spectral) return frac_action_spectral(g, alpha, beta, t, x);
        return frac_action_subordination(g, alpha, beta, t, x, quad_spec(tol, 0.0));
      },
      py::arg("a"), py::arg("alpha"), py::arg("beta"), py::arg("t"), py::arg("x"),
      py::arg("method") = "spectral", py::arg("tol") = 1e-10,
      "E_{alpha,beta}(t^alpha A) x by eigendecomposition or by subordination.");
  m.def(
      "bound_check",
      [](const Matrix& a, double alpha, double beta, double t, const Vector& x, const std::string& p,
         const std::string& method, double tol) {
        return report_dict(bound_check(Generator(a), alpha, beta, t, x, NormSpec::parse(p), method_of(method),
                                       quad_spec(tol, 0.0)));
      },
      py::arg("a"), py::arg("alpha"), py::arg("beta"), py::arg("t"), py::arg("x"), py::arg("p") = "2",
      py::arg("method") = "spectral", py::arg("tol") = 1e-10);

  // fractional ODE
  m.def(
      "laplacian_1d", [](int n) { return laplacian_1d(n).matrix(); }, py::arg("n"));
  m.def(
      "solve_volterra",
      [](const Matrix& a, double alpha, const Vector& u0, double t_final, int steps) {
        return trajectory_dict(solve_volterra(Generator(a), alpha, u0, t_final, steps));
      },
      py::arg("a"), py::arg("alpha"), py::arg("u0"), py::arg("t_final"), py::arg("steps"));
  m.def(
      "contraction_demo",
      [](int n, double alpha, double t_final, int steps, double perturbation, const std::string& p) {
        const ContractionResult c = contraction_demo(n, alpha, t_final, steps, perturbation, NormSpec::parse(p));
        py::dict d = trajectory_dict(c.trajectory);
        py::list contraction, growth;
        for (const BoundReport& r : c.contraction) contraction.append(report_dict(r));
        for (const BoundReport& r : c.growth) growth.append(report_dict(r));
        d["contraction"] = contraction;
        d["growth"] = growth;
        d["monotone"] = c.monotone;
        d["max_norm_ratio"] = c.max_norm_ratio;
        d["passed"] = c.pass();
        return d;
      },
      py::arg("n") = 64, py::arg("alpha") = 0.5, py::arg("t_final") = 1.0, py::arg("steps") = 512,
      py::arg("perturbation") = 0.0, py::arg("p") = "2");

  // sweep
  m.def(
      "run_sweep",
      [](std::uint64_t seed, int cases, int dim_max, std::vector<double> alphas, std::vector<double> betas,
         std::vector<double> times, std::vector<std::string> norms, const std::string& ensemble,
         const std::string& method, double tol, int threads) {
        SweepConfig c;
        c.seed = seed;
        c.cases = cases;
        c.dim_max = dim_max;
        c.alphas = std::move(alphas);
        c.betas = std::move(betas);
        c.times = std::move(times);
        c.norms.clear();
        for (const std::string& s : norms) c.norms.push_back(NormSpec::parse(s));
        c.ensemble = parse_ensemble(ensemble);
        c.method = method_of(method);
        c.tol = tol;
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = run_sweep(c, threads);
        }
        py::list rows;
        for (const SweepRow& row : r.rows) {
          py::dict d = report_dict(row.report);
          d["case"] = row.case_index;
          d["dim"] = row.dim;
          d["ensemble"] = to_string(row.ensemble);
          rows.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["violations"] = r.violations;
        out["failures"] = r.failures;
        out["max_rel_excess"] = r.max_rel_excess;
        out["json"] = sweep_json(c, r).dump();
        return out;
      },
      py::arg("seed") = 42, py::arg("cases") = 1000, py::arg("dim_max") = 8,
      py::arg("alphas") = std::vector<double>{0.3, 0.5, 0.7, 0.9, 1.0},
      py::arg("betas") = std::vector<double>{0.5, 1.0}, py::arg("times") = std::vector<double>{0.1, 1.0, 10.0},
      py::arg("norms") = std::vector<std::string>{"1", "2", "inf"}, py::arg("ensemble") = "mixed",
      py::arg("method") = "spectral", py::arg("tol") = 1e-8, py::arg("threads") = 0);
}
