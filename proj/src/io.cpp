#include "fracsg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "fracsg/errors.hpp"

namespace fracsg {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& field, int line) {
  const std::string f = trim(field);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(f, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (f.empty() || used != f.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + f + "'");
  }
  return v;
}

// JSON has no inf / nan; they go out as strings.
nlohmann::json json_real(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

}  // namespace

Matrix read_matrix_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty matrix file");
  ++line_no;
  line = trim(line);
  if (line.rfind("n=", 0) != 0) throw ParseError("line 1: expected 'n=<N>'");
  const std::string count = trim(line.substr(2));
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(count, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (count.empty() || used != count.size() || n < 1) {
    throw ParseError("line 1: bad dimension '" + count + "'");
  }

  Matrix a(n, n);
  for (long i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    }
    ++line_no;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (static_cast<long>(fields.size()) != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " columns, got " + std::to_string(fields.size()));
    }
    for (long j = 0; j < n; ++j) {
      a(i, j) = parse_real(fields[static_cast<std::size_t>(j)], line_no);
      if (!std::isfinite(a(i, j))) {
        throw ParseError("line " + std::to_string(line_no) + ": non-finite entry");
      }
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) throw ParseError("line " + std::to_string(line_no) + ": extra data");
  }
  return a;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix_csv(in);
}

void write_matrix_csv(std::ostream& out, const Matrix& a) {
  out << "n=" << a.rows() << "\n";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) out << ",";
      out << format_real(a(i, j));
    }
    out << "\n";
  }
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "case,alpha,beta,t,norm,mu,lhs,rhs,margin,holds,status\n";
  for (const SweepRow& row : result.rows) {
    const BoundReport& r = row.report;
    out << row.case_index << ',' << format_real(r.alpha) << ',' << format_real(r.beta) << ','
        << format_real(r.t) << ',' << r.norm.label() << ',' << format_real(r.mu) << ','
        << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << format_real(r.margin) << ','
        << (r.holds ? "true" : "false") << ',' << r.status << '\n';
  }
}

nlohmann::json sweep_json(const SweepConfig& c, const SweepResult& result) {
  nlohmann::json norms = nlohmann::json::array();
  for (const NormSpec& s : c.norms) norms.push_back(s.label());
  nlohmann::json meta = {
      {"seed", c.seed},
      {"version", FRACSG_VERSION},
      {"config",
       {{"cases", c.cases},
        {"dim_max", c.dim_max},
        {"alphas", c.alphas},
        {"betas", c.betas},
        {"times", c.times},
        {"norms", norms},
        {"ensemble", to_string(c.ensemble)},
        {"method", to_string(c.method)},
        {"tol", c.tol}}},
      {"summary",
       {{"cases", result.rows.size()},
        {"violations", result.violations},
        {"failures", result.failures},
        {"max_rel_excess", json_real(result.max_rel_excess)}}}};
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& row : result.rows) {
    const BoundReport& r = row.report;
    rows.push_back({{"case", row.case_index},
                    {"alpha", r.alpha},
                    {"beta", r.beta},
                    {"t", r.t},
                    {"norm", r.norm.label()},
                    {"mu", json_real(r.mu)},
                    {"lhs", json_real(r.lhs)},
                    {"rhs", json_real(r.rhs)},
                    {"margin", json_real(r.margin)},
                    {"holds", r.holds},
                    {"status", r.status}});
  }
  return {{"meta", meta}, {"rows", rows}};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool states) {
  out << "k,t,norm2";
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().size();
  if (states) {
    for (Eigen::Index i = 0; i < n; ++i) out << ",u" << i;
  }
  out << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << k << ',' << format_real(traj.times[k]) << ',' << format_real(traj.norm_history[k]);
    if (states) {
      for (Eigen::Index i = 0; i < n; ++i) out << ',' << format_real(traj.states[k][i]);
    }
    out << '\n';
  }
}

nlohmann::json trajectory_json(const TrajectoryMeta& m, const Trajectory& traj, bool states) {
  nlohmann::json meta = {{"seed", nullptr},
                         {"version", FRACSG_VERSION},
                         {"config",
                          {{"n", m.n},
                           {"alpha", m.alpha},
                           {"T", m.t_final},
                           {"steps", m.steps},
                           {"perturbation", m.perturbation},
                           {"dump_states", states}}}};
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    nlohmann::json row = {{"k", k}, {"t", traj.times[k]}, {"norm2", traj.norm_history[k]}};
    if (states) {
      const Vector& u = traj.states[k];
      row["state"] = std::vector<double>(u.data(), u.data() + u.size());
    }
    rows.push_back(std::move(row));
  }
  return {{"meta", meta}, {"rows", rows}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace fracsg
