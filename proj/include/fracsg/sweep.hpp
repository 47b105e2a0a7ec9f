#ifndef FRACSG_SWEEP_HPP_
#define FRACSG_SWEEP_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fracsg/normcore.hpp"
#include "fracsg/semigroup.hpp"

namespace fracsg {

// Mixed cycles through the other three by case index.
enum class Ensemble { GeneralRandom, SymmetricNegDef, Tridiagonal, Mixed };

const char* to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& text);

enum class OutputFormat { CSV, JSON };

struct SweepConfig {
  std::uint64_t seed = 42;
  int cases = 1000;
  int dim_max = 8;
  std::vector<double> alphas = {0.3, 0.5, 0.7, 0.9, 1.0};
  std::vector<double> betas = {0.5, 1.0};
  std::vector<double> times = {0.1, 1.0, 10.0};
  std::vector<NormSpec> norms = {NormSpec::p1(), NormSpec::p2(), NormSpec::pinf()};
  Ensemble ensemble = Ensemble::Mixed;
  ActionMethod method = ActionMethod::Spectral;
  double tol = 1e-8;  // quadrature tolerance for the subordination method
  std::string output_path;
  OutputFormat format = OutputFormat::CSV;
};

// Throws DomainError unless cases >= 1, dim_max >= 1, the grids are non-empty,
// alphas and betas lie in (0, 1], times >= 0 and every norm has a closed form.
void validate(const SweepConfig& config);

struct SweepRow {
  int case_index = 0;
  int dim = 0;
  Ensemble ensemble = Ensemble::GeneralRandom;
  BoundReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // case order
  int violations = 0;          // status ok and holds = false
  int failures = 0;            // status != ok
  double max_rel_excess = 0.0;  // max (lhs - rhs) / |rhs| over ok rows
};

// Per-case generator: std::mt19937_64 seeded with splitmix64(seed ^ splitmix64(case)).
// Uniform doubles take the top 53 bits of each draw.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t case_index);
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  int integer(int lo, int hi);         // inclusive

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Ensemble e, int n, CaseRng& rng);

// Worker count: hardware concurrency capped by FRACSG_THREADS when set.
int sweep_threads();

// Case i takes (alpha, beta, t, norm, ensemble) from the grids in mixed-radix
// order of i, then draws its dimension, matrix and x from CaseRng(seed, i).
// Rows are identical for any thread count.
SweepResult run_sweep(const SweepConfig& config, int threads = 0);

}  // namespace fracsg

#endif  // FRACSG_SWEEP_HPP_
