#ifndef FRACSG_IO_HPP_
#define FRACSG_IO_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fracsg/fracode.hpp"
#include "fracsg/normcore.hpp"
#include "fracsg/sweep.hpp"

namespace fracsg {

// Matrix CSV: first line "n=<N>", then N rows of N comma-separated decimal
// floats. Blank trailing lines are ignored. Throws ParseError.
Matrix read_matrix_csv(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix_csv(std::ostream& out, const Matrix& a);

// %.17g, with inf / -inf / nan spelled out.
std::string format_real(double x);

// Header: case,alpha,beta,t,norm,mu,lhs,rhs,margin,holds,status
void write_sweep_csv(std::ostream& out, const SweepResult& result);
nlohmann::json sweep_json(const SweepConfig& config, const SweepResult& result);

struct TrajectoryMeta {
  int n = 0;
  double alpha = 1.0;
  double t_final = 0.0;
  int steps = 0;
  double perturbation = 0.0;
};

// Header: k,t,norm2 and, with states, u0..u{N-1}.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, bool states);
nlohmann::json trajectory_json(const TrajectoryMeta& meta, const Trajectory& traj, bool states);

// Opens `path` for writing; "-" means stdout. Throws Error on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace fracsg

#endif  // FRACSG_IO_HPP_
