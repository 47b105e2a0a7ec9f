#ifndef FRACSG_SRC_ML_INVERSION_HPP_
#define FRACSG_SRC_ML_INVERSION_HPP_

#include <complex>

namespace fracsg::detail {

// E_{alpha,beta}(z) by inverting the Laplace transform
// s^(alpha-beta) / (s^alpha - z) at t = 1 along a parabolic contour whose
// parameters are chosen from the singularities (origin and poles
// z^(1/alpha) e^(2 pi i k / alpha)); poles to the right of the contour enter
// through their residues. Target accuracy ~1e-15.
std::complex<double> ml_laplace_inversion(double alpha, double beta, std::complex<double> z);

}  // namespace fracsg::detail

#endif  // FRACSG_SRC_ML_INVERSION_HPP_
