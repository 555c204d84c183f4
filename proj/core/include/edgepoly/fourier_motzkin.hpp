#ifndef EDGEPOLY_FOURIER_MOTZKIN_HPP
#define EDGEPOLY_FOURIER_MOTZKIN_HPP

#include "edgepoly/cones.hpp"

namespace edgepoly {

/// Strict feasibility of the homogeneous system {f_i . x > 0 for all i}
/// by exact Fourier-Motzkin elimination. Independent oracle for
/// strict_feasible; supports n <= 12 variables and m <= 16 rows and throws
/// OracleScaleExceeded beyond that (or on internal row blowup).
bool fm_feasible(const OpenCone& cone);

}  // namespace edgepoly

#endif  // EDGEPOLY_FOURIER_MOTZKIN_HPP
