#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace scalefield {

using Cplx = std::complex<double>;

// Identity checks are relative with an absolute floor so that exact zeros
// compare equal; the floor is far below any magnitude the suites produce.
inline constexpr double kRelTol = 1e-12;
inline constexpr double kAbsFloor = 1e-300;

constexpr Cplx kImag{0.0, 1.0};

// Relative distance of a from b, scaled by the larger magnitude (or by an
// explicit scale when the expression being checked has cancellation).
inline double rel_err(Cplx a, Cplx b, double scale = 0.0) {
  scale = std::max({scale, std::abs(a), std::abs(b)});
  if (scale <= kAbsFloor) return 0.0;
  return std::abs(a - b) / scale;
}

inline bool close_rel(Cplx a, Cplx b, double rtol = kRelTol, double scale = 0.0) {
  return rel_err(a, b, scale) <= rtol;
}

inline bool close_rel(double a, double b, double rtol = kRelTol) {
  return close_rel(Cplx(a, 0.0), Cplx(b, 0.0), rtol);
}

}  // namespace scalefield
