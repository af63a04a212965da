#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "unruh/complex_matrix.hpp"

namespace unruh {

/// The four eigenvalues of a Wootters product rho * rho_tilde,
/// real, clamped non-negative, sorted descending.
struct EigenSpectrum {
  std::array<double, 4> values;
};

/// Raised when a spectrum that must be real and non-negative is not.
/// This signals an upstream bug (bad input matrix), not a user error.
class SpectrumError : public std::runtime_error {
 public:
  SpectrumError(const std::string& what, double offending)
      : std::runtime_error(what), offending_value(offending) {}
  double offending_value;
};

inline constexpr double kTolImag = 1e-9;
inline constexpr double kTolEig = 1e-10;

/// Monic characteristic polynomial coefficients of an n x n matrix
/// (n <= 4) via the Faddeev-LeVerrier recursion. Returns {c1,...,cn}
/// for x^n + c1 x^{n-1} + ... + cn.
std::vector<cplx> char_poly(const ComplexMatrix& m);

/// Roots of a monic real-coefficient polynomial of degree <= 4.
/// Near-zero trailing coefficients are snapped to zero and the zero
/// roots deflated exactly; the rest go through shifted QR on the
/// companion matrix.
std::vector<cplx> poly_roots(const std::vector<double>& coeffs);

/// Real spectrum of a matrix known to have one (e.g. Hermitian, or a
/// Wootters product). Sorted descending; values below -tol_eig raise
/// SpectrumError, small negatives are clamped to zero.
std::vector<double> real_spectrum(const ComplexMatrix& m);

/// Eigenvalues of rho * rho_tilde for the concurrence, both 4 x 4.
EigenSpectrum eigenvalues_product(const ComplexMatrix& rho, const ComplexMatrix& rho_tilde);

}  // namespace unruh
