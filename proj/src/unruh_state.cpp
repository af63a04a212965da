#include "unruh/unruh_state.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh {

namespace {
constexpr double kQuarterPi = std::numbers::pi / 4.0;
}

UnruhParameter::UnruhParameter(double r) : r_(r) {
  if (!(r >= 0.0 && r <= kQuarterPi + 1e-15))
    throw std::invalid_argument("UnruhParameter: r must lie in [0, pi/4]");
}

UnruhParameter UnruhParameter::infinite_acceleration() { return UnruhParameter(kQuarterPi); }

UnruhParameter r_from_acceleration(const AccelerationSpec& spec) {
  if (!(spec.omega > 0.0)) throw std::invalid_argument("r_from_acceleration: omega must be > 0");
  if (!(spec.c > 0.0)) throw std::invalid_argument("r_from_acceleration: c must be > 0");
  if (spec.infinite_a) return UnruhParameter::infinite_acceleration();
  if (!(spec.a >= 0.0)) throw std::invalid_argument("r_from_acceleration: a must be >= 0");
  if (spec.a == 0.0) return UnruhParameter(0.0);
  const double cos_r = 1.0 / std::sqrt(std::exp(-2.0 * std::numbers::pi * spec.omega * spec.c / spec.a) + 1.0);
  return UnruhParameter(std::acos(std::min(cos_r, 1.0)));
}

DensityMatrix make_density(int n_qubits, ComplexMatrix mat) {
  if (mat.dim() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("make_density: dim is not 2^n_qubits");
  if (!mat.all_finite()) throw std::invalid_argument("make_density: non-finite entry");
  if (std::abs(mat.trace() - cplx{1.0}) > 1e-12)
    throw std::invalid_argument("make_density: trace differs from 1");
  if (!is_hermitian(mat, 1e-12)) throw std::invalid_argument("make_density: not Hermitian");
  return DensityMatrix{n_qubits, std::move(mat)};
}

DensityMatrix build_three_mode_state(UnruhParameter r) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Amplitudes on |000>, |011>, |110> in (A, I, II) ordering, MSB first.
  std::array<double, 8> psi{};
  psi[0b000] = inv_sqrt2 * std::cos(r.r());
  psi[0b011] = inv_sqrt2 * std::sin(r.r());
  psi[0b110] = inv_sqrt2;
  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = psi[i] * psi[j];
  return make_density(3, std::move(m));
}

DensityMatrix build_shared_state(UnruhParameter r) {
  const DensityMatrix three = build_three_mode_state(r);
  return make_density(2, partial_trace(three.mat, 3, 2));
}

DensityMatrix build_shared_state_direct(UnruhParameter r) {
  const double c = std::cos(r.r()), s = std::sin(r.r());
  ComplexMatrix m(4);
  m(0, 0) = 0.5 * c * c;   // |00><00|
  m(0, 3) = 0.5 * c;       // |00><11|
  m(3, 0) = 0.5 * c;       // |11><00|
  m(1, 1) = 0.5 * s * s;   // |01><01|
  m(3, 3) = 0.5;           // |11><11|
  return make_density(2, std::move(m));
}

}  // namespace unruh
