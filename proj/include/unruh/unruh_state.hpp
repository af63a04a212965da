#pragma once

#include "unruh/complex_matrix.hpp"

namespace unruh {

/// Physical front-end for the acceleration parameter: Dirac mode
/// frequency omega (rad/s), speed of light c (m/s), proper acceleration
/// a (m/s^2). Infinite acceleration is a distinguished flag, not an
/// IEEE infinity fed into the exponent.
struct AccelerationSpec {
  double omega = 1.0;
  double c = 1.0;
  double a = 0.0;
  bool infinite_a = false;
};

/// Dimensionless acceleration angle r in [0, pi/4]:
/// cos r = (exp(-2*pi*omega*c/a) + 1)^(-1/2). r = 0 is inertial,
/// r = pi/4 is the infinite-acceleration limit.
class UnruhParameter {
 public:
  explicit UnruhParameter(double r);
  double r() const { return r_; }
  static UnruhParameter infinite_acceleration();

 private:
  double r_;
};

/// Square complex matrix tagged with its qubit count; validated unit
/// trace and Hermitian on construction.
struct DensityMatrix {
  int n_qubits;
  ComplexMatrix mat;
};

DensityMatrix make_density(int n_qubits, ComplexMatrix mat);

UnruhParameter r_from_acceleration(const AccelerationSpec& spec);

/// Pure three-mode state |psi> = (cos r|000> + sin r|011> + |110>)/sqrt(2)
/// in ordering (Alice, region I, region II).
DensityMatrix build_three_mode_state(UnruhParameter r);

/// Alice-Rob shared state: region II traced out of the three-mode state.
DensityMatrix build_shared_state(UnruhParameter r);

/// The same state transcribed entry by entry from its closed form;
/// kept as an independent construction path for cross-checking.
DensityMatrix build_shared_state_direct(UnruhParameter r);

}  // namespace unruh
