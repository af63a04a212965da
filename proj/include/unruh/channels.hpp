#pragma once

#include <string>
#include <vector>

#include "unruh/unruh_state.hpp"

namespace unruh {

enum class ChannelKind { BitFlip, PhaseFlip, PhaseDamping, Depolarizing };
enum class Scenario { RobOnly, BothQubits };

std::string to_string(ChannelKind kind);
std::string to_string(Scenario scenario);

/// Single-qubit noise model: named kind, strength p in [0,1], and its
/// Kraus elements. Completeness sum E_i^dag E_i = I is checked at
/// construction.
struct KrausChannel {
  ChannelKind kind;
  double p;
  std::vector<ComplexMatrix> elements;
};

KrausChannel make_channel(ChannelKind kind, double p);

/// Noise on Rob's qubit only: rho -> sum_i (I (x) E_i) rho (I (x) E_i)^dag.
DensityMatrix apply_single(const KrausChannel& channel, const DensityMatrix& rho);

/// Noise on one chosen qubit (0 = Alice, 1 = Rob).
DensityMatrix apply_on_qubit(const KrausChannel& channel, const DensityMatrix& rho, int qubit);

/// Same-strength noise on both qubits: the two-qubit Kraus set is the
/// list of all pairwise Kronecker products E_i (x) E_j.
DensityMatrix apply_both(const KrausChannel& channel, const DensityMatrix& rho);

}  // namespace unruh
