#include "unruh/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace unruh {

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bit-flip";
    case ChannelKind::PhaseFlip: return "phase-flip";
    case ChannelKind::PhaseDamping: return "phase-damping";
    case ChannelKind::Depolarizing: return "depolarizing";
  }
  throw std::logic_error("to_string: bad ChannelKind");
}

std::string to_string(Scenario scenario) {
  return scenario == Scenario::RobOnly ? "single" : "both";
}

namespace {

void check_completeness(const KrausChannel& ch) {
  ComplexMatrix sum(2);
  for (const auto& e : ch.elements) sum += matmul(e.dagger(), e);
  if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-12)
    throw std::logic_error("KrausChannel: completeness sum E^dag E != I");
}

}  // namespace

KrausChannel make_channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("make_channel: p must lie in [0,1]");
  const double sq = std::sqrt(1.0 - p);
  KrausChannel ch{kind, p, {}};
  switch (kind) {
    case ChannelKind::BitFlip:
      ch.elements.push_back(sq * ComplexMatrix::identity(2));
      ch.elements.push_back(std::sqrt(p) * pauli_x());
      break;
    case ChannelKind::PhaseFlip:
      ch.elements.push_back(sq * ComplexMatrix::identity(2));
      ch.elements.push_back(std::sqrt(p) * pauli_z());
      break;
    case ChannelKind::PhaseDamping:
      ch.elements.push_back(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, sq}}));
      ch.elements.push_back(ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, std::sqrt(p)}}));
      break;
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 3.0);
      ch.elements.push_back(sq * ComplexMatrix::identity(2));
      ch.elements.push_back(w * pauli_x());
      ch.elements.push_back(w * pauli_y());
      ch.elements.push_back(w * pauli_z());
      break;
    }
  }
  check_completeness(ch);
  return ch;
}

DensityMatrix apply_on_qubit(const KrausChannel& channel, const DensityMatrix& rho, int qubit) {
  if (rho.n_qubits != 2) throw std::invalid_argument("apply_on_qubit: expected a 2-qubit state");
  if (qubit != 0 && qubit != 1) throw std::invalid_argument("apply_on_qubit: qubit must be 0 or 1");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out(4);
  for (const auto& e : channel.elements) {
    const ComplexMatrix k = qubit == 0 ? kron(e, id) : kron(id, e);
    out += matmul(matmul(k, rho.mat), k.dagger());
  }
  return make_density(2, std::move(out));
}

DensityMatrix apply_single(const KrausChannel& channel, const DensityMatrix& rho) {
  return apply_on_qubit(channel, rho, 1);
}

DensityMatrix apply_both(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.n_qubits != 2) throw std::invalid_argument("apply_both: expected a 2-qubit state");
  ComplexMatrix out(4);
  for (const auto& a : channel.elements)
    for (const auto& b : channel.elements) {
      const ComplexMatrix k = kron(a, b);
      out += matmul(matmul(k, rho.mat), k.dagger());
    }
  return make_density(2, std::move(out));
}

}  // namespace unruh
