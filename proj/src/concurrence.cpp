#include "unruh/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unruh {

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  if (rho.n_qubits != 2) throw std::invalid_argument("spin_flip: expected a 2-qubit state");
  const ComplexMatrix syy = kron(pauli_y(), pauli_y());
  ComplexMatrix conj(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) conj(i, j) = std::conj(rho.mat(i, j));
  return matmul(matmul(syy, conj), syy);
}

double concurrence_numeric(const DensityMatrix& rho) {
  const EigenSpectrum s = eigenvalues_product(rho.mat, spin_flip(rho));
  const double c = std::sqrt(s.values[0]) - std::sqrt(s.values[1]) - std::sqrt(s.values[2]) -
                   std::sqrt(s.values[3]);
  return std::max(0.0, c);
}

AnalyticCase::AnalyticCase(ChannelKind kind, Scenario scenario)
    : kind_(kind), scenario_(scenario) {
  if (kind == ChannelKind::BitFlip)
    throw std::invalid_argument("AnalyticCase: bit-flip has no closed form; use the numeric path");
}

namespace {

// Two-qubit depolarizing eigenvalues, transcribed symbol for symbol with
// no algebraic simplification; the numeric cross-check guards it.
std::array<double, 4> depolarizing_both_lambdas(double p, double r) {
  const double c1 = std::cos(r);
  const double c2 = std::cos(2.0 * r);
  const double c4 = std::cos(4.0 * r);
  const double q = 3.0 - 4.0 * p;

  const double base = 324.0 + p * (-3.0 + 2.0 * p) * (387.0 + 152.0 * p * (-3.0 + 2.0 * p)) +
                      4.0 * q * q * (9.0 + 5.0 * p * (-3.0 + 2.0 * p)) * c2 +
                      q * q * p * (-3.0 + 2.0 * p) * c4;
  const double inner = 3.0 * (54.0 + p * (-3.0 + 2.0 * p) * (33.0 + 8.0 * p * (-3.0 + 2.0 * p))) +
                       q * q * (2.0 * (9.0 - 6.0 * p + 4.0 * p * p) * c2 +
                                p * (-3.0 + 2.0 * p) * c4);
  const double root = 4.0 * q * q * c1 * std::sqrt(std::max(0.0, inner));
  const double l1 = (base + root) / 1296.0;
  const double l3 = (base - root) / 1296.0;
  const double l2 = (1.0 / 648.0) * p * (-3.0 + 2.0 * p) *
                    (-9.0 + 4.0 * p + (-3.0 + 4.0 * p) * c2) *
                    (3.0 + 4.0 * p + (-3.0 + 4.0 * p) * c2);
  return {l1, l2, l3, l2};
}

}  // namespace

std::array<double, 4> analytic_lambdas(const AnalyticCase& c, UnruhParameter r, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("analytic_lambdas: p must lie in [0,1]");
  const double cs2 = std::cos(r.r()) * std::cos(r.r());
  if (c.scenario() == Scenario::RobOnly) {
    switch (c.kind()) {
      case ChannelKind::PhaseFlip:
        return {(1.0 - 2.0 * p + p * p) * cs2, p * p * cs2, 0.0, 0.0};
      case ChannelKind::PhaseDamping: {
        const double s = std::sqrt(1.0 - p);
        return {0.25 * (2.0 - p + 2.0 * s) * cs2, 0.25 * (2.0 - p - 2.0 * s) * cs2, 0.0, 0.0};
      }
      case ChannelKind::Depolarizing: {
        const double mu = p * p * cs2 / 9.0;
        return {(-1.0 + p) * (-1.0 + p) * cs2, mu, mu, mu};
      }
      default: break;
    }
  } else {
    switch (c.kind()) {
      case ChannelKind::PhaseFlip: {
        const double a = 1.0 + 2.0 * (-1.0 + p) * p;
        return {a * a * cs2, 4.0 * (-1.0 + p) * (-1.0 + p) * p * p * cs2, 0.0, 0.0};
      }
      case ChannelKind::PhaseDamping:
        return {0.25 * (-2.0 + p) * (-2.0 + p) * cs2, 0.25 * p * p * cs2, 0.0, 0.0};
      case ChannelKind::Depolarizing:
        return depolarizing_both_lambdas(p, r.r());
      default: break;
    }
  }
  throw std::logic_error("analytic_lambdas: unreachable");
}

double concurrence_analytic(const AnalyticCase& c, UnruhParameter r, double p) {
  std::array<double, 4> l = analytic_lambdas(c, r, p);
  for (double& v : l) v = std::max(0.0, v);
  std::sort(l.begin(), l.end(), std::greater<>());
  const double cval =
      std::sqrt(l[0]) - std::sqrt(l[1]) - std::sqrt(l[2]) - std::sqrt(l[3]);
  return std::max(0.0, cval);
}

double concurrence_for(ChannelKind kind, Scenario scenario, UnruhParameter r, double p) {
  const KrausChannel ch = make_channel(kind, p);
  const DensityMatrix rho = build_shared_state(r);
  const DensityMatrix out =
      scenario == Scenario::RobOnly ? apply_single(ch, rho) : apply_both(ch, rho);
  return concurrence_numeric(out);
}

CrossValidation cross_validate(ChannelKind kind, Scenario scenario,
                               std::span<const double> r_grid,
                               std::span<const double> p_grid) {
  const AnalyticCase c(kind, scenario);
  CrossValidation result;
  for (const double r : r_grid) {
    const UnruhParameter ur(r);
    for (const double p : p_grid) {
      const double dev = std::abs(concurrence_for(kind, scenario, ur, p) -
                                  concurrence_analytic(c, ur, p));
      if (dev > result.max_deviation) {
        result.max_deviation = dev;
        result.arg_p = p;
        result.arg_r = r;
      }
    }
  }
  return result;
}

}  // namespace unruh
