#pragma once

#include <array>
#include <span>

#include "unruh/channels.hpp"
#include "unruh/spectrum.hpp"
#include "unruh/unruh_state.hpp"

namespace unruh {

/// Wootters spin flip: (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y),
/// with entrywise complex conjugation.
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} over the
/// descending eigenvalues of rho * spin_flip(rho).
double concurrence_numeric(const DensityMatrix& rho);

/// One of the six (channel, scenario) pairs with a published closed-form
/// eigenvalue set. BitFlip has none; construction rejects it.
class AnalyticCase {
 public:
  AnalyticCase(ChannelKind kind, Scenario scenario);
  ChannelKind kind() const { return kind_; }
  Scenario scenario() const { return scenario_; }

 private:
  ChannelKind kind_;
  Scenario scenario_;
};

/// The four closed-form eigenvalues for a case, unsorted, as printed.
std::array<double, 4> analytic_lambdas(const AnalyticCase& c, UnruhParameter r, double p);

double concurrence_analytic(const AnalyticCase& c, UnruhParameter r, double p);

struct CrossValidation {
  double max_deviation = 0.0;
  double arg_p = 0.0;
  double arg_r = 0.0;
};

/// Max |C_numeric - C_analytic| over the grid, with the arg-max point.
CrossValidation cross_validate(ChannelKind kind, Scenario scenario,
                               std::span<const double> r_grid,
                               std::span<const double> p_grid);

/// Numeric-path concurrence of the decohered shared state.
double concurrence_for(ChannelKind kind, Scenario scenario, UnruhParameter r, double p);

}  // namespace unruh
