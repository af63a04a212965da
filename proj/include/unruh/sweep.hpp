#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unruh/concurrence.hpp"

namespace unruh {

/// The five standard acceleration values used for figure output:
/// {0, pi/16, pi/8, 3pi/16, pi/4}.
std::vector<double> standard_r_values();

struct SweepConfig {
  ChannelKind kind = ChannelKind::PhaseFlip;
  Scenario scenario = Scenario::RobOnly;
  std::vector<double> r_values;
  int p_count = 101;  // uniform grid on [0,1], endpoints included
};

struct ConcurrenceRecord {
  std::string channel;
  std::string scenario;
  double r = 0.0;
  double p = 0.0;
  double c_numeric = 0.0;
  std::optional<double> c_analytic;
};

struct EsdResult {
  ChannelKind kind;
  Scenario scenario;
  double r = 0.0;
  std::optional<double> p_star;  // nullopt when C > 0 on the whole grid
  double bracket_width = 0.0;
};

/// Concurrence below this counts as zero for sudden-death detection.
inline constexpr double kZeroTol = 1e-12;

/// One record per (r, p) grid point, r-major, p ascending;
/// c_analytic filled whenever a closed form exists for the case.
std::vector<ConcurrenceRecord> run_sweep(const SweepConfig& cfg);

/// Smallest p at which C reaches zero: scan a 101-point grid for the
/// first point with C <= kZeroTol, then bisect the bracket down to tol.
EsdResult find_esd(ChannelKind kind, Scenario scenario, UnruhParameter r, double tol = 1e-9);

struct VerifyCase {
  ChannelKind kind;
  Scenario scenario;
  CrossValidation result;
  double threshold = 1e-9;
  bool pass = false;                // deviation within threshold
  bool documented_discrepancy = false;  // known formula defect, numeric path is ground truth
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  bool ok = false;
};

/// Cross-validates all six analytic cases on a grid_density x 5 (p x r)
/// grid. Cases with a known closed-form defect are flagged rather than
/// failed; ok reflects the strict cases only.
VerifyReport run_verify(int grid_density);
void print_verify_report(const VerifyReport& report, std::ostream& os);

/// Sweep for one of the five concurrence-vs-p figures (ids 2..6).
std::vector<ConcurrenceRecord> figure_records(int figure_id);

// CSV: header channel,scenario,r,p,c_numeric,c_analytic; floats with
// 12 significant digits; empty field for an absent c_analytic; LF endings.
std::string format_g12(double v);
void write_csv(std::ostream& os, const std::vector<ConcurrenceRecord>& records);
std::vector<ConcurrenceRecord> parse_csv(std::istream& is);

}  // namespace unruh
