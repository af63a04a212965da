// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unruh/spectrum.hpp"
#include "unruh/sweep.hpp"
#include "test_util.hpp"

using namespace unruh;

namespace {

constexpr double kPi4 = std::numbers::pi / 4.0;

std::vector<double> p_grid11() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) g.push_back(i / 10.0);
  return g;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool c1_p0_reduction(std::string& detail) {
  double max_dev = 0.0;
  for (int i = 0; i <= 49; ++i) {
    const double r = kPi4 * i / 49.0;
    max_dev = std::max(max_dev,
                       std::abs(concurrence_numeric(build_shared_state(UnruhParameter(r))) -
                                std::cos(r)));
  }
  const double c0 = concurrence_numeric(build_shared_state(UnruhParameter(0.0)));
  const double c4 = concurrence_numeric(build_shared_state(UnruhParameter(kPi4)));
  detail = "max |C - cos r| = " + format_g12(max_dev);
  return max_dev <= 1e-10 && std::abs(c0 - 1.0) <= 1e-10 &&
         std::abs(c4 - 1.0 / std::sqrt(2.0)) <= 1e-10;
}

bool c2_analytic_numeric(std::string& detail) {
  const auto rg = standard_r_values();
  const auto pg = p_grid11();
  const std::array<std::pair<ChannelKind, Scenario>, 5> cases = {{
      {ChannelKind::PhaseFlip, Scenario::RobOnly},
      {ChannelKind::PhaseDamping, Scenario::RobOnly},
      {ChannelKind::PhaseFlip, Scenario::BothQubits},
      {ChannelKind::PhaseDamping, Scenario::BothQubits},
      {ChannelKind::Depolarizing, Scenario::RobOnly},
  }};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [kind, scenario] : cases) {
    const auto cv = cross_validate(kind, scenario, rg, pg);
    const bool pass = cv.max_deviation <= 1e-9;
    os << "\n    " << to_string(kind) << "/" << to_string(scenario) << ": max dev "
       << format_g12(cv.max_deviation) << " at (p=" << format_g12(cv.arg_p)
       << ", r=" << format_g12(cv.arg_r) << ") " << (pass ? "ok" : "EXCEEDS 1e-9");
    if (!pass && kind == ChannelKind::Depolarizing && scenario == Scenario::RobOnly)
      os << " [known closed-form defect at r > 0; numeric path is ground truth]";
    ok = ok && pass;
  }
  detail = os.str();
  return ok;
}

bool c3_eq17_transcription(std::string& detail) {
  const auto cv =
      cross_validate(ChannelKind::Depolarizing, Scenario::BothQubits, standard_r_values(),
                     p_grid11());
  detail = "max dev " + format_g12(cv.max_deviation) + " at (p=" + format_g12(cv.arg_p) +
           ", r=" + format_g12(cv.arg_r) + ")";
  return cv.max_deviation <= 1e-8;
}

bool c4_esd_thresholds(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (const double r : standard_r_values()) {
    const auto pf = find_esd(ChannelKind::PhaseFlip, Scenario::RobOnly, UnruhParameter(r));
    if (!pf.p_star || std::abs(*pf.p_star - 0.5) > 1e-9) {
      ok = false;
      os << " phase-flip p* off at r=" << format_g12(r);
    }
    for (const auto scenario : {Scenario::RobOnly, Scenario::BothQubits}) {
      const auto pd = find_esd(ChannelKind::PhaseDamping, scenario, UnruhParameter(r));
      if (!pd.p_star || std::abs(*pd.p_star - 1.0) > 1e-9) {
        ok = false;
        os << " phase-damping p* off at r=" << format_g12(r);
      }
    }
  }
  double prev = 2.0;
  os << "; depolarizing/both p*:";
  for (const double r : standard_r_values()) {
    const auto dp = find_esd(ChannelKind::Depolarizing, Scenario::BothQubits, UnruhParameter(r));
    if (!dp.p_star || !(*dp.p_star < prev)) ok = false;
    if (dp.p_star) {
      os << " " << format_g12(*dp.p_star);
      prev = *dp.p_star;
    }
  }
  detail = os.str();
  return ok;
}

bool c5_parabola(std::string& detail) {
  double max_sym = 0.0, max_end = 0.0;
  for (const double r : standard_r_values()) {
    const UnruhParameter ur(r);
    for (double p = 0.0; p <= 0.5; p += 0.05) {
      const double lo = concurrence_for(ChannelKind::PhaseFlip, Scenario::BothQubits, ur, p);
      const double hi =
          concurrence_for(ChannelKind::PhaseFlip, Scenario::BothQubits, ur, 1.0 - p);
      max_sym = std::max(max_sym, std::abs(lo - hi));
    }
    max_end = std::max(max_end,
                       std::abs(concurrence_for(ChannelKind::PhaseFlip, Scenario::BothQubits,
                                                ur, 1.0) -
                                std::cos(r)));
  }
  detail = "max |C(p)-C(1-p)| = " + format_g12(max_sym) +
           ", max |C(1)-cos r| = " + format_g12(max_end);
  return max_sym <= 1e-10 && max_end <= 1e-10;
}

bool c6_linearity(std::string& detail) {
  double max_res = 0.0;
  for (const double r : standard_r_values())
    for (const double p : p_grid11())
      max_res = std::max(
          max_res, std::abs(concurrence_for(ChannelKind::PhaseDamping, Scenario::BothQubits,
                                            UnruhParameter(r), p) -
                            (1.0 - p) * std::cos(r)));
  detail = "max residual vs (1-p) cos r = " + format_g12(max_res);
  return max_res <= 1e-10;
}

bool c7_channel_validity(std::string& detail) {
  for (const auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip,
                          ChannelKind::PhaseDamping, ChannelKind::Depolarizing})
    for (const double p : p_grid11()) {
      const auto ch = make_channel(kind, p);
      ComplexMatrix sum(2);
      for (const auto& e : ch.elements) sum += matmul(e.dagger(), e);
      if (max_abs_diff(sum, ComplexMatrix::identity(2)) > 1e-12) {
        detail = "completeness failed for " + to_string(kind);
        return false;
      }
      for (const double r : standard_r_values()) {
        const auto rho = build_shared_state(UnruhParameter(r));
        for (const auto& out : {apply_single(ch, rho), apply_both(ch, rho)}) {
          if (std::abs(out.mat.trace().real() - 1.0) > 1e-12 ||
              !is_hermitian(out.mat, 1e-12)) {
            detail = "trace/Hermiticity failed for " + to_string(kind);
            return false;
          }
          for (const double ev : real_spectrum(out.mat))
            if (ev < 0.0) {  // real_spectrum clamps within -1e-10 and throws below it
              detail = "positivity failed for " + to_string(kind);
              return false;
            }
        }
      }
    }
  detail = "completeness, trace, Hermiticity, positivity over the full grid";
  return true;
}

bool c8_structural_oracle(std::string& detail) {
  double max_dev = 0.0;
  for (int i = 0; i <= 49; ++i) {
    const UnruhParameter r(kPi4 * i / 49.0);
    max_dev = std::max(
        max_dev, max_abs_diff(build_shared_state(r).mat, build_shared_state_direct(r).mat));
  }
  detail = "max entrywise deviation = " + format_g12(max_dev);
  return max_dev <= 1e-12;
}

bool c9_local_unitary(std::string& detail) {
  std::mt19937 rng(97);
  double max_dev = 0.0;
  for (int k = 0; k < 40; ++k) {
    DensityMatrix rho = k % 2 == 0
                            ? test_util::random_density(rng)
                            : build_shared_state(UnruhParameter(kPi4 * (k % 5) / 4.0));
    const auto u = kron(test_util::random_unitary(rng), test_util::random_unitary(rng));
    DensityMatrix rot{2, matmul(matmul(u, rho.mat), u.dagger())};
    max_dev = std::max(max_dev,
                       std::abs(concurrence_numeric(rot) - concurrence_numeric(rho)));
  }
  detail = "max |C(UxV rho) - C(rho)| = " + format_g12(max_dev);
  return max_dev <= 1e-9;
}

bool c10_cli_contract(std::string& detail) {
  const std::string bin = CLI_BIN_PATH;
  if (std::system((bin + " verify --grid 11 > /dev/null").c_str()) != 0) {
    detail = "verify --grid 11 exited non-zero";
    return false;
  }
  for (int id = 2; id <= 6; ++id) {
    const std::string path = "acceptance_figure" + std::to_string(id) + ".csv";
    if (std::system((bin + " figure " + std::to_string(id) + " --out " + path).c_str()) != 0) {
      detail = "figure " + std::to_string(id) + " exited non-zero";
      return false;
    }
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string first = buf.str();
    if (first.rfind("channel,scenario,r,p,c_numeric,c_analytic\n", 0) != 0) {
      detail = "bad CSV header in " + path;
      return false;
    }
    std::istringstream is(first);
    std::vector<ConcurrenceRecord> parsed;
    try {
      parsed = parse_csv(is);
    } catch (const std::exception& e) {
      detail = path + " failed to parse: " + e.what();
      return false;
    }
    if (parsed.size() != 5 * 101) {
      detail = path + " has wrong row count";
      return false;
    }
    std::ostringstream second;
    write_csv(second, parsed);
    if (second.str() != first) {
      detail = path + " round trip not byte identical";
      return false;
    }
    std::remove(path.c_str());
  }
  detail = "verify exit 0; figures 2..6 parse and round trip";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1 p=0 reduction to cos r", c1_p0_reduction},
      {"2 analytic-numeric agreement (five closed-form cases)", c2_analytic_numeric},
      {"3 two-qubit depolarizing transcription", c3_eq17_transcription},
      {"4 sudden-death thresholds", c4_esd_thresholds},
      {"5 both-qubit phase flip parabola", c5_parabola},
      {"6 both-qubit phase damping linearity", c6_linearity},
      {"7 channel validity suite", c7_channel_validity},
      {"8 structural oracle (two construction paths)", c8_structural_oracle},
      {"9 local-unitary invariance", c9_local_unitary},
      {"10 CLI contract", c10_cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  if (failures > 0)
    std::cout << failures << " criterion(s) failed; see the notes above -- the "
                 "single-qubit depolarizing closed form is inconsistent with the Kraus "
                 "pipeline for r > 0 and the numeric path is ground truth there.\n";
  return failures == 0 ? 0 : 1;
}
