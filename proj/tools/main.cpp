#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruh/sweep.hpp"

namespace {

using namespace unruh;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, ChannelKind> kChannelNames = {
    {"bit-flip", ChannelKind::BitFlip},
    {"phase-flip", ChannelKind::PhaseFlip},
    {"phase-damping", ChannelKind::PhaseDamping},
    {"depolarizing", ChannelKind::Depolarizing},
};

const std::map<std::string, Scenario> kScenarioNames = {
    {"single", Scenario::RobOnly},
    {"both", Scenario::BothQubits},
};

std::vector<double> parse_r_list(const std::string& arg) {
  std::vector<double> values;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf-accel") {
      values.push_back(std::numbers::pi / 4.0);
      continue;
    }
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad r value: " + item);
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("--r list is empty");
  return values;
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path == "-") {
    fn(std::cout);
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return kExitUsage;
  }
  fn(out);
  if (!out) {
    std::cerr << "error: write failed: " << path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unruh-degraded entanglement under noisy channels"};
  app.require_subcommand(1);

  std::string channel_name = "phase-flip";
  std::string scenario_name = "single";
  std::string r_arg = "0";
  std::string out_path = "-";
  int p_steps = 101;
  double tol = 1e-9;
  int grid = 11;
  int figure_id = 2;

  auto* sweep_cmd = app.add_subcommand("sweep", "concurrence over a (r, p) grid, CSV output");
  sweep_cmd->add_option("--channel", channel_name)->check(CLI::IsMember(kChannelNames));
  sweep_cmd->add_option("--scenario", scenario_name)->check(CLI::IsMember(kScenarioNames));
  sweep_cmd->add_option("--r", r_arg, "comma-separated radians; inf-accel = pi/4");
  sweep_cmd->add_option("--p-steps", p_steps)->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--out", out_path, "output path, - for stdout");

  auto* esd_cmd = app.add_subcommand("esd", "entanglement sudden-death threshold p*");
  esd_cmd->add_option("--channel", channel_name)->check(CLI::IsMember(kChannelNames));
  esd_cmd->add_option("--scenario", scenario_name)->check(CLI::IsMember(kScenarioNames));
  esd_cmd->add_option("--r", r_arg, "comma-separated radians; inf-accel = pi/4");
  esd_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  esd_cmd->add_option("--out", out_path, "output path, - for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "cross-check numeric vs closed-form concurrence");
  verify_cmd->add_option("--grid", grid, "p-grid density")->check(CLI::Range(2, 1000000));

  auto* figure_cmd = app.add_subcommand("figure", "emit figure<N>.csv for N in 2..6");
  figure_cmd->add_option("id", figure_id, "figure id (2..6)")->required();
  figure_cmd->add_option("--out", out_path, "output path; default figure<N>.csv");
  bool out_set = false;
  figure_cmd->callback([&] { out_set = figure_cmd->count("--out") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) {
      SweepConfig cfg;
      cfg.kind = kChannelNames.at(channel_name);
      cfg.scenario = kScenarioNames.at(scenario_name);
      cfg.r_values = parse_r_list(r_arg);
      cfg.p_count = p_steps;
      const auto records = run_sweep(cfg);
      return with_output(out_path, [&](std::ostream& os) { write_csv(os, records); });
    }
    if (*esd_cmd) {
      const ChannelKind kind = kChannelNames.at(channel_name);
      const Scenario scenario = kScenarioNames.at(scenario_name);
      return with_output(out_path, [&](std::ostream& os) {
        os << "channel,scenario,r,p_star,bracket_width\n";
        for (const double r : parse_r_list(r_arg)) {
          const EsdResult res = find_esd(kind, scenario, UnruhParameter(r), tol);
          os << to_string(kind) << ',' << to_string(scenario) << ',' << format_g12(r) << ',';
          if (res.p_star)
            os << format_g12(*res.p_star);
          else
            os << "none";
          os << ',' << format_g12(res.bracket_width) << '\n';
        }
      });
    }
    if (*verify_cmd) {
      const VerifyReport report = run_verify(grid);
      print_verify_report(report, std::cout);
      return report.ok ? kExitOk : kExitVerifyFailed;
    }
    if (*figure_cmd) {
      const auto records = figure_records(figure_id);
      const std::string path = out_set ? out_path : "figure" + std::to_string(figure_id) + ".csv";
      return with_output(path, [&](std::ostream& os) { write_csv(os, records); });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
