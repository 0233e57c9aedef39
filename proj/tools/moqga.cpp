// Command-line front end: scenario generation, campaign execution across
// solvers, and CSV/JSON-lines emission for the comparison experiments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moqga/presets.hpp"
#include "moqga/report_io.hpp"
#include "moqga/scenario_io.hpp"
#include "moqga/sim.hpp"

namespace fs = std::filesystem;
using namespace moqga;

namespace {

std::string metadata_block(const ExperimentPreset& preset,
                           const Scenario& scenario, int missions,
                           std::uint64_t seed) {
  std::ostringstream out;
  out << "# preset=" << (preset.name.empty() ? "none" : preset.name)
      << " uavs=" << scenario.uavs.size() << " tasks=" << scenario.tasks.size()
      << " resources=" << scenario.n_resources() << " missions=" << missions
      << " seed=" << seed << '\n';
  out << "# eta1=" << scenario.weights.eta1 << " eta2=" << scenario.weights.eta2
      << " gamma=" << scenario.weights.gamma
      << " delta=" << scenario.weights.delta
      << " call_radius=" << scenario.call_radius
      << " decay=" << (preset.campaign.reputation_decay ? 1 : 0) << '\n';
  return out.str();
}

struct CampaignOutputs {
  CampaignResult result;
  std::string meta;
};

CampaignOutputs execute(const ExperimentPreset& preset,
                        const Scenario& scenario, SolverKind kind,
                        int missions, std::uint64_t seed) {
  SolverConfig solver;
  solver.kind = kind;
  CampaignOutputs out;
  out.result = run_campaign(scenario, solver, missions, seed, preset.campaign);
  out.meta = metadata_block(preset, scenario, missions, seed);
  return out;
}

void write_outputs(const fs::path& dir, const std::string& tag,
                   const CampaignOutputs& run, const Scenario& scenario,
                   SolverKind kind) {
  fs::create_directories(dir);
  {
    std::ofstream f(dir / (tag + "-reports.jsonl"));
    for (const auto& r : run.result.reports) write_report_lines(f, r);
  }
  {
    std::ofstream f(dir / (tag + "-aggregates.csv"));
    f << run.meta;
    f << "solver,n_uavs,n_tasks,completed_pct,mean_violations\n";
    f << solver_name(kind) << ',' << scenario.uavs.size() << ','
      << scenario.tasks.size() << ',' << run.result.completed_pct << ','
      << run.result.mean_violations << '\n';
  }
  {
    std::ofstream f(dir / (tag + "-reputation.csv"));
    write_reputation_csv(f, run.result.ledger, run.meta);
  }
  {
    std::ofstream f(dir / (tag + "-scatter.csv"));
    f << run.meta;
    f << "mission,task_id,cost,neg_log_reliability\n";
    for (const auto& r : run.result.reports)
      for (const auto& o : r.tasks)
        f << r.mission << ',' << o.task_id << ',' << o.breakdown.cost << ','
          << -o.breakdown.log_reliability << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition-formation mission simulator"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a scenario JSON file");
  int g_uavs = 8, g_tasks = 2, g_resources = 5;
  std::uint64_t g_seed = 42;
  std::string g_out = "scenario.json";
  gen->add_option("--uavs", g_uavs, "number of UAVs");
  gen->add_option("--tasks", g_tasks, "number of tasks");
  gen->add_option("--resources", g_resources, "number of resource types");
  gen->add_option("--seed", g_seed, "rng seed");
  gen->add_option("--out", g_out, "output path");

  // run
  auto* run = app.add_subcommand("run", "run a campaign with one solver");
  std::string r_scenario, r_preset, r_solver = "moqga", r_out = "out";
  int r_missions = 30;
  std::uint64_t r_seed = 42;
  bool r_seed_set = false;
  run->add_option("--scenario", r_scenario, "scenario JSON path");
  run->add_option("--preset", r_preset, "builtin preset name");
  run->add_option("--solver", r_solver,
                  "moqga | nsga2 | distance | merge-split");
  run->add_option("--missions", r_missions, "mission count");
  run->add_option("--seed", r_seed, "campaign seed")
      ->each([&](const std::string&) { r_seed_set = true; });
  run->add_option("--out", r_out, "output directory");

  // compare
  auto* cmp = app.add_subcommand("compare", "run several solvers on matched seeds");
  std::string c_preset = "table2-8-2", c_out = "out";
  std::vector<std::string> c_solvers;
  std::vector<std::uint64_t> c_seeds;
  int c_missions = -1;
  cmp->add_option("--preset", c_preset, "builtin preset name");
  cmp->add_option("--solvers", c_solvers, "solvers to compare");
  cmp->add_option("--seeds", c_seeds, "seeds (shared across solvers)");
  cmp->add_option("--missions", c_missions, "override mission count");
  cmp->add_option("--out", c_out, "output directory");

  // presets
  auto* pre = app.add_subcommand("presets", "preset utilities");
  auto* pre_list = pre->add_subcommand("list", "list builtin presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (g_uavs <= 0 || g_tasks <= 0 || g_resources <= 0) {
        std::cerr << "generate: counts must be positive\n";
        return 2;
      }
      GenerationParams p;
      p.n_uavs = g_uavs;
      p.n_tasks = g_tasks;
      p.n_resources = g_resources;
      save_scenario(generate_scenario(p, g_seed), g_out);
      std::cout << "wrote " << g_out << '\n';
      return 0;
    }

    if (*run) {
      auto kind = solver_from_name(r_solver);
      if (!kind) {
        std::cerr << "unknown solver: " << r_solver << '\n';
        return 2;
      }
      ExperimentPreset preset;
      Scenario scenario;
      if (!r_preset.empty()) {
        auto p = find_preset(r_preset);
        if (!p) {
          std::cerr << "unknown preset: " << r_preset << '\n';
          return 2;
        }
        preset = *p;
        if (r_seed_set) preset.seed = r_seed;
        if (run->count("--missions")) preset.missions = r_missions;
        scenario = preset.make_scenario();
      } else if (!r_scenario.empty()) {
        scenario = load_scenario(r_scenario);
        preset.name = "";
        preset.params.n_uavs = static_cast<int>(scenario.uavs.size());
        preset.params.n_tasks = static_cast<int>(scenario.tasks.size());
        preset.params.n_resources = static_cast<int>(scenario.n_resources());
        preset.campaign.task_params = preset.params;
        preset.seed = r_seed_set ? r_seed : scenario.rng_seed;
        preset.missions = r_missions;
      } else {
        std::cerr << "run: need --scenario or --preset\n";
        return 2;
      }
      auto out = execute(preset, scenario, *kind, preset.missions, preset.seed);
      write_outputs(r_out, solver_name(*kind), out, scenario, *kind);
      std::cout << solver_name(*kind)
                << " completed_pct=" << out.result.completed_pct
                << " mean_violations=" << out.result.mean_violations << '\n';
      return 0;
    }

    if (*cmp) {
      auto p = find_preset(c_preset);
      if (!p) {
        std::cerr << "unknown preset: " << c_preset << '\n';
        return 2;
      }
      ExperimentPreset preset = *p;
      if (c_missions > 0) preset.missions = c_missions;
      std::vector<SolverKind> kinds;
      if (c_solvers.empty()) {
        kinds = preset.solvers;
      } else {
        for (const auto& name : c_solvers) {
          auto k = solver_from_name(name);
          if (!k) {
            std::cerr << "unknown solver: " << name << '\n';
            return 2;
          }
          kinds.push_back(*k);
        }
      }
      if (kinds.size() < 2) {
        std::cerr << "compare: need at least two solvers\n";
        return 2;
      }
      std::vector<std::uint64_t> seeds =
          c_seeds.empty() ? std::vector<std::uint64_t>{preset.seed} : c_seeds;

      fs::create_directories(c_out);
      std::ofstream f(fs::path(c_out) / "comparison.csv");
      f << "# preset=" << preset.name << " missions=" << preset.missions
        << '\n';
      f << "solver,n_uavs,n_tasks,completed_pct,mean_violations\n";
      for (SolverKind kind : kinds) {
        double completed = 0.0, violations = 0.0;
        for (std::uint64_t seed : seeds) {
          ExperimentPreset cell = preset;
          cell.seed = seed;
          Scenario scenario = cell.make_scenario();
          auto out = execute(cell, scenario, kind, cell.missions, seed);
          completed += out.result.completed_pct;
          violations += out.result.mean_violations;
        }
        completed /= static_cast<double>(seeds.size());
        violations /= static_cast<double>(seeds.size());
        f << solver_name(kind) << ',' << preset.params.n_uavs << ','
          << preset.params.n_tasks << ',' << completed << ',' << violations
          << '\n';
        std::cout << solver_name(kind) << " completed_pct=" << completed
                  << " mean_violations=" << violations << '\n';
      }
      return 0;
    }

    if (*pre) {
      if (*pre_list || pre->get_subcommands().empty()) {
        for (const auto& preset : builtin_presets())
          std::cout << preset.name << " (" << preset.params.n_uavs << " uavs, "
                    << preset.params.n_tasks << " tasks, " << preset.missions
                    << " missions)\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
