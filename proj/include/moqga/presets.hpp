#ifndef MOQGA_PRESETS_HPP
#define MOQGA_PRESETS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moqga/model.hpp"
#include "moqga/sim.hpp"

namespace moqga {

// A fully seeded experiment: scenario layout, campaign settings, and the
// solvers it is meant to compare.
struct ExperimentPreset {
  std::string name;
  GenerationParams params;
  CampaignConfig campaign;
  std::vector<SolverKind> solvers;
  int missions = 30;
  std::uint64_t seed = 42;
  std::vector<int> selfish_ids;
  double selfish_contribution = 0.5;
  ObjectiveWeights weights;

  Scenario make_scenario() const {
    Scenario s = generate_scenario(params, seed);
    s.weights = weights;
    for (int id : selfish_ids) {
      for (auto& u : s.uavs)
        if (u.id == id) {
          u.selfish = true;
          u.contribution_fraction = selfish_contribution;
        }
    }
    // unreliable UAVs are also unreliable on paper: raise their lambda to the
    // value whose mission-level failure probability matches the injection
    if (!campaign.injected_failure_ids.empty()) {
      double hazard = -std::log(1.0 - campaign.injected_failure_prob);
      for (int id : campaign.injected_failure_ids)
        for (auto& u : s.uavs)
          if (u.id == id)
            for (std::size_t j = 0; j < u.failure_rates.size(); ++j)
              u.failure_rates[j] =
                  hazard / (static_cast<double>(u.failure_rates.size()) * 15.0);
    }
    return s;
  }
};

inline std::vector<ExperimentPreset> builtin_presets() {
  std::vector<ExperimentPreset> out;
  auto scale = [](const std::string& name, int uavs, int tasks) {
    ExperimentPreset p;
    p.name = name;
    p.params.n_uavs = uavs;
    p.params.n_tasks = tasks;
    p.campaign.task_params = p.params;
    p.solvers = {SolverKind::Moqga, SolverKind::Nsga2, SolverKind::Distance,
                 SolverKind::MergeSplit};
    return p;
  };
  out.push_back(scale("table2-8-2", 8, 2));
  out.push_back(scale("table2-16-4", 16, 4));
  out.push_back(scale("table2-32-8", 32, 8));
  out.push_back(scale("table2-64-16", 64, 16));
  out.push_back(scale("table2-128-24", 128, 24));

  ExperimentPreset fig2 = scale("fig2-selfish", 8, 2);
  fig2.selfish_ids = {4, 5};  // u5 and u6 with 1-based labels
  fig2.campaign.reputation_decay = true;
  fig2.seed = 17;
  fig2.solvers = {SolverKind::Moqga};
  out.push_back(fig2);

  ExperimentPreset table3 = scale("table3-unreliable", 8, 2);
  table3.missions = 10;
  table3.campaign.injected_failure_ids = {4, 5};
  table3.solvers = {SolverKind::Moqga};
  table3.weights.eta1 = 200.0;
  out.push_back(table3);
  return out;
}

inline std::optional<ExperimentPreset> find_preset(const std::string& name) {
  for (auto& p : builtin_presets())
    if (p.name == name) return p;
  return std::nullopt;
}

inline std::string solver_name(SolverKind k) {
  switch (k) {
    case SolverKind::Moqga: return "moqga";
    case SolverKind::Nsga2: return "nsga2";
    case SolverKind::Distance: return "distance";
    case SolverKind::MergeSplit: return "merge-split";
  }
  return "?";
}

inline std::optional<SolverKind> solver_from_name(const std::string& name) {
  if (name == "moqga") return SolverKind::Moqga;
  if (name == "nsga2") return SolverKind::Nsga2;
  if (name == "distance") return SolverKind::Distance;
  if (name == "merge-split") return SolverKind::MergeSplit;
  return std::nullopt;
}

}  // namespace moqga

#endif  // MOQGA_PRESETS_HPP
