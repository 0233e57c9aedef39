#ifndef MOQGA_SIM_HPP
#define MOQGA_SIM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "moqga/baselines.hpp"
#include "moqga/coalition_problem.hpp"
#include "moqga/ledger.hpp"
#include "moqga/model.hpp"
#include "moqga/objectives.hpp"
#include "moqga/qiga.hpp"

namespace moqga {

enum class SolverKind { Moqga, Nsga2, Distance, MergeSplit };

struct SolverConfig {
  SolverKind kind = SolverKind::Moqga;
  QigaConfig qiga;
  Nsga2Config nsga2;
  MergeSplitConfig merge_split;
};

// A leader's invitation as scored by the invited UAV: U = rho - delta * a.
struct Bid {
  int leader_id = -1;
  int task_id = -1;
  int candidate_id = -1;
  double utility = 0.0;
  std::vector<double> pledged;
};

struct TaskOutcome {
  int task_id = -1;
  int leader_id = -1;  // -1 when no UAV was left to lead the task
  std::vector<int> member_ids;
  bool satisfied = false;
  double shortfall_total = 0.0;   // on delivered resources
  int violated_constraints = 0;   // resources with delivered shortfall > 0
  ObjectiveBreakdown breakdown;  // of the pledged coalition
  std::vector<int> failed_members;
};

struct MissionReport {
  int mission = 0;
  std::vector<TaskOutcome> tasks;
  double completed_fraction = 0.0;
  double violation_total = 0.0;   // violated resource constraints this mission
  double shortfall_sum = 0.0;     // summed shortfall amounts this mission
};

struct CampaignConfig {
  double rho0 = 0.0;
  bool reputation_decay = false;  // rho^t = kappa*rho^{t-1} + delta for members
  double decay_kappa = 0.95;
  bool deplete_resources = false;
  std::vector<int> injected_failure_ids;
  double injected_failure_prob = 0.9;
  GenerationParams task_params;  // layout of the fresh tasks per mission
};

// ---------------------------------------------------------------------------
// Detection and leader election: globally nearest (task, uav) pairs first,
// ties by lower task id then lower uav id. A UAV leads at most one task.
// ---------------------------------------------------------------------------

inline std::vector<std::pair<int, int>> detect_and_elect(
    const Scenario& scenario) {
  struct Cand {
    double dist;
    int task_id;
    int uav_id;
  };
  std::vector<Cand> all;
  for (const auto& t : scenario.tasks)
    for (const auto& u : scenario.uavs)
      all.push_back({distance(u.position, t.position), t.id, u.id});
  std::sort(all.begin(), all.end(), [](const Cand& a, const Cand& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.task_id != b.task_id) return a.task_id < b.task_id;
    return a.uav_id < b.uav_id;
  });
  std::set<int> used_tasks, used_uavs;
  std::vector<std::pair<int, int>> result;
  for (const auto& c : all) {
    if (used_tasks.count(c.task_id) || used_uavs.count(c.uav_id)) continue;
    used_tasks.insert(c.task_id);
    used_uavs.insert(c.uav_id);
    result.push_back({c.task_id, c.uav_id});
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Candidate pool for one leader's call: idle UAVs within call_radius of the
// task. The optimizing solvers additionally require overlap with the
// required-resource vector; the distance baseline takes everyone in range.
inline std::vector<int> candidate_pool(const Scenario& scenario,
                                       const TaskSpec& task,
                                       const std::set<int>& unavailable,
                                       bool require_resource_overlap) {
  std::vector<int> out;
  for (const auto& u : scenario.uavs) {
    if (unavailable.count(u.id)) continue;
    if (distance(u.position, task.position) > scenario.call_radius) continue;
    if (require_resource_overlap) {
      bool overlap = false;
      for (std::size_t j = 0; j < task.required.size(); ++j)
        if (task.required[j] > 0.0 && u.resources[j] > 0.0) overlap = true;
      if (!overlap) continue;
    }
    out.push_back(u.id);
  }
  return out;
}

// Run the configured solver over one leader's candidate pool; returns the
// selected follower ids. An empty pool yields a leader-only coalition.
inline std::vector<int> form_coalition(const TaskSpec& task, int leader_id,
                                       const Scenario& scenario,
                                       const ReputationLedger& ledger,
                                       const SolverConfig& solver,
                                       const std::vector<int>& candidates,
                                       std::uint64_t seed) {
  if (candidates.empty()) return {};
  if (solver.kind == SolverKind::Distance) {
    auto a = distance_based(scenario, task, leader_id, candidates);
    std::vector<int> followers;
    for (int id : a.member_ids)
      if (id != leader_id) followers.push_back(id);
    return followers;
  }
  CoalitionProblem problem{&scenario, &task, leader_id, candidates};
  BitString best;
  if (solver.kind == SolverKind::Moqga) {
    QigaConfig cfg = solver.qiga;
    cfg.rng_seed = seed;
    best = qiga_run([&](const BitString& bits) {
             return problem.fitness(bits, ledger);
           },
                    problem.num_bits(), cfg)
               .best_bits;
  } else {
    Nsga2Config cfg = solver.nsga2;
    cfg.rng_seed = seed;
    best = nsga2_run([&](const BitString& bits) {
             return problem.multi(bits, ledger);
           },
                     problem.num_bits(), cfg, scenario.weights)
               .scalarized_best_bits;
  }
  std::vector<int> followers;
  for (std::size_t i = 0; i < best.size(); ++i)
    if (best[i]) followers.push_back(candidates[i]);
  return followers;
}

// ---------------------------------------------------------------------------
// Bid resolution: every UAV proposed by several leaders joins the one whose
// call maximizes U = rho - delta * a, ties to the lower task id. Leaders that
// lost a follower re-run their solver over the shrunken pool; rounds are
// capped at the task count.
// ---------------------------------------------------------------------------

inline std::map<int, std::vector<int>> resolve_bids(
    const Scenario& scenario, const ReputationLedger& ledger,
    const SolverConfig& solver,
    const std::vector<std::pair<int, int>>& leaders, std::uint64_t seed) {
  std::set<int> leader_ids;
  for (const auto& [t, l] : leaders) leader_ids.insert(l);

  std::map<int, std::vector<int>> pool;      // task -> candidate ids
  std::map<int, std::vector<int>> proposal;  // task -> proposed followers
  std::map<int, bool> dirty;
  const bool overlap_filter = solver.kind != SolverKind::Distance;
  for (const auto& [task_id, leader_id] : leaders) {
    pool[task_id] = candidate_pool(scenario, scenario.task(task_id),
                                   leader_ids, overlap_filter);
    dirty[task_id] = true;
  }

  std::map<int, int> committed;  // uav -> task holding its exclusive pledge
  auto utility = [&](int uav_id, int task_id) {
    const Uav& u = scenario.uav(uav_id);
    double a = distance(u.position, scenario.task(task_id).position) / u.speed;
    return ledger.reputation(uav_id) - scenario.weights.delta * a;
  };

  const int max_rounds = static_cast<int>(leaders.size());
  for (int round = 0; round <= max_rounds; ++round) {
    for (const auto& [task_id, leader_id] : leaders) {
      if (!dirty[task_id]) continue;
      std::vector<int> avail;
      for (int id : pool[task_id]) {
        auto it = committed.find(id);
        if (it == committed.end() || it->second == task_id)
          avail.push_back(id);
      }
      proposal[task_id] =
          form_coalition(scenario.task(task_id), leader_id, scenario, ledger,
                         solver, avail, mix_seed(seed, task_id, round));
      dirty[task_id] = false;
    }
    std::map<int, std::vector<int>> invitations;  // uav -> inviting tasks
    for (const auto& [task_id, followers] : proposal)
      for (int id : followers) invitations[id].push_back(task_id);
    bool contested = false;
    for (const auto& [uav_id, tasks] : invitations) {
      if (tasks.size() < 2) continue;
      contested = true;
      int winner = tasks.front();
      for (int t : tasks)
        if (utility(uav_id, t) > utility(uav_id, winner) ||
            (utility(uav_id, t) == utility(uav_id, winner) && t < winner))
          winner = t;
      committed[uav_id] = winner;
      for (int t : tasks)
        if (t != winner) dirty[t] = true;
    }
    if (!contested || round == max_rounds) break;
  }

  // any overlap left after the round cap resolves by the same utility rule
  std::map<int, std::vector<int>> final_members;
  std::map<int, int> claimed;
  for (const auto& [task_id, followers] : proposal)
    for (int id : followers) {
      auto it = claimed.find(id);
      if (it == claimed.end())
        claimed[id] = task_id;
      else if (utility(id, task_id) > utility(id, it->second) ||
               (utility(id, task_id) == utility(id, it->second) &&
                task_id < it->second))
        it->second = task_id;
    }
  for (const auto& [task_id, leader_id] : leaders) {
    std::vector<int> members{leader_id};
    for (int id : proposal[task_id])
      if (claimed[id] == task_id) members.push_back(id);
    std::sort(members.begin(), members.end());
    final_members[task_id] = members;
  }
  return final_members;
}

// ---------------------------------------------------------------------------
// Settlement: sample failures, compute delivered resources, recheck the
// constraint on deliveries, split the reputation credit per contribution
// shares, and update the ledger.
// ---------------------------------------------------------------------------

struct DeliveryRecord {
  int task_id = -1;
  std::map<int, std::vector<double>> delivered;  // uav -> per-resource amounts
};

inline MissionReport settle_mission(
    const std::map<int, std::vector<int>>& commitments,
    const std::map<int, int>& leaders_by_task, const Scenario& scenario,
    ReputationLedger& ledger, int mission_index, Rng& rng,
    const CampaignConfig& config,
    std::vector<DeliveryRecord>* deliveries = nullptr) {
  MissionReport report;
  report.mission = mission_index;
  std::set<int> injected(config.injected_failure_ids.begin(),
                         config.injected_failure_ids.end());
  const double kappa = config.reputation_decay ? config.decay_kappa : 1.0;
  // deltas apply only after every task is evaluated: all objective values of
  // the mission read the mission-start ledger snapshot
  std::vector<std::pair<int, double>> deltas;

  for (const auto& t : scenario.tasks) {
    TaskOutcome out;
    out.task_id = t.id;
    auto lit = leaders_by_task.find(t.id);
    out.leader_id = lit == leaders_by_task.end() ? -1 : lit->second;
    auto cit = commitments.find(t.id);
    std::vector<int> members =
        cit == commitments.end() ? std::vector<int>{} : cit->second;
    out.member_ids = members;

    CoalitionAssignment pledged = derive_assignment(scenario, t, members);
    out.breakdown = evaluate(pledged, t, ledger, scenario.weights,
                             scenario.travel_once_per_member);

    const std::size_t nr = scenario.n_resources();
    DeliveryRecord record;
    record.task_id = t.id;
    double upsilon = 0.0;
    for (double tau : t.required) upsilon += tau;

    std::map<int, double> share;  // f_i on delivered amounts
    std::vector<double> supplied(nr, 0.0);
    for (std::size_t i = 0; i < pledged.size(); ++i) {
      int id = pledged.member_ids[i];
      const Uav& u = scenario.uav(id);
      double p_fail;
      if (injected.count(id)) {
        p_fail = config.injected_failure_prob;
      } else {
        double hazard = 0.0;
        for (std::size_t j = 0; j < nr; ++j)
          hazard += pledged.failure_rate[i][j] * pledged.exec_time[i][j];
        p_fail = 1.0 - std::exp(-hazard);
      }
      bool failed = rng.bernoulli(p_fail);
      if (failed) out.failed_members.push_back(id);
      std::vector<double> delivered(nr, 0.0);
      double f = 0.0;
      for (std::size_t j = 0; j < nr; ++j) {
        delivered[j] = failed ? 0.0 : u.resources[j] * u.contribution_fraction;
        supplied[j] += scenario.resource_cost_coeff[j] * delivered[j];
        if (t.required[j] > 0.0) f += delivered[j] / t.required[j];
      }
      share[id] = f;
      record.delivered[id] = std::move(delivered);
    }

    double shortfall_total = 0.0;
    for (std::size_t j = 0; j < nr; ++j) {
      double sf = std::max(0.0, t.required[j] - supplied[j]);
      shortfall_total += sf;
      if (sf > 0.0) ++out.violated_constraints;
    }
    out.shortfall_total = shortfall_total;
    out.satisfied = !members.empty() && shortfall_total == 0.0;

    double share_sum = 0.0;
    for (const auto& [id, f] : share) share_sum += f;
    for (const auto& [id, f] : share)
      deltas.push_back({id, share_sum > 0.0 ? upsilon * f / share_sum : 0.0});
    if (deliveries) deliveries->push_back(std::move(record));
    report.tasks.push_back(std::move(out));
  }

  for (const auto& [id, delta] : deltas) ledger.apply_delta(id, delta, kappa);
  ledger.record_snapshot(mission_index);
  int satisfied = 0;
  for (const auto& o : report.tasks) {
    if (o.satisfied) ++satisfied;
    report.violation_total += o.violated_constraints;
    report.shortfall_sum += o.shortfall_total;
  }
  report.completed_fraction =
      report.tasks.empty()
          ? 0.0
          : static_cast<double>(satisfied) /
                static_cast<double>(report.tasks.size());
  return report;
}

// ---------------------------------------------------------------------------
// Campaign: missions share the UAV fleet and the reputation ledger; each
// mission gets a fresh task layout and fresh execution-time draws.
// ---------------------------------------------------------------------------

struct CampaignResult {
  std::vector<MissionReport> reports;
  ReputationLedger ledger;
  double completed_pct = 0.0;     // over all task slots of all missions
  double mean_violations = 0.0;   // mean per-mission total shortfall
};

inline MissionReport run_mission(const Scenario& scenario,
                                 ReputationLedger& ledger,
                                 const SolverConfig& solver, int mission_index,
                                 std::uint64_t seed,
                                 const CampaignConfig& config,
                                 std::vector<DeliveryRecord>* deliveries =
                                     nullptr) {
  Rng settle_rng(mix_seed(seed, 0x5e771e, mission_index));
  std::map<int, std::vector<int>> commitments;
  std::map<int, int> leaders_by_task;
  if (solver.kind == SolverKind::MergeSplit) {
    auto assigns =
        merge_and_split(scenario, scenario.tasks, ledger, solver.merge_split);
    for (const auto& a : assigns) {
      commitments[a.task_id] = a.member_ids;
      if (!a.member_ids.empty())
        leaders_by_task[a.task_id] = a.member_ids.front();
    }
  } else {
    auto leaders = detect_and_elect(scenario);
    commitments = resolve_bids(scenario, ledger, solver, leaders,
                               mix_seed(seed, 0xb1d, mission_index));
    for (const auto& [t, l] : leaders) leaders_by_task[t] = l;
  }
  return settle_mission(commitments, leaders_by_task, scenario, ledger,
                        mission_index, settle_rng, config, deliveries);
}

inline CampaignResult run_campaign(const Scenario& base,
                                   const SolverConfig& solver, int missions,
                                   std::uint64_t seed,
                                   const CampaignConfig& config) {
  CampaignResult result;
  std::vector<int> ids;
  for (const auto& u : base.uavs) ids.push_back(u.id);
  result.ledger.init(ids, config.rho0);

  Scenario working = base;
  GenerationParams task_params = config.task_params;
  task_params.n_resources = static_cast<int>(base.n_resources());

  int total_slots = 0, satisfied_slots = 0;
  double violation_sum = 0.0;
  for (int mission = 0; mission < missions; ++mission) {
    if (mission > 0) {
      Rng task_rng(mix_seed(seed, 0x7a5c, mission));
      working.tasks = generate_tasks(task_params, task_rng);
    }
    working.rng_seed = mix_seed(base.rng_seed, 0xeec, mission);

    std::vector<DeliveryRecord> deliveries;
    MissionReport report = run_mission(
        working, result.ledger, solver, mission, seed, config,
        config.deplete_resources ? &deliveries : nullptr);

    if (config.deplete_resources) {
      for (const auto& rec : deliveries)
        for (const auto& [id, amounts] : rec.delivered)
          for (auto& u : working.uavs)
            if (u.id == id)
              for (std::size_t j = 0; j < amounts.size(); ++j)
                u.resources[j] = std::max(0.0, u.resources[j] - amounts[j]);
    }

    for (const auto& o : report.tasks) {
      ++total_slots;
      if (o.satisfied) ++satisfied_slots;
    }
    violation_sum += report.violation_total;
    result.reports.push_back(std::move(report));
  }
  result.completed_pct =
      total_slots == 0
          ? 0.0
          : 100.0 * static_cast<double>(satisfied_slots) /
                static_cast<double>(total_slots);
  result.mean_violations =
      missions == 0 ? 0.0 : violation_sum / static_cast<double>(missions);
  return result;
}

}  // namespace moqga

#endif  // MOQGA_SIM_HPP
