#ifndef MOQGA_BASELINES_HPP
#define MOQGA_BASELINES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "moqga/coalition_problem.hpp"
#include "moqga/model.hpp"
#include "moqga/objectives.hpp"
#include "moqga/rng.hpp"

namespace moqga {

// ---------------------------------------------------------------------------
// Distance-based greedy: add the nearest candidates (by travel time) until
// the resource constraint holds or candidates run out. Ignores reputation
// and reliability; may return an infeasible coalition.
// ---------------------------------------------------------------------------

inline CoalitionAssignment distance_based(const Scenario& scenario,
                                          const TaskSpec& task, int leader_id,
                                          std::vector<int> candidate_ids) {
  std::sort(candidate_ids.begin(), candidate_ids.end(),
            [&](int a, int b) {
              double ta = distance(scenario.uav(a).position, task.position) /
                          scenario.uav(a).speed;
              double tb = distance(scenario.uav(b).position, task.position) /
                          scenario.uav(b).speed;
              if (ta != tb) return ta < tb;
              return a < b;
            });
  std::vector<int> members{leader_id};
  auto feasible = [&] {
    auto sf = resource_shortfall(derive_assignment(scenario, task, members),
                                 task);
    return std::all_of(sf.begin(), sf.end(), [](double v) { return v == 0.0; });
  };
  for (int id : candidate_ids) {
    if (feasible()) break;
    members.push_back(id);
  }
  return derive_assignment(scenario, task, members);
}

// ---------------------------------------------------------------------------
// Merge-and-split local search: singletons assigned to their nearest task,
// then merges of same-task groups and canonical half-splits are accepted
// while they strictly improve the summed fitness.
// ---------------------------------------------------------------------------

struct MergeSplitConfig {
  int max_passes = 1000;
};

namespace detail {

struct MsGroup {
  int task_id;
  std::vector<int> members;  // sorted ascending
};

}  // namespace detail

inline std::vector<CoalitionAssignment> merge_and_split(
    const Scenario& scenario, const std::vector<TaskSpec>& tasks,
    const ReputationLedger& ledger, const MergeSplitConfig& config = {}) {
  using detail::MsGroup;
  auto fitness = [&](const MsGroup& g) {
    const TaskSpec& t = scenario.task(g.task_id);
    return evaluate(derive_assignment(scenario, t, g.members), t, ledger,
                    scenario.weights, scenario.travel_once_per_member)
        .fitness;
  };

  std::vector<MsGroup> groups;
  for (const auto& u : scenario.uavs) {
    int nearest = -1;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : tasks) {
      double d = distance(u.position, t.position);
      if (d < best) {
        best = d;
        nearest = t.id;
      }
    }
    if (nearest >= 0) groups.push_back({nearest, {u.id}});
  }

  for (int pass = 0; pass < config.max_passes; ++pass) {
    bool changed = false;
    // merge scan
    for (std::size_t i = 0; i < groups.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < groups.size() && !changed; ++j) {
        if (groups[i].task_id != groups[j].task_id) continue;
        MsGroup merged{groups[i].task_id, groups[i].members};
        merged.members.insert(merged.members.end(), groups[j].members.begin(),
                              groups[j].members.end());
        std::sort(merged.members.begin(), merged.members.end());
        if (fitness(merged) > fitness(groups[i]) + fitness(groups[j])) {
          groups[i] = std::move(merged);
          groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
    // split scan: canonical halves of the id-sorted member list
    for (std::size_t i = 0; i < groups.size() && !changed; ++i) {
      if (groups[i].members.size() < 2) continue;
      std::size_t half = groups[i].members.size() / 2;
      MsGroup a{groups[i].task_id,
                {groups[i].members.begin(),
                 groups[i].members.begin() + static_cast<std::ptrdiff_t>(half)}};
      MsGroup b{groups[i].task_id,
                {groups[i].members.begin() + static_cast<std::ptrdiff_t>(half),
                 groups[i].members.end()}};
      if (fitness(a) + fitness(b) > fitness(groups[i])) {
        groups[i] = std::move(a);
        groups.push_back(std::move(b));
        changed = true;
      }
    }
    if (!changed) break;
  }

  // one serving coalition per task: the fittest group, others stay idle
  std::vector<CoalitionAssignment> result;
  for (const auto& t : tasks) {
    const MsGroup* best = nullptr;
    double best_f = -std::numeric_limits<double>::infinity();
    for (const auto& g : groups) {
      if (g.task_id != t.id) continue;
      double f = fitness(g);
      if (f > best_f || (f == best_f && best && g.members < best->members)) {
        best_f = f;
        best = &g;
      }
    }
    result.push_back(best ? derive_assignment(scenario, t, best->members)
                          : derive_assignment(scenario, t, {}));
  }
  return result;
}

// ---------------------------------------------------------------------------
// NSGA-II machinery
// ---------------------------------------------------------------------------

struct Nsga2Config {
  int population_size = 200;
  int max_iterations = 500;
  double mutation_prob = 0.10;
  double crossover_prob = 0.90;
  // Listed in the parameter set for documentation; the binary encoding uses
  // bit-flip mutation and uniform crossover, so these are unused.
  double crossover_dist_index = 20.0;
  double mutation_dist_index = 100.0;
  std::uint64_t rng_seed = 0;
};

using ObjectiveTriple = std::array<double, 3>;

inline bool dominates(const ObjectiveTriple& a, const ObjectiveTriple& b) {
  bool strictly = false;
  for (int k = 0; k < 3; ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strictly = true;
  }
  return strictly;
}

// Partition into non-domination fronts (minimization on all axes). Returns
// per-front index lists, each in ascending input order.
template <typename Dominates>
std::vector<std::vector<std::size_t>> non_dominated_fronts(std::size_t n,
                                                           Dominates&& dom) {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<int> domination_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> current;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (dom(p, q))
        dominated_by[p].push_back(q);
      else if (dom(q, p))
        ++domination_count[p];
    }
    if (domination_count[p] == 0) current.push_back(p);
  }
  while (!current.empty()) {
    fronts.push_back(current);
    std::vector<std::size_t> next;
    for (std::size_t p : current)
      for (std::size_t q : dominated_by[p])
        if (--domination_count[q] == 0) next.push_back(q);
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return fronts;
}

inline std::vector<std::vector<ObjectiveTriple>> fast_non_dominated_sort(
    const std::vector<ObjectiveTriple>& points) {
  auto fronts = non_dominated_fronts(points.size(), [&](std::size_t a,
                                                        std::size_t b) {
    return dominates(points[a], points[b]);
  });
  std::vector<std::vector<ObjectiveTriple>> out;
  for (const auto& f : fronts) {
    std::vector<ObjectiveTriple> row;
    for (std::size_t i : f) row.push_back(points[i]);
    out.push_back(std::move(row));
  }
  return out;
}

// Crowding distance of each member of one front; boundary points get +inf.
inline std::vector<double> crowding_distance(
    const std::vector<ObjectiveTriple>& front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(),
              std::numeric_limits<double>::infinity());
    return dist;
  }
  for (int k = 0; k < 3; ++k) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return front[a][k] < front[b][k];
    });
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    double range = front[order.back()][k] - front[order.front()][k];
    if (range == 0.0) continue;
    for (std::size_t i = 1; i + 1 < n; ++i)
      dist[order[i]] +=
          (front[order[i + 1]][k] - front[order[i - 1]][k]) / range;
  }
  return dist;
}

struct ParetoEntry {
  BitString bits;
  ObjectiveTriple objectives;  // (C, -lnR, -P)
};

struct Nsga2Result {
  std::vector<ParetoEntry> front;     // final non-dominated, feasible first
  BitString scalarized_best_bits;     // front member maximizing the scalarized fitness
  double scalarized_best_fitness = 0.0;
  long evaluations = 0;
};

// Generational NSGA-II on a membership bitmap. Constraint-domination:
// feasible beats infeasible, infeasible solutions compare by total shortfall.
template <typename Oracle>
Nsga2Result nsga2_run(Oracle&& oracle, std::size_t m,
                      const Nsga2Config& config,
                      const ObjectiveWeights& weights) {
  if (m == 0) throw std::invalid_argument("nsga2_run: m must be >= 1");
  Rng rng(config.rng_seed);
  const std::size_t pop_size = static_cast<std::size_t>(config.population_size);
  const double flip_prob = config.mutation_prob / static_cast<double>(m);

  struct Individual {
    BitString bits;
    MultiObjective obj;
    std::size_t rank = 0;
    double crowding = 0.0;
  };

  auto constrained_dominates = [](const Individual& a, const Individual& b) {
    if (a.obj.feasible() != b.obj.feasible()) return a.obj.feasible();
    if (!a.obj.feasible())
      return a.obj.total_shortfall < b.obj.total_shortfall;
    return dominates({a.obj.cost, a.obj.neg_log_reliability,
                      a.obj.neg_reputation},
                     {b.obj.cost, b.obj.neg_log_reliability,
                      b.obj.neg_reputation});
  };

  Nsga2Result result;
  auto evaluate_bits = [&](const BitString& bits) {
    ++result.evaluations;
    return oracle(bits);
  };

  std::vector<Individual> pop(pop_size);
  for (auto& ind : pop) {
    ind.bits.resize(m);
    for (auto& b : ind.bits) b = static_cast<std::uint8_t>(rng.below(2));
    ind.obj = evaluate_bits(ind.bits);
  }

  auto assign_rank_and_crowding = [&](std::vector<Individual>& v)
      -> std::vector<std::vector<std::size_t>> {
    auto fronts = non_dominated_fronts(
        v.size(), [&](std::size_t a, std::size_t b) {
          return constrained_dominates(v[a], v[b]);
        });
    for (std::size_t r = 0; r < fronts.size(); ++r) {
      std::vector<ObjectiveTriple> pts;
      for (std::size_t i : fronts[r])
        pts.push_back({v[i].obj.cost, v[i].obj.neg_log_reliability,
                       v[i].obj.neg_reputation});
      auto cd = crowding_distance(pts);
      for (std::size_t k = 0; k < fronts[r].size(); ++k) {
        v[fronts[r][k]].rank = r;
        v[fronts[r][k]].crowding = cd[k];
      }
    }
    return fronts;
  };

  assign_rank_and_crowding(pop);

  auto tournament = [&]() -> const Individual& {
    const Individual& a = pop[rng.below(pop_size)];
    const Individual& b = pop[rng.below(pop_size)];
    if (a.rank != b.rank) return a.rank < b.rank ? a : b;
    return a.crowding >= b.crowding ? a : b;
  };

  for (int gen = 0; gen < config.max_iterations; ++gen) {
    std::vector<Individual> combined = pop;
    combined.reserve(2 * pop_size);
    while (combined.size() < 2 * pop_size) {
      BitString c1 = tournament().bits;
      BitString c2 = tournament().bits;
      if (rng.bernoulli(config.crossover_prob)) {
        for (std::size_t i = 0; i < m; ++i)
          if (rng.bernoulli(0.5)) std::swap(c1[i], c2[i]);
      }
      for (BitString* child : {&c1, &c2}) {
        for (auto& b : *child)
          if (rng.bernoulli(flip_prob)) b ^= 1u;
        Individual ind;
        ind.bits = *child;
        ind.obj = evaluate_bits(ind.bits);
        combined.push_back(std::move(ind));
        if (combined.size() == 2 * pop_size) break;
      }
    }
    auto fronts = assign_rank_and_crowding(combined);
    std::vector<Individual> next;
    next.reserve(pop_size);
    for (const auto& front : fronts) {
      if (next.size() + front.size() <= pop_size) {
        for (std::size_t i : front) next.push_back(combined[i]);
      } else {
        std::vector<std::size_t> order = front;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                           return combined[a].crowding > combined[b].crowding;
                         });
        for (std::size_t i : order) {
          if (next.size() == pop_size) break;
          next.push_back(combined[i]);
        }
      }
      if (next.size() == pop_size) break;
    }
    // ranks/crowding carried over from the combined sort stay valid: the
    // truncation never drops a dominator of a surviving individual
    pop = std::move(next);
  }

  for (const auto& ind : pop) {
    if (ind.rank != 0) continue;
    ObjectiveTriple t{ind.obj.cost, ind.obj.neg_log_reliability,
                      ind.obj.neg_reputation};
    result.front.push_back({ind.bits, t});
    double f = ind.obj.scalarized_fitness(weights);
    if (result.scalarized_best_bits.empty() ||
        f > result.scalarized_best_fitness) {
      result.scalarized_best_fitness = f;
      result.scalarized_best_bits = ind.bits;
    }
  }
  return result;
}

}  // namespace moqga

#endif  // MOQGA_BASELINES_HPP
