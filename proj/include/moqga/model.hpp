#ifndef MOQGA_MODEL_HPP
#define MOQGA_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "moqga/rng.hpp"

namespace moqga {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// An agent. Capacities and failure rates are indexed by resource type.
struct Uav {
  int id = 0;
  Point2 position;
  std::vector<double> resources;      // r_u^j, resource units
  std::vector<double> failure_rates;  // lambda_ij, failures per unit time
  double speed = 1.0;                 // length units per time unit
  bool selfish = false;
  double contribution_fraction = 1.0;  // fraction of pledged resources delivered
};

// A Point of Interest with its required-resource vector.
struct TaskSpec {
  int id = 0;
  Point2 position;
  std::vector<double> required;  // tau^k, resource units
};

// Weighting parameters of the scalarized objective, penalty and bid utility.
struct ObjectiveWeights {
  double eta1 = 10.0;   // reliability weight
  double eta2 = 1.0;    // reputation weight
  double gamma = 100000.0;  // penalty coefficient; must dwarf a member's cost
  double delta = 0.1;   // travel-time weight in follower utility
};

struct Scenario {
  std::vector<Uav> uavs;
  std::vector<TaskSpec> tasks;
  std::vector<double> resource_cost_coeff;  // mu_j, one per resource type
  ObjectiveWeights weights;
  double call_radius = 70.710678118654755;  // half the default region diagonal
  std::uint64_t rng_seed = 0;
  // counts each member's travel time once instead of once per resource type
  bool travel_once_per_member = false;

  std::size_t n_resources() const { return resource_cost_coeff.size(); }

  const Uav& uav(int id) const {
    for (const auto& u : uavs)
      if (u.id == id) return u;
    throw std::out_of_range("unknown uav id");
  }
  const TaskSpec& task(int id) const {
    for (const auto& t : tasks)
      if (t.id == id) return t;
    throw std::out_of_range("unknown task id");
  }
};

// One candidate coalition for one task together with the derived matrices
// used by every evaluation function. Rows follow member_ids order.
struct CoalitionAssignment {
  int task_id = -1;
  std::vector<int> member_ids;                  // distinct, sorted ascending
  std::vector<std::vector<double>> exec_cost;   // e_ij = mu_j * r_u^j
  std::vector<std::vector<double>> exec_time;   // k_ij in [10, 20]
  std::vector<std::vector<double>> failure_rate;  // lambda_ij copied from members
  std::vector<double> travel_time;              // a_i = dist / speed

  std::size_t size() const { return member_ids.size(); }
  bool empty() const { return member_ids.empty(); }
};

// Execution time of resource j of a given UAV on a given task. Sampled once
// per (task, uav, resource) identity: repeated queries agree by construction.
inline double exec_time_sample(std::uint64_t seed, int task_id, int uav_id,
                               std::size_t resource) {
  return keyed_uniform(seed, static_cast<std::uint64_t>(task_id) + 1,
                       static_cast<std::uint64_t>(uav_id) + 1,
                       resource, 10.0, 20.0);
}

// Assemble the e, k, a matrices for a member set. The empty set yields the
// empty coalition with empty matrices.
inline CoalitionAssignment derive_assignment(const Scenario& scenario,
                                             const TaskSpec& task,
                                             std::vector<int> member_ids) {
  std::sort(member_ids.begin(), member_ids.end());
  CoalitionAssignment a;
  a.task_id = task.id;
  a.member_ids = std::move(member_ids);
  const std::size_t nr = scenario.n_resources();
  a.exec_cost.reserve(a.member_ids.size());
  for (int id : a.member_ids) {
    const Uav& u = scenario.uav(id);
    std::vector<double> e(nr), k(nr), lam(nr);
    for (std::size_t j = 0; j < nr; ++j) {
      e[j] = scenario.resource_cost_coeff[j] * u.resources[j];
      k[j] = exec_time_sample(scenario.rng_seed, task.id, u.id, j);
      lam[j] = u.failure_rates[j];
    }
    a.exec_cost.push_back(std::move(e));
    a.exec_time.push_back(std::move(k));
    a.failure_rate.push_back(std::move(lam));
    a.travel_time.push_back(distance(u.position, task.position) / u.speed);
  }
  return a;
}

struct GenerationParams {
  int n_uavs = 8;
  int n_tasks = 2;
  int n_resources = 5;
  double region_side = 100.0;
  double resource_min = 0.75;
  double resource_max = 10.0;
  double task_resource_min = 5.0;
  double task_resource_max = 15.0;
  double failure_rate_min = 5e-5;
  double failure_rate_max = 1e-4;
  double speed = 1.0;
};

inline std::vector<TaskSpec> generate_tasks(const GenerationParams& p,
                                            Rng& rng) {
  std::vector<TaskSpec> tasks(static_cast<std::size_t>(p.n_tasks));
  for (int i = 0; i < p.n_tasks; ++i) {
    TaskSpec& t = tasks[static_cast<std::size_t>(i)];
    t.id = i;
    t.position = {rng.uniform(0.0, p.region_side),
                  rng.uniform(0.0, p.region_side)};
    t.required.resize(static_cast<std::size_t>(p.n_resources));
    for (auto& r : t.required)
      r = rng.uniform(p.task_resource_min, p.task_resource_max);
  }
  return tasks;
}

inline Scenario generate_scenario(const GenerationParams& p,
                                  std::uint64_t seed) {
  if (p.n_uavs <= 0 || p.n_tasks <= 0 || p.n_resources <= 0)
    throw std::invalid_argument("generation params must be positive");
  Scenario s;
  s.rng_seed = seed;
  Rng rng(mix_seed(seed, 0x5ce9a51));
  s.resource_cost_coeff.assign(static_cast<std::size_t>(p.n_resources), 1.0);
  s.uavs.resize(static_cast<std::size_t>(p.n_uavs));
  for (int i = 0; i < p.n_uavs; ++i) {
    Uav& u = s.uavs[static_cast<std::size_t>(i)];
    u.id = i;
    u.position = {rng.uniform(0.0, p.region_side),
                  rng.uniform(0.0, p.region_side)};
    u.speed = p.speed;
    u.resources.resize(static_cast<std::size_t>(p.n_resources));
    u.failure_rates.resize(static_cast<std::size_t>(p.n_resources));
    for (auto& r : u.resources) r = rng.uniform(p.resource_min, p.resource_max);
    for (auto& f : u.failure_rates)
      f = rng.uniform(p.failure_rate_min, p.failure_rate_max);
  }
  s.tasks = generate_tasks(p, rng);
  s.call_radius = 0.5 * std::hypot(p.region_side, p.region_side);
  return s;
}

}  // namespace moqga

#endif  // MOQGA_MODEL_HPP
