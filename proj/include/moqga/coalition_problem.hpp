#ifndef MOQGA_COALITION_PROBLEM_HPP
#define MOQGA_COALITION_PROBLEM_HPP

#include <vector>

#include "moqga/model.hpp"
#include "moqga/objectives.hpp"
#include "moqga/qiga.hpp"

namespace moqga {

// Objective values of one candidate solution as the multi-objective
// optimizers see them: all three axes minimized, plus the constraint slack.
struct MultiObjective {
  double cost = 0.0;
  double neg_log_reliability = 0.0;  // -ln R
  double neg_reputation = 0.0;       // -P
  double total_shortfall = 0.0;

  bool feasible() const { return total_shortfall == 0.0; }

  double scalarized_fitness(const ObjectiveWeights& w) const {
    return -(cost + w.eta1 * neg_log_reliability + w.eta2 * neg_reputation +
             w.gamma * total_shortfall);
  }
};

// Membership-bitmap encoding of one coalition-formation instance: bit i set
// means candidate_ids[i] joins; the leader is always a member and not encoded.
struct CoalitionProblem {
  const Scenario* scenario = nullptr;
  const TaskSpec* task = nullptr;
  int leader_id = -1;
  std::vector<int> candidate_ids;

  std::size_t num_bits() const { return candidate_ids.size(); }

  std::vector<int> members(const BitString& bits) const {
    std::vector<int> ids{leader_id};
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) ids.push_back(candidate_ids[i]);
    return ids;
  }

  CoalitionAssignment assignment(const BitString& bits) const {
    return derive_assignment(*scenario, *task, members(bits));
  }

  ObjectiveBreakdown breakdown(const BitString& bits,
                               const ReputationLedger& ledger) const {
    return evaluate(assignment(bits), *task, ledger, scenario->weights,
                    scenario->travel_once_per_member);
  }

  double fitness(const BitString& bits, const ReputationLedger& ledger) const {
    return breakdown(bits, ledger).fitness;
  }

  MultiObjective multi(const BitString& bits,
                       const ReputationLedger& ledger) const {
    ObjectiveBreakdown b = breakdown(bits, ledger);
    double total = 0.0;
    for (double v : b.shortfall) total += v;
    return {b.cost, -b.log_reliability, -b.reputation, total};
  }
};

}  // namespace moqga

#endif  // MOQGA_COALITION_PROBLEM_HPP
