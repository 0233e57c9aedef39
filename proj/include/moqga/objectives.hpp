#ifndef MOQGA_OBJECTIVES_HPP
#define MOQGA_OBJECTIVES_HPP

#include <algorithm>
#include <vector>

#include "moqga/ledger.hpp"
#include "moqga/model.hpp"

namespace moqga {

// All scalar evaluations of one candidate coalition.
struct ObjectiveBreakdown {
  double cost = 0.0;             // C(S)
  double log_reliability = 0.0;  // ln R(S), <= 0
  double reputation = 0.0;       // P(S)
  double objective = 0.0;        // O(S) = C - eta1*lnR - eta2*P
  double penalty = 0.0;          // g(S) = gamma * sum shortfall
  double fitness = 0.0;          // F(S) = -(O + g)
  std::vector<double> shortfall;
};

// C(S) = sum_i sum_j (e_ij * k_ij + a_ij). The travel term sits inside the
// double sum, so each member's travel time is counted once per resource type;
// travel_once counts it a single time per member instead.
inline double coalition_cost(const CoalitionAssignment& a,
                             bool travel_once = false) {
  double c = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t nr = a.exec_cost[i].size();
    for (std::size_t j = 0; j < nr; ++j)
      c += a.exec_cost[i][j] * a.exec_time[i][j];
    c += a.travel_time[i] * (travel_once ? 1.0 : static_cast<double>(nr));
  }
  return c;
}

// ln R(S) = -sum_i sum_j lambda_ij * k_ij
inline double log_reliability(const CoalitionAssignment& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.failure_rate[i].size(); ++j)
      s += a.failure_rate[i][j] * a.exec_time[i][j];
  return -s;
}

// shortfall_j = max(0, tau_j - sum_i e_ij)
inline std::vector<double> resource_shortfall(const CoalitionAssignment& a,
                                              const TaskSpec& task) {
  std::vector<double> sf(task.required.size(), 0.0);
  for (std::size_t j = 0; j < sf.size(); ++j) {
    double supplied = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) supplied += a.exec_cost[i][j];
    sf[j] = std::max(0.0, task.required[j] - supplied);
  }
  return sf;
}

inline double penalty(const std::vector<double>& shortfall, double gamma) {
  double s = 0.0;
  for (double v : shortfall) s += v;
  return gamma * s;
}

// P(S) = sum of current reputations of the members.
inline double coalition_reputation(const std::vector<int>& member_ids,
                                   const ReputationLedger& ledger) {
  double p = 0.0;
  for (int id : member_ids) p += ledger.reputation(id);
  return p;
}

inline ObjectiveBreakdown evaluate(const CoalitionAssignment& a,
                                   const TaskSpec& task,
                                   const ReputationLedger& ledger,
                                   const ObjectiveWeights& w,
                                   bool travel_once = false) {
  ObjectiveBreakdown b;
  b.cost = coalition_cost(a, travel_once);
  b.log_reliability = log_reliability(a);
  b.reputation = coalition_reputation(a.member_ids, ledger);
  b.objective = b.cost - w.eta1 * b.log_reliability - w.eta2 * b.reputation;
  b.shortfall = resource_shortfall(a, task);
  b.penalty = penalty(b.shortfall, w.gamma);
  b.fitness = -(b.objective + b.penalty);
  return b;
}

}  // namespace moqga

#endif  // MOQGA_OBJECTIVES_HPP
