#ifndef MOQGA_LEDGER_HPP
#define MOQGA_LEDGER_HPP

#include <map>
#include <stdexcept>
#include <vector>

namespace moqga {

// Cooperative reputation per UAV, plus the full (mission, uav, rho) history
// for trajectory output. Updates happen only at mission settlement.
class ReputationLedger {
 public:
  struct HistoryEntry {
    int mission = 0;
    int uav_id = 0;
    double rho = 0.0;
  };

  ReputationLedger() = default;

  void init(const std::vector<int>& uav_ids, double rho0 = 0.0) {
    rho_.clear();
    history_.clear();
    for (int id : uav_ids) rho_[id] = rho0;
  }

  double reputation(int uav_id) const {
    auto it = rho_.find(uav_id);
    if (it == rho_.end()) throw std::out_of_range("unknown uav id in ledger");
    return it->second;
  }

  bool contains(int uav_id) const { return rho_.count(uav_id) != 0; }

  // rho^t = rho^{t-1} + delta (literal update). The decay variant
  // rho^t = kappa * rho^{t-1} + delta is applied only to coalition members;
  // idle UAVs keep their reputation bit-identical in both modes.
  void apply_delta(int uav_id, double delta, double kappa = 1.0) {
    auto it = rho_.find(uav_id);
    if (it == rho_.end()) throw std::out_of_range("unknown uav id in ledger");
    it->second = kappa * it->second + delta;
  }

  void record_snapshot(int mission) {
    for (const auto& [id, rho] : rho_)
      history_.push_back({mission, id, rho});
  }

  const std::map<int, double>& reputations() const { return rho_; }
  const std::vector<HistoryEntry>& history() const { return history_; }

 private:
  std::map<int, double> rho_;
  std::vector<HistoryEntry> history_;
};

}  // namespace moqga

#endif  // MOQGA_LEDGER_HPP
