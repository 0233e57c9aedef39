#ifndef MOQGA_REPORT_IO_HPP
#define MOQGA_REPORT_IO_HPP

#include <ostream>
#include <string>

#include <json.hpp>

#include "moqga/sim.hpp"

namespace moqga {

inline nlohmann::json to_json(const TaskOutcome& o) {
  return {{"task_id", o.task_id},
          {"leader_id", o.leader_id},
          {"members", o.member_ids},
          {"satisfied", o.satisfied},
          {"shortfall_total", o.shortfall_total},
          {"failed_members", o.failed_members},
          {"objective",
           {{"cost", o.breakdown.cost},
            {"log_reliability", o.breakdown.log_reliability},
            {"reputation", o.breakdown.reputation},
            {"objective", o.breakdown.objective},
            {"penalty", o.breakdown.penalty},
            {"fitness", o.breakdown.fitness}}}};
}

// JSON-lines: one record per task per mission.
inline void write_report_lines(std::ostream& out, const MissionReport& r) {
  for (const auto& o : r.tasks) {
    nlohmann::json j = to_json(o);
    j["mission"] = r.mission;
    out << j.dump() << '\n';
  }
}

inline void write_reputation_csv(std::ostream& out,
                                 const ReputationLedger& ledger,
                                 const std::string& header_comment) {
  out << header_comment;
  out << "mission,uav_id,rho\n";
  for (const auto& h : ledger.history())
    out << h.mission << ',' << h.uav_id << ',' << h.rho << '\n';
}

}  // namespace moqga

#endif  // MOQGA_REPORT_IO_HPP
