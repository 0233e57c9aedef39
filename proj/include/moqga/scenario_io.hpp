#ifndef MOQGA_SCENARIO_IO_HPP
#define MOQGA_SCENARIO_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "moqga/model.hpp"

namespace moqga {

inline nlohmann::json to_json(const Scenario& s) {
  nlohmann::json j;
  j["uavs"] = nlohmann::json::array();
  for (const auto& u : s.uavs) {
    j["uavs"].push_back({{"id", u.id},
                         {"position", {u.position.x, u.position.y}},
                         {"resources", u.resources},
                         {"failure_rates", u.failure_rates},
                         {"speed", u.speed},
                         {"selfish", u.selfish},
                         {"contribution_fraction", u.contribution_fraction}});
  }
  j["tasks"] = nlohmann::json::array();
  for (const auto& t : s.tasks) {
    j["tasks"].push_back({{"id", t.id},
                          {"position", {t.position.x, t.position.y}},
                          {"required", t.required}});
  }
  j["mu"] = s.resource_cost_coeff;
  j["weights"] = {{"eta1", s.weights.eta1},
                  {"eta2", s.weights.eta2},
                  {"gamma", s.weights.gamma},
                  {"delta", s.weights.delta}};
  j["call_radius"] = s.call_radius;
  j["seed"] = s.rng_seed;
  j["travel_once_per_member"] = s.travel_once_per_member;
  return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario s;
  for (const auto& ju : j.at("uavs")) {
    Uav u;
    u.id = ju.at("id").get<int>();
    u.position = {ju.at("position").at(0).get<double>(),
                  ju.at("position").at(1).get<double>()};
    u.resources = ju.at("resources").get<std::vector<double>>();
    u.failure_rates = ju.at("failure_rates").get<std::vector<double>>();
    u.speed = ju.at("speed").get<double>();
    u.selfish = ju.at("selfish").get<bool>();
    u.contribution_fraction = ju.value("contribution_fraction", 1.0);
    s.uavs.push_back(std::move(u));
  }
  for (const auto& jt : j.at("tasks")) {
    TaskSpec t;
    t.id = jt.at("id").get<int>();
    t.position = {jt.at("position").at(0).get<double>(),
                  jt.at("position").at(1).get<double>()};
    t.required = jt.at("required").get<std::vector<double>>();
    s.tasks.push_back(std::move(t));
  }
  s.resource_cost_coeff = j.at("mu").get<std::vector<double>>();
  const auto& jw = j.at("weights");
  s.weights = {jw.at("eta1").get<double>(), jw.at("eta2").get<double>(),
               jw.at("gamma").get<double>(), jw.at("delta").get<double>()};
  s.call_radius = j.at("call_radius").get<double>();
  s.rng_seed = j.at("seed").get<std::uint64_t>();
  s.travel_once_per_member = j.value("travel_once_per_member", false);
  return s;
}

inline void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(s).dump(2) << '\n';
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  return scenario_from_json(j);
}

}  // namespace moqga

#endif  // MOQGA_SCENARIO_IO_HPP
