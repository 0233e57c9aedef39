// Acceptance suite: one line per criterion, exit 0 only if all pass.
// The thresholds are frozen; the whole suite is deterministic.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <vector>

#include "moqga/baselines.hpp"
#include "moqga/coalition_problem.hpp"
#include "moqga/presets.hpp"
#include "moqga/qiga.hpp"
#include "moqga/sim.hpp"

using namespace moqga;

namespace {

constexpr double kEps = 1e-9;

int failures = 0;

void report(int criterion, const char* what, bool pass, const char* detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", criterion,
              what, detail);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// 1. On small single-task instances the quantum-inspired optimizer must hit
//    the exhaustive optimum on >= 28/30, the genetic baseline within 5% of it
//    on >= 25/30, in under 5 minutes.
// ---------------------------------------------------------------------------
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  int qiga_hits = 0, nsga_hits = 0;
  for (int rep = 0; rep < 30; ++rep) {
    GenerationParams p;
    p.n_uavs = 5 + rep % 6;  // pool of at most 10 candidate followers
    p.n_tasks = 1;
    Scenario s = generate_scenario(p, 1000 + static_cast<std::uint64_t>(rep));
    auto leaders = detect_and_elect(s);
    int leader = leaders.front().second;
    auto pool = candidate_pool(s, s.tasks[0], {leader}, true);
    if (pool.size() > 10) pool.resize(10);
    if (pool.empty()) {  // nothing to optimize; both solvers trivially agree
      ++qiga_hits;
      ++nsga_hits;
      continue;
    }
    ReputationLedger ledger;
    std::vector<int> ids;
    for (const auto& u : s.uavs) ids.push_back(u.id);
    ledger.init(ids);
    CoalitionProblem problem{&s, &s.tasks[0], leader, pool};

    double opt = -std::numeric_limits<double>::infinity();
    const std::size_t m = problem.num_bits();
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      BitString bits(m);
      for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> i) & 1;
      opt = std::max(opt, problem.fitness(bits, ledger));
    }

    QigaConfig qcfg;
    qcfg.rng_seed = 7000 + static_cast<std::uint64_t>(rep);
    auto q = qiga_run(
        [&](const BitString& b) { return problem.fitness(b, ledger); }, m,
        qcfg);
    if (std::abs(q.best_fitness - opt) <= kEps * std::max(1.0, std::abs(opt)))
      ++qiga_hits;

    Nsga2Config ncfg;
    ncfg.rng_seed = 9000 + static_cast<std::uint64_t>(rep);
    auto n = nsga2_run([&](const BitString& b) { return problem.multi(b, ledger); },
                       m, ncfg, s.weights);
    if (std::abs(n.scalarized_best_fitness - opt) <= 0.05 * std::abs(opt))
      ++nsga_hits;
  }
  double dt = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "optimizer exact on %d/30 (need 28), genetic within 5%% on "
                "%d/30 (need 25), %.0fs (limit 300)",
                qiga_hits, nsga_hits, dt);
  report(1, "exhaustive-oracle equivalence",
         qiga_hits >= 28 && nsga_hits >= 25 && dt < 300.0, detail);
}

// ---------------------------------------------------------------------------
// 2. Benchmark scales 8-2 and 16-4: completion ordering moqga >= nsga2 >
//    distance, violation ordering moqga <= nsga2 < distance; at 8-2 the point
//    targets 90%/0.3 (moqga) and 67%/1.6 (distance) hold within +-10pp/+-0.5.
// 3. The merge-split baseline completes between 40% and 60% at both scales.
// ---------------------------------------------------------------------------
struct ScaleRow {
  double completed = 0.0;
  double violations = 0.0;
};

ScaleRow run_scale(const ExperimentPreset& preset, SolverKind kind) {
  SolverConfig solver;
  solver.kind = kind;
  Scenario s = preset.make_scenario();
  auto r = run_campaign(s, solver, preset.missions, preset.seed, preset.campaign);
  return {r.completed_pct, r.mean_violations};
}

void criteria2and3() {
  bool order_ok = true, targets_ok = true, band_ok = true, time_ok = true;
  char detail2[320] = {0};
  char detail3[160] = {0};
  std::size_t used2 = 0, used3 = 0;
  for (const char* name : {"table2-8-2", "table2-16-4"}) {
    auto t0 = std::chrono::steady_clock::now();
    auto preset = *find_preset(name);
    ScaleRow moqga = run_scale(preset, SolverKind::Moqga);
    ScaleRow nsga = run_scale(preset, SolverKind::Nsga2);
    ScaleRow dist = run_scale(preset, SolverKind::Distance);
    ScaleRow ms = run_scale(preset, SolverKind::MergeSplit);
    double dt = seconds_since(t0);
    time_ok = time_ok && dt < 600.0;

    order_ok = order_ok && moqga.completed >= nsga.completed - kEps &&
               nsga.completed > dist.completed &&
               moqga.violations <= nsga.violations + kEps &&
               nsga.violations < dist.violations;
    if (std::string(name) == "table2-8-2") {
      targets_ok = std::abs(moqga.completed - 90.0) <= 10.0 + kEps &&
                   std::abs(moqga.violations - 0.3) <= 0.5 + kEps &&
                   std::abs(dist.completed - 67.0) <= 10.0 + kEps &&
                   std::abs(dist.violations - 1.6) <= 0.5 + kEps;
    }
    band_ok = band_ok && ms.completed >= 40.0 - kEps && ms.completed <= 60.0 + kEps;

    used2 += static_cast<std::size_t>(std::snprintf(
        detail2 + used2, sizeof(detail2) - used2,
        "%s: moqga %.1f%%/%.2f nsga2 %.1f%%/%.2f distance %.1f%%/%.2f "
        "(%.0fs)  ",
        name, moqga.completed, moqga.violations, nsga.completed,
        nsga.violations, dist.completed, dist.violations, dt));
    used3 += static_cast<std::size_t>(std::snprintf(
        detail3 + used3, sizeof(detail3) - used3, "%s: merge-split %.1f%%  ",
        name, ms.completed));
  }
  report(2, "benchmark orderings and point targets",
         order_ok && targets_ok && time_ok, detail2);
  report(3, "merge-split completion band [40, 60]", band_ok, detail3);
}

// ---------------------------------------------------------------------------
// 4. Selfish campaign: after 30 missions under the decaying ledger both
//    selfish UAVs rank below every honest UAV, and leaders select them less
//    often in missions 21-30 than in missions 1-10.
// ---------------------------------------------------------------------------
void criterion4() {
  auto preset = *find_preset("fig2-selfish");
  SolverConfig solver;
  solver.kind = SolverKind::Moqga;
  Scenario s = preset.make_scenario();
  auto r = run_campaign(s, solver, preset.missions, preset.seed, preset.campaign);

  std::set<int> selfish(preset.selfish_ids.begin(), preset.selfish_ids.end());
  double worst_honest = std::numeric_limits<double>::infinity();
  double best_selfish = -std::numeric_limits<double>::infinity();
  for (const auto& u : s.uavs) {
    double rho = r.ledger.reputation(u.id);
    if (selfish.count(u.id))
      best_selfish = std::max(best_selfish, rho);
    else
      worst_honest = std::min(worst_honest, rho);
  }
  int early = 0, late = 0;
  for (const auto& rep : r.reports)
    for (const auto& o : rep.tasks)
      for (int id : o.member_ids)
        if (selfish.count(id)) {
          if (rep.mission <= 9) ++early;
          if (rep.mission >= 20) ++late;
        }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "best selfish rho %.1f < worst honest rho %.1f; selections "
                "%d (missions 1-10) -> %d (missions 21-30)",
                best_selfish, worst_honest, early, late);
  report(4, "selfish UAVs lose reputation and selections",
         best_selfish < worst_honest && late < early, detail);
}

// ---------------------------------------------------------------------------
// 5. Unreliable campaign: with a 90% injected failure rate on two of eight
//    UAVs, their share of coalition slots stays below their population share.
// ---------------------------------------------------------------------------
void criterion5() {
  auto preset = *find_preset("table3-unreliable");
  SolverConfig solver;
  solver.kind = SolverKind::Moqga;
  Scenario s = preset.make_scenario();
  auto r = run_campaign(s, solver, preset.missions, preset.seed, preset.campaign);
  std::set<int> bad(preset.campaign.injected_failure_ids.begin(),
                    preset.campaign.injected_failure_ids.end());
  int slots = 0, taken = 0;
  for (const auto& rep : r.reports)
    for (const auto& o : rep.tasks) {
      slots += static_cast<int>(o.member_ids.size());
      for (int id : o.member_ids)
        if (bad.count(id)) ++taken;
    }
  double frac = slots == 0 ? 1.0 : static_cast<double>(taken) / slots;
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "unreliable slot share %.3f (population share 0.250)", frac);
  report(5, "unreliable UAVs are under-selected", frac < 2.0 / 8.0, detail);
}

// ---------------------------------------------------------------------------
// 6. Randomized invariant suites.
// ---------------------------------------------------------------------------
bool inv_normalization() {
  Rng rng(61);
  for (int i = 0; i < 10000; ++i) {
    double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    QubitChromosome c;
    c.amplitudes = {{std::cos(phi), std::sin(phi)}};
    c.measured = BitString{static_cast<std::uint8_t>(rng.below(2))};
    BitString best{static_cast<std::uint8_t>(rng.below(2))};
    auto out = rotate(c, best, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                      RotationPolicy::standard());
    double n = out.amplitudes[0].alpha * out.amplitudes[0].alpha +
               out.amplitudes[0].beta * out.amplitudes[0].beta;
    if (std::abs(n - 1.0) > kEps) return false;
  }
  return true;
}

bool inv_measure_stats() {
  Rng rng(62);
  for (int rep = 0; rep < 10; ++rep) {
    double alpha = std::sqrt(rng.uniform(0.05, 0.95));
    const int n = 10000;
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += measure(alpha, rng);
    double p = alpha * alpha;
    double sigma = std::sqrt(n * p * (1.0 - p));
    if (std::abs(ones - n * p) > 3.0 * sigma) return false;
  }
  return true;
}

bool inv_monotonic_history() {
  for (int rep = 0; rep < 50; ++rep) {
    QigaConfig cfg;
    cfg.population_size = 10;
    cfg.max_iterations = 60;
    cfg.rng_seed = 300 + static_cast<std::uint64_t>(rep);
    Rng key(cfg.rng_seed);
    std::vector<double> w(6);
    for (auto& v : w) v = key.uniform(-5.0, 5.0);
    auto r = qiga_run(
        [&](const BitString& b) {
          double f = 0.0;
          for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i]) f += w[i];
          return f;
        },
        w.size(), cfg);
    for (std::size_t i = 1; i < r.history.size(); ++i)
      if (r.history[i] < r.history[i - 1]) return false;
  }
  return true;
}

// total ledger credit handed out by a settlement equals the task payoff
// whenever at least one member delivered something
bool inv_share_sum() {
  Rng rng(63);
  for (int rep = 0; rep < 10000; ++rep) {
    Scenario s;
    const std::size_t nr = 1 + rng.below(3);
    s.resource_cost_coeff.assign(nr, 1.0);
    s.rng_seed = 4000 + static_cast<std::uint64_t>(rep);
    const int n = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < n; ++i) {
      Uav u;
      u.id = i;
      u.position = {rng.uniform(0.0, 50.0), rng.uniform(0.0, 50.0)};
      u.resources.assign(nr, 0.0);
      u.failure_rates.assign(nr, 0.0);
      for (auto& v : u.resources) v = rng.uniform(0.5, 5.0);
      for (auto& v : u.failure_rates) v = rng.uniform(0.0, 0.02);
      if (rng.below(4) == 0) u.contribution_fraction = 0.5;
      s.uavs.push_back(u);
    }
    TaskSpec t;
    t.id = 0;
    t.position = {rng.uniform(0.0, 50.0), rng.uniform(0.0, 50.0)};
    t.required.assign(nr, 0.0);
    for (auto& v : t.required) v = rng.uniform(1.0, 8.0);
    s.tasks.push_back(t);

    ReputationLedger ledger;
    std::vector<int> ids;
    for (const auto& u : s.uavs) ids.push_back(u.id);
    ledger.init(ids);
    std::map<int, double> before;
    for (int id : ids) before[id] = ledger.reputation(id);

    std::map<int, std::vector<int>> commitments{{0, ids}};
    std::map<int, int> leaders{{0, 0}};
    CampaignConfig cfg;
    Rng settle_rng(5000 + static_cast<std::uint64_t>(rep));
    auto report = settle_mission(commitments, leaders, s, ledger, 0, settle_rng,
                                 cfg);
    double upsilon = 0.0;
    for (double tau : t.required) upsilon += tau;
    double handed = 0.0;
    for (int id : ids) handed += ledger.reputation(id) - before[id];
    bool all_failed =
        report.tasks[0].failed_members.size() == static_cast<std::size_t>(n);
    double expect = all_failed ? 0.0 : upsilon;
    if (std::abs(handed - expect) > 1e-9 * std::max(1.0, upsilon)) return false;
  }
  return true;
}

bool inv_disjoint(int cases, SolverKind kind, QigaConfig qcfg) {
  for (int rep = 0; rep < cases; ++rep) {
    GenerationParams p;
    p.n_uavs = 6 + rep % 4;
    p.n_tasks = 2 + rep % 2;
    Scenario s = generate_scenario(p, 8000 + static_cast<std::uint64_t>(rep));
    ReputationLedger ledger;
    std::vector<int> ids;
    for (const auto& u : s.uavs) ids.push_back(u.id);
    ledger.init(ids);
    SolverConfig solver;
    solver.kind = kind;
    solver.qiga = qcfg;
    auto leaders = detect_and_elect(s);
    auto members = resolve_bids(s, ledger, solver, leaders,
                                9000 + static_cast<std::uint64_t>(rep));
    std::set<int> seen;
    for (const auto& [task, group] : members)
      for (int id : group)
        if (!seen.insert(id).second) return false;
  }
  return true;
}

bool inv_penalty_feasibility() {
  Rng rng(64);
  for (int rep = 0; rep < 10000; ++rep) {
    GenerationParams p;
    p.n_uavs = 4 + static_cast<int>(rng.below(5));
    p.n_tasks = 1;
    Scenario s = generate_scenario(p, 20000 + static_cast<std::uint64_t>(rep));
    ReputationLedger ledger;
    std::vector<int> ids;
    for (const auto& u : s.uavs)
      if (rng.below(2)) ids.push_back(u.id);
    ReputationLedger all;
    {
      std::vector<int> every;
      for (const auto& u : s.uavs) every.push_back(u.id);
      all.init(every);
    }
    auto a = derive_assignment(s, s.tasks[0], ids);
    auto b = evaluate(a, s.tasks[0], all, s.weights);
    bool feasible = true;
    for (std::size_t j = 0; j < s.n_resources(); ++j) {
      double supplied = 0.0;
      for (int id : a.member_ids)
        supplied += s.resource_cost_coeff[j] * s.uav(id).resources[j];
      if (supplied < s.tasks[0].required[j]) feasible = false;
    }
    if ((b.penalty == 0.0) != feasible) return false;
  }
  return true;
}

bool inv_determinism() {
  for (int rep = 0; rep < 2000; ++rep) {
    QigaConfig cfg;
    cfg.population_size = 8;
    cfg.max_iterations = 12;
    cfg.rng_seed = 31000 + static_cast<std::uint64_t>(rep);
    auto oracle = [](const BitString& b) {
      double f = 0.0;
      for (std::size_t i = 0; i < b.size(); ++i) f += b[i] ? double(i) : -1.0;
      return f;
    };
    auto a = qiga_run(oracle, 5, cfg);
    auto b = qiga_run(oracle, 5, cfg);
    if (a.best_bits != b.best_bits || a.best_fitness != b.best_fitness ||
        a.history != b.history)
      return false;
  }
  // whole-campaign rerun must agree bit for bit
  auto preset = *find_preset("table2-8-2");
  preset.missions = 3;
  SolverConfig solver;
  solver.kind = SolverKind::Moqga;
  Scenario s = preset.make_scenario();
  auto r1 = run_campaign(s, solver, preset.missions, preset.seed, preset.campaign);
  auto r2 = run_campaign(s, solver, preset.missions, preset.seed, preset.campaign);
  if (r1.completed_pct != r2.completed_pct ||
      r1.mean_violations != r2.mean_violations)
    return false;
  for (std::size_t i = 0; i < r1.reports.size(); ++i)
    for (std::size_t j = 0; j < r1.reports[i].tasks.size(); ++j) {
      const auto& x = r1.reports[i].tasks[j];
      const auto& y = r2.reports[i].tasks[j];
      if (x.member_ids != y.member_ids ||
          x.breakdown.fitness != y.breakdown.fitness)
        return false;
    }
  return true;
}

bool inv_sort_equivalence() {
  Rng rng(65);
  for (int rep = 0; rep < 10000; ++rep) {
    std::vector<ObjectiveTriple> pts(20);
    for (auto& p : pts)
      p = {rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
    auto fast = fast_non_dominated_sort(pts);
    // layer-peeling reference
    std::vector<ObjectiveTriple> left = pts;
    std::size_t level = 0;
    while (!left.empty()) {
      std::vector<ObjectiveTriple> front, rest;
      for (const auto& p : left) {
        bool dominated = false;
        for (const auto& q : left)
          if (dominates(q, p)) dominated = true;
        (dominated ? rest : front).push_back(p);
      }
      if (level >= fast.size()) return false;
      auto got = fast[level];
      std::sort(got.begin(), got.end());
      std::sort(front.begin(), front.end());
      if (got != front) return false;
      left = rest;
      ++level;
    }
    if (level != fast.size()) return false;
  }
  return true;
}

void criterion6() {
  struct Suite {
    const char* name;
    bool ok;
  };
  QigaConfig small;
  small.population_size = 16;
  small.max_iterations = 25;
  Suite suites[] = {
      {"normalization", inv_normalization()},
      {"measure-stats", inv_measure_stats()},
      {"monotonic-history", inv_monotonic_history()},
      {"credit-share-sum", inv_share_sum()},
      {"disjointness", inv_disjoint(10000, SolverKind::Distance, {}) &&
                           inv_disjoint(300, SolverKind::Moqga, small)},
      {"penalty-feasibility", inv_penalty_feasibility()},
      {"determinism", inv_determinism()},
      {"sort-equivalence", inv_sort_equivalence()},
  };
  bool all = true;
  char detail[256] = {0};
  std::size_t used = 0;
  for (const auto& s : suites) {
    all = all && s.ok;
    used += static_cast<std::size_t>(std::snprintf(
        detail + used, sizeof(detail) - used, "%s=%s ", s.name,
        s.ok ? "ok" : "FAIL"));
  }
  report(6, "randomized invariant suites", all, detail);
}

// ---------------------------------------------------------------------------
// 7. Hand-arithmetic unit vectors, exact to 1e-9.
// ---------------------------------------------------------------------------
void criterion7() {
  bool ok = true;
  auto close = [&](double got, double want) {
    if (std::abs(got - want) > kEps) ok = false;
  };

  CoalitionAssignment a;
  a.task_id = 0;
  a.member_ids = {0};
  a.exec_cost = {{1.0, 2.0}};
  a.exec_time = {{2.0, 1.0}};
  a.failure_rate = {{0.05, 0.05}};
  a.travel_time = {1.5};
  // C = 1*2 + 2*1 + 1.5 per resource type = 7; counted once = 5.5
  close(coalition_cost(a), 7.0);
  close(coalition_cost(a, true), 5.5);
  // ln R = -(0.05*2 + 0.05*1) = -0.15
  close(log_reliability(a), -0.15);

  TaskSpec t;
  t.id = 0;
  t.required = {5.0, 5.0};
  auto sf = resource_shortfall(a, t);  // supplied {1, 2} -> shortfall {4, 3}
  close(sf[0], 4.0);
  close(sf[1], 3.0);
  ObjectiveWeights w;
  w.eta1 = 10.0;
  w.eta2 = 1.0;
  w.gamma = 100.0;
  close(penalty(sf, w.gamma), 700.0);

  ReputationLedger ledger;
  ledger.init({0}, 2.0);
  auto b = evaluate(a, t, ledger, w);
  // O = 7 - 10*(-0.15) - 2 = 6.5; F = -(6.5 + 700)
  close(b.objective, 6.5);
  close(b.fitness, -706.5);

  // settlement credit split: tau = 4; honest delivers 2, selfish delivers 1
  // -> shares 8/3 and 4/3
  {
    Scenario s;
    s.resource_cost_coeff = {1.0};
    s.rng_seed = 3;
    Uav h, sf_uav;
    h.id = 0;
    h.resources = {2.0};
    h.failure_rates = {0.0};
    sf_uav.id = 1;
    sf_uav.resources = {2.0};
    sf_uav.failure_rates = {0.0};
    sf_uav.contribution_fraction = 0.5;
    s.uavs = {h, sf_uav};
    TaskSpec task;
    task.id = 0;
    task.required = {4.0};
    s.tasks = {task};
    ReputationLedger l;
    l.init({0, 1});
    std::map<int, std::vector<int>> commitments{{0, {0, 1}}};
    std::map<int, int> leaders{{0, 0}};
    CampaignConfig cfg;
    Rng rng(1);
    settle_mission(commitments, leaders, s, l, 0, rng, cfg);
    close(l.reputation(0), 8.0 / 3.0);
    close(l.reputation(1), 4.0 / 3.0);
  }

  // a contested follower joins the call maximizing rho - delta * travel time
  {
    Scenario s;
    s.resource_cost_coeff = {1.0};
    s.rng_seed = 4;
    s.call_radius = 1000.0;
    auto mk = [](int id, double x, double r) {
      Uav u;
      u.id = id;
      u.position = {x, 0.0};
      u.resources = {r};
      u.failure_rates = {0.0};
      return u;
    };
    // leaders at the two tasks, one shared follower between them
    s.uavs = {mk(0, 0.0, 0.1), mk(1, 14.0, 0.1), mk(2, 4.0, 50.0)};
    TaskSpec t0, t1;
    t0.id = 0;
    t0.position = {0.0, 0.0};
    t0.required = {5.0};
    t1.id = 1;
    t1.position = {14.0, 0.0};
    t1.required = {5.0};
    s.tasks = {t0, t1};
    ReputationLedger l;
    l.init({0, 1, 2});
    SolverConfig solver;
    solver.kind = SolverKind::Distance;
    auto members = resolve_bids(s, l, solver, {{0, 0}, {1, 1}}, 5);
    // equal rho, a = 4 vs 10: U = -0.4 beats -1.0, so task 0 wins the follower
    if (members[0] != std::vector<int>({0, 2})) ok = false;
    if (members[1] != std::vector<int>({1})) ok = false;
  }

  report(7, "hand-arithmetic unit vectors", ok,
         "cost/log-reliability/shortfall/penalty/objective/credit-split/"
         "contested-utility all within 1e-9");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criteria2and3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s: %d criterion(s) failed, %.0fs total\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures,
              seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
