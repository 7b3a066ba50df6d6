// Copyright 2026 The cloudfog Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLOUDFOG_SCENARIO_HPP
#define CLOUDFOG_SCENARIO_HPP

#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cloudfog/problem.hpp"
#include "cloudfog/solver.hpp"

namespace cloudfog {

enum class ScenarioId { One, Two, Three, Four, EvalOne, EvalTwo };

inline const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::One: return "one";
    case ScenarioId::Two: return "two";
    case ScenarioId::Three: return "three";
    case ScenarioId::Four: return "four";
    case ScenarioId::EvalOne: return "eval-one";
    case ScenarioId::EvalTwo: return "eval-two";
  }
  return "?";
}

inline std::optional<ScenarioId> scenario_from_name(const std::string& s) {
  if (s == "one" || s == "1") return ScenarioId::One;
  if (s == "two" || s == "2") return ScenarioId::Two;
  if (s == "three" || s == "3") return ScenarioId::Three;
  if (s == "four" || s == "4") return ScenarioId::Four;
  if (s == "eval-one" || s == "eval1") return ScenarioId::EvalOne;
  if (s == "eval-two" || s == "eval2") return ScenarioId::EvalTwo;
  return std::nullopt;
}

/// A demand layout, sweep grid and objective case. Layouts follow the
/// evaluated use cases: one random source; five sources in one group; one
/// source per group; every IoT node. The evaluation scenarios reuse the
/// one-group layout with delay-aware objectives.
struct Scenario {
  ScenarioId id = ScenarioId::One;
  ObjectiveKind objective = ObjectiveKind::PowerOnly;
  std::vector<int> sweep_mips;  // per-task MIPS levels
  unsigned seed = 0;
  std::optional<Weights> weights;

  static std::vector<int> default_sweep() {
    std::vector<int> v;
    for (int d = 1000; d <= 10000; d += 1000) v.push_back(d);
    return v;
  }
};

inline Scenario make_scenario(ScenarioId id, unsigned seed = 0) {
  Scenario s;
  s.id = id;
  s.seed = seed;
  s.sweep_mips = Scenario::default_sweep();
  switch (id) {
    case ScenarioId::EvalOne: s.objective = ObjectiveKind::PowerPropagation; break;
    case ScenarioId::EvalTwo: s.objective = ObjectiveKind::PowerQueuing; break;
    default: s.objective = ObjectiveKind::PowerOnly; break;
  }
  return s;
}

/// Source nodes of a scenario on the given topology. Scenario one draws the
/// group with a seeded generator (seed 0 picks group 1) and uses its first
/// IoT node.
inline std::vector<NodeId> scenario_sources(const Scenario& s,
                                            const Topology& t) {
  std::vector<std::vector<NodeId>> groups(t.groups);
  for (const Node& n : t.nodes) {
    if (n.kind == NodeKind::Iot) groups[n.group].push_back(n.id);
  }
  std::vector<NodeId> out;
  switch (s.id) {
    case ScenarioId::One: {
      std::mt19937 rng(s.seed);
      int g = static_cast<int>(rng() % static_cast<unsigned>(t.groups));
      out.push_back(groups[g].front());
      break;
    }
    case ScenarioId::Two:
    case ScenarioId::EvalOne:
    case ScenarioId::EvalTwo: {
      const auto& g0 = groups.front();
      for (size_t i = 0; i < g0.size() && i < 5; ++i) out.push_back(g0[i]);
      break;
    }
    case ScenarioId::Three:
      for (const auto& g : groups) out.push_back(g.front());
      break;
    case ScenarioId::Four:
      for (const auto& g : groups) {
        for (NodeId n : g) out.push_back(n);
      }
      break;
  }
  return out;
}

/// Savings of the cloud-fog placement against the baseline, in percent.
/// Negative when the cloud-fog solution is worse.
inline double savings(double cloudfog_w, double baseline_w) {
  if (baseline_w <= 0.0) {
    throw std::invalid_argument("savings: nonpositive baseline");
  }
  return 100.0 * (baseline_w - cloudfog_w) / baseline_w;
}

/// Share of total assigned MIPS per processing layer, in percent.
struct AllocationShares {
  double iot = 0.0, cpe = 0.0, access_fog = 0.0, metro_fog = 0.0, cloud_dc = 0.0;
  double operator[](ProcessingLayer l) const {
    switch (l) {
      case ProcessingLayer::Iot: return iot;
      case ProcessingLayer::Cpe: return cpe;
      case ProcessingLayer::AccessFog: return access_fog;
      case ProcessingLayer::MetroFog: return metro_fog;
      case ProcessingLayer::CloudDc: return cloud_dc;
    }
    return 0.0;
  }
};

inline AllocationShares allocation_breakdown(const Topology& t,
                                             const std::vector<TaskRequest>& demands,
                                             const PlacementSolution& sol) {
  AllocationShares sh;
  double total = 0.0;
  for (const TaskRequest& d : demands) total += d.cpu_mips;
  if (total <= 0.0) return sh;
  for (size_t i = 0; i < demands.size(); ++i) {
    const Node& nd = t.node(sol.assignment[i]);
    double pct = 100.0 * demands[i].cpu_mips / total;
    switch (nd.processing->layer) {
      case ProcessingLayer::Iot: sh.iot += pct; break;
      case ProcessingLayer::Cpe: sh.cpe += pct; break;
      case ProcessingLayer::AccessFog: sh.access_fog += pct; break;
      case ProcessingLayer::MetroFog: sh.metro_fog += pct; break;
      case ProcessingLayer::CloudDc: sh.cloud_dc += pct; break;
    }
  }
  return sh;
}

struct ScenarioRow {
  int mips_per_task = 0;
  double mbps_per_task = 0.0;
  bool feasible = true;
  double cloudfog_total_w = 0.0;
  double cloudfog_network_w = 0.0;
  double cloudfog_processing_w = 0.0;
  double baseline_total_w = 0.0;
  double baseline_network_w = 0.0;
  double baseline_processing_w = 0.0;
  double savings_pct = 0.0;
  AllocationShares shares;
  double avg_propagation_ms = 0.0;
  double avg_queuing_us = 0.0;
  int baseline_dc_servers = 0;
};

struct ScenarioResult {
  std::string scenario;
  std::string objective;
  unsigned seed = 0;
  std::vector<ScenarioRow> rows;
  // full solutions, in row order, for feasibility auditing (one per feasible
  // row)
  std::vector<PlacementSolution> solutions;
  std::vector<std::vector<TaskRequest>> demand_sets;
};

/// Runs the sweep: for each per-task MIPS level, places the tasks optimally,
/// computes the all-cloud baseline and records one row. Infeasible points are
/// recorded and the sweep continues. Deterministic for a given seed.
inline ScenarioResult run_scenario(const Scenario& s, const Topology& t,
                                   const DeviceCatalog& cat) {
  ScenarioResult result;
  result.scenario = to_string(s.id);
  result.objective = to_string(s.objective);
  result.seed = s.seed;
  std::vector<NodeId> sources = scenario_sources(s, t);
  for (int mips : s.sweep_mips) {
    double mbps = static_cast<double>(mips) / cat.delta_mips_per_mbps;
    std::vector<TaskRequest> demands;
    for (NodeId src : sources) {
      demands.push_back(TaskRequest{src, static_cast<double>(mips), mbps});
    }
    PlacementProblem problem;
    problem.topology = &t;
    problem.catalog = &cat;
    problem.demands = demands;
    problem.objective = s.objective;
    problem.weights = s.weights;

    ScenarioRow row;
    row.mips_per_task = mips;
    row.mbps_per_task = mbps;
    PlacementSolution base = baseline_cloud(problem);
    row.baseline_total_w = base.power.total();
    row.baseline_network_w = base.power.net_pc();
    row.baseline_processing_w = base.power.pr_pc();
    for (const Node& nd : t.nodes) {
      if (nd.kind == NodeKind::CloudDc) {
        row.baseline_dc_servers += base.usage.servers[nd.id.value];
      }
    }
    try {
      PlacementSolution sol = solve_exact(problem);
      row.cloudfog_total_w = sol.power.total();
      row.cloudfog_network_w = sol.power.net_pc();
      row.cloudfog_processing_w = sol.power.pr_pc();
      row.savings_pct = savings(row.cloudfog_total_w, row.baseline_total_w);
      row.shares = allocation_breakdown(t, demands, sol);
      row.avg_propagation_ms = sol.delays.avg_propagation_s() * 1e3;
      row.avg_queuing_us = sol.delays.avg_queuing_s() * 1e6;
      result.solutions.push_back(std::move(sol));
      result.demand_sets.push_back(std::move(demands));
    } catch (const InfeasibleProblem&) {
      row.feasible = false;
    }
    result.rows.push_back(row);
  }
  return result;
}

namespace detail {

inline std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace detail

inline const char* kScenarioCsvHeader =
    "scenario,objective,seed,mips_per_task,mbps_per_task,status,"
    "cloudfog_total_w,cloudfog_network_w,cloudfog_processing_w,"
    "baseline_total_w,baseline_network_w,baseline_processing_w,savings_pct,"
    "share_iot_pct,share_cpe_pct,share_access_fog_pct,share_metro_fog_pct,"
    "share_cloud_dc_pct,avg_propagation_ms,avg_queuing_us,baseline_dc_servers";

inline void emit_csv(const ScenarioResult& r, std::ostream& os) {
  os << kScenarioCsvHeader << "\n";
  using detail::csv_num;
  for (const ScenarioRow& row : r.rows) {
    os << r.scenario << ',' << r.objective << ',' << r.seed << ','
       << row.mips_per_task << ',' << csv_num(row.mbps_per_task) << ','
       << (row.feasible ? "ok" : "infeasible") << ','
       << csv_num(row.cloudfog_total_w) << ',' << csv_num(row.cloudfog_network_w)
       << ',' << csv_num(row.cloudfog_processing_w) << ','
       << csv_num(row.baseline_total_w) << ','
       << csv_num(row.baseline_network_w) << ','
       << csv_num(row.baseline_processing_w) << ',' << csv_num(row.savings_pct)
       << ',' << csv_num(row.shares.iot) << ',' << csv_num(row.shares.cpe)
       << ',' << csv_num(row.shares.access_fog) << ','
       << csv_num(row.shares.metro_fog) << ',' << csv_num(row.shares.cloud_dc)
       << ',' << csv_num(row.avg_propagation_ms) << ','
       << csv_num(row.avg_queuing_us) << ',' << row.baseline_dc_servers << "\n";
  }
}

inline nlohmann::json row_to_json(const ScenarioResult& r,
                                  const ScenarioRow& row) {
  return nlohmann::json{
      {"scenario", r.scenario},
      {"objective", r.objective},
      {"seed", r.seed},
      {"mips_per_task", row.mips_per_task},
      {"mbps_per_task", row.mbps_per_task},
      {"status", row.feasible ? "ok" : "infeasible"},
      {"cloudfog_total_w", row.cloudfog_total_w},
      {"cloudfog_network_w", row.cloudfog_network_w},
      {"cloudfog_processing_w", row.cloudfog_processing_w},
      {"baseline_total_w", row.baseline_total_w},
      {"baseline_network_w", row.baseline_network_w},
      {"baseline_processing_w", row.baseline_processing_w},
      {"savings_pct", row.savings_pct},
      {"share_iot_pct", row.shares.iot},
      {"share_cpe_pct", row.shares.cpe},
      {"share_access_fog_pct", row.shares.access_fog},
      {"share_metro_fog_pct", row.shares.metro_fog},
      {"share_cloud_dc_pct", row.shares.cloud_dc},
      {"avg_propagation_ms", row.avg_propagation_ms},
      {"avg_queuing_us", row.avg_queuing_us},
      {"baseline_dc_servers", row.baseline_dc_servers}};
}

inline nlohmann::json result_to_json(const ScenarioResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScenarioRow& row : r.rows) rows.push_back(row_to_json(r, row));
  return rows;
}

inline void emit_json(const ScenarioResult& r, std::ostream& os) {
  os << result_to_json(r).dump(2) << "\n";
}

/// Rebuilds a result table from its JSON dump (the `report` CLI path).
inline ScenarioResult result_from_json(const nlohmann::json& rows) {
  ScenarioResult r;
  for (const auto& j : rows) {
    if (r.rows.empty()) {
      r.scenario = j.value("scenario", "");
      r.objective = j.value("objective", "");
      r.seed = j.value("seed", 0u);
    }
    ScenarioRow row;
    row.mips_per_task = j.at("mips_per_task").get<int>();
    row.mbps_per_task = j.at("mbps_per_task").get<double>();
    row.feasible = j.at("status").get<std::string>() == "ok";
    row.cloudfog_total_w = j.at("cloudfog_total_w").get<double>();
    row.cloudfog_network_w = j.at("cloudfog_network_w").get<double>();
    row.cloudfog_processing_w = j.at("cloudfog_processing_w").get<double>();
    row.baseline_total_w = j.at("baseline_total_w").get<double>();
    row.baseline_network_w = j.at("baseline_network_w").get<double>();
    row.baseline_processing_w = j.at("baseline_processing_w").get<double>();
    row.savings_pct = j.at("savings_pct").get<double>();
    row.shares.iot = j.at("share_iot_pct").get<double>();
    row.shares.cpe = j.at("share_cpe_pct").get<double>();
    row.shares.access_fog = j.at("share_access_fog_pct").get<double>();
    row.shares.metro_fog = j.at("share_metro_fog_pct").get<double>();
    row.shares.cloud_dc = j.at("share_cloud_dc_pct").get<double>();
    row.avg_propagation_ms = j.at("avg_propagation_ms").get<double>();
    row.avg_queuing_us = j.at("avg_queuing_us").get<double>();
    row.baseline_dc_servers = j.at("baseline_dc_servers").get<int>();
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_SCENARIO_HPP
