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

#ifndef CLOUDFOG_SOLUTION_IO_HPP
#define CLOUDFOG_SOLUTION_IO_HPP

#include <string>

#include <json.hpp>

#include "cloudfog/problem.hpp"
#include "cloudfog/solver.hpp"

namespace cloudfog {

/// Full variable dump of a solution: assignments, per-node aggregates, server
/// counts, wavelength/fibre/port usage, power breakdown and delay totals.
inline nlohmann::json solution_to_json(const PlacementSolution& sol,
                                       const PlacementProblem& problem) {
  const Topology& t = *problem.topology;
  nlohmann::json j;
  j["objective_value"] = sol.objective_value;
  j["weights"] = {{"alpha", sol.weights.alpha},
                  {"beta", sol.weights.beta},
                  {"gamma", sol.weights.gamma}};
  nlohmann::json assigns = nlohmann::json::array();
  for (size_t i = 0; i < sol.assignment.size(); ++i) {
    const TaskRequest& d = problem.demands[i];
    assigns.push_back({{"task", i},
                       {"source", t.node(d.source).name},
                       {"source_id", d.source.value},
                       {"destination", t.node(sol.assignment[i]).name},
                       {"destination_id", sol.assignment[i].value},
                       {"cpu_mips", d.cpu_mips},
                       {"traffic_mbps", d.traffic_mbps}});
  }
  j["assignments"] = assigns;
  nlohmann::json nodes = nlohmann::json::object();
  for (const Node& nd : t.nodes) {
    int v = nd.id.value;
    if (sol.flows.device_load_mbps[v] == 0.0 &&
        sol.usage.assigned_mips[v] == 0.0) {
      continue;
    }
    nodes[nd.name] = {{"load_mbps", sol.flows.device_load_mbps[v]},
                      {"arrival_mbps", sol.flows.arrival_mbps[v]},
                      {"theta_mbps", sol.flows.theta_mbps[v]},
                      {"assigned_mips", sol.usage.assigned_mips[v]},
                      {"servers", sol.usage.servers[v]},
                      {"network_active", (bool)sol.flows.network_active[v]},
                      {"processing_active", (bool)sol.flows.processing_active[v]}};
  }
  j["nodes"] = nodes;
  nlohmann::json core = nlohmann::json::array();
  for (const auto& [key, wl] : sol.usage.wavelengths) {
    int li = key / 2;
    const Link& l = t.links[li];
    bool fwd = key % 2 == 0;
    int fib = sol.usage.fibers.count(key) ? sol.usage.fibers.at(key) : 0;
    core.push_back({{"from", t.node(fwd ? l.a : l.b).name},
                    {"to", t.node(fwd ? l.b : l.a).name},
                    {"wavelengths", wl},
                    {"fibers", fib},
                    {"load_mbps", sol.flows.link_load_mbps[key]}});
  }
  j["core_links"] = core;
  j["power"] = power_to_json(sol.power);
  j["delay"] = {{"total_propagation_s", sol.delays.total_propagation_s},
                {"total_queuing_s", sol.delays.total_queuing_s},
                {"avg_propagation_ms", sol.delays.avg_propagation_s() * 1e3},
                {"avg_queuing_us", sol.delays.avg_queuing_s() * 1e6}};
  return j;
}

/// Reconstructs assignment and demands from a dump so a solution file can be
/// re-validated.
inline std::pair<std::vector<TaskRequest>, Assignment> solution_from_json(
    const nlohmann::json& j) {
  std::vector<TaskRequest> demands;
  Assignment assignment;
  for (const auto& a : j.at("assignments")) {
    TaskRequest d;
    d.source = NodeId{a.at("source_id").get<int>()};
    d.cpu_mips = a.at("cpu_mips").get<double>();
    d.traffic_mbps = a.at("traffic_mbps").get<double>();
    demands.push_back(d);
    assignment.push_back(NodeId{a.at("destination_id").get<int>()});
  }
  return {demands, assignment};
}

}  // namespace cloudfog

#endif  // CLOUDFOG_SOLUTION_IO_HPP
