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

#ifndef CLOUDFOG_SOLVER_HPP
#define CLOUDFOG_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cloudfog/delay.hpp"
#include "cloudfog/flows.hpp"
#include "cloudfog/power.hpp"
#include "cloudfog/problem.hpp"

namespace cloudfog {

/// Raised when no feasible placement exists; the message names the binding
/// constraint.
class InfeasibleProblem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string constraint;
  std::string detail;
};

/// Full evaluation of an assignment through the public flow/power/delay
/// modules. Used by the brute-force oracle and for final solution assembly.
inline PlacementSolution evaluate_assignment(const PlacementProblem& problem,
                                             const Assignment& assignment,
                                             const Weights& weights) {
  const Topology& t = *problem.topology;
  const DeviceCatalog& cat = *problem.catalog;
  PlacementSolution sol;
  sol.assignment = assignment;
  sol.weights = weights;
  sol.flows = derive_flows(t, problem.demands, assignment);
  sol.usage = derive_usage(t, cat, problem.demands, assignment, sol.flows);
  sol.power = total_power(t, sol.flows, sol.usage, cat);
  try {
    sol.delays = compute_delays(t, sol.flows, problem.delay);
  } catch (const std::domain_error&) {
    // A saturated queue is reportable for power-only objectives; delay-aware
    // solvers never produce one.
    sol.delays = DelayReport{};
    sol.delays.total_queuing_s = std::numeric_limits<double>::infinity();
  }
  sol.objective_value = weights.alpha * sol.power.total() +
                        weights.beta * sol.delays.total_propagation_s +
                        weights.gamma * sol.delays.total_queuing_s;
  return sol;
}

/// Every task placed on the cloud DC; the reference point savings are
/// measured against. Activates ceil(total MIPS / server capacity) DC servers.
inline PlacementSolution baseline_cloud(const PlacementProblem& problem) {
  problem.check();
  const Topology& t = *problem.topology;
  auto dcs = t.nodes_of_kind(NodeKind::CloudDc);
  if (dcs.empty()) throw InfeasibleProblem("baseline: no cloud DC in topology");
  Assignment assignment(problem.demands.size(), dcs.front());
  Weights w{1.0, 0.0, 0.0};
  return evaluate_assignment(problem, assignment, w);
}

namespace detail {

/// Solver-internal incremental evaluator. Keeps per-node aggregates and
/// recomputes the objective in one pass over active devices; a distinct code
/// path from the module-level evaluation the oracle uses.
class IncrementalState {
 public:
  IncrementalState(const PlacementProblem& problem, Weights weights)
      : t_(*problem.topology),
        cat_(*problem.catalog),
        k_(problem.delay),
        w_(weights),
        use_delay_(weights.beta != 0.0 || weights.gamma != 0.0) {
    load_.assign(t_.nodes.size(), 0.0);
    arrival_.assign(t_.nodes.size(), 0.0);
    mips_.assign(t_.nodes.size(), 0.0);
    remaining_.assign(t_.nodes.size(), 0.0);
    for (const Node& nd : t_.nodes) {
      if (nd.processing) {
        const ProcessorSpec& spec = processor_for(cat_, nd.processing->layer);
        double cap =
            nd.processing->max_servers == kUnlimitedServers
                ? std::numeric_limits<double>::infinity()
                : spec.capacity_mips() * nd.processing->max_servers;
        remaining_[nd.id.value] = cap;
      }
    }
    routes_.resize(t_.nodes.size());
  }

  const std::vector<Hop>& route(NodeId s, NodeId d) {
    auto& per_src = routes_[s.value];
    if (per_src.empty()) per_src.resize(t_.nodes.size());
    auto& cached = per_src[d.value];
    if (!cached.computed) {
      cached.hops = t_.route(s, d);
      cached.computed = true;
    }
    return cached.hops;
  }

  bool fits(NodeId d, double mips) const { return mips <= remaining_[d.value] + 1e-9; }

  void assign(const TaskRequest& task, NodeId d) {
    remaining_[d.value] -= task.cpu_mips;
    mips_[d.value] += task.cpu_mips;
    pairs_.push_back({task.source, d, task.traffic_mbps});
    if (d == task.source) return;
    load_[task.source.value] += task.traffic_mbps;
    for (const Hop& h : route(task.source, d)) {
      arrival_[h.to.value] += task.traffic_mbps;
      const Link& l = t_.links[h.link];
      if (l.core) {
        load_[h.from.value] += task.traffic_mbps;
      }
      if (t_.node(h.to).kind != NodeKind::CoreNode) {
        load_[h.to.value] += task.traffic_mbps;
      }
    }
  }

  void unassign(const TaskRequest& task, NodeId d) {
    remaining_[d.value] += task.cpu_mips;
    mips_[d.value] -= task.cpu_mips;
    pairs_.pop_back();
    if (d == task.source) return;
    load_[task.source.value] -= task.traffic_mbps;
    for (const Hop& h : route(task.source, d)) {
      arrival_[h.to.value] -= task.traffic_mbps;
      const Link& l = t_.links[h.link];
      if (l.core) {
        load_[h.from.value] -= task.traffic_mbps;
      }
      if (t_.node(h.to).kind != NodeKind::CoreNode) {
        load_[h.to.value] -= task.traffic_mbps;
      }
    }
  }

  /// Objective of the current (partial) assignment. Monotone in added tasks,
  /// so it doubles as the branch lower bound base. Returns infinity when a
  /// queue saturates under a delay-aware objective.
  double objective() {
    double watts = 0.0;
    for (const Node& nd : t_.nodes) {
      double load = load_[nd.id.value];
      double gb = load / 1000.0;
      bool active = load > 0.0;
      switch (nd.kind) {
        case NodeKind::Iot:
          if (active) {
            watts += energy_per_bit(cat_.iot_radio.profile) * gb +
                     cat_.iot_radio.profile.idle_share_delta *
                         cat_.iot_radio.profile.idle_power_w;
          }
          break;
        case NodeKind::AccessPoint:
          if (active) {
            watts += energy_per_bit(cat_.access_point.profile) * gb +
                     cat_.access_point.profile.idle_share_delta *
                         cat_.access_point.profile.idle_power_w;
          }
          break;
        case NodeKind::Onu:
          if (active) {
            watts += cat_.pue.access *
                     (energy_per_bit(cat_.onu.profile) * gb +
                      cat_.onu.profile.idle_share_delta *
                          cat_.onu.profile.idle_power_w);
          }
          break;
        case NodeKind::Olt:
          if (active) {
            watts += cat_.pue.access *
                     (energy_per_bit(cat_.olt.profile) * gb +
                      cat_.olt.profile.idle_share_delta *
                          cat_.olt.profile.idle_power_w);
          }
          break;
        case NodeKind::MetroSwitch:
          if (active) {
            watts += cat_.pue.metro *
                     (energy_per_bit(cat_.metro_switch.profile) * gb +
                      cat_.metro_switch.profile.idle_share_delta *
                          cat_.metro_switch.profile.idle_power_w);
          }
          break;
        case NodeKind::MetroRouter:
          if (active) {
            watts += cat_.pue.metro * cat_.metro_router_port.redundancy *
                     (energy_per_bit(cat_.metro_router_port.profile) * gb +
                      cat_.metro_router_port.profile.idle_share_delta *
                          cat_.metro_router_port.profile.idle_power_w);
          }
          break;
        case NodeKind::CoreNode: {
          int wl = load > 0.0
                       ? static_cast<int>(std::ceil(gb / cat_.core.wavelength_gbps - 1e-9))
                       : 0;
          int agg = wl;  // ceil(L_m / B), same granularity as the wavelengths
          int fibers = wl > 0 ? static_cast<int>(std::ceil(
                                    static_cast<double>(wl) /
                                        cat_.core.wavelengths_per_fiber -
                                    1e-9))
                              : 0;
          double idle_r = cat_.core_router_port.profile.idle_share_delta *
                          cat_.core_router_port.profile.idle_power_w;
          double idle_t = cat_.transponder.profile.idle_share_delta *
                          cat_.transponder.profile.idle_power_w;
          double idle_e = cat_.edfa.profile.idle_share_delta *
                          cat_.edfa.profile.idle_power_w;
          double idle_o = cat_.optical_switch.profile.idle_share_delta *
                          cat_.optical_switch.profile.idle_power_w;
          double core_w = energy_per_bit(cat_.core_router_port.profile) * gb +
                          idle_r * (agg + wl) +
                          energy_per_bit(cat_.transponder.profile) * gb +
                          idle_t * wl +
                          energy_per_bit(cat_.optical_switch.profile) * gb +
                          (active ? idle_o : 0.0);
          // Amplifier/regenerator terms on the node's outgoing core link. The
          // reference build keeps one core link per node; the node load is
          // exactly that link's directed traffic.
          for (auto [nb, li] : t_.adjacency[nd.id.value]) {
            (void)nb;
            const Link& l = t_.links[li];
            if (!l.core) continue;
            int amps = edfa_count(l.distance_km, cat_.core.edfa_span_km);
            int regens =
                regenerator_count(l.distance_km, cat_.core.regenerator_span_km);
            core_w += energy_per_bit(cat_.edfa.profile) * gb * amps * fibers +
                      idle_e * amps * fibers;
            core_w += energy_per_bit(cat_.regenerator.profile) * gb * regens * wl +
                      cat_.regenerator.profile.idle_power_w * regens * wl;
            break;
          }
          watts += cat_.pue.core * core_w;
          break;
        }
        case NodeKind::CloudDc:
          break;
      }
      // processing + LAN
      double m = mips_[nd.id.value];
      if (m > 0.0 && nd.processing) {
        const ProcessorSpec& spec = processor_for(cat_, nd.processing->layer);
        int servers = static_cast<int>(std::ceil(m / spec.capacity_mips() - 1e-9));
        double site = spec.energy_per_mips() * m +
                      spec.profile.idle_power_w * servers;
        double theta_gb = load / 1000.0;
        switch (nd.processing->layer) {
          case ProcessingLayer::Iot:
          case ProcessingLayer::Cpe:
            watts += site;
            break;
          case ProcessingLayer::AccessFog:
            watts += cat_.pue.access *
                     (site + lan_pair(cat_.access_fog_router,
                                      cat_.access_fog_switch, theta_gb));
            break;
          case ProcessingLayer::MetroFog:
            watts += cat_.pue.metro *
                     (site + lan_pair(cat_.metro_fog_router,
                                      cat_.metro_fog_switch, theta_gb));
            break;
          case ProcessingLayer::CloudDc:
            watts += cat_.pue.dc * (site + lan_pair(cat_.dc_lan_router,
                                                    cat_.dc_lan_switch,
                                                    theta_gb));
            break;
        }
      }
    }
    double obj = w_.alpha * watts;
    if (use_delay_) {
      for (const auto& p : pairs_) {
        if (p.dst == p.src) continue;
        const auto& hops = route(p.src, p.dst);
        if (w_.beta != 0.0) {
          obj += w_.beta * propagation_delay(t_, hops, k_);
        }
        if (w_.gamma != 0.0) {
          for (const Hop& h : hops) {
            const Node& nd = t_.node(h.to);
            if (nd.kind == NodeKind::Iot) continue;
            double mu = k_.service_rate_pkts(nd.kind);
            double lam = k_.mbps_to_pkts(arrival_[nd.id.value]);
            if (lam >= mu) return std::numeric_limits<double>::infinity();
            obj += w_.gamma / (mu - lam);
          }
        }
      }
    }
    return obj;
  }

 private:
  struct CachedRoute {
    bool computed = false;
    std::vector<Hop> hops;
  };
  struct Pair {
    NodeId src, dst;
    double mbps;
  };

  static double lan_pair(const NetworkDeviceSpec& r, const NetworkDeviceSpec& s,
                         double theta_gb) {
    return energy_per_bit(r.profile) * theta_gb +
           r.profile.idle_share_delta * r.profile.idle_power_w +
           energy_per_bit(s.profile) * theta_gb +
           s.profile.idle_share_delta * s.profile.idle_power_w;
  }

  const Topology& t_;
  const DeviceCatalog& cat_;
  DelayConstants k_;
  Weights w_;
  bool use_delay_;
  std::vector<double> load_, arrival_, mips_, remaining_;
  std::vector<std::vector<CachedRoute>> routes_;
  std::vector<Pair> pairs_;
};

/// Per-source lower bound on the marginal objective of placing the task
/// anywhere: pure proportional power along the route plus the weighted
/// propagation delay and idle queuing floor. Ignores idle/activation terms
/// and congestion, which only add cost.
inline double marginal_floor(const PlacementProblem& problem,
                             const Weights& w, const TaskRequest& task,
                             const std::vector<NodeId>& candidates) {
  const Topology& t = *problem.topology;
  const DeviceCatalog& cat = *problem.catalog;
  double best = std::numeric_limits<double>::infinity();
  for (NodeId d : candidates) {
    const Node& dn = t.node(d);
    const ProcessorSpec& spec = processor_for(cat, dn.processing->layer);
    if (task.cpu_mips > spec.capacity_mips() *
                            (dn.processing->max_servers == kUnlimitedServers
                                 ? 1e18
                                 : dn.processing->max_servers)) {
      continue;
    }
    double pue = 1.0;
    switch (dn.processing->layer) {
      case ProcessingLayer::AccessFog: pue = cat.pue.access; break;
      case ProcessingLayer::MetroFog: pue = cat.pue.metro; break;
      case ProcessingLayer::CloudDc: pue = cat.pue.dc; break;
      default: break;
    }
    double cost = w.alpha * pue * spec.energy_per_mips() * task.cpu_mips;
    if (d != task.source) {
      auto hops = t.route(task.source, d);
      double gb = task.traffic_mbps / 1000.0;
      double net = energy_per_bit(cat.iot_radio.profile) * gb;  // source side
      for (const Hop& h : hops) {
        const Node& to = t.node(h.to);
        switch (to.kind) {
          case NodeKind::AccessPoint:
            net += energy_per_bit(cat.access_point.profile) * gb;
            break;
          case NodeKind::Onu:
            net += cat.pue.access * energy_per_bit(cat.onu.profile) * gb;
            break;
          case NodeKind::Olt:
            net += cat.pue.access * energy_per_bit(cat.olt.profile) * gb;
            break;
          case NodeKind::MetroSwitch:
            net += cat.pue.metro * energy_per_bit(cat.metro_switch.profile) * gb;
            break;
          case NodeKind::MetroRouter:
            net += cat.pue.metro * cat.metro_router_port.redundancy *
                   energy_per_bit(cat.metro_router_port.profile) * gb;
            break;
          default:
            break;
        }
      }
      cost += w.alpha * net;
      if (w.beta != 0.0) {
        cost += w.beta * propagation_delay(t, hops, problem.delay);
      }
      if (w.gamma != 0.0) {
        for (const Hop& h : hops) {
          const Node& to = t.node(h.to);
          if (to.kind == NodeKind::Iot) continue;
          cost += w.gamma / problem.delay.service_rate_pkts(to.kind);
        }
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace detail

/// Candidate destinations ordered lowest layer first, then lowest node id;
/// this is also the deterministic tie-break order.
inline std::vector<NodeId> candidate_destinations(const Topology& t) {
  std::vector<NodeId> c = t.processing_nodes();
  std::sort(c.begin(), c.end(), [&](NodeId a, NodeId b) {
    int ra = detail::layer_rank(t.node(a).processing->layer);
    int rb = detail::layer_rank(t.node(b).processing->layer);
    if (ra != rb) return ra < rb;
    return a.value < b.value;
  });
  return c;
}

/// Globally optimal placement by branch-and-bound over per-source destination
/// choices. Routes are unique on the reference topology, so each partial
/// assignment's objective is evaluated incrementally; the bound adds each
/// unassigned source's cheapest capacity-free marginal. Deterministic: equal
/// optima resolve lowest-layer-first, then lowest node id.
inline PlacementSolution solve_exact(const PlacementProblem& problem) {
  problem.check();
  if (problem.split_limit != 1) {
    throw std::invalid_argument(
        "solve_exact: task splitting (K > 1) is unsupported; export the model "
        "instead");
  }
  const Topology& t = *problem.topology;
  Weights w{1.0, 0.0, 0.0};
  if (problem.delay_aware() || problem.weights) {
    if (!problem.weights && problem.objective != ObjectiveKind::PropagationOnly &&
        problem.objective != ObjectiveKind::QueuingOnly) {
      PlacementSolution base = baseline_cloud(problem);
      w = resolve_weights(problem, base.power.total(),
                          base.delays.total_propagation_s +
                              base.delays.total_queuing_s);
    } else {
      w = resolve_weights(problem, 0.0, 0.0);
    }
  }

  if (problem.demands.empty()) {
    return evaluate_assignment(problem, {}, w);
  }

  std::vector<NodeId> candidates = candidate_destinations(t);
  detail::IncrementalState state(problem, w);
  std::vector<double> floors(problem.demands.size());
  for (size_t i = 0; i < problem.demands.size(); ++i) {
    floors[i] = detail::marginal_floor(problem, w, problem.demands[i], candidates);
    if (!std::isfinite(floors[i])) {
      throw InfeasibleProblem(
          "solve_exact: demand of " +
          std::to_string(problem.demands[i].cpu_mips) + " MIPS at " +
          t.node(problem.demands[i].source).name +
          " exceeds every node's server capacity (constraint: N_d <= V_d with "
          "sum rho <= N_d C)");
    }
  }
  std::vector<double> floor_suffix(problem.demands.size() + 1, 0.0);
  for (int i = static_cast<int>(problem.demands.size()) - 1; i >= 0; --i) {
    floor_suffix[i] = floor_suffix[i + 1] + floors[i];
  }

  // Tasks with identical demands are exchangeable over the group-neutral
  // apex destinations (access fog, metro fog, DC): every optimum has a twin
  // with non-decreasing apex ranks, so inverted twins can be skipped.
  std::vector<int> twin_prev(problem.demands.size(), -1);
  for (size_t j = 1; j < problem.demands.size(); ++j) {
    for (int i = static_cast<int>(j) - 1; i >= 0; --i) {
      if (problem.demands[i].cpu_mips == problem.demands[j].cpu_mips &&
          problem.demands[i].traffic_mbps == problem.demands[j].traffic_mbps) {
        twin_prev[j] = i;
        break;
      }
    }
  }
  auto apex_rank = [&](NodeId d) -> int {
    switch (t.node(d).processing->layer) {
      case ProcessingLayer::AccessFog: return 0;
      case ProcessingLayer::MetroFog: return 1;
      case ProcessingLayer::CloudDc: return 2;
      default: return -1;
    }
  };

  Assignment current(problem.demands.size());
  Assignment best;
  double incumbent = std::numeric_limits<double>::infinity();
  bool have_best = false;

  // Seed the bound with the all-cloud placement (a feasible point); a small
  // slack keeps equal-cost optima discoverable so the lowest-layer tie-break
  // still applies.
  {
    auto dcs = t.nodes_of_kind(NodeKind::CloudDc);
    if (!dcs.empty() && t.node(dcs.front()).processing) {
      Assignment all_dc(problem.demands.size(), dcs.front());
      bool fits = true;
      std::vector<double> mips(t.nodes.size(), 0.0);
      const Node& dn = t.node(dcs.front());
      const ProcessorSpec& spec =
          detail::processor_for(*problem.catalog, dn.processing->layer);
      double cap = dn.processing->max_servers == kUnlimitedServers
                       ? std::numeric_limits<double>::infinity()
                       : spec.capacity_mips() * dn.processing->max_servers;
      double total = 0.0;
      for (const TaskRequest& d : problem.demands) total += d.cpu_mips;
      fits = total <= cap + 1e-9;
      if (fits) {
        for (size_t i = 0; i < problem.demands.size(); ++i) {
          state.assign(problem.demands[i], dcs.front());
        }
        double obj = state.objective();
        for (size_t i = problem.demands.size(); i-- > 0;) {
          state.unassign(problem.demands[i], dcs.front());
        }
        if (std::isfinite(obj)) {
          incumbent = obj + 1e-6;
          best = all_dc;
          have_best = true;
        }
      }
      (void)mips;
    }
  }

  // Depth-first search in candidate order; strict improvement keeps the
  // first-found optimum, which is the tie-break order.
  auto dfs = [&](auto&& self, size_t depth) -> void {
    if (depth == problem.demands.size()) {
      double obj = state.objective();
      if (obj < incumbent) {
        incumbent = obj;
        best = current;
        have_best = true;
      }
      return;
    }
    const TaskRequest& task = problem.demands[depth];
    int min_apex = 0;
    if (twin_prev[depth] >= 0) {
      int r = apex_rank(current[twin_prev[depth]]);
      if (r > 0) min_apex = r;
    }
    for (NodeId d : candidates) {
      int r = apex_rank(d);
      if (r >= 0 && r < min_apex) continue;
      if (!state.fits(d, task.cpu_mips)) continue;
      state.assign(task, d);
      current[depth] = d;
      double bound = state.objective() + floor_suffix[depth + 1];
      if (bound < incumbent) {
        self(self, depth + 1);
      }
      state.unassign(task, d);
    }
  };
  dfs(dfs, 0);

  if (!have_best) {
    throw InfeasibleProblem(
        "solve_exact: no feasible assignment (binding constraint: per-node "
        "capacity sum rho <= N_d C with N_d <= V_d)");
  }
  return evaluate_assignment(problem, best, w);
}

/// Independent oracle: exhaustive enumeration over all |P|^|S| assignments,
/// evaluated from scratch through the public modules. Guarded to small
/// instances.
inline PlacementSolution brute_force(const PlacementProblem& problem,
                                     int source_limit = 4) {
  problem.check();
  if (problem.split_limit != 1) {
    throw std::invalid_argument("brute_force: only K = 1 is supported");
  }
  if (static_cast<int>(problem.demands.size()) > source_limit) {
    throw std::invalid_argument("brute_force: instance too large (" +
                                std::to_string(problem.demands.size()) + " > " +
                                std::to_string(source_limit) + " sources)");
  }
  const Topology& t = *problem.topology;
  Weights w{1.0, 0.0, 0.0};
  if (problem.delay_aware() || problem.weights) {
    if (!problem.weights && problem.objective != ObjectiveKind::PropagationOnly &&
        problem.objective != ObjectiveKind::QueuingOnly) {
      PlacementSolution base = baseline_cloud(problem);
      w = resolve_weights(problem, base.power.total(),
                          base.delays.total_propagation_s +
                              base.delays.total_queuing_s);
    } else {
      w = resolve_weights(problem, 0.0, 0.0);
    }
  }
  if (problem.demands.empty()) {
    return evaluate_assignment(problem, {}, w);
  }
  std::vector<NodeId> candidates = candidate_destinations(t);
  const size_t n = problem.demands.size();
  std::vector<size_t> idx(n, 0);
  Assignment assignment(n);
  std::optional<PlacementSolution> best;
  while (true) {
    for (size_t i = 0; i < n; ++i) assignment[i] = candidates[idx[i]];
    // capacity screen, then full evaluation from scratch
    bool fits = true;
    {
      std::vector<double> mips(t.nodes.size(), 0.0);
      for (size_t i = 0; i < n && fits; ++i) {
        const Node& dn = t.node(assignment[i]);
        mips[assignment[i].value] += problem.demands[i].cpu_mips;
        const ProcessorSpec& spec =
            detail::processor_for(*problem.catalog, dn.processing->layer);
        double cap = dn.processing->max_servers == kUnlimitedServers
                         ? std::numeric_limits<double>::infinity()
                         : spec.capacity_mips() * dn.processing->max_servers;
        if (mips[assignment[i].value] > cap + 1e-9) fits = false;
      }
    }
    if (fits) {
      PlacementSolution sol = evaluate_assignment(problem, assignment, w);
      if (std::isfinite(sol.objective_value) &&
          (!best || sol.objective_value < best->objective_value)) {
        best = std::move(sol);
      }
    }
    // next tuple
    size_t pos = 0;
    while (pos < n && ++idx[pos] == candidates.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  if (!best) {
    throw InfeasibleProblem("brute_force: no feasible assignment");
  }
  return *best;
}

/// Re-evaluates every model constraint on a solution at 1e-6 absolute
/// tolerance. Empty report means feasible.
inline std::vector<Violation> check_feasible(const PlacementSolution& sol,
                                             const PlacementProblem& problem) {
  constexpr double kTol = 1e-6;
  std::vector<Violation> out;
  const Topology& t = *problem.topology;
  const DeviceCatalog& cat = *problem.catalog;
  const FlowSet& f = sol.flows;
  auto add = [&](const std::string& c, const std::string& d) {
    out.push_back(Violation{c, d});
  };
  const size_t n_nodes = t.nodes.size();
  double big_m_mips = 0.0, big_g1 = 0.0;
  for (const TaskRequest& d : problem.demands) {
    big_m_mips += d.cpu_mips;
    big_g1 += d.traffic_mbps;
  }

  // (18) flow conservation per pair per node.
  for (const PairFlow& pf : f.pairs) {
    if (pf.source == pf.destination) continue;
    std::vector<double> net(n_nodes, 0.0);
    for (const Hop& h : pf.path) {
      net[h.from.value] += pf.mbps;
      net[h.to.value] -= pf.mbps;
    }
    for (size_t m = 0; m < n_nodes; ++m) {
      double expect = 0.0;
      if (static_cast<int>(m) == pf.source.value) expect = pf.mbps;
      if (static_cast<int>(m) == pf.destination.value) expect = -pf.mbps;
      if (std::abs(net[m] - expect) > kTol) {
        add("(18)", "flow conservation broken at " + t.nodes[m].name +
                        " for pair " + t.node(pf.source).name + "->" +
                        t.node(pf.destination).name);
      }
    }
  }
  // (19)-(22) per source.
  {
    std::vector<double> assigned(problem.demands.size(), 0.0);
    for (size_t i = 0; i < problem.demands.size(); ++i) {
      if (i < sol.assignment.size()) assigned[i] = problem.demands[i].cpu_mips;
      if (std::abs(assigned[i] - problem.demands[i].cpu_mips) > kTol) {
        add("(19)", "demand of " + t.node(problem.demands[i].source).name +
                        " not fully placed");
      }
      // K = 1: exactly one destination per source by construction
      if (problem.split_limit == 1 && i < sol.assignment.size()) {
        // nothing further to check; count is 1
      }
    }
    if (sol.assignment.size() != problem.demands.size()) {
      add("(22)", "assignment count differs from demand count");
    }
  }
  // (20)-(21), (29): rho vs activation.
  for (size_t i = 0; i < sol.assignment.size(); ++i) {
    double rho = problem.demands[i].cpu_mips;
    if (rho < 1.0 - kTol) {
      add("(20)", "assigned MIPS below the activation floor for " +
                      t.node(problem.demands[i].source).name);
    }
    if (rho > big_m_mips + kTol) {
      add("(21)", "assigned MIPS above big-M");
    }
  }
  // (23) + capacity coupling.
  for (const Node& nd : t.nodes) {
    double mips = sol.usage.assigned_mips[nd.id.value];
    int servers = sol.usage.servers[nd.id.value];
    if (mips <= 0.0) continue;
    if (!nd.processing) {
      add("(23)", nd.name + " hosts MIPS without processing capability");
      continue;
    }
    const ProcessorSpec& spec =
        detail::processor_for(cat, nd.processing->layer);
    if (nd.processing->max_servers != kUnlimitedServers &&
        servers > nd.processing->max_servers) {
      add("(23)", nd.name + ": N_d = " + std::to_string(servers) + " > V_d = " +
                      std::to_string(nd.processing->max_servers));
    }
    if (mips > spec.capacity_mips() * servers + kTol) {
      add("capacity-coupling", nd.name + ": sum rho " + std::to_string(mips) +
                                   " > N_d * C = " +
                                   std::to_string(spec.capacity_mips() * servers));
    }
  }
  // (24)-(25): site activation consistency.
  {
    std::vector<int> assigned_count(n_nodes, 0);
    for (NodeId d : sol.assignment) assigned_count[d.value]++;
    for (const Node& nd : t.nodes) {
      bool omega = f.processing_active[nd.id.value];
      int cnt = assigned_count[nd.id.value];
      if (omega && cnt < 1) add("(24)", nd.name + " active without assignments");
      if (!omega && cnt > 0) add("(25)", nd.name + " hosts tasks while inactive");
    }
  }
  // (26)-(28): aggregate definitions.
  {
    std::vector<double> gen(n_nodes, 0.0), incoming(n_nodes, 0.0),
        core_out(n_nodes, 0.0);
    for (const PairFlow& pf : f.pairs) {
      if (pf.source == pf.destination) continue;
      gen[pf.source.value] += pf.mbps;
      for (const Hop& h : pf.path) {
        incoming[h.to.value] += pf.mbps;
        if (t.links[h.link].core) core_out[h.from.value] += pf.mbps;
      }
    }
    for (const Node& nd : t.nodes) {
      double expect;
      const char* label;
      if (nd.kind == NodeKind::Iot) {
        expect = gen[nd.id.value] + incoming[nd.id.value];
        label = "(26)";
      } else if (nd.kind == NodeKind::CoreNode) {
        expect = core_out[nd.id.value];
        label = "(28)";
      } else {
        expect = incoming[nd.id.value];
        label = "(27)";
      }
      if (std::abs(f.device_load_mbps[nd.id.value] - expect) > kTol) {
        add(label, nd.name + ": node aggregate " +
                       std::to_string(f.device_load_mbps[nd.id.value]) +
                       " != " + std::to_string(expect));
      }
    }
  }
  // (29)-(31): theta linearization.
  for (const Node& nd : t.nodes) {
    if (!nd.processing) continue;
    double theta = f.theta_mbps[nd.id.value];
    double lambda = f.device_load_mbps[nd.id.value];
    bool omega = f.processing_active[nd.id.value];
    if (theta > (omega ? big_g1 : 0.0) + kTol) {
      add("(29)", nd.name + ": theta above M * Omega");
    }
    if (theta > lambda + kTol) add("(30)", nd.name + ": theta above L_d");
    if (theta < lambda - (omega ? 0.0 : big_g1) - kTol) {
      add("(31)", nd.name + ": theta below lambda - (1-Omega)M");
    }
  }
  // (32)-(33): network activation binaries.
  for (const Node& nd : t.nodes) {
    double load = f.device_load_mbps[nd.id.value];
    bool b = f.network_active[nd.id.value];
    if (b && load < 1.0 - kTol) {
      add("(32)", nd.name + ": active with aggregate below one traffic unit");
    }
    if (!b && load > kTol) add("(33)", nd.name + ": loaded but inactive");
  }
  // (34): pair traffic equals the demand when assigned.
  for (const PairFlow& pf : f.pairs) {
    double t_s = problem.demands[pf.task].traffic_mbps;
    if (std::abs(pf.mbps - t_s) > kTol) {
      add("(34)", "pair " + t.node(pf.source).name + "->" +
                      t.node(pf.destination).name + " carries " +
                      std::to_string(pf.mbps) + " != T_s " + std::to_string(t_s));
    }
  }
  // (35): link capacity outside the core.
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (l.core) continue;
    for (int dir = 0; dir < 2; ++dir) {
      double load = f.link_load_mbps[2 * li + dir];
      if (load > l.capacity_mbps + kTol) {
        add("(35)", "link " + t.node(l.a).name + "-" + t.node(l.b).name +
                        " carries " + std::to_string(load) + " > C_mn " +
                        std::to_string(l.capacity_mbps));
      }
    }
  }
  // (36)-(38): core usage.
  const double wl_mbps = cat.core.wavelength_gbps * 1000.0;
  for (const Node& nd : t.nodes) {
    if (nd.kind != NodeKind::CoreNode) continue;
    int agg = 0;
    if (auto it = sol.usage.agg_ports.find(nd.id.value);
        it != sol.usage.agg_ports.end()) {
      agg = it->second;
    }
    if (agg * wl_mbps < f.device_load_mbps[nd.id.value] - kTol) {
      add("(36)", nd.name + ": aggregation ports below L_m / B");
    }
  }
  for (size_t li = 0; li < t.links.size(); ++li) {
    if (!t.links[li].core) continue;
    for (int dir = 0; dir < 2; ++dir) {
      int key = 2 * static_cast<int>(li) + dir;
      int wl = 0, fib = 0;
      if (auto it = sol.usage.wavelengths.find(key); it != sol.usage.wavelengths.end())
        wl = it->second;
      if (auto it = sol.usage.fibers.find(key); it != sol.usage.fibers.end())
        fib = it->second;
      double load = f.link_load_mbps[key];
      if (load > wl * wl_mbps + kTol) {
        add("(37)", "core link direction carries " + std::to_string(load) +
                        " > W_mn * B");
      }
      if (wl > cat.core.wavelengths_per_fiber * fib) {
        add("(38)", "core link wavelengths exceed fibre capacity");
      }
    }
  }
  // Delay-side checks for delay-aware solutions: totals match the closed-form
  // recomputation and no traversed queue is saturated (50)-(61).
  if (problem.delay_aware() && std::isfinite(sol.delays.total_queuing_s)) {
    double q_total = 0.0, r_total = 0.0;
    bool saturated = false;
    for (const PairFlow& pf : f.pairs) {
      if (pf.source == pf.destination) continue;
      r_total += propagation_delay(t, pf.path, problem.delay);
      for (const Hop& h : pf.path) {
        const Node& nd = t.node(h.to);
        if (nd.kind == NodeKind::Iot) continue;
        double mu = problem.delay.service_rate_pkts(nd.kind);
        double lam = problem.delay.mbps_to_pkts(f.arrival_mbps[nd.id.value]);
        if (lam >= mu) {
          saturated = true;
        } else {
          q_total += 1.0 / (mu - lam);
        }
      }
    }
    if (saturated) add("(53)-(55)", "a traversed queue is saturated");
    if (std::abs(r_total - sol.delays.total_propagation_s) > kTol) {
      add("(44)-(46)", "propagation total mismatch");
    }
    if (std::abs(q_total - sol.delays.total_queuing_s) > kTol) {
      add("(47)-(48)", "queuing total mismatch");
    }
  }
  return out;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_SOLVER_HPP
