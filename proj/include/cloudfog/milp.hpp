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

#ifndef CLOUDFOG_MILP_HPP
#define CLOUDFOG_MILP_HPP

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cloudfog/delay.hpp"
#include "cloudfog/problem.hpp"

namespace cloudfog {

enum class VarKind { Continuous, Binary, Integer };
enum class RowSense { Le, Ge, Eq };

struct MilpVariable {
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct MilpTerm {
  int var = -1;
  double coeff = 0.0;
};

struct MilpRow {
  std::string name;
  RowSense sense = RowSense::Le;
  double rhs = 0.0;
  std::vector<MilpTerm> terms;
};

/// A registry-backed linear model: variables with kinds and bounds, linear
/// constraint rows, and a minimization objective row.
struct MilpModel {
  std::string name;
  std::vector<MilpVariable> variables;
  std::vector<MilpRow> rows;
  std::vector<MilpTerm> objective;
  std::map<std::string, int> index;

  int add_variable(const std::string& vname, VarKind kind, double lo,
                   double hi) {
    auto it = index.find(vname);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(variables.size());
    variables.push_back(MilpVariable{vname, kind, lo, hi});
    index.emplace(vname, id);
    return id;
  }
  int var(const std::string& vname) const {
    auto it = index.find(vname);
    if (it == index.end()) {
      throw std::out_of_range("MilpModel: unknown variable " + vname);
    }
    return it->second;
  }
  MilpRow& add_row(const std::string& rname, RowSense sense, double rhs) {
    rows.push_back(MilpRow{rname, sense, rhs, {}});
    return rows.back();
  }
  void add_objective(int var_id, double coeff) {
    if (coeff == 0.0) return;
    for (MilpTerm& t : objective) {
      if (t.var == var_id) {
        t.coeff += coeff;
        return;
      }
    }
    objective.push_back(MilpTerm{var_id, coeff});
  }
};

namespace detail {

inline std::string idx(const std::string& prefix, int a) {
  return prefix + std::to_string(a);
}

}  // namespace detail

/// Builds the placement MILP: flow conservation and demand constraints
/// (18)-(38) plus the capacity-coupling row tying assigned MIPS to active
/// servers, and, for delay-aware objectives, the propagation/queuing blocks
/// (44)-(48) and (50)-(61) with the arrival-rate lookup indicators.
///
/// Big-M values: sum of CPU demands for MIPS rows, sum of traffic demands
/// (G1) for traffic rows, 1 s (G2) for delay rows. In the EDFA and
/// regenerator proportional terms the fibre/wavelength counts multiply the
/// link load; the export fixes them at one fibre (wavelength) as every
/// supported load fits a single fibre.
inline MilpModel formulate(const PlacementProblem& problem,
                           const Weights& weights) {
  problem.check();
  const Topology& t = *problem.topology;
  const DeviceCatalog& cat = *problem.catalog;
  MilpModel m;
  m.name = "cloudfog_" + std::string(to_string(problem.objective)) + "_" +
           std::to_string(problem.demands.size()) + "src";

  const int n_nodes = static_cast<int>(t.nodes.size());
  const int n_src = static_cast<int>(problem.demands.size());
  std::vector<NodeId> procs = t.processing_nodes();

  double big_mips = 0.0, big_g1 = 0.0;
  for (const TaskRequest& d : problem.demands) {
    big_mips += d.cpu_mips;
    big_g1 += d.traffic_mbps;
  }
  const double big_count = std::max(1.0, static_cast<double>(n_src));
  const double big_g2 = 1.0;  // seconds
  const double wavelength_mbps = cat.core.wavelength_gbps * 1000.0;

  auto vname_rho = [&](int s, NodeId d) {
    return "rho_s" + std::to_string(s) + "_d" + std::to_string(d.value);
  };
  auto vname_omega = [&](int s, NodeId d) {
    return "omega_s" + std::to_string(s) + "_d" + std::to_string(d.value);
  };
  auto vname_pair = [&](int s, NodeId d) {
    return "L_s" + std::to_string(s) + "_d" + std::to_string(d.value);
  };
  auto vname_flow = [&](int s, NodeId d, NodeId from, NodeId to) {
    return "f_s" + std::to_string(s) + "_d" + std::to_string(d.value) + "_m" +
           std::to_string(from.value) + "_n" + std::to_string(to.value);
  };
  auto vname_zeta = [&](int s, NodeId d, NodeId from, NodeId to) {
    return "zeta_s" + std::to_string(s) + "_d" + std::to_string(d.value) +
           "_m" + std::to_string(from.value) + "_n" + std::to_string(to.value);
  };

  // Variable registry. Registration order fixes the export order.
  for (int s = 0; s < n_src; ++s) {
    for (NodeId d : procs) {
      m.add_variable(vname_rho(s, d), VarKind::Continuous, 0.0,
                     problem.demands[s].cpu_mips);
      m.add_variable(vname_omega(s, d), VarKind::Binary, 0.0, 1.0);
      m.add_variable(vname_pair(s, d), VarKind::Continuous, 0.0,
                     problem.demands[s].traffic_mbps);
    }
  }
  for (int s = 0; s < n_src; ++s) {
    for (NodeId d : procs) {
      if (d == problem.demands[s].source) continue;
      for (const Link& l : t.links) {
        m.add_variable(vname_flow(s, d, l.a, l.b), VarKind::Continuous, 0.0,
                       problem.demands[s].traffic_mbps);
        m.add_variable(vname_flow(s, d, l.b, l.a), VarKind::Continuous, 0.0,
                       problem.demands[s].traffic_mbps);
      }
    }
  }
  for (int v = 0; v < n_nodes; ++v) {
    m.add_variable(detail::idx("load_m", v), VarKind::Continuous, 0.0, big_g1);
    m.add_variable(detail::idx("act_m", v), VarKind::Binary, 0.0, 1.0);
  }
  for (NodeId d : procs) {
    m.add_variable(detail::idx("theta_d", d.value), VarKind::Continuous, 0.0,
                   big_g1);
    m.add_variable(detail::idx("omegad_d", d.value), VarKind::Binary, 0.0, 1.0);
    const Node& nd = t.node(d);
    double v_d = nd.processing->max_servers == kUnlimitedServers
                     ? std::ceil(big_mips / detail::processor_for(
                                                cat, nd.processing->layer)
                                                .capacity_mips()) +
                           1.0
                     : nd.processing->max_servers;
    m.add_variable(detail::idx("nsrv_d", d.value), VarKind::Integer, 0.0, v_d);
  }
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (!l.core) continue;
    m.add_variable("w_m" + std::to_string(l.a.value) + "_n" +
                       std::to_string(l.b.value),
                   VarKind::Integer, 0.0, 1e6);
    m.add_variable("w_m" + std::to_string(l.b.value) + "_n" +
                       std::to_string(l.a.value),
                   VarKind::Integer, 0.0, 1e6);
    m.add_variable("fib_m" + std::to_string(l.a.value) + "_n" +
                       std::to_string(l.b.value),
                   VarKind::Integer, 0.0, 1e6);
    m.add_variable("fib_m" + std::to_string(l.b.value) + "_n" +
                       std::to_string(l.a.value),
                   VarKind::Integer, 0.0, 1e6);
  }
  for (const Node& nd : t.nodes) {
    if (nd.kind == NodeKind::CoreNode) {
      m.add_variable(detail::idx("agg_m", nd.id.value), VarKind::Integer, 0.0,
                     1e6);
    }
  }

  // (18) flow conservation, per pair and node.
  for (int s = 0; s < n_src; ++s) {
    NodeId src = problem.demands[s].source;
    for (NodeId d : procs) {
      if (d == src) continue;
      for (int v = 0; v < n_nodes; ++v) {
        MilpRow& row = m.add_row("c18_s" + std::to_string(s) + "_d" +
                                     std::to_string(d.value) + "_m" +
                                     std::to_string(v),
                                 RowSense::Eq, 0.0);
        for (auto [nb, li] : t.adjacency[v]) {
          NodeId mv{v}, nv{nb};
          (void)li;
          row.terms.push_back({m.var(vname_flow(s, d, mv, nv)), 1.0});
          row.terms.push_back({m.var(vname_flow(s, d, nv, mv)), -1.0});
        }
        if (v == src.value) {
          row.terms.push_back({m.var(vname_pair(s, d)), -1.0});
        } else if (v == d.value) {
          row.terms.push_back({m.var(vname_pair(s, d)), 1.0});
        }
      }
    }
  }
  // (19) demand satisfaction.
  for (int s = 0; s < n_src; ++s) {
    MilpRow& row = m.add_row(detail::idx("c19_s", s), RowSense::Eq,
                             problem.demands[s].cpu_mips);
    for (NodeId d : procs) row.terms.push_back({m.var(vname_rho(s, d)), 1.0});
  }
  // (20)-(21) rho/omega linking.
  for (int s = 0; s < n_src; ++s) {
    for (NodeId d : procs) {
      MilpRow& r20 = m.add_row("c20_s" + std::to_string(s) + "_d" +
                                   std::to_string(d.value),
                               RowSense::Ge, 0.0);
      r20.terms.push_back({m.var(vname_rho(s, d)), 1.0});
      r20.terms.push_back({m.var(vname_omega(s, d)), -1.0});
      MilpRow& r21 = m.add_row("c21_s" + std::to_string(s) + "_d" +
                                   std::to_string(d.value),
                               RowSense::Le, 0.0);
      r21.terms.push_back({m.var(vname_rho(s, d)), 1.0});
      r21.terms.push_back({m.var(vname_omega(s, d)), -big_mips});
    }
  }
  // (22) split limit.
  for (int s = 0; s < n_src; ++s) {
    MilpRow& row = m.add_row(detail::idx("c22_s", s), RowSense::Le,
                             static_cast<double>(problem.split_limit));
    for (NodeId d : procs) row.terms.push_back({m.var(vname_omega(s, d)), 1.0});
  }
  // (23) server cap.
  for (NodeId d : procs) {
    const Node& nd = t.node(d);
    if (nd.processing->max_servers == kUnlimitedServers) continue;
    MilpRow& row = m.add_row(detail::idx("c23_d", d.value), RowSense::Le,
                             static_cast<double>(nd.processing->max_servers));
    row.terms.push_back({m.var(detail::idx("nsrv_d", d.value)), 1.0});
  }
  // (24)-(25) site activation.
  for (NodeId d : procs) {
    MilpRow& r24 = m.add_row(detail::idx("c24_d", d.value), RowSense::Ge, 0.0);
    for (int s = 0; s < n_src; ++s) {
      r24.terms.push_back({m.var(vname_omega(s, d)), 1.0});
    }
    r24.terms.push_back({m.var(detail::idx("omegad_d", d.value)), -1.0});
    MilpRow& r25 = m.add_row(detail::idx("c25_d", d.value), RowSense::Le, 0.0);
    for (int s = 0; s < n_src; ++s) {
      r25.terms.push_back({m.var(vname_omega(s, d)), 1.0});
    }
    r25.terms.push_back({m.var(detail::idx("omegad_d", d.value)), -big_count});
  }
  // (26)-(28) node aggregates.
  for (const Node& nd : t.nodes) {
    MilpRow& row = m.add_row(detail::idx("c26to28_m", nd.id.value),
                             RowSense::Eq, 0.0);
    row.terms.push_back({m.var(detail::idx("load_m", nd.id.value)), -1.0});
    for (int s = 0; s < n_src; ++s) {
      NodeId src = problem.demands[s].source;
      for (NodeId d : procs) {
        if (d == src) continue;
        if (nd.kind == NodeKind::CoreNode) {
          // outgoing on core links
          for (auto [nb, li] : t.adjacency[nd.id.value]) {
            if (!t.links[li].core) continue;
            row.terms.push_back(
                {m.var(vname_flow(s, d, nd.id, NodeId{nb})), 1.0});
          }
        } else {
          // incoming, plus generated traffic at the source itself
          for (auto [nb, li] : t.adjacency[nd.id.value]) {
            (void)li;
            row.terms.push_back(
                {m.var(vname_flow(s, d, NodeId{nb}, nd.id)), 1.0});
          }
          if (nd.kind == NodeKind::Iot && nd.id == src) {
            for (auto [nb, li] : t.adjacency[nd.id.value]) {
              (void)li;
              row.terms.push_back(
                  {m.var(vname_flow(s, d, nd.id, NodeId{nb})), 1.0});
            }
          }
        }
      }
    }
  }
  // (29)-(31) theta linearization.
  for (NodeId d : procs) {
    MilpRow& r29 = m.add_row(detail::idx("c29_d", d.value), RowSense::Le, 0.0);
    r29.terms.push_back({m.var(detail::idx("theta_d", d.value)), 1.0});
    r29.terms.push_back({m.var(detail::idx("omegad_d", d.value)), -big_g1});
    MilpRow& r30 = m.add_row(detail::idx("c30_d", d.value), RowSense::Le, 0.0);
    r30.terms.push_back({m.var(detail::idx("theta_d", d.value)), 1.0});
    r30.terms.push_back({m.var(detail::idx("load_m", d.value)), -1.0});
    MilpRow& r31 = m.add_row(detail::idx("c31_d", d.value), RowSense::Ge,
                             -big_g1);
    r31.terms.push_back({m.var(detail::idx("theta_d", d.value)), 1.0});
    r31.terms.push_back({m.var(detail::idx("load_m", d.value)), -1.0});
    r31.terms.push_back({m.var(detail::idx("omegad_d", d.value)), -big_g1});
  }
  // (32)-(33) network activation.
  for (const Node& nd : t.nodes) {
    MilpRow& r32 = m.add_row(detail::idx("c32_m", nd.id.value), RowSense::Ge,
                             0.0);
    r32.terms.push_back({m.var(detail::idx("load_m", nd.id.value)), 1.0});
    r32.terms.push_back({m.var(detail::idx("act_m", nd.id.value)), -1.0});
    MilpRow& r33 = m.add_row(detail::idx("c33_m", nd.id.value), RowSense::Le,
                             0.0);
    r33.terms.push_back({m.var(detail::idx("load_m", nd.id.value)), 1.0});
    r33.terms.push_back({m.var(detail::idx("act_m", nd.id.value)), -big_g1});
  }
  // (34) pair traffic equals the demand when served.
  for (int s = 0; s < n_src; ++s) {
    for (NodeId d : procs) {
      MilpRow& row = m.add_row("c34_s" + std::to_string(s) + "_d" +
                                   std::to_string(d.value),
                               RowSense::Eq, 0.0);
      row.terms.push_back({m.var(vname_pair(s, d)), 1.0});
      row.terms.push_back(
          {m.var(vname_omega(s, d)), -problem.demands[s].traffic_mbps});
    }
  }
  // (35) link capacity outside the core, per direction.
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (l.core) continue;
    for (int dir = 0; dir < 2; ++dir) {
      NodeId from = dir == 0 ? l.a : l.b;
      NodeId to = dir == 0 ? l.b : l.a;
      MilpRow& row = m.add_row("c35_m" + std::to_string(from.value) + "_n" +
                                   std::to_string(to.value),
                               RowSense::Le, l.capacity_mbps);
      for (int s = 0; s < n_src; ++s) {
        for (NodeId d : procs) {
          if (d == problem.demands[s].source) continue;
          row.terms.push_back({m.var(vname_flow(s, d, from, to)), 1.0});
        }
      }
    }
  }
  // (36) aggregation ports.
  for (const Node& nd : t.nodes) {
    if (nd.kind != NodeKind::CoreNode) continue;
    MilpRow& row = m.add_row(detail::idx("c36_m", nd.id.value), RowSense::Ge,
                             0.0);
    row.terms.push_back(
        {m.var(detail::idx("agg_m", nd.id.value)), wavelength_mbps});
    row.terms.push_back({m.var(detail::idx("load_m", nd.id.value)), -1.0});
  }
  // (37)-(38) wavelengths and fibres.
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (!l.core) continue;
    for (int dir = 0; dir < 2; ++dir) {
      NodeId from = dir == 0 ? l.a : l.b;
      NodeId to = dir == 0 ? l.b : l.a;
      std::string suffix =
          "_m" + std::to_string(from.value) + "_n" + std::to_string(to.value);
      MilpRow& r37 = m.add_row("c37" + suffix, RowSense::Le, 0.0);
      for (int s = 0; s < n_src; ++s) {
        for (NodeId d : procs) {
          if (d == problem.demands[s].source) continue;
          r37.terms.push_back({m.var(vname_flow(s, d, from, to)), 1.0});
        }
      }
      r37.terms.push_back({m.var("w" + suffix), -wavelength_mbps});
      MilpRow& r38 = m.add_row("c38" + suffix, RowSense::Le, 0.0);
      r38.terms.push_back({m.var("w" + suffix), 1.0});
      r38.terms.push_back(
          {m.var("fib" + suffix),
           -static_cast<double>(cat.core.wavelengths_per_fiber)});
    }
  }
  // Capacity coupling: assigned MIPS within active server capacity.
  for (NodeId d : procs) {
    const Node& nd = t.node(d);
    const ProcessorSpec& spec = detail::processor_for(cat, nd.processing->layer);
    MilpRow& row = m.add_row(detail::idx("ccap_d", d.value), RowSense::Le, 0.0);
    for (int s = 0; s < n_src; ++s) {
      row.terms.push_back({m.var(vname_rho(s, d)), 1.0});
    }
    row.terms.push_back(
        {m.var(detail::idx("nsrv_d", d.value)), -spec.capacity_mips()});
  }

  // ---------------------------------------------------------------- power
  // objective terms
  auto delta_idle = [](const NetworkDeviceSpec& s) {
    return s.profile.idle_share_delta * s.profile.idle_power_w;
  };
  auto eps_mbps = [](const NetworkDeviceSpec& s) {
    return energy_per_bit(s.profile) / 1000.0;
  };
  const double a = weights.alpha;
  for (const Node& nd : t.nodes) {
    int load_v = m.var(detail::idx("load_m", nd.id.value));
    int act_v = m.var(detail::idx("act_m", nd.id.value));
    switch (nd.kind) {
      case NodeKind::Iot:
        m.add_objective(load_v, a * eps_mbps(cat.iot_radio));
        m.add_objective(act_v, a * delta_idle(cat.iot_radio));
        break;
      case NodeKind::AccessPoint:
        m.add_objective(load_v, a * eps_mbps(cat.access_point));
        m.add_objective(act_v, a * delta_idle(cat.access_point));
        break;
      case NodeKind::Onu:
        m.add_objective(load_v, a * cat.pue.access * eps_mbps(cat.onu));
        m.add_objective(act_v, a * cat.pue.access * delta_idle(cat.onu));
        break;
      case NodeKind::Olt:
        m.add_objective(load_v, a * cat.pue.access * eps_mbps(cat.olt));
        m.add_objective(act_v, a * cat.pue.access * delta_idle(cat.olt));
        break;
      case NodeKind::MetroSwitch:
        m.add_objective(load_v, a * cat.pue.metro * eps_mbps(cat.metro_switch));
        m.add_objective(act_v, a * cat.pue.metro * delta_idle(cat.metro_switch));
        break;
      case NodeKind::MetroRouter:
        m.add_objective(load_v, a * cat.pue.metro *
                                    cat.metro_router_port.redundancy *
                                    eps_mbps(cat.metro_router_port));
        m.add_objective(act_v, a * cat.pue.metro *
                                   cat.metro_router_port.redundancy *
                                   delta_idle(cat.metro_router_port));
        break;
      case NodeKind::CoreNode: {
        double prop = eps_mbps(cat.core_router_port) + eps_mbps(cat.transponder) +
                      eps_mbps(cat.optical_switch);
        // EDFA/regenerator proportional terms, single fibre / wavelength.
        for (auto [nb, li] : t.adjacency[nd.id.value]) {
          (void)nb;
          const Link& l = t.links[li];
          if (!l.core) continue;
          int amps = edfa_count(l.distance_km, cat.core.edfa_span_km);
          int regens =
              regenerator_count(l.distance_km, cat.core.regenerator_span_km);
          prop += eps_mbps(cat.edfa) * amps + eps_mbps(cat.regenerator) * regens;
          break;
        }
        m.add_objective(load_v, a * cat.pue.core * prop);
        m.add_objective(act_v, a * cat.pue.core * delta_idle(cat.optical_switch));
        m.add_objective(m.var(detail::idx("agg_m", nd.id.value)),
                        a * cat.pue.core * delta_idle(cat.core_router_port));
        break;
      }
      default:
        break;
    }
  }
  for (size_t li = 0; li < t.links.size(); ++li) {
    const Link& l = t.links[li];
    if (!l.core) continue;
    int amps = edfa_count(l.distance_km, cat.core.edfa_span_km);
    int regens = regenerator_count(l.distance_km, cat.core.regenerator_span_km);
    for (int dir = 0; dir < 2; ++dir) {
      NodeId from = dir == 0 ? l.a : l.b;
      NodeId to = dir == 0 ? l.b : l.a;
      std::string suffix =
          "_m" + std::to_string(from.value) + "_n" + std::to_string(to.value);
      m.add_objective(m.var("w" + suffix),
                      a * cat.pue.core *
                          (delta_idle(cat.core_router_port) +
                           delta_idle(cat.transponder) +
                           cat.regenerator.profile.idle_power_w * regens));
      m.add_objective(m.var("fib" + suffix),
                      a * cat.pue.core * delta_idle(cat.edfa) * amps);
    }
  }
  for (NodeId d : procs) {
    const Node& nd = t.node(d);
    const ProcessorSpec& spec = detail::processor_for(cat, nd.processing->layer);
    double pue = 1.0;
    const NetworkDeviceSpec* lan_r = nullptr;
    const NetworkDeviceSpec* lan_s = nullptr;
    switch (nd.processing->layer) {
      case ProcessingLayer::AccessFog:
        pue = cat.pue.access;
        lan_r = &cat.access_fog_router;
        lan_s = &cat.access_fog_switch;
        break;
      case ProcessingLayer::MetroFog:
        pue = cat.pue.metro;
        lan_r = &cat.metro_fog_router;
        lan_s = &cat.metro_fog_switch;
        break;
      case ProcessingLayer::CloudDc:
        pue = cat.pue.dc;
        lan_r = &cat.dc_lan_router;
        lan_s = &cat.dc_lan_switch;
        break;
      default:
        break;
    }
    for (int s = 0; s < n_src; ++s) {
      m.add_objective(m.var(vname_rho(s, d)), a * pue * spec.energy_per_mips());
    }
    m.add_objective(m.var(detail::idx("nsrv_d", d.value)),
                    a * pue * spec.profile.idle_power_w);
    if (lan_r) {
      m.add_objective(m.var(detail::idx("theta_d", d.value)),
                      a * pue * (eps_mbps(*lan_r) + eps_mbps(*lan_s)));
      m.add_objective(m.var(detail::idx("omegad_d", d.value)),
                      a * pue * (delta_idle(*lan_r) + delta_idle(*lan_s)));
    }
  }

  // ---------------------------------------------------------------- delay
  if (weights.beta != 0.0 || weights.gamma != 0.0) {
    const DelayConstants& k = problem.delay;
    // Route-usage binaries and propagation per pair.
    for (int s = 0; s < n_src; ++s) {
      NodeId src = problem.demands[s].source;
      for (NodeId d : procs) {
        if (d == src) continue;
        std::string pair =
            "_s" + std::to_string(s) + "_d" + std::to_string(d.value);
        int r_sd = m.add_variable("R" + pair, VarKind::Continuous, 0.0, big_g2);
        int q_sd = m.add_variable("Q" + pair, VarKind::Continuous, 0.0, big_g2);
        // rows are appended inside the loop below, so address these two by
        // index rather than by reference
        m.add_row("c45" + pair, RowSense::Eq, 0.0);
        size_t r45_idx = m.rows.size() - 1;
        m.rows[r45_idx].terms.push_back({r_sd, 1.0});
        m.add_row("c48" + pair, RowSense::Eq, 0.0);
        size_t r48_idx = m.rows.size() - 1;
        m.rows[r48_idx].terms.push_back({q_sd, 1.0});
        for (size_t li = 0; li < t.links.size(); ++li) {
          const Link& l = t.links[li];
          double hop_s = l.medium == Medium::Wireless
                             ? l.distance_km / k.speed_of_light_km_s
                             : l.distance_km /
                                   (k.fibre_ri_ratio * k.speed_of_light_km_s);
          for (int dir = 0; dir < 2; ++dir) {
            NodeId from = dir == 0 ? l.a : l.b;
            NodeId to = dir == 0 ? l.b : l.a;
            int zeta = m.add_variable(vname_zeta(s, d, from, to),
                                      VarKind::Binary, 0.0, 1.0);
            // collocated devices (zero-distance hops) add no propagation
            if (hop_s != 0.0) m.rows[r45_idx].terms.push_back({zeta, -hop_s});
            // (56)-(57): tie zeta to the flow.
            MilpRow& r56 = m.add_row("c56" + pair + "_m" +
                                         std::to_string(from.value) + "_n" +
                                         std::to_string(to.value),
                                     RowSense::Ge, 0.0);
            r56.terms.push_back({m.var(vname_flow(s, d, from, to)), 1.0});
            r56.terms.push_back({zeta, -1.0});
            MilpRow& r57 = m.add_row("c57" + pair + "_m" +
                                         std::to_string(from.value) + "_n" +
                                         std::to_string(to.value),
                                     RowSense::Le, 0.0);
            r57.terms.push_back({m.var(vname_flow(s, d, from, to)), 1.0});
            r57.terms.push_back({zeta, -big_g1});
            // (58)-(61): per-hop queuing against the receiving node's queue.
            if (t.node(to).kind != NodeKind::Iot) {
              int qp = m.add_variable("qp" + pair + "_m" +
                                          std::to_string(from.value) + "_n" +
                                          std::to_string(to.value),
                                      VarKind::Continuous, 0.0, big_g2);
              int qn = m.add_variable(detail::idx("qn_m", to.value),
                                      VarKind::Continuous, 0.0, big_g2);
              m.rows[r48_idx].terms.push_back({qp, -1.0});
              MilpRow& r59 = m.add_row("c59" + pair + "_m" +
                                           std::to_string(from.value) + "_n" +
                                           std::to_string(to.value),
                                       RowSense::Le, 0.0);
              r59.terms.push_back({qp, 1.0});
              r59.terms.push_back({zeta, -big_g2});
              MilpRow& r60 = m.add_row("c60" + pair + "_m" +
                                           std::to_string(from.value) + "_n" +
                                           std::to_string(to.value),
                                       RowSense::Le, 0.0);
              r60.terms.push_back({qp, 1.0});
              r60.terms.push_back({qn, -1.0});
              MilpRow& r61 = m.add_row("c61" + pair + "_m" +
                                           std::to_string(from.value) + "_n" +
                                           std::to_string(to.value),
                                       RowSense::Ge, -big_g2);
              r61.terms.push_back({qp, 1.0});
              r61.terms.push_back({qn, -1.0});
              r61.terms.push_back({zeta, -big_g2});
            }
          }
        }
        m.add_objective(r_sd, weights.beta);
        m.add_objective(q_sd, weights.gamma);
      }
    }
    // Arrival aggregation (50) and lookup selection (51)-(55) per node.
    std::vector<double> demand_mbps;
    for (const TaskRequest& d : problem.demands) {
      demand_mbps.push_back(d.traffic_mbps);
    }
    std::map<NodeKind, QueueLookup> lookups;
    for (const Node& nd : t.nodes) {
      if (nd.kind == NodeKind::Iot) continue;
      if (!lookups.count(nd.kind)) {
        lookups.emplace(nd.kind,
                        build_lookup(demand_mbps,
                                     k.service_rate_gbps(nd.kind), k));
      }
    }
    std::vector<bool> is_source(n_nodes, false);
    for (const TaskRequest& d : problem.demands) is_source[d.source.value] = true;
    for (const Node& nd : t.nodes) {
      if (nd.kind == NodeKind::Iot) continue;
      int arr = m.add_variable(detail::idx("arr_m", nd.id.value),
                               VarKind::Continuous, 0.0, big_g1);
      if (!is_source[nd.id.value]) {
        MilpRow& r50 = m.add_row(detail::idx("c50_m", nd.id.value),
                                 RowSense::Eq, 0.0);
        r50.terms.push_back({arr, -1.0});
        for (int s = 0; s < n_src; ++s) {
          NodeId src = problem.demands[s].source;
          for (NodeId d : procs) {
            if (d == src) continue;
            for (auto [nb, li] : t.adjacency[nd.id.value]) {
              (void)li;
              r50.terms.push_back(
                  {m.var(vname_flow(s, d, NodeId{nb}, nd.id)), 1.0});
            }
          }
        }
      }
      const QueueLookup& lk = lookups.at(nd.kind);
      int qn = m.add_variable(detail::idx("qn_m", nd.id.value),
                              VarKind::Continuous, 0.0, big_g2);
      m.add_row(detail::idx("c51_m", nd.id.value), RowSense::Eq, 0.0);
      size_t r51_idx = m.rows.size() - 1;
      m.rows[r51_idx].terms.push_back({arr, -1.0});
      m.add_row(detail::idx("c52_m", nd.id.value), RowSense::Le, 1.0);
      size_t r52_idx = m.rows.size() - 1;
      m.add_row(detail::idx("c53to55_m", nd.id.value), RowSense::Eq, 0.0);
      size_t r53_idx = m.rows.size() - 1;
      m.rows[r53_idx].terms.push_back({qn, -1.0});
      for (size_t ai = 0; ai < lk.entries.size(); ++ai) {
        double arrival_mbps =
            lk.entries[ai].first * k.packet_bits / 1e6;  // back to Mbps
        int h = m.add_variable("h_m" + std::to_string(nd.id.value) + "_a" +
                                   std::to_string(ai),
                               VarKind::Binary, 0.0, 1.0);
        m.rows[r51_idx].terms.push_back({h, arrival_mbps});
        m.rows[r52_idx].terms.push_back({h, 1.0});
        m.rows[r53_idx].terms.push_back({h, lk.entries[ai].second});
      }
    }
  }
  return m;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_MILP_HPP
