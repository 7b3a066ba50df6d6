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

#ifndef CLOUDFOG_PROBLEM_HPP
#define CLOUDFOG_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cloudfog/catalog.hpp"
#include "cloudfog/delay.hpp"
#include "cloudfog/flows.hpp"
#include "cloudfog/power.hpp"
#include "cloudfog/topology.hpp"

namespace cloudfog {

enum class ObjectiveKind {
  PowerOnly,
  PropagationOnly,
  QueuingOnly,
  PowerPropagation,
  PowerQueuing,
  PowerPropagationQueuing,
};

inline const char* to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::PowerOnly: return "power";
    case ObjectiveKind::PropagationOnly: return "propagation";
    case ObjectiveKind::QueuingOnly: return "queuing";
    case ObjectiveKind::PowerPropagation: return "power+propagation";
    case ObjectiveKind::PowerQueuing: return "power+queuing";
    case ObjectiveKind::PowerPropagationQueuing: return "power+propagation+queuing";
  }
  return "?";
}

/// Objective weights (alpha on watts, beta on propagation seconds, gamma on
/// queuing seconds; beta and gamma carry W/s).
struct Weights {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct PlacementProblem {
  const Topology* topology = nullptr;
  const DeviceCatalog* catalog = nullptr;
  std::vector<TaskRequest> demands;
  int split_limit = 1;  // K
  ObjectiveKind objective = ObjectiveKind::PowerOnly;
  /// Explicit weights override the default scaling.
  std::optional<Weights> weights;
  DelayConstants delay;

  bool wants_propagation() const {
    return objective == ObjectiveKind::PropagationOnly ||
           objective == ObjectiveKind::PowerPropagation ||
           objective == ObjectiveKind::PowerPropagationQueuing;
  }
  bool wants_queuing() const {
    return objective == ObjectiveKind::QueuingOnly ||
           objective == ObjectiveKind::PowerQueuing ||
           objective == ObjectiveKind::PowerPropagationQueuing;
  }
  bool delay_aware() const { return wants_propagation() || wants_queuing(); }

  void check() const {
    if (!topology || !catalog) {
      throw std::invalid_argument("PlacementProblem: topology/catalog unset");
    }
    if (split_limit < 1) {
      throw std::invalid_argument("PlacementProblem: split limit K must be >= 1");
    }
    for (const TaskRequest& d : demands) {
      if (d.cpu_mips <= 0.0 || d.traffic_mbps <= 0.0) {
        throw std::invalid_argument("PlacementProblem: demands must be positive");
      }
      if (topology->node(d.source).kind != NodeKind::Iot) {
        throw std::invalid_argument("PlacementProblem: source " +
                                    topology->node(d.source).name +
                                    " is not an IoT node");
      }
    }
  }
};

struct PlacementSolution {
  Assignment assignment;  // destination per demand
  FlowSet flows;
  ServerUsage usage;
  PowerBreakdown power;
  DelayReport delays;
  double objective_value = 0.0;
  Weights weights;
};

/// Default weight scaling: alpha = 1; beta = gamma = baseline power divided
/// by baseline total delay, which puts watts and delay terms on comparable
/// scales. Weights of inactive terms are zeroed.
inline Weights resolve_weights(const PlacementProblem& problem,
                               double baseline_power_w,
                               double baseline_delay_s) {
  Weights w;
  if (problem.weights) {
    w = *problem.weights;
  } else {
    double scale =
        baseline_delay_s > 0.0 ? baseline_power_w / baseline_delay_s : 0.0;
    w.alpha = 1.0;
    w.beta = scale;
    w.gamma = scale;
  }
  switch (problem.objective) {
    case ObjectiveKind::PowerOnly:
      w.beta = 0.0;
      w.gamma = 0.0;
      break;
    case ObjectiveKind::PropagationOnly:
      if (!problem.weights) w.beta = 1.0;
      w.alpha = 0.0;
      w.gamma = 0.0;
      break;
    case ObjectiveKind::QueuingOnly:
      if (!problem.weights) w.gamma = 1.0;
      w.alpha = 0.0;
      w.beta = 0.0;
      break;
    case ObjectiveKind::PowerPropagation:
      w.gamma = 0.0;
      break;
    case ObjectiveKind::PowerQueuing:
      w.beta = 0.0;
      break;
    case ObjectiveKind::PowerPropagationQueuing:
      break;
  }
  return w;
}

}  // namespace cloudfog

#endif  // CLOUDFOG_PROBLEM_HPP
