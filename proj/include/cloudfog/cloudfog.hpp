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

#ifndef CLOUDFOG_CLOUDFOG_HPP
#define CLOUDFOG_CLOUDFOG_HPP

#include "cloudfog/catalog.hpp"
#include "cloudfog/delay.hpp"
#include "cloudfog/flows.hpp"
#include "cloudfog/lp_format.hpp"
#include "cloudfog/milp.hpp"
#include "cloudfog/power.hpp"
#include "cloudfog/problem.hpp"
#include "cloudfog/scenario.hpp"
#include "cloudfog/solver.hpp"
#include "cloudfog/solution_io.hpp"
#include "cloudfog/topology.hpp"

#endif  // CLOUDFOG_CLOUDFOG_HPP
