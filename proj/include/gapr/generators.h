// Copyright 2026 The gapr Authors
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

#ifndef GAPR_GENERATORS_H_
#define GAPR_GENERATORS_H_

#include <cstdint>

#include "gapr/instance.h"
#include "gapr/tour.h"

namespace gapr {

// Order batching in a rectangular warehouse. Tasks are orders (weight = item
// count), agents are trolleys; the picker walks a Manhattan tour over the
// blocks holding the batch's items.
struct JobprpParams {
  int orders = 10;
  int min_items = 1;
  int max_items = 2;
  int aisles = 4;
  int blocks_per_aisle = 5;
  int trolleys = 2;
  double capacity = 12;
  std::uint64_t seed = 0;
  int hk_threshold = kDefaultHeldKarpThreshold;
};

GaprInstance GenerateJobprp(const JobprpParams& params);

// Soft-clustered routing. Tasks are clusters of customers (weight = total
// demand); a vehicle's route visits every customer of its clusters in any
// order. Euclidean plane [0, 100]^2 with the depot at the centre.
struct CluvrpParams {
  int clusters = 14;
  int customers = 60;
  int vehicles = 3;
  double capacity = 200;
  std::uint64_t seed = 0;
  int hk_threshold = kDefaultHeldKarpThreshold;
};

GaprInstance GenerateCluvrp(const CluvrpParams& params);

}  // namespace gapr

#endif  // GAPR_GENERATORS_H_
