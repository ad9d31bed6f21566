// Copyright 2026 The Hedgekit Authors. All rights reserved.
//
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

#ifndef HEDGEKIT_DATAGEN_HPP
#define HEDGEKIT_DATAGEN_HPP

#include <string>
#include <string_view>

#include "hedgekit/core.hpp"

// Deterministic two-expert generators for the four benchmark experiments,
// plus CSV ingestion and emission of arbitrary loss streams.
//
// CSV dialect: UTF-8, LF line endings, no header, comma separator, one row
// per round, one column per expert, decimal floats that reparse to the
// exact same 64-bit values.

namespace hedgekit::datagen {

struct ExperimentSpec {
  int experiment = 1;  // 1..4
  long rounds = 1;     // >= 1
};

// The drift target f(t) the generator tracks: 0, 3/2, t^0.4, t^0.6.
double target(int experiment, long t);

// Round 1 emits the experiment's hand-crafted vector ((0.5,0) for 1,
// (1,0) otherwise). Each later round appends (1,0) or (0,1), whichever
// brings the cumulative loss difference L_{t,1} - L_{t,2} closer to the
// target at the new round index; exact ties go to (1,0). Deterministic:
// repeated calls with equal arguments are bit-identical.
LossStream generate(const ExperimentSpec& spec);

std::string to_csv(const LossStream& stream);
LossStream parse_csv(std::string_view text);

void write_csv(const LossStream& stream, const std::string& path);
LossStream load_csv(const std::string& path);

}  // namespace hedgekit::datagen

#endif  // HEDGEKIT_DATAGEN_HPP
