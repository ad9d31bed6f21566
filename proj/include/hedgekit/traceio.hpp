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

#ifndef HEDGEKIT_TRACEIO_HPP
#define HEDGEKIT_TRACEIO_HPP

#include <string>
#include <string_view>

#include "hedgekit/core.hpp"

// Machine-readable trace format:
//   t,eta,h,m,delta,v,regret,leader_change,regime
// one row per round, numbers as shortest decimals that reparse to the same
// 64-bit value, eta of infinity as the literal string "inf", leader_change
// as 0/1, regime as flip/flop/n/a. UTF-8, LF line endings.

namespace hedgekit::traceio {

inline constexpr std::string_view kTraceHeader =
    "t,eta,h,m,delta,v,regret,leader_change,regime";

std::string regime_name(Regime regime);  // "flip" / "flop" / "n/a"
Regime parse_regime(std::string_view name);

// Shortest round-trip decimal; infinity becomes "inf".
std::string format_rate(double eta);
std::string format_double(double value);

std::string trace_csv(const Trace& trace);

// Parses a trace CSV and recomputes the cumulative aggregates from the
// rows (H, M, Delta, V, C; L* = H - final regret). The loss-range fields
// are not recoverable from a trace and are left at defaults.
Trace parse_trace_csv(std::string_view text);

void write_text_file(const std::string& path, std::string_view content);
std::string read_text_file(const std::string& path);

}  // namespace hedgekit::traceio

#endif  // HEDGEKIT_TRACEIO_HPP
