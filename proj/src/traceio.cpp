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

#include "hedgekit/traceio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "hedgekit/errors.hpp"

namespace hedgekit::traceio {

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::flip:
      return "flip";
    case Regime::flop:
      return "flop";
    default:
      return "n/a";
  }
}

Regime parse_regime(std::string_view name) {
  if (name == "flip") return Regime::flip;
  if (name == "flop") return Regime::flop;
  if (name == "n/a") return Regime::none;
  throw input_error("unknown regime tag: '" + std::string(name) + "'");
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_rate(double eta) {
  if (std::isinf(eta)) return "inf";
  return format_double(eta);
}

std::string trace_csv(const Trace& trace) {
  std::string out(kTraceHeader);
  out.push_back('\n');
  for (const auto& r : trace.rounds) {
    out += std::to_string(r.t);
    out.push_back(',');
    out += format_rate(r.eta);
    out.push_back(',');
    out += format_double(r.h);
    out.push_back(',');
    out += format_double(r.m);
    out.push_back(',');
    out += format_double(r.delta);
    out.push_back(',');
    out += format_double(r.v);
    out.push_back(',');
    out += format_double(r.regret);
    out.push_back(',');
    out += r.leader_change ? '1' : '0';
    out.push_back(',');
    out += regime_name(r.regime);
    out.push_back('\n');
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = line.find(sep, start);
    if (at == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, at - start));
    start = at + 1;
  }
}

double parse_number(std::string_view field, std::size_t row,
                    std::string_view what, bool allow_inf) {
  if (allow_inf && field == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
      field.empty() || (!allow_inf && !std::isfinite(value))) {
    throw input_error("trace row " + std::to_string(row) + ": bad " +
                      std::string(what) + " field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Trace parse_trace_csv(std::string_view text) {
  Trace trace;
  std::size_t lineno = 0;
  std::size_t rows = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kTraceHeader) {
        throw input_error("trace header mismatch at line " +
                          std::to_string(lineno));
      }
      saw_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 9) {
      throw input_error("trace row " + std::to_string(rows + 1) +
                        ": expected 9 fields, got " +
                        std::to_string(fields.size()));
    }
    ++rows;
    RoundRecord r;
    r.t = static_cast<long>(parse_number(fields[0], rows, "t", false));
    r.eta = parse_number(fields[1], rows, "eta", true);
    r.h = parse_number(fields[2], rows, "h", false);
    r.m = parse_number(fields[3], rows, "m", false);
    r.delta = parse_number(fields[4], rows, "delta", false);
    r.v = parse_number(fields[5], rows, "v", false);
    r.regret = parse_number(fields[6], rows, "regret", false);
    if (fields[7] == "1") {
      r.leader_change = true;
    } else if (fields[7] == "0") {
      r.leader_change = false;
    } else {
      throw input_error("trace row " + std::to_string(rows) +
                        ": leader_change must be 0 or 1");
    }
    r.regime = parse_regime(fields[8]);

    trace.hedge_loss += r.h;
    trace.mix_loss += r.m;
    trace.gap += r.delta;
    trace.variance += r.v;
    if (r.leader_change) ++trace.leader_changes;
    trace.rounds.push_back(r);
  }
  if (!saw_header || trace.rounds.empty()) {
    throw input_error("empty trace");
  }
  trace.best_loss = trace.hedge_loss - trace.rounds.back().regret;
  return trace;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw input_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw input_error("read failed: " + path);
  return buf.str();
}

}  // namespace hedgekit::traceio
