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

#include "hedgekit/datagen.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hedgekit/errors.hpp"

namespace hedgekit::datagen {

double target(int experiment, long t) {
  switch (experiment) {
    case 1:
      return 0.0;
    case 2:
      return 1.5;
    case 3:
      return std::pow(static_cast<double>(t), 0.4);
    case 4:
      return std::pow(static_cast<double>(t), 0.6);
    default:
      throw param_error("experiment must be one of {1,2,3,4}");
  }
}

LossStream generate(const ExperimentSpec& spec) {
  if (spec.experiment < 1 || spec.experiment > 4) {
    throw param_error("experiment must be one of {1,2,3,4}");
  }
  if (spec.rounds < 1) throw param_error("need rounds >= 1");

  LossStream stream;
  stream.reserve(static_cast<std::size_t>(spec.rounds));
  stream.push_back(spec.experiment == 1 ? LossVector{0.5, 0.0}
                                        : LossVector{1.0, 0.0});
  // Difference d_t = L_{t,1} - L_{t,2}; half-integers, exactly representable,
  // so the comparisons below need no tolerance.
  double diff = stream.back()[0] - stream.back()[1];
  for (long t = 2; t <= spec.rounds; ++t) {
    const double f = target(spec.experiment, t);
    if (std::fabs(diff + 1.0 - f) <= std::fabs(diff - 1.0 - f)) {
      stream.push_back({1.0, 0.0});
      diff += 1.0;
    } else {
      stream.push_back({0.0, 1.0});
      diff -= 1.0;
    }
  }
  return stream;
}

namespace {

void append_double(std::string& out, double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, res.ptr);
}

double parse_field(std::string_view field, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, value);
  const auto where = "row " + std::to_string(row) + ", column " +
                     std::to_string(col);
  if (res.ec != std::errc{} || res.ptr != last || field.empty()) {
    throw input_error("not a number at " + where + ": '" +
                      std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw input_error("non-finite loss at " + where);
  }
  return value;
}

}  // namespace

std::string to_csv(const LossStream& stream) {
  if (stream.empty()) throw input_error("empty loss stream");
  std::string out;
  out.reserve(stream.size() * stream.front().size() * 4);
  for (const auto& row : stream) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out.push_back(',');
      append_double(out, row[k]);
    }
    out.push_back('\n');
  }
  return out;
}

LossStream parse_csv(std::string_view text) {
  LossStream stream;
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    ++row;

    LossVector values;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view field =
          line.substr(start, comma == std::string_view::npos
                                 ? std::string_view::npos
                                 : comma - start);
      values.push_back(parse_field(field, row, values.size() + 1));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (values.size() < 2) {
      throw input_error("row " + std::to_string(row) +
                        ": need at least two columns");
    }
    if (!stream.empty() && values.size() != stream.front().size()) {
      throw input_error("ragged row " + std::to_string(row) + ": expected " +
                        std::to_string(stream.front().size()) +
                        " columns, got " + std::to_string(values.size()));
    }
    stream.push_back(std::move(values));
  }
  if (stream.empty()) throw input_error("no loss rows found");
  return stream;
}

void write_csv(const LossStream& stream, const std::string& path) {
  const std::string body = to_csv(stream);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open for writing: " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw input_error("write failed: " + path);
}

LossStream load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw input_error("read failed: " + path);
  return parse_csv(buf.str());
}

}  // namespace hedgekit::datagen
