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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "hedgekit/datagen.hpp"
#include "hedgekit/errors.hpp"

using namespace hedgekit;

namespace {

std::pair<double, double> column_sums(const LossStream& s) {
  double a = 0.0, b = 0.0;
  for (const auto& row : s) {
    a += row[0];
    b += row[1];
  }
  return {a, b};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path(std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
             "/" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("experiment 1 opens with the published matrix") {
  const auto s = datagen::generate({1, 5});
  CHECK(s[0] == LossVector{0.5, 0.0});
  CHECK(s[1] == LossVector{0.0, 1.0});
  CHECK(s[2] == LossVector{1.0, 0.0});
  CHECK(s[3] == LossVector{0.0, 1.0});
  CHECK(s[4] == LossVector{1.0, 0.0});
}

TEST_CASE("experiment 2 opens with the published matrix") {
  const auto s = datagen::generate({2, 5});
  CHECK(s[0] == LossVector{1.0, 0.0});
  CHECK(s[1] == LossVector{1.0, 0.0});
  CHECK(s[2] == LossVector{0.0, 1.0});
  CHECK(s[3] == LossVector{1.0, 0.0});
  CHECK(s[4] == LossVector{0.0, 1.0});
}

TEST_CASE("experiments 3 and 4 reach the published column sums") {
  const auto [a3, b3] = column_sums(datagen::generate({3, 1000}));
  CHECK(a3 == 508.0);
  CHECK(b3 == 492.0);
  const auto [a4, b4] = column_sums(datagen::generate({4, 1000}));
  CHECK(a4 == 532.0);
  CHECK(b4 == 468.0);
}

TEST_CASE("the cumulative difference tracks the target within one") {
  for (int xi = 1; xi <= 4; ++xi) {
    const auto s = datagen::generate({xi, 1000});
    double diff = 0.0;
    for (std::size_t t = 0; t < s.size(); ++t) {
      diff += s[t][0] - s[t][1];
      CHECK(std::fabs(diff - datagen::target(xi, static_cast<long>(t) + 1)) <=
            1.0);
    }
  }
}

TEST_CASE("generated losses live in the unit interval and sum to one") {
  for (int xi = 1; xi <= 4; ++xi) {
    const auto s = datagen::generate({xi, 300});
    for (std::size_t t = 0; t < s.size(); ++t) {
      CHECK(s[t][0] >= 0.0);
      CHECK(s[t][0] <= 1.0);
      CHECK(s[t][1] >= 0.0);
      CHECK(s[t][1] <= 1.0);
      if (!(xi == 1 && t == 0)) CHECK(s[t][0] + s[t][1] == 1.0);
    }
  }
  CHECK(datagen::generate({1, 1})[0][0] + datagen::generate({1, 1})[0][1] == 0.5);
}

TEST_CASE("generation is deterministic") {
  const auto a = datagen::generate({3, 777});
  const auto b = datagen::generate({3, 777});
  CHECK(a == b);
}

TEST_CASE("generate validates its arguments") {
  CHECK_THROWS_AS(datagen::generate({5, 10}), param_error);
  CHECK_THROWS_AS(datagen::generate({0, 10}), param_error);
  CHECK_THROWS_AS(datagen::generate({1, 0}), param_error);
}

TEST_CASE("csv emission uses shortest round-trip decimals") {
  CHECK(datagen::to_csv({{0.5, 0.0}}) == "0.5,0\n");
  const LossStream thirds = {{1.0 / 3.0, 2.0 / 3.0}};
  const auto parsed = datagen::parse_csv(datagen::to_csv(thirds));
  CHECK(parsed == thirds);  // bit-exact round trip
}

TEST_CASE("csv parsing: simple stream") {
  const auto s = datagen::parse_csv("0.5,0\n0,1\n");
  CHECK(s == LossStream{{0.5, 0.0}, {0.0, 1.0}});
}

TEST_CASE("csv parsing errors") {
  // Ragged row reported with its index.
  try {
    datagen::parse_csv("1,0\n1,0,0.25\n");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  CHECK_THROWS_AS(datagen::parse_csv("1\n2\n"), input_error);
  CHECK_THROWS_AS(datagen::parse_csv("1,abc\n"), input_error);
  CHECK_THROWS_AS(datagen::parse_csv(""), input_error);
  CHECK_THROWS_AS(datagen::parse_csv("1,inf\n"), input_error);
  CHECK_THROWS_AS(datagen::parse_csv("1,nan\n"), input_error);
}

TEST_CASE("file round trip preserves every bit") {
  TempFile tmp("hedgekit_datagen_roundtrip.csv");
  const auto stream = datagen::generate({1, 10});
  datagen::write_csv(stream, tmp.path);
  CHECK(datagen::load_csv(tmp.path) == stream);
  CHECK_THROWS_AS(datagen::load_csv(tmp.path + ".missing"), input_error);
}
