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

// hedgekit CLI: generate benchmark loss streams, run the learners, sweep
// fixed learning rates and check every applicable regret bound on live
// traces.
//
// Exit codes: 0 success, 1 usage, 2 input data error, 3 bound or
// invariance violation.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hedgekit/bounds.hpp"
#include "hedgekit/core.hpp"
#include "hedgekit/datagen.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/learners.hpp"
#include "hedgekit/traceio.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hedgekit;

struct InputOpts {
  int experiment = 0;
  long rounds = 0;
  std::string input_path;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  auto* exp = cmd->add_option("--experiment", in.experiment,
                              "Benchmark experiment index")
                  ->check(CLI::IsMember({1, 2, 3, 4}));
  auto* rounds =
      cmd->add_option("--rounds", in.rounds, "Number of rounds T")
          ->check(CLI::PositiveNumber);
  auto* input = cmd->add_option("--input", in.input_path,
                                "Loss CSV (one row per round, no header)");
  exp->needs(rounds);
  input->excludes(exp)->excludes(rounds);
}

LossStream resolve_stream(const InputOpts& in) {
  if (!in.input_path.empty()) return datagen::load_csv(in.input_path);
  if (in.experiment == 0) {
    throw param_error("give either --experiment with --rounds, or --input");
  }
  return datagen::generate({in.experiment, in.rounds});
}

struct AlgoOpts {
  std::string algo;
  double eta = 1.0;
  long horizon = 0;  // 0: use the stream length
  double phi = 2.37;
  double alpha = 1.243;
};

void add_algo_options(CLI::App* cmd, AlgoOpts& a, bool with_selector) {
  if (with_selector) {
    cmd->add_option("--algo", a.algo, "Learner")
        ->required()
        ->check(CLI::IsMember({"ftl", "hedge", "safehedge", "adahedge",
                               "flipflop"}));
  }
  cmd->add_option("--eta", a.eta, "Fixed learning rate for hedge")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--horizon", a.horizon,
                  "Horizon for safehedge (default: stream length)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--phi", a.phi, "FlipFlop phi > 1");
  cmd->add_option("--alpha", a.alpha, "FlipFlop alpha > 0");
}

LearnerKind make_kind(const AlgoOpts& a, long stream_length) {
  LearnerKind kind;
  if (a.algo == "ftl") {
    kind = Ftl{};
  } else if (a.algo == "hedge") {
    kind = FixedHedge{a.eta};
  } else if (a.algo == "safehedge") {
    kind = SafeHedge{a.horizon > 0 ? a.horizon : stream_length};
  } else if (a.algo == "adahedge") {
    kind = AdaHedge{};
  } else if (a.algo == "flipflop") {
    kind = FlipFlop{a.phi, a.alpha};
  } else {
    throw param_error("unknown algorithm: " + a.algo);
  }
  validate(kind);
  return kind;
}

void emit(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    traceio::write_text_file(path, content);
  }
}

json rate_json(double eta) {
  if (std::isinf(eta)) return json("inf");
  return json(eta);
}

json checks_json(const std::vector<bounds::BoundCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json jc;
    jc["name"] = c.name;
    jc["value"] = c.value;
    jc["observed"] = c.observed;
    jc["satisfied"] = c.satisfied;
    if (c.degenerate_scale) jc["degenerate_scale"] = true;
    json inputs;
    for (const auto& [key, val] : c.inputs) inputs[key] = rate_json(val);
    jc["inputs"] = inputs;
    arr.push_back(jc);
  }
  return arr;
}

json summary_json(const LearnerKind& kind, const Trace& trace,
                  std::size_t experts,
                  const std::vector<bounds::BoundCheck>& checks) {
  json j;
  j["algo"] = kind_name(kind);
  j["experts"] = experts;
  j["rounds"] = trace.rounds.size();
  j["eta_final"] = rate_json(trace.rounds.back().eta);
  j["final"] = {{"H", trace.hedge_loss},   {"M", trace.mix_loss},
                {"Delta", trace.gap},      {"V", trace.variance},
                {"Lstar", trace.best_loss}, {"C", trace.leader_changes},
                {"regret", trace.regret()}};
  j["scale"] = {{"sigma", trace.sigma},
                {"Nstar", trace.translated_best()},
                {"unit_range", trace.unit_range}};
  j["bounds"] = checks_json(checks);
  return j;
}

// ---- gen --------------------------------------------------------------------

int do_gen(const InputOpts& in, const std::string& out_path) {
  if (in.experiment == 0) {
    throw param_error("gen needs --experiment and --rounds");
  }
  emit(out_path, datagen::to_csv(datagen::generate({in.experiment, in.rounds})));
  return 0;
}

// ---- run --------------------------------------------------------------------

std::optional<double> ftl_regret_for(const LearnerKind& kind,
                                     const LossStream& stream) {
  if (!std::holds_alternative<FlipFlop>(kind)) return std::nullopt;
  return run(Ftl{}, stream).regret();
}

int do_run(const InputOpts& in, const AlgoOpts& algo,
           const std::string& trace_path, const std::string& summary_path) {
  const LossStream stream = resolve_stream(in);
  const LearnerKind kind = make_kind(algo, static_cast<long>(stream.size()));
  const Trace trace = run(kind, stream);
  const auto checks = bounds::check_trace(trace, kind, stream.front().size(),
                                          ftl_regret_for(kind, stream));
  if (!trace_path.empty()) {
    traceio::write_text_file(trace_path, traceio::trace_csv(trace));
  }
  emit(summary_path,
       summary_json(kind, trace, stream.front().size(), checks).dump(2) + "\n");
  return 0;
}

// ---- sweep ------------------------------------------------------------------

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(start, comma - start);
    start = comma + 1;
    if (field.empty()) continue;
    if (field == "inf") {
      grid.push_back(kRateInf);
    } else {
      double eta = 0.0;
      try {
        eta = std::stod(field);
      } catch (const std::exception&) {
        throw param_error("bad grid entry: '" + field + "'");
      }
      if (!(eta > 0.0)) throw param_error("grid rates must be positive");
      grid.push_back(eta);
    }
    if (start > text.size()) break;
  }
  if (grid.empty()) throw param_error("empty learning-rate grid");
  return grid;
}

std::vector<double> default_grid() {
  // 100 logarithmically spaced points in [1e-3, 1e2], plus infinity.
  std::vector<double> grid;
  grid.reserve(101);
  for (int i = 0; i < 100; ++i) {
    grid.push_back(std::pow(10.0, -3.0 + 5.0 * i / 99.0));
  }
  grid.push_back(kRateInf);
  return grid;
}

int do_sweep(const InputOpts& in, const std::string& grid_text,
             const std::string& out_path) {
  const LossStream stream = resolve_stream(in);
  std::vector<double> grid =
      grid_text.empty() ? default_grid() : parse_grid(grid_text);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::string out = "eta,regret\n";
  for (const double eta : grid) {
    const LearnerKind kind =
        std::isinf(eta) ? LearnerKind(Ftl{}) : LearnerKind(FixedHedge{eta});
    const Trace trace = run(kind, stream);
    out += traceio::format_rate(eta);
    out.push_back(',');
    out += traceio::format_double(trace.regret());
    out.push_back('\n');
  }
  emit(out_path, out);
  return 0;
}

// ---- check ------------------------------------------------------------------

int verify_trace_file(const std::string& path) {
  const Trace trace = traceio::parse_trace_csv(traceio::read_text_file(path));
  int violations = 0;
  const auto complain = [&](long t, const std::string& what) {
    std::cout << "VIOLATION trace row " << t << ": " << what << "\n";
    ++violations;
  };
  long expected_t = 1;
  for (const auto& r : trace.rounds) {
    if (r.t != expected_t) complain(r.t, "round indices must be 1,2,...");
    ++expected_t;
    if (!(r.eta > 0.0)) complain(r.t, "eta must be positive");
    // delta was produced as max(0, h - m) from these exact values, so the
    // recomputation must match bit for bit.
    if (r.delta != std::max(0.0, r.h - r.m)) {
      complain(r.t, "delta != max(0, h - m)");
    }
    if (r.delta < 0.0) complain(r.t, "delta < 0");
    if (r.v < 0.0) complain(r.t, "v < 0");
  }
  if (violations == 0) {
    std::cout << "ok: trace internally consistent (" << trace.rounds.size()
              << " rounds)\n";
    return 0;
  }
  return 3;
}

struct TransformedStream {
  LossStream stream;
  double sigma = 1.0;
};

TransformedStream affine_transform(const LossStream& stream,
                                   std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  TransformedStream out;
  out.sigma = 10.0 * (1.0 - unit(rng));  // in (0, 10]
  out.stream.reserve(stream.size());
  for (const auto& row : stream) {
    const double tau = shift(rng);
    LossVector scaled(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      scaled[k] = out.sigma * row[k] + tau;
    }
    out.stream.push_back(std::move(scaled));
  }
  return out;
}

// Weight sequences of the scale-invariant learners must agree between the
// original and the transformed stream; FlipFlop must also keep its regime
// sequence.
int invariance_violations(const LearnerKind& kind, const LossStream& original,
                          const LossStream& transformed,
                          const std::string& label) {
  Learner a(kind, original.front().size());
  Learner b(kind, original.front().size());
  int violations = 0;
  for (std::size_t t = 0; t < original.size(); ++t) {
    const auto wa = a.next_weights();
    const auto wb = b.next_weights();
    double sup = 0.0;
    for (std::size_t k = 0; k < wa.size(); ++k) {
      sup = std::max(sup, std::fabs(wa[k] - wb[k]));
    }
    if (sup > 1e-9) {
      std::cout << "VIOLATION " << label << " round " << t + 1
                << ": weight sup-norm " << sup << " > 1e-9\n";
      ++violations;
    }
    if (a.regime() != b.regime()) {
      std::cout << "VIOLATION " << label << " round " << t + 1
                << ": regime sequences differ\n";
      ++violations;
    }
    a.observe(original[t]);
    b.observe(transformed[t]);
  }
  return violations;
}

int do_check(const InputOpts& in, const AlgoOpts& algo_opts,
             const std::string& algos_text, std::uint64_t seed) {
  const LossStream stream = resolve_stream(in);
  std::vector<std::string> algos;
  {
    std::size_t start = 0;
    while (start <= algos_text.size()) {
      std::size_t comma = algos_text.find(',', start);
      if (comma == std::string::npos) comma = algos_text.size();
      const std::string field = algos_text.substr(start, comma - start);
      if (!field.empty()) algos.push_back(field);
      start = comma + 1;
      if (start > algos_text.size()) break;
    }
  }

  std::mt19937_64 rng(seed);
  const TransformedStream transformed = affine_transform(stream, rng);
  const double ftl_orig = run(Ftl{}, stream).regret();
  const double ftl_trans = run(Ftl{}, transformed.stream).regret();

  int violations = 0;
  for (const std::string& name : algos) {
    AlgoOpts opts = algo_opts;
    opts.algo = name;
    const LearnerKind kind = make_kind(opts, static_cast<long>(stream.size()));

    const struct {
      const LossStream* stream;
      double ftl;
      const char* tag;
    } runs[] = {{&stream, ftl_orig, "original"},
                {&transformed.stream, ftl_trans, "transformed"}};
    for (const auto& r : runs) {
      const Trace trace = run(kind, *r.stream);
      const auto checks =
          bounds::check_trace(trace, kind, r.stream->front().size(),
                              std::holds_alternative<FlipFlop>(kind)
                                  ? std::optional<double>(r.ftl)
                                  : std::nullopt);
      for (const auto& c : checks) {
        if (!c.satisfied) {
          std::cout << "VIOLATION " << name << " (" << r.tag << "): " << c.name
                    << " observed=" << c.observed << " bound=" << c.value
                    << "\n";
          ++violations;
        }
      }
    }

    const bool scale_invariant = std::holds_alternative<Ftl>(kind) ||
                                 std::holds_alternative<AdaHedge>(kind) ||
                                 std::holds_alternative<FlipFlop>(kind);
    if (scale_invariant) {
      violations +=
          invariance_violations(kind, stream, transformed.stream, name);
    }
    std::cout << "checked " << name << "\n";
  }

  if (violations > 0) {
    std::cout << violations << " violation(s)\n";
    return 3;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hedgekit: Hedge-family sequential prediction, learning-rate sweeps "
      "and regret-bound checking"};
  app.require_subcommand(1);
  int rc = 0;

  // gen
  InputOpts gen_in;
  std::string gen_out = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark loss CSV");
  gen_cmd->add_option("--experiment", gen_in.experiment, "Experiment index")
      ->required()
      ->check(CLI::IsMember({1, 2, 3, 4}));
  gen_cmd->add_option("--rounds", gen_in.rounds, "Number of rounds T")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen_out, "Output path ('-' for stdout)");
  gen_cmd->callback([&] { rc = do_gen(gen_in, gen_out); });

  // run
  InputOpts run_in;
  AlgoOpts run_algo;
  std::string run_trace, run_summary = "-";
  auto* run_cmd =
      app.add_subcommand("run", "Run one learner and report trace + summary");
  add_input_options(run_cmd, run_in);
  add_algo_options(run_cmd, run_algo, true);
  run_cmd->add_option("--trace", run_trace, "Write per-round trace CSV here");
  run_cmd->add_option("--summary", run_summary,
                      "Summary JSON path ('-' for stdout)");
  run_cmd->callback([&] { rc = do_run(run_in, run_algo, run_trace, run_summary); });

  // sweep
  InputOpts sweep_in;
  std::string sweep_grid, sweep_out = "-";
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Regret of fixed-rate Hedge across a grid of learning rates");
  add_input_options(sweep_cmd, sweep_in);
  sweep_cmd->add_option(
      "--grid", sweep_grid,
      "Comma-separated rates, 'inf' allowed (default: 100 log-spaced points "
      "in [1e-3, 1e2] plus inf)");
  sweep_cmd->add_option("--out", sweep_out, "Output path ('-' for stdout)");
  sweep_cmd->callback([&] { rc = do_sweep(sweep_in, sweep_grid, sweep_out); });

  // check
  InputOpts check_in;
  AlgoOpts check_algo;
  std::string check_algos = "ftl,hedge,safehedge,adahedge,flipflop";
  std::string check_trace_path;
  std::uint64_t check_seed = 20260808;
  auto* check_cmd = app.add_subcommand(
      "check",
      "Run learners on a stream and a random affine transform of it; verify "
      "every applicable bound and the weight invariance");
  add_input_options(check_cmd, check_in);
  add_algo_options(check_cmd, check_algo, false);
  check_cmd->add_option("--algos", check_algos, "Comma-separated learner list");
  check_cmd->add_option("--seed", check_seed,
                        "Seed for the random affine transform");
  check_cmd->add_option("--verify-trace", check_trace_path,
                        "Instead: re-check the row invariants of a trace CSV");
  check_cmd->callback([&] {
    rc = check_trace_path.empty()
             ? do_check(check_in, check_algo, check_algos, check_seed)
             : verify_trace_file(check_trace_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const param_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
