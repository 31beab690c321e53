// Copyright 2026 The weur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "format.hpp"
#include "json.hpp"
#include "parallel.hpp"
#include "scenario.hpp"
#include "weur/bounds.hpp"
#include "weur/ensembles.hpp"
#include "weur/rng.hpp"
#include "weur/steering.hpp"
#include "weur/viewop.hpp"

namespace weur::cli {
namespace {

using nlohmann::json;

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
};

std::string join_alphas(const std::vector<std::string>& parts) {
  std::string all;
  for (const auto& p : parts) {
    if (!all.empty()) all += ',';
    all += p;
  }
  return all;
}

void check_entropy_orders(const std::vector<RenyiOrder>& alphas) {
  for (const auto& a : alphas) {
    if (!a.is_infinite() && !a.is_shannon() && a.value() < 2.0) {
      throw ValidationError("alpha " + a.label() + " has no bound; use 1, >= 2 or inf");
    }
  }
}

json report_to_json(const BoundReport& r) {
  json j;
  j["dimension"] = r.dim;
  j["outcomes"] = r.outcomes;
  j["theta"] = r.theta;
  j["weights"] = r.weights;
  j["state_independent"] = r.state_independent;
  j["i_com"] = r.i_com;
  j["s_rho"] = r.s_rho;
  j["view"] = {{"g_norm", r.view.g_avg_norm},
               {"G_tot_norm", r.view.g_tot_norm},
               {"X_tot", r.view.exclusivity},
               {"g_spectrum", r.view.g_avg_spectrum},
               {"G_tot_spectrum", r.view.g_tot_spectrum}};

  json avg = json::object();
  avg["q_alpha"] = r.q_alpha;
  if (r.q_1) avg["q_1"] = *r.q_1;
  if (!r.b_alpha.empty()) avg["B_alpha"] = r.b_alpha;
  j["average_form"] = std::move(avg);

  json sum = json::object();
  if (r.q_s) sum["q_S"] = *r.q_s;
  if (r.q_s_qubit) sum["q_S_qubit"] = *r.q_s_qubit;
  if (!r.q_mu.empty()) {
    json mu = json::array();
    for (const auto& p : r.q_mu) mu.push_back({{"first", p.first}, {"second", p.second}, {"value", p.value}});
    sum["q_MU"] = std::move(mu);
  }
  if (r.q_lmf) sum["q_LMF"] = *r.q_lmf;
  if (r.q_lmf_best_order) sum["q_LMF_best_order"] = *r.q_lmf_best_order;
  if (r.q_scb) sum["q_SCB"] = *r.q_scb;
  j["sum_form"] = std::move(sum);
  return j;
}

void report_to_csv(const BoundReport& r, std::ostream& os) {
  os << "# weur bound v1: average-form q_alpha/q_1/B_alpha, sum-form q_S/q_MU/q_LMF/q_SCB\n";
  os << "quantity,value\n";
  auto row = [&](const std::string& k, double v) { os << k << ',' << format_real(v) << '\n'; };
  row("dimension", r.dim);
  row("outcomes", r.outcomes);
  row("theta", r.theta);
  for (std::size_t t = 0; t < r.weights.size(); ++t) row("w_" + std::to_string(t), r.weights[t]);
  row("state_independent", r.state_independent ? 1 : 0);
  row("i_com", r.i_com);
  row("s_rho", r.s_rho);
  row("g_norm", r.view.g_avg_norm);
  row("G_tot_norm", r.view.g_tot_norm);
  row("X_tot", r.view.exclusivity);
  for (const auto& [k, v] : r.q_alpha) row("q_" + k, v);
  if (r.q_1) row("q_1", *r.q_1);
  if (r.q_s) row("q_S", *r.q_s);
  if (r.q_s_qubit) row("q_S_qubit", *r.q_s_qubit);
  for (const auto& p : r.q_mu) {
    row("q_MU_" + std::to_string(p.first) + "_" + std::to_string(p.second), p.value);
  }
  if (r.q_lmf) row("q_LMF", *r.q_lmf);
  if (r.q_lmf_best_order) row("q_LMF_best_order", *r.q_lmf_best_order);
  if (r.q_scb) row("q_SCB", *r.q_scb);
  for (const auto& [k, v] : r.b_alpha) row("B_" + k, v);
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string scenario;
  std::vector<std::string> alphas{"2"};
  bool state_independent = false;
  bool optimal = false;
  int restarts = 64;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  bool csv = false;
  bool json_out = false;
  std::string out;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const Scenario sc = build_scenario(read_scenario_file(a.scenario));
  BoundRequest req;
  req.alphas = parse_alphas(join_alphas(a.alphas));
  check_entropy_orders(req.alphas);
  req.state = sc.state;
  req.state_independent = a.state_independent;
  req.optimal = a.optimal;
  req.optimizer.restarts = a.restarts;
  req.optimizer.seed = a.seed.value_or(default_seed());
  req.optimizer.threads = a.threads;
  const BoundReport report = compute_bound_report(sc.ensemble, req);

  Sink sink(a.out, out);
  if (a.csv) {
    report_to_csv(report, sink.stream());
  } else {
    sink.stream() << report_to_json(report).dump(2) << '\n';
  }
  return kExitOk;
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string scenario;
  std::string emit;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const RawScenario raw = read_scenario_file(a.scenario);
  const EnsembleDiagnostics diag = diagnose(raw);
  json rep;
  rep["ok"] = diag.ok();
  json failures = json::array();
  for (const auto& f : diag.failures) {
    failures.push_back({{"code", f.code}, {"message", f.message}, {"povm", f.povm}, {"effect", f.effect}});
  }
  rep["failures"] = std::move(failures);
  rep["equal_trace"] = diag.equal_trace;

  const bool emit_to_stdout = a.emit == "-";
  (emit_to_stdout ? err : out) << rep.dump() << '\n';
  if (!diag.ok()) return kExitValidation;
  if (!a.emit.empty()) {
    Sink sink(a.emit, out);
    sink.stream() << scenario_to_json(build_scenario(raw)).dump(2) << '\n';
  }
  return kExitOk;
}

// --- sweep-random ----------------------------------------------------------

struct SweepRandomArgs {
  int d = 2;
  int count = 3;
  int trials = 100;
  std::string alphas = "1,2";
  std::optional<std::uint64_t> seed;
  int restarts = 64;
  unsigned threads = 0;
  std::string out;
};

int cmd_sweep_random(const SweepRandomArgs& a, std::ostream& out) {
  const auto alphas = parse_alphas(a.alphas);
  check_entropy_orders(alphas);
  const std::uint64_t seed = a.seed.value_or(default_seed());

  std::ostringstream head;
  head << "# weur sweep-random v1: d=" << a.d << " count=" << a.count << " trials=" << a.trials
       << " seed=" << seed << " restarts=" << a.restarts
       << "; state-independent bounds in sum form (Theta x average)\n";
  head << "trial,seed,X_tot,g_norm";
  for (const auto& al : alphas) head << ",q_" << al.label();
  head << ",q_S,q_LMF,q_SCB";
  for (const auto& al : alphas) head << ",B_" << al.label();
  head << '\n';

  const double theta = a.count;
  const double i_com = state_independent_icom(a.d);
  std::vector<std::string> rows(static_cast<std::size_t>(a.trials));
  parallel_for(rows.size(), a.threads, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    const WeightedEnsemble e = haar_random_bases(a.d, a.count, trial_seed);
    const ViewReport v = view_report(e);
    std::ostringstream row;
    row << t << ',' << trial_seed << ',' << format_real(v.exclusivity) << ','
        << format_real(v.g_avg_norm);
    for (const auto& al : alphas) {
      const double q = al.is_shannon() ? q_one_from_view(a.d, v.g_avg_norm, i_com)
                                       : q_alpha_from_view(a.d, v.g_avg_norm, i_com, al);
      row << ',' << format_real(theta * q);
    }
    row << ',' << format_real(q_s_from_view(a.count, a.d, v.g_tot_norm, i_com));
    row << ',' << format_real(bound_q_lmf(e.povms(), 0.0));
    row << ',' << format_real(bound_q_scb(e.povms(), 0.0));
    OptimizerOptions opt;
    opt.restarts = a.restarts;
    opt.seed = derive_seed(trial_seed, 1);
    opt.threads = 1;
    for (const auto& al : alphas) {
      row << ',' << format_real(theta * numerical_optimal_bound(e, al, opt).value);
    }
    rows[t] = row.str();
  });

  Sink sink(a.out, out);
  sink.stream() << head.str();
  for (const auto& r : rows) sink.stream() << r << '\n';
  return kExitOk;
}

// --- sweep-qutrit ----------------------------------------------------------

struct SweepQutritArgs {
  std::string grid = "0:pi/4:9";
  std::string phase = "repeated";
  std::string out;
};

int cmd_sweep_qutrit(const SweepQutritArgs& a, std::ostream& out) {
  const auto betas = parse_grid(a.grid);
  for (double b : betas) {
    if (!(b >= -1e-12 && b <= std::numbers::pi / 4 + 1e-12)) {
      throw ValidationError("beta grid value " + format_real(b) + " outside [0, pi/4]");
    }
  }
  const QutritPhase phase = a.phase == "linear" ? QutritPhase::kLinear : QutritPhase::kRepeated;
  std::ostringstream body;
  body << "# weur sweep-qutrit v1: phase=" << a.phase
       << "; state-independent sum-form bounds for four qutrit bases\n";
  body << "beta,X_tot,q_S,q_SCB\n";
  const double i_com = state_independent_icom(3);
  for (double b : betas) {
    const WeightedEnsemble e = qutrit_four_bases(std::clamp(b, 0.0, std::numbers::pi / 4), phase);
    body << format_real(b) << ',' << format_real(exclusivity(e.povms())) << ','
         << format_real(bound_q_s(e.povms(), i_com)) << ','
         << format_real(bound_q_scb(e.povms(), 0.0)) << '\n';
  }
  Sink sink(a.out, out);
  sink.stream() << body.str();
  return kExitOk;
}

// --- steering --------------------------------------------------------------

struct SteeringArgs {
  std::string beta1 = "0";
  std::string beta2 = "0";
  std::string alpha = "inf";
  bool optimize = false;
  double tol = 1e-4;
  int restarts = 32;
  std::optional<std::uint64_t> seed;
  std::string placement = "alice";
  unsigned threads = 0;
  std::string out;
};

std::string format_eta(const std::optional<double>& eta) {
  return eta ? format_real(*eta) : std::string("none");
}

int cmd_steering(const SteeringArgs& a, std::ostream& out) {
  const auto b1 = parse_grid(a.beta1);
  const auto b2 = parse_grid(a.beta2);
  const RenyiOrder alpha = RenyiOrder::parse(a.alpha);
  check_entropy_orders({alpha});
  if (!(a.tol > 0.0 && a.tol <= 1e-4)) throw ValidationError("--tol must lie in (0, 1e-4]");
  if (a.restarts < 1) throw ValidationError("--restarts must be >= 1");
  const NoisePlacement placement =
      a.placement == "bob-literal" ? NoisePlacement::kBobLiteral : NoisePlacement::kAlice;
  const std::uint64_t seed = a.seed.value_or(default_seed());

  std::vector<std::pair<double, double>> points;
  for (double x : b1) {
    for (double y : b2) points.emplace_back(x, y);
  }
  struct Row {
    std::string text;
    bool failed = false;
  };
  std::vector<Row> rows(points.size());
  parallel_for(points.size(), a.threads, [&](std::size_t i) {
    const auto [x, y] = points[i];
    std::ostringstream row;
    row << format_real(x) << ',' << format_real(y) << ',';
    try {
      const WeightedEnsemble fam = qubit_family(x, y);
      const auto& obs = fam.povms();
      std::string status = "ok";
      if (a.optimize) {
        WeightSearchOptions opts;
        opts.restarts = a.restarts;
        opts.seed = derive_seed(seed, i);
        opts.tol = a.tol;
        opts.placement = placement;
        const WeightOptimum w = optimize_weights(obs, alpha, opts);
        if (!w.eta_equal) status = "no_threshold";
        row << format_eta(w.eta_equal) << ',' << format_eta(w.eta_opt);
        for (double wt : w.weights) row << ',' << format_real(wt);
      } else {
        const std::vector<double> equal(obs.size(), 1.0 / static_cast<double>(obs.size()));
        const auto eta = noise_threshold(obs, equal, alpha, {a.tol, placement, 50});
        if (!eta) status = "no_threshold";
        row << format_eta(eta) << ",,,,";
      }
      row << ',' << status;
    } catch (const NumericalError& e) {
      row << ",,,,," << csv_safe(std::string("numerical_error: ") + e.what());
      rows[i].failed = true;
    }
    rows[i].text = row.str();
  });

  Sink sink(a.out, out);
  auto& os = sink.stream();
  os << "# weur steering v1: alpha=" << alpha.label() << " tol=" << format_real(a.tol)
     << " placement=" << a.placement << " optimize=" << (a.optimize ? 1 : 0)
     << " restarts=" << a.restarts << " seed=" << seed << "\n";
  os << "beta1,beta2,eta_equ,eta_opt,w_1,w_2,w_3,status\n";
  bool any_failed = false;
  for (const auto& r : rows) {
    os << r.text << '\n';
    any_failed = any_failed || r.failed;
  }
  return any_failed ? kExitNumerical : kExitOk;
}

void print_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kFallbackSeed;
  std::string_view s(env);
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted entropic uncertainty bounds and steering thresholds", "weur"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* sb = app.add_subcommand("bound", "Compute every applicable bound for a scenario file");
  sb->add_option("scenario", bound.scenario, "Scenario JSON file, or - for stdin")->required();
  sb->add_option("--alpha", bound.alphas, "Renyi orders (repeatable or comma separated; 1, >=2, inf)");
  sb->add_flag("--state-independent", bound.state_independent, "Ignore the scenario state");
  sb->add_flag("--optimal", bound.optimal, "Also compute numerical optimal bounds B_alpha");
  sb->add_option("--restarts", bound.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  sb->add_option("--seed", bound.seed, "Optimizer seed (default from WEUR_SEED)");
  sb->add_option("--threads", bound.threads, "Optimizer threads (0 = all cores)");
  auto* csv = sb->add_flag("--csv", bound.csv, "Emit CSV");
  auto* js = sb->add_flag("--json", bound.json_out, "Emit JSON (default)");
  csv->excludes(js);
  sb->add_option("--out", bound.out, "Output file (default stdout)");

  ValidateArgs validate;
  auto* sv = app.add_subcommand("validate", "Check a scenario file and optionally emit its normal form");
  sv->add_option("scenario", validate.scenario, "Scenario JSON file, or - for stdin")->required();
  sv->add_option("--emit", validate.emit, "Write the normalized scenario here (- for stdout)");

  SweepRandomArgs random;
  auto* sr = app.add_subcommand("sweep-random", "Bounds for Haar-random basis sets, one CSV row per trial");
  sr->add_option("--d", random.d, "Dimension")->check(CLI::Range(2, kMaxDimension));
  sr->add_option("--count", random.count, "Bases per set")->check(CLI::Range(2, 64));
  sr->add_option("--trials", random.trials, "Number of random sets")->check(CLI::NonNegativeNumber);
  sr->add_option("--alphas", random.alphas, "Comma separated Renyi orders");
  sr->add_option("--seed", random.seed, "Master seed (default from WEUR_SEED)");
  sr->add_option("--restarts", random.restarts, "Optimizer restarts for B_alpha")->check(CLI::PositiveNumber);
  sr->add_option("--threads", random.threads, "Worker threads (0 = all cores)");
  sr->add_option("--out", random.out, "Output CSV (default stdout)");

  SweepQutritArgs qutrit;
  auto* sq = app.add_subcommand("sweep-qutrit", "q_S and q_SCB along the four-basis qutrit family");
  sq->add_option("--beta-grid", qutrit.grid, "start:stop:count or comma list within [0, pi/4]");
  sq->add_option("--phase", qutrit.phase, "Phase matrix variant")
      ->check(CLI::IsMember({"repeated", "linear"}));
  sq->add_option("--out", qutrit.out, "Output CSV (default stdout)");

  SteeringArgs steer;
  auto* ss = app.add_subcommand("steering", "Noise thresholds of the steering criterion over a qubit family");
  ss->add_option("--beta1", steer.beta1, "beta1 grid (start:stop:count or list)");
  ss->add_option("--beta2", steer.beta2, "beta2 grid (start:stop:count or list)");
  ss->add_option("--alpha", steer.alpha, "Renyi order (1, >=2, inf)");
  ss->add_flag("--optimize-weights", steer.optimize, "Also minimize the threshold over the weights");
  ss->add_option("--tol", steer.tol, "Bisection tolerance in eta, at most 1e-4");
  ss->add_option("--restarts", steer.restarts, "Weight-search starts");
  ss->add_option("--seed", steer.seed, "Weight-search seed (default from WEUR_SEED)");
  ss->add_option("--placement", steer.placement, "Which side holds the noisy measurements")
      ->check(CLI::IsMember({"alice", "bob-literal"}));
  ss->add_option("--threads", steer.threads, "Worker threads (0 = all cores)");
  ss->add_option("--out", steer.out, "Output CSV (default stdout)");

  std::vector<const char*> argv{"weur"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    if (code == 0) return kExitOk;
    print_error(err, "usage", e.what());
    return kExitValidation;
  }

  try {
    if (sb->parsed()) return cmd_bound(bound, out);
    if (sv->parsed()) return cmd_validate(validate, out, err);
    if (sr->parsed()) return cmd_sweep_random(random, out);
    if (sq->parsed()) return cmd_sweep_qutrit(qutrit, out);
    if (ss->parsed()) return cmd_steering(steer, out);
  } catch (const ValidationError& e) {
    print_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const NumericalError& e) {
    print_error(err, "numerical", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace weur::cli
