// Copyright 2026 The Grasscode Authors
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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grasscode/bounds.hpp"
#include "grasscode/code_io.hpp"
#include "grasscode/density.hpp"
#include "grasscode/designer.hpp"
#include "grasscode/errors.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/moments.hpp"
#include "grasscode/parallel.hpp"
#include "grasscode/pep.hpp"
#include "grasscode/random_stream.hpp"
#include "grasscode/sampling.hpp"

namespace grasscode::cli {
namespace {

using nlohmann::json;

constexpr const char* kSchemaPrefix = "grasscode.";
constexpr const char* kSchemaVersion = "/v1";

std::string schema(const std::string& name) { return kSchemaPrefix + name + kSchemaVersion; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double rho) { return 10.0 * std::log10(rho); }

// JSON has no infinity; infinite values are written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string rational_string(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

std::optional<int> as_integer(double p) {
  if (std::floor(p) != p || std::abs(p) > 1e6) return std::nullopt;
  return static_cast<int>(p);
}

struct Options {
  // Shared.
  int t = 0;
  int m = 0;
  int n = 1;
  std::int64_t k = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  bool repair = false;
  bool db = false;
  std::string code_path;
  std::string out_path;

  // sample
  int count = 0;
  // moments
  std::vector<double> p;
  bool exact = false;
  // pdf / cdf
  int grid = 0;
  std::string method = "auto";
  // invert
  double q = 0.0;
  // gv
  double delta = 0.0;
  // energy-bound / pep / sweep
  double rho = 0.0;
  std::vector<double> rhos;
  std::size_t i = 0;
  std::size_t j = 1;
  std::int64_t trials = 100000;
  // design
  std::string objective = "max-min-product";
  int iterations = 10000;
  int restarts = 1;
  double step_start = 0.5;
  double step_end = 1e-3;
};

void emit(std::ostream& out, const json& payload) { out << payload.dump() << '\n'; }

Code load_code(const Options& o) {
  CodeReadOptions read;
  read.repair = o.repair;
  return read_code_file(o.code_path, read);
}

void check_pair(const Code& code, std::size_t i, std::size_t j) {
  if (i >= code.size() || j >= code.size() || i == j) {
    throw Error(ErrorCode::kInvalidArgument, "--i and --j must be distinct indices below K = " +
                                                 std::to_string(code.size()));
  }
}

void cmd_sample(const Options& o, std::ostream& out) {
  RandomStream rng(o.seed);
  std::vector<GrassmannPoint> points;
  points.reserve(static_cast<std::size_t>(std::max(o.count, 0)));
  for (int s = 0; s < o.count; ++s) points.push_back(sample_uniform(o.t, o.m, rng));
  Code code(std::move(points));
  json payload = {{"schema", schema("sample")}, {"T", o.t}, {"M", o.m}, {"K", code.size()},
                  {"seed", o.seed}, {"min_product", min_pairwise_product(code).value}};
  if (o.out_path.empty()) {
    payload["code"] = json::parse(code_to_json(code));
  } else {
    write_code_file(code, o.out_path);
    payload["out"] = o.out_path;
  }
  emit(out, payload);
}

void cmd_moments(const Options& o, std::ostream& out) {
  json rows = json::array();
  for (double p : o.p) {
    const MomentQuery query{o.t, o.m, p};
    json row = {{"p", p}, {"moment", chordal_moment(query)}, {"log_moment", log_chordal_moment(query)}};
    if (o.exact) {
      const auto ip = as_integer(p);
      row["exact"] = ip ? json(rational_string(exact_chordal_moment(o.t, o.m, *ip))) : json(nullptr);
    }
    rows.push_back(std::move(row));
  }
  json payload = {{"schema", schema("moments")}, {"T", o.t}, {"M", o.m}, {"rows", rows}};
  if (rows.size() == 1) payload["moment"] = rows[0]["moment"];
  emit(out, payload);
}

void cmd_grid(const Options& o, bool cumulative, std::ostream& out) {
  if (o.grid < 1) throw Error(ErrorCode::kInvalidArgument, "--grid must be >= 1");
  check_dimensions(o.t, o.m);
  auto eval = [&](double x) {
    if (o.method == "closed") {
      return cumulative ? cdf_closed_form(o.m, o.t, x) : pdf_closed_form(o.m, o.t, x);
    }
    if (o.method == "general") {
      const PdfModel& model = cached_pdf_model(o.m);
      return cumulative ? model.cdf(o.t, x) : model.pdf(o.t, x);
    }
    return cumulative ? cdf_eval(o.m, o.t, x) : pdf_eval(o.m, o.t, x);
  };
  std::ostringstream csv;
  csv << "x," << (cumulative ? "cdf" : "pdf") << '\n';
  for (int g = 1; g <= o.grid; ++g) {
    const double x = static_cast<double>(g) / o.grid;
    csv << format_number(x) << ',' << format_number(eval(x)) << '\n';
  }
  out << csv.str();
}

void cmd_invert(const Options& o, std::ostream& out) {
  const double x = invert_cdf(o.m, o.t, o.q);
  emit(out, {{"schema", schema("invert")}, {"M", o.m}, {"T", o.t}, {"q", o.q}, {"x", x}});
}

void cmd_gv(const Options& o, const CLI::App& sub, std::ostream& out) {
  json payload = {{"schema", schema("gv")}, {"T", o.t}, {"M", o.m}};
  if (sub.count("--K") > 0) {
    payload["mode"] = "delta";
    payload["K"] = o.k;
    payload["delta"] = gv_min_product(o.t, o.m, o.k);
  } else {
    payload["mode"] = "cardinality";
    payload["delta"] = o.delta;
    payload["K"] = gv_min_cardinality(o.t, o.m, o.delta);
    payload["cdf"] = cdf_eval(o.m, o.t, o.delta);
  }
  emit(out, payload);
}

void cmd_energy_bound(const Options& o, std::ostream& out) {
  const double rho = o.db ? db_to_linear(o.rho) : o.rho;
  const UnionBoundQuery query{o.t, o.m, o.n, o.k, rho};
  query.validate();
  const double energy = expected_random_energy(o.t, o.m, o.n, o.k);
  emit(out, {{"schema", schema("energy_bound")},
             {"T", o.t},
             {"M", o.m},
             {"N", o.n},
             {"K", o.k},
             {"rho", rho},
             {"rho_db", linear_to_db(rho)},
             {"expected_energy", energy},
             {"C", union_bound_constant(o.t, o.m, o.n)},
             {"union_bound", union_bound(query, energy)}});
}

json pep_row(const Code& code, const Options& o, double rho) {
  const ChannelConfig config{code.ambient_dim(), code.subspace_dim(), o.n, rho};
  SimulationOptions sim;
  sim.threads = o.threads;
  const PepEstimate est = estimate_pep(code[o.i], code[o.j], config, o.trials, RandomStream(o.seed), sim);
  const double asym = asymptotic_pep(code[o.i], code[o.j], o.n, rho);
  return {{"rho", rho},
          {"rho_db", linear_to_db(rho)},
          {"trials", est.trials},
          {"errors", est.errors},
          {"p_hat", est.p_hat},
          {"stderr", est.standard_error},
          {"upper_bound_95", est.upper_bound_95},
          {"measurable", est.measurable},
          {"asymptotic", asym},
          {"ratio", est.p_hat / asym}};
}

void cmd_pep(const Options& o, std::ostream& out) {
  const Code code = load_code(o);
  check_pair(code, o.i, o.j);
  json payload = pep_row(code, o, o.db ? db_to_linear(o.rho) : o.rho);
  payload["schema"] = schema("pep");
  payload["i"] = o.i;
  payload["j"] = o.j;
  payload["N"] = o.n;
  payload["seed"] = o.seed;
  payload["chordal_product"] = chordal_product(code[o.i], code[o.j]);
  emit(out, payload);
}

void cmd_sweep(const Options& o, std::ostream& out) {
  const Code code = load_code(o);
  check_pair(code, o.i, o.j);
  std::ostringstream csv;
  csv << "rho,rho_db,trials,errors,p_hat,stderr,asymptotic,ratio\n";
  for (double value : o.rhos) {
    const json row = pep_row(code, o, o.db ? db_to_linear(value) : value);
    csv << format_number(row["rho"]) << ',' << format_number(row["rho_db"]) << ','
        << row["trials"].get<std::int64_t>() << ',' << row["errors"].get<std::int64_t>() << ','
        << format_number(row["p_hat"]) << ',' << format_number(row["stderr"]) << ','
        << format_number(row["asymptotic"]) << ',' << format_number(row["ratio"]) << '\n';
  }
  out << csv.str();
}

void cmd_design(const Options& o, std::ostream& out) {
  DesignRequest request;
  request.ambient_dim = o.t;
  request.subspace_dim = o.m;
  request.cardinality = static_cast<int>(o.k);
  request.objective = parse_objective(o.objective);
  request.energy_order = o.n;
  request.iterations = o.iterations;
  request.restarts = o.restarts;
  request.seed = o.seed;
  request.step_start = o.step_start;
  request.step_end = o.step_end;
  request.threads = o.threads;
  const DesignResult result = optimize_code(request);

  json payload = {{"schema", schema("design")},
                  {"T", o.t},
                  {"M", o.m},
                  {"K", o.k},
                  {"objective", std::string(to_string(request.objective))},
                  {"N", o.n},
                  {"iterations", o.iterations},
                  {"restarts", o.restarts},
                  {"seed", o.seed},
                  {"objective_value", finite_or_null(result.objective_value)},
                  {"min_product", result.min_product},
                  {"energy", finite_or_null(result.energy)},
                  {"gv_delta", gv_min_product(o.t, o.m, o.k)},
                  {"best_restart", result.best_restart},
                  {"accepted_moves", result.accepted_moves}};
  if (o.out_path.empty()) {
    payload["code"] = json::parse(code_to_json(result.code));
  } else {
    write_code_file(result.code, o.out_path);
    payload["out"] = o.out_path;
  }
  emit(out, payload);
}

void cmd_energy(const Options& o, std::ostream& out) {
  const Code code = load_code(o);
  const EnergyResult energy = code_energy(code, o.n);
  const PairwiseMinimum min = min_pairwise_product(code);
  json payload = {{"schema", schema("energy")},
                  {"T", code.ambient_dim()},
                  {"M", code.subspace_dim()},
                  {"K", code.size()},
                  {"N", o.n},
                  {"energy", finite_or_null(energy.value)},
                  {"finite", energy.finite()},
                  {"singular_pair", nullptr},
                  {"min_product", min.value},
                  {"argmin", {min.i, min.j}}};
  if (energy.singular_pair) {
    payload["singular_pair"] = {energy.singular_pair->first, energy.singular_pair->second};
  }
  emit(out, payload);
}

void write_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"schema", schema("error")}, {"error", {{"code", code}, {"message", message}}}}.dump()
      << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chordal-product statistics, bounds and simulation on complex Grassmannians",
               "grasscode"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options o;
  o.threads = default_thread_count();

  auto dims = [&](CLI::App* sub) {
    sub->add_option("--T", o.t, "Ambient dimension T")->required();
    sub->add_option("--M", o.m, "Subspace dimension M")->required();
  };
  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (default: $GRASSCODE_THREADS)");
  };
  auto code_input = [&](CLI::App* sub) {
    sub->add_option("--code", o.code_path, "Code file (JSON)")->required();
    sub->add_flag("--repair", o.repair, "Orthonormalize points instead of rejecting them");
  };

  CLI::App* sample = app.add_subcommand("sample", "Draw uniform points of Gr(M, C^T)");
  dims(sample);
  sample->add_option("--count", o.count, "Number of points")->required();
  sample->add_option("--seed", o.seed, "RNG seed");
  sample->add_option("--out", o.out_path, "Write the code file here");

  CLI::App* moments = app.add_subcommand("moments", "Exact moments of the chordal product");
  dims(moments);
  moments->add_option("--p", o.p, "Moment order (repeatable)")->required()->take_all();
  moments->add_flag("--exact", o.exact, "Add exact rationals for integer orders");

  CLI::App* pdf = app.add_subcommand("pdf", "Density of the chordal product on a grid (CSV)");
  CLI::App* cdf = app.add_subcommand("cdf", "Distribution function on a grid (CSV)");
  for (CLI::App* sub : {pdf, cdf}) {
    dims(sub);
    sub->add_option("--grid", o.grid, "Grid points x = i/n, i = 1..n")->required();
    sub->add_option("--method", o.method, "auto | closed | general")
        ->check(CLI::IsMember({"auto", "closed", "general"}));
  }

  CLI::App* invert = app.add_subcommand("invert", "Invert the distribution function");
  dims(invert);
  invert->add_option("--q", o.q, "Probability level in (0, 1]")->required();

  CLI::App* gv = app.add_subcommand("gv", "Gilbert-Varshamov bound");
  dims(gv);
  CLI::Option* gv_k = gv->add_option("--K", o.k, "Code size: report the guaranteed delta");
  CLI::Option* gv_delta = gv->add_option("--delta", o.delta, "Min product: report the guaranteed K");
  gv_k->excludes(gv_delta);

  CLI::App* bound = app.add_subcommand("energy-bound", "Random-code energy and union bound");
  dims(bound);
  bound->add_option("--N", o.n, "Receive antennas / energy parameter")->required();
  bound->add_option("--K", o.k, "Code size")->required();
  bound->add_option("--rho", o.rho, "SNR (linear unless --db)")->required();
  bound->add_flag("--db", o.db, "Interpret --rho in decibels");

  CLI::App* pep = app.add_subcommand("pep", "Simulate a pairwise error probability");
  CLI::App* sweep = app.add_subcommand("sweep", "Pairwise error probability over an SNR grid (CSV)");
  for (CLI::App* sub : {pep, sweep}) {
    code_input(sub);
    sub->add_option("--i", o.i, "Transmitted codeword index")->required();
    sub->add_option("--j", o.j, "Competing codeword index")->required();
    sub->add_option("--N", o.n, "Receive antennas");
    sub->add_option("--trials", o.trials, "Monte-Carlo trials");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_flag("--db", o.db, "Interpret SNR values in decibels");
    threads(sub);
  }
  pep->add_option("--rho", o.rho, "SNR")->required();
  sweep->add_option("--rho", o.rhos, "SNR grid (repeatable)")->required()->take_all();

  CLI::App* design = app.add_subcommand("design", "Search for a well-separated code");
  dims(design);
  design->add_option("--K", o.k, "Code size")->required();
  design->add_option("--objective", o.objective, "max-min-product | min-energy")
      ->check(CLI::IsMember({"max-min-product", "min-energy"}));
  design->add_option("--N", o.n, "Energy parameter");
  design->add_option("--iters", o.iterations, "Iterations per restart");
  design->add_option("--restarts", o.restarts, "Independent restarts");
  design->add_option("--seed", o.seed, "RNG seed");
  design->add_option("--step-start", o.step_start, "Initial perturbation size");
  design->add_option("--step-end", o.step_end, "Final perturbation size");
  design->add_option("--out", o.out_path, "Write the code file here");
  threads(design);

  CLI::App* energy = app.add_subcommand("energy", "Energy and minimum product of a code file");
  code_input(energy);
  energy->add_option("--N", o.n, "Energy parameter");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }
  if (gv->parsed() && gv->count("--K") + gv->count("--delta") != 1) {
    err << "error: gv needs exactly one of --K or --delta\n\n" << gv->help();
    return kExitUsage;
  }

  try {
    if (sample->parsed()) cmd_sample(o, out);
    else if (moments->parsed()) cmd_moments(o, out);
    else if (pdf->parsed()) cmd_grid(o, false, out);
    else if (cdf->parsed()) cmd_grid(o, true, out);
    else if (invert->parsed()) cmd_invert(o, out);
    else if (gv->parsed()) cmd_gv(o, *gv, out);
    else if (bound->parsed()) cmd_energy_bound(o, out);
    else if (pep->parsed()) cmd_pep(o, out);
    else if (sweep->parsed()) cmd_sweep(o, out);
    else if (design->parsed()) cmd_design(o, out);
    else if (energy->parsed()) cmd_energy(o, out);
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.code())), e.what());
    return kExitDomainError;
  } catch (const std::exception& e) {
    write_error(err, "Internal", e.what());
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace grasscode::cli
