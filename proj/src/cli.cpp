// Copyright 2026 The quadqaoa Authors
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

#include "quadqaoa/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadqaoa/errors.hpp"
#include "quadqaoa/metrics.hpp"
#include "quadqaoa/pipeline.hpp"
#include "quadqaoa/quadratizer.hpp"
#include "quadqaoa/resources.hpp"

namespace quadqaoa {

namespace fs = std::filesystem;

Json to_json(const ExperimentConfig& c) {
  return {
      {"problem",
       {{"builder", c.problem.builder},
        {"n", c.problem.n},
        {"degree", c.problem.degree},
        {"coefficients", c.problem.coefficients},
        {"value", c.problem.value},
        {"path", c.problem.path},
        {"seed", c.problem.seed}}},
      {"ansatz", {{"kind", c.ansatz}, {"p", c.p}, {"k", c.k}}},
      {"backend", {{"kind", c.backend}, {"chi", c.chi}}},
      {"noise",
       {{"lambda", c.lambda},
        {"trajectories", c.trajectories},
        {"shots_per_trajectory", c.shots_per_trajectory}}},
      {"sampling", {{"shots", c.shots}}},
      {"train",
       {{"grid", c.grid},
        {"maxiter", c.maxiter},
        {"rhobeg", c.rhobeg},
        {"rhoend", c.rhoend},
        {"joint_maxiter", c.joint_maxiter},
        {"joint_rhobeg", c.joint_rhobeg},
        {"restarts", c.restarts},
        {"mapping_iterations", c.mapping_iterations},
        {"mapping_restarts", c.mapping_restarts}}},
      {"metrics", {{"alphas", c.alphas}}},
      {"sweep", {{"k_max", c.sweep_k_max}, {"lambda", c.sweep_lambda}}},
      {"seed", c.seed},
      {"out", c.out},
  };
}

namespace {

template <class T>
void take(const Json& section, const char* key, T& field) {
  if (!section.contains(key)) return;
  try {
    field = section.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config field '") + key + "': " + e.what());
  }
}

void check_keys(const Json& j, const Json& reference, const std::string& where) {
  if (!j.is_object()) throw FormatError("config section '" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!reference.contains(key)) throw FormatError("unknown config key '" + where + key + "'");
    if (reference[key].is_object()) check_keys(value, reference[key], where + key + ".");
  }
}

}  // namespace

void apply_overrides(ExperimentConfig& c, const Json& j) {
  check_keys(j, to_json(c), "");
  const Json empty = Json::object();
  auto section = [&](const char* name) -> const Json& {
    return j.contains(name) ? j.at(name) : empty;
  };
  const Json& problem = section("problem");
  take(problem, "builder", c.problem.builder);
  take(problem, "n", c.problem.n);
  take(problem, "degree", c.problem.degree);
  take(problem, "coefficients", c.problem.coefficients);
  take(problem, "value", c.problem.value);
  take(problem, "path", c.problem.path);
  take(problem, "seed", c.problem.seed);
  const Json& ansatz = section("ansatz");
  take(ansatz, "kind", c.ansatz);
  take(ansatz, "p", c.p);
  take(ansatz, "k", c.k);
  const Json& backend = section("backend");
  take(backend, "kind", c.backend);
  take(backend, "chi", c.chi);
  const Json& noise = section("noise");
  take(noise, "lambda", c.lambda);
  take(noise, "trajectories", c.trajectories);
  take(noise, "shots_per_trajectory", c.shots_per_trajectory);
  take(section("sampling"), "shots", c.shots);
  const Json& train = section("train");
  take(train, "grid", c.grid);
  take(train, "maxiter", c.maxiter);
  take(train, "rhobeg", c.rhobeg);
  take(train, "rhoend", c.rhoend);
  take(train, "joint_maxiter", c.joint_maxiter);
  take(train, "joint_rhobeg", c.joint_rhobeg);
  take(train, "restarts", c.restarts);
  take(train, "mapping_iterations", c.mapping_iterations);
  take(train, "mapping_restarts", c.mapping_restarts);
  take(section("metrics"), "alphas", c.alphas);
  const Json& sweep = section("sweep");
  take(sweep, "k_max", c.sweep_k_max);
  take(sweep, "lambda", c.sweep_lambda);
  take(j, "seed", c.seed);
  take(j, "out", c.out);
}

std::string config_hash(const ExperimentConfig& c) {
  // The output location does not change the experiment.
  Json j = to_json(c);
  j.erase("out");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

BuiltProblem build_problem(const ProblemSpec& spec) {
  const auto coefficients = [&] {
    if (spec.coefficients == "constant") return CoefficientSource::constant(spec.value);
    if (spec.coefficients == "uniform") return CoefficientSource::uniform(spec.seed);
    throw FormatError("coefficients must be 'constant' or 'uniform'");
  };
  if (spec.builder == "labs") return {build_labs(spec.n), std::nullopt};
  if (spec.builder == "h4full") return {build_h4_full(spec.n, coefficients()), std::nullopt};
  if (spec.builder == "h2full") return {build_qubo_full(spec.n, coefficients()), std::nullopt};
  if (spec.builder == "maxcut") {
    Graph g = spec.path.empty() ? random_regular_graph(spec.n, spec.degree, spec.seed)
                                : graph_from_json(read_json(spec.path));
    ZPolynomial h = build_maxcut(g);
    return {std::move(h), std::move(g)};
  }
  if (spec.builder == "file") {
    const Json j = read_json(spec.path);
    BuiltProblem b{polynomial_from_json(j), std::nullopt};
    if (j.contains("graph")) b.graph = graph_from_json(j["graph"]);
    return b;
  }
  throw FormatError("unknown problem builder '" + spec.builder + "'");
}

fs::path default_output_root() {
  if (const char* env = std::getenv("QUADQAOA_OUT"); env && *env) return env;
  return "quadqaoa_out";
}

namespace {

const char* kVersion = "0.1.0";

struct Context {
  ExperimentConfig config;
  std::string config_file;
  std::ostream& out;
  std::ostream& err;

  // Flags first, then the JSON config file on top.
  void finalize() {
    if (!config_file.empty()) apply_overrides(config, read_json(config_file));
  }
  fs::path output_dir() const { return config.out.empty() ? default_output_root() : fs::path(config.out); }
};

Json stamped(const std::string& hash, const Json& body) {
  Json j = {{"config_hash", hash}};
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::string stamped_csv(const std::string& hash, const std::string& csv) {
  return "# config_hash=" + hash + "\n" + csv;
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

void write_metadata(const fs::path& dir, const std::string& command, const std::string& hash) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  write_json(dir / "metadata.json", {{"command", command},
                                     {"config_hash", hash},
                                     {"version", kVersion},
                                     {"timestamp", ts.str()}});
}

std::string describe_terms(const ZPolynomial& h) {
  static const char* names[] = {"constant", "linear", "quadratic", "cubic", "quartic"};
  std::ostringstream s;
  bool first = true;
  for (int d = h.degree(); d >= 1; --d) {
    const auto count = h.count_terms_of_degree(d);
    if (count == 0) continue;
    if (!first) s << ", ";
    s << count << ' ' << (d <= 4 ? names[d] : ("degree-" + std::to_string(d)).c_str());
    first = false;
  }
  if (first) s << "no terms";
  return s.str();
}

Json problem_json(const BuiltProblem& b) {
  Json j = to_json(b.h);
  if (b.graph) j["graph"] = to_json(*b.graph);
  return j;
}

TrainConfig train_config(const ExperimentConfig& c) {
  TrainConfig t;
  t.grid_points = c.grid;
  t.refiner.max_evaluations = c.maxiter;
  t.refiner.rho_begin = c.rhobeg;
  t.refiner.rho_end = c.rhoend;
  t.joint_max_evaluations = c.joint_maxiter;
  t.joint_rho_begin = c.joint_rhobeg;
  t.random_restarts = c.restarts;
  t.seed = c.seed;
  t.backend = backend_from_string(c.backend);
  t.bond_dimension = c.chi;
  return t;
}

AnsatzOptions ansatz_options(const ExperimentConfig& c) {
  AnsatzOptions a;
  a.kind = ansatz_kind_from_string(c.ansatz);
  a.p = c.p;
  a.k = c.k;
  a.mapping.seed = c.seed;
  a.mapping.iterations = c.mapping_iterations;
  a.mapping.restarts = c.mapping_restarts;
  return a;
}

Json to_json(const TrainedAnsatz& a) {
  return {{"ansatz", to_string(a.kind)},
          {"k", a.k},
          {"initial_mapping", a.initial_mapping},
          {"result", to_json(a.result)}};
}

TrainedAnsatz trained_from_json(const Json& j) {
  TrainedAnsatz a;
  a.kind = ansatz_kind_from_string(j.at("ansatz").get<std::string>());
  a.k = j.at("k").get<int>();
  a.initial_mapping = j.at("initial_mapping").get<std::vector<int>>();
  a.result = train_result_from_json(j.at("result"));
  return a;
}

SamplingOptions sampling_options(const ExperimentConfig& c, double lambda) {
  SamplingOptions s;
  s.shots = c.shots;
  s.seed = c.seed;
  s.backend = backend_from_string(c.backend);
  s.bond_dimension = c.chi;
  s.noise.lambda = lambda;
  s.noise.trajectories = c.trajectories;
  s.noise.shots_per_trajectory = c.shots_per_trajectory;
  s.noise.seed = c.seed;
  return s;
}

struct SpectrumReport {
  Spectrum spectrum;
  std::optional<double> e_min_bound;
};

SpectrumReport spectrum_for(const BuiltProblem& b, std::uint64_t seed) {
  SpectrumReport r{problem_spectrum(b.h, seed), std::nullopt};
  if (b.graph && !r.spectrum.exact) {
    double w = 0.0;
    for (const auto& e : b.graph->edges) w += e.weight;
    // Best cut from local search; its energy (W - 2 cut) / 4.
    const Bitstring x = maxcut_local_search(*b.graph, 200, seed);
    r.spectrum.e_min = std::min(r.spectrum.e_min, (w - 2.0 * maxcut_objective(*b.graph, x)) / 4.0);
    r.spectrum.e_max = w / 4.0;
    r.e_min_bound = (w - 2.0 * maxcut_spectral_upper_bound(*b.graph)) / 4.0;
  }
  return r;
}

Json spectrum_json(const SpectrumReport& r) {
  Json j = {{"e_min", r.spectrum.e_min}, {"e_max", r.spectrum.e_max}, {"exact", r.spectrum.exact}};
  if (r.e_min_bound) j["e_min_lower_bound"] = *r.e_min_bound;
  return j;
}

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

// Metrics rows keyed by (instance, ansatz, k, p, lambda, alpha).
struct MetricsTable {
  Json rows = Json::array();
  std::string csv =
      "instance,ansatz,k,p,lambda,alpha,mean_energy,best_fraction_mean,cvar_ratio,mean_ratio\n";

  void add(const std::string& instance, const std::string& ansatz, int k, int p, double lambda,
           const SampleSet& s, const std::vector<double>& alphas, const Spectrum& sp) {
    const double mean = s.mean_energy();
    const double mean_r = approximation_ratio(mean, sp.e_min, sp.e_max);
    for (double a : alphas) {
      const double bfm = best_fraction_mean(s, a);
      const double cr = cvar_ratio(s, a, sp.e_min, sp.e_max);
      rows.push_back({{"instance", instance}, {"ansatz", ansatz}, {"k", k}, {"p", p},
                      {"lambda", lambda}, {"alpha", a}, {"mean_energy", mean},
                      {"best_fraction_mean", bfm}, {"cvar_ratio", cr}, {"mean_ratio", mean_r}});
      csv += instance + "," + ansatz + "," + std::to_string(k) + "," + std::to_string(p) + "," +
             format_double(lambda) + "," + format_double(a) + "," + format_double(mean) + "," +
             format_double(bfm) + "," + format_double(cr) + "," + format_double(mean_r) + "\n";
    }
  }
};

std::string cdf_csv(const SampleSet& s) {
  std::string csv = "energy,cumulative\n";
  for (const auto& pt : energy_cdf(s))
    csv += format_double(pt.energy) + "," + format_double(pt.cumulative) + "\n";
  return csv;
}

void add_problem_flags(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--n", c.problem.n, "Number of variables");
  cmd->add_option("--degree", c.problem.degree, "Regular graph degree for maxcut");
  cmd->add_option("--coefficients", c.problem.coefficients, "constant | uniform");
  cmd->add_option("--value", c.problem.value, "Coefficient for constant sources");
  cmd->add_option("--problem-seed", c.problem.seed, "Seed of random instances");
}

void add_train_flags(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--ansatz", c.ansatz, "standard | clique | variational | truncated");
  cmd->add_option("--p", c.p, "QAOA depth");
  cmd->add_option("--k", c.k, "SWAP layers of the truncated Ansatz (-1: all needed)");
  cmd->add_option("--backend", c.backend, "statevector | mps");
  cmd->add_option("--chi", c.chi, "MPS bond dimension");
  cmd->add_option("--grid", c.grid, "Grid points per axis for depth one");
  cmd->add_option("--maxiter", c.maxiter, "Evaluation budget per refinement");
  cmd->add_option("--rhobeg", c.rhobeg, "Initial trust-region radius");
  cmd->add_option("--rhoend", c.rhoend, "Final trust-region radius");
  cmd->add_option("--joint-maxiter", c.joint_maxiter, "Budget of each joint refinement");
  cmd->add_option("--joint-rhobeg", c.joint_rhobeg, "Initial radius of the joint refinement");
  cmd->add_option("--restarts", c.restarts, "Random theta restarts");
  cmd->add_option("--mapping-iterations", c.mapping_iterations, "Annealing steps per level");
  cmd->add_option("--mapping-restarts", c.mapping_restarts, "Annealing restarts");
}

void add_sampling_flags(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--shots", c.shots, "Noiseless shots");
  cmd->add_option("--lambda", c.lambda, "Two-qubit depolarizing probability");
  cmd->add_option("--trajectories", c.trajectories, "Noisy trajectories");
  cmd->add_option("--shots-per-trajectory", c.shots_per_trajectory, "Shots per trajectory");
}

int cmd_build(Context& ctx, const std::string& out_file) {
  const BuiltProblem b = build_problem(ctx.config.problem);
  const std::string hash = config_hash(ctx.config);
  const fs::path path = out_file.empty()
                            ? ctx.output_dir() / (ctx.config.problem.builder + "_n" +
                                                  std::to_string(ctx.config.problem.n) + ".json")
                            : fs::path(out_file);
  write_json(path, stamped(hash, problem_json(b)));
  ctx.out << describe_terms(b.h);
  if (b.graph) ctx.out << "; " << b.graph->edges.size() << " edges";
  ctx.out << "\nwrote " << path.string() << "\n";
  return 0;
}

int cmd_quadratize(Context& ctx, const std::string& method, const std::string& out_file) {
  const std::string hash = config_hash(ctx.config);
  if (method == "variational") {
    const int n = ctx.config.problem.path.empty() ? ctx.config.problem.n
                                                  : build_problem(ctx.config.problem).h.num_vars();
    const auto tpl = variational_template(n);
    Json pairs = Json::array();
    for (const auto& [a, b] : tpl.pairs()) pairs.push_back({a, b});
    Json manifest = {{"n", n}, {"parameters", tpl.num_parameters()}, {"pairs", pairs},
                     {"linear", n}};
    const fs::path path = out_file.empty() ? ctx.output_dir() / "variational_template.json"
                                           : fs::path(out_file);
    write_json(path, stamped(hash, manifest));
    ctx.out << tpl.num_parameters() << "-parameter template (" << tpl.pairs().size()
            << " pairs, " << n << " linear)\nwrote " << path.string() << "\n";
    return 0;
  }
  if (method != "clique") throw FormatError("method must be 'clique' or 'variational'");
  const BuiltProblem b = build_problem(ctx.config.problem);
  if (b.h.degree() < 3) throw FormatError("clique expansion needs a problem of degree >= 3");
  const CliqueExpansion ce = clique_expand(b.h);
  const fs::path path = out_file.empty() ? ctx.output_dir() / "clique.json" : fs::path(out_file);
  fs::path sidecar = path;
  sidecar.replace_extension(".edges.json");
  write_json(path, stamped(hash, to_json(ce.to_polynomial())));
  write_json(sidecar, stamped(hash, {{"edges", clique_sidecar(ce)}}));
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto& [p, e] : ce.edges) {
    lo = first ? e.weight : std::min(lo, e.weight);
    hi = first ? e.weight : std::max(hi, e.weight);
    first = false;
  }
  ctx.out << ce.edges.size() << " edges, weights in [" << lo << ", " << hi << "]\nwrote "
          << path.string() << " and " << sidecar.string() << "\n";
  return 0;
}

int cmd_resources(Context& ctx, const std::string& topology, double gate_time,
                  const std::string& out_file) {
  const BuiltProblem b = build_problem(ctx.config.problem);
  std::vector<Topology> tops;
  if (topology == "both") {
    tops = {Topology::kAllToAll, Topology::kLine};
  } else {
    tops = {topology_from_string(topology)};
  }
  Json rows = Json::array();
  ctx.out << std::left << std::setw(12) << "topology" << std::setw(10) << "gates" << std::setw(10)
          << "depth" << "rate_per_s\n";
  for (auto t : tops) {
    const auto est = estimate_resources(b.h, t, ctx.config.k);
    const double rate = est.two_qubit_depth > 0 ? est.sampling_rate(gate_time) : 0.0;
    ctx.out << std::left << std::setw(12) << to_string(t) << std::setw(10)
            << est.two_qubit_gate_count << std::setw(10) << est.two_qubit_depth << rate << "\n";
    rows.push_back({{"topology", to_string(t)},
                    {"two_qubit_gate_count", est.two_qubit_gate_count},
                    {"two_qubit_depth", est.two_qubit_depth},
                    {"method", est.method},
                    {"sampling_rate", rate}});
  }
  if (!out_file.empty())
    write_json(out_file, stamped(config_hash(ctx.config),
                                 {{"mean_gate_time", gate_time}, {"estimates", rows}}));
  return 0;
}

int cmd_train(Context& ctx) {
  const BuiltProblem b = build_problem(ctx.config.problem);
  const std::string hash = config_hash(ctx.config);
  const TrainedAnsatz a = train_ansatz(b.h, ansatz_options(ctx.config), train_config(ctx.config));
  const fs::path dir = ctx.output_dir();
  write_json(dir / "train_result.json", stamped(hash, to_json(a)));
  write_text(dir / "trace.csv", stamped_csv(hash, trace_csv(a.result)));
  ctx.out << to_string(a.kind) << " p=" << a.result.angles.depth();
  if (a.kind == AnsatzKind::kTruncated) ctx.out << " k=" << a.k;
  ctx.out << " energy=" << format_double(a.result.energy) << "\nwrote " << dir.string() << "\n";
  return 0;
}

int cmd_sample(Context& ctx, const std::string& result_file) {
  const BuiltProblem b = build_problem(ctx.config.problem);
  const std::string hash = config_hash(ctx.config);
  const TrainedAnsatz a = trained_from_json(read_json(result_file));
  const SampleSet s = sample_ansatz(b.h, a, sampling_options(ctx.config, ctx.config.lambda));
  const fs::path dir = ctx.output_dir();
  write_text(dir / "samples.csv", stamped_csv(hash, s.to_csv()));
  ctx.out << s.total_shots() << " shots, mean energy " << format_double(s.mean_energy())
          << "\nwrote " << (dir / "samples.csv").string() << "\n";
  return 0;
}

int cmd_metrics(Context& ctx, const std::string& samples_file, std::optional<double> target_r) {
  const BuiltProblem b = build_problem(ctx.config.problem);
  const std::string hash = config_hash(ctx.config);
  SampleSet s = SampleSet::from_csv(strip_comments(read_text(samples_file)));
  s.attach_energies(b.h);
  const SpectrumReport sp = spectrum_for(b, ctx.config.seed);
  MetricsTable table;
  table.add("problem", ctx.config.ansatz, ctx.config.k, ctx.config.p, ctx.config.lambda, s,
            ctx.config.alphas, sp.spectrum);
  Json body = {{"spectrum", spectrum_json(sp)}, {"rows", table.rows}};
  if (target_r) {
    const AlphaFit fit = fit_alpha(s, *target_r, sp.spectrum.e_min, sp.spectrum.e_max);
    body["fit_alpha"] = {{"target_r", *target_r}, {"alpha", fit.alpha},
                         {"residual", fit.residual}, {"clamped", fit.clamped}};
  }
  const fs::path dir = ctx.output_dir();
  write_json(dir / "metrics.json", stamped(hash, body));
  write_text(dir / "metrics.csv", stamped_csv(hash, table.csv));
  write_text(dir / "cdf.csv", stamped_csv(hash, cdf_csv(s)));
  ctx.out << "mean energy " << format_double(s.mean_energy()) << ", mean ratio "
          << format_double(approximation_ratio(s.mean_energy(), sp.spectrum.e_min,
                                               sp.spectrum.e_max))
          << "\nwrote " << dir.string() << "\n";
  return 0;
}

int cmd_run(Context& ctx) {
  const ExperimentConfig& c = ctx.config;
  const std::string hash = config_hash(c);
  const fs::path dir = ctx.output_dir();
  std::string stage = "build";
  try {
    const BuiltProblem b = build_problem(c.problem);
    write_json(dir / "config.json", stamped(hash, to_json(c)));
    write_json(dir / "problem.json", stamped(hash, problem_json(b)));
    stage = "spectrum";
    const SpectrumReport sp = spectrum_for(b, c.seed);
    MetricsTable table;
    Json summary = {{"spectrum", spectrum_json(sp)}};
    const TrainConfig tc = train_config(c);
    AnsatzOptions ao = ansatz_options(c);

    if (c.sweep_k_max >= 0) {
      stage = "train";
      if (ao.kind != AnsatzKind::kTruncated)
        throw FormatError("a k sweep needs the truncated Ansatz");
      const auto mapping = optimize_mapping(b.h, ao.mapping);
      const int k_max = std::min(c.sweep_k_max, max_swap_layers(b.h.num_vars()));
      const auto sweep = train_truncated_sweep(b.h, mapping.mapping, k_max, c.p, tc);
      std::string csv = "instance,k,p,energy,ratio\n";
      Json rows = Json::array();
      for (int k = 0; k <= k_max; ++k)
        for (int p = 1; p <= c.p; ++p) {
          const auto& r = sweep.results[k][p - 1];
          const double ratio = approximation_ratio(r.energy, sp.spectrum.e_min, sp.spectrum.e_max);
          rows.push_back({{"k", k}, {"p", p}, {"energy", r.energy}, {"ratio", ratio},
                          {"angles", to_json(r.angles)}});
          csv += "problem," + std::to_string(k) + "," + std::to_string(p) + "," +
                 format_double(r.energy) + "," + format_double(ratio) + "\n";
        }
      summary["mapping"] = {{"initial_mapping", mapping.mapping},
                            {"required_layers", mapping.required_layers},
                            {"initially_adjacent", mapping.initially_adjacent}};
      summary["sweep_k"] = rows;
      write_text(dir / "sweep_k.csv", stamped_csv(hash, csv));
    } else {
      stage = "train";
      const TrainedAnsatz a = train_ansatz(b.h, ao, tc);
      write_json(dir / "train_result.json", stamped(hash, to_json(a)));
      write_text(dir / "trace.csv", stamped_csv(hash, trace_csv(a.result)));
      stage = "sample";
      std::vector<double> lambdas = c.sweep_lambda.empty() ? std::vector<double>{c.lambda}
                                                           : c.sweep_lambda;
      for (double lambda : lambdas) {
        const SampleSet s = sample_ansatz(b.h, a, sampling_options(c, lambda));
        stage = "metrics";
        table.add("problem", c.ansatz, a.k, c.p, lambda, s, c.alphas, sp.spectrum);
        if (lambdas.size() == 1) {
          write_text(dir / "samples.csv", stamped_csv(hash, s.to_csv()));
          write_text(dir / "cdf.csv", stamped_csv(hash, cdf_csv(s)));
        }
        stage = "sample";
      }
      summary["energy"] = a.result.energy;
      summary["rows"] = table.rows;
      write_text(dir / "metrics.csv", stamped_csv(hash, table.csv));
    }
    write_json(dir / "metrics.json", stamped(hash, summary));
    write_metadata(dir, "run", hash);
  } catch (const std::exception& e) {
    throw Error("[" + stage + "] " + e.what());
  }
  ctx.out << "run " << hash << " complete\nwrote " << dir.string() << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratized and truncated QAOA toolkit", "quadqaoa"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Context ctx{ExperimentConfig{}, "", out, err};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", ctx.config_file, "JSON config; its fields override flags");
    cmd->add_option("--seed", ctx.config.seed, "Global seed");
  };

  std::string out_file;
  auto* build = app.add_subcommand("build", "Build a problem Hamiltonian");
  add_common(build);
  build->add_option("problem", ctx.config.problem.builder, "labs | h4full | h2full | maxcut");
  add_problem_flags(build, ctx.config);
  int rr3 = 0;
  build->add_option("--rr3", rr3, "Random 3-regular Max-Cut instance on this many nodes");
  build->add_option("--graph", ctx.config.problem.path, "Graph JSON for maxcut");
  build->add_option("--out", out_file, "Output file");

  std::string method = "clique";
  auto* quadratize = app.add_subcommand("quadratize", "Quadratize a higher-order problem");
  add_common(quadratize);
  quadratize->add_option("--in", ctx.config.problem.path, "Problem JSON");
  quadratize->add_option("--method", method, "clique | variational");
  quadratize->add_option("--n", ctx.config.problem.n, "Template width without --in");
  quadratize->add_option("--out", out_file, "Output file");

  std::string topology = "both";
  double gate_time = 84e-9;
  auto* resources = app.add_subcommand("resources", "Two-qubit gate count and depth");
  add_common(resources);
  resources->add_option("--in", ctx.config.problem.path, "Problem JSON")->required();
  resources->add_option("--topology", topology, "all-to-all | line | both");
  resources->add_option("--swap-layers", ctx.config.k, "Truncated SWAP layers on the line");
  resources->add_option("--gate-time", gate_time, "Mean gate time in seconds");
  resources->add_option("--out", out_file, "Optional JSON output");

  auto* train = app.add_subcommand("train", "Train an Ansatz");
  add_common(train);
  train->add_option("--in", ctx.config.problem.path, "Problem JSON")->required();
  add_train_flags(train, ctx.config);
  train->add_option("--out", ctx.config.out, "Output directory");

  std::string result_file;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a trained Ansatz");
  add_common(sample_cmd);
  sample_cmd->add_option("--in", ctx.config.problem.path, "Problem JSON")->required();
  sample_cmd->add_option("--result", result_file, "train_result.json")->required();
  sample_cmd->add_option("--backend", ctx.config.backend, "statevector | mps");
  sample_cmd->add_option("--chi", ctx.config.chi, "MPS bond dimension");
  add_sampling_flags(sample_cmd, ctx.config);
  sample_cmd->add_option("--out", ctx.config.out, "Output directory");

  std::string samples_file;
  std::optional<double> target_r;
  auto* metrics = app.add_subcommand("metrics", "Solution-quality metrics of samples");
  add_common(metrics);
  metrics->add_option("--in", ctx.config.problem.path, "Problem JSON")->required();
  metrics->add_option("--samples", samples_file, "samples.csv")->required();
  metrics->add_option("--alphas", ctx.config.alphas, "Best fractions")->delimiter(',');
  metrics->add_option("--target-r", target_r, "Fit alpha to this CVaR ratio");
  metrics->add_option("--out", ctx.config.out, "Output directory");

  auto* run = app.add_subcommand("run", "Build, train, sample and score in one go");
  add_common(run);
  run->add_option("--problem", ctx.config.problem.builder, "Problem builder");
  add_problem_flags(run, ctx.config);
  add_train_flags(run, ctx.config);
  add_sampling_flags(run, ctx.config);
  run->add_option("--sweep-k-max", ctx.config.sweep_k_max, "Sweep k = 0..k_max (truncated)");
  run->add_option("--sweep-lambda", ctx.config.sweep_lambda, "Noise levels")->delimiter(',');
  run->add_option("--alphas", ctx.config.alphas, "Best fractions")->delimiter(',');
  run->add_option("--out", ctx.config.out, "Output directory");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    for (auto* cmd : {quadratize, resources, train, sample_cmd, metrics})
      if (cmd->parsed() && !ctx.config.problem.path.empty()) ctx.config.problem.builder = "file";
    if (build->parsed() && rr3 > 0) {
      ctx.config.problem.builder = "maxcut";
      ctx.config.problem.n = rr3;
      ctx.config.problem.degree = 3;
      ctx.config.problem.seed = ctx.config.seed;
    } else if (build->parsed() && build->count("problem") == 0) {
      throw FormatError("build needs a problem name or --rr3");
    }
    ctx.finalize();
    if (build->parsed()) return cmd_build(ctx, out_file);
    if (quadratize->parsed()) return cmd_quadratize(ctx, method, out_file);
    if (resources->parsed()) return cmd_resources(ctx, topology, gate_time, out_file);
    if (train->parsed()) return cmd_train(ctx);
    if (sample_cmd->parsed()) return cmd_sample(ctx, result_file);
    if (metrics->parsed()) return cmd_metrics(ctx, samples_file, target_r);
    return cmd_run(ctx);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quadqaoa
