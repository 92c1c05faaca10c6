// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line harness over the hopest C API.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopest/hopest.h"
#include "json.hpp"
#include "svg_chart.hpp"

namespace {

using nlohmann::json;

// ---- C handle ownership ----------------------------------------------------

struct ModelFree { void operator()(hopest_model* p) const { hopest_model_free(p); } };
struct SpectrumFree { void operator()(hopest_spectrum* p) const { hopest_spectrum_free(p); } };
struct ReconFree { void operator()(hopest_reconstruction* p) const { hopest_reconstruction_free(p); } };
struct GraphFree { void operator()(hopest_graph* p) const { hopest_graph_free(p); } };
struct TableFree { void operator()(hopest_table* p) const { hopest_table_free(p); } };

using Model = std::unique_ptr<hopest_model, ModelFree>;
using Spectrum = std::unique_ptr<hopest_spectrum, SpectrumFree>;
using Reconstruction = std::unique_ptr<hopest_reconstruction, ReconFree>;
using Graph = std::unique_ptr<hopest_graph, GraphFree>;
using Table = std::unique_ptr<hopest_table, TableFree>;

// Failure carrying the process exit code.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& what)
      : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitIo = 5;

void check(hopest_status status) {
  if (status == HOPEST_OK) return;
  int code = 1;
  switch (status) {
    case HOPEST_ERR_VALIDATION: code = kExitValidation; break;
    case HOPEST_ERR_CONVERGENCE: code = kExitNumerical; break;
    case HOPEST_ERR_UNSUPPORTED: code = kExitUnsupported; break;
    default: break;
  }
  throw CliError(code, std::string(hopest_status_name(status)) + ": " +
                           hopest_last_error());
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hopest_string_free(s);
  return out;
}

std::string fmt(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---- options ---------------------------------------------------------------

struct Options {
  std::string input;
  std::string config_path;
  std::string out;
  std::string format = "csv";
  std::vector<std::size_t> sites;
  std::vector<double> epsilons;
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  double threshold = 0.122;
  std::vector<std::string> topologies;
  unsigned workers = 1;
  bool svg = false;
  // single-model subcommands
  std::size_t instance = 0;
  std::string method = "nn";
  // zero-forcing
  std::vector<std::size_t> initial;
  bool minimum = false;
  std::size_t cap = 16;

  CLI::App* app = nullptr;
  bool given(const std::string& flag) const { return app->count(flag) > 0; }
};

// Defaults < config file < flags.
json ensemble_document(const Options& o) {
  json doc = json::object();
  if (!o.config_path.empty()) {
    try {
      doc = json::parse(read_file(o.config_path));
    } catch (const json::parse_error& e) {
      throw CliError(kExitValidation,
                     "malformed config " + o.config_path + ": " + e.what());
    }
    if (!doc.is_object())
      throw CliError(kExitValidation, "config must be a JSON object");
  }
  if (o.given("--seed")) doc["master_seed"] = o.seed;
  if (o.given("--instances")) doc["instances"] = o.instances;
  if (o.given("--sites")) doc["n_sites"] = o.sites.front();
  return doc;
}

json resolve(const json& doc) {
  char* out = nullptr;
  check(hopest_config_resolve(doc.dump().c_str(), &out));
  return json::parse(take(out));
}

struct Output {
  std::string path;
  std::string content;
};

// Writes every output through a temporary file so a failure leaves nothing
// half-written, then records them in <primary>.manifest.json.
void emit(const Options& o, const std::string& subcommand, const json& config,
          const std::string& started, const std::string& primary,
          const std::string& svg) {
  if (o.out.empty()) {
    std::cout << primary;
    return;
  }
  std::vector<Output> outputs{{o.out, primary}};
  if (o.svg && !svg.empty()) outputs.push_back({o.out + ".svg", svg});

  json manifest = {{"subcommand", subcommand},
                   {"config", config},
                   {"master_seed", config.value("master_seed", json(nullptr))},
                   {"started", started},
                   {"version", hopest_version()},
                   {"format", o.format},
                   {"workers", o.workers}};
  manifest["outputs"] = json::array();
  for (const Output& out : outputs) manifest["outputs"].push_back(out.path);
  manifest["finished"] = utc_now();
  outputs.push_back({o.out + ".manifest.json", manifest.dump(2) + "\n"});

  for (const Output& out : outputs) {
    const std::string tmp = out.path + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) throw CliError(kExitIo, "cannot write " + out.path);
      f << out.content;
      if (!f) throw CliError(kExitIo, "failed writing " + out.path);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, out.path, ec);
    if (ec) throw CliError(kExitIo, "cannot move output into " + out.path);
  }
}

void require_format(const Options& o) {
  if (o.format != "csv" && o.format != "json")
    throw CliError(kExitValidation, "--format must be csv or json");
}

double single_epsilon(const Options& o, double fallback) {
  if (o.epsilons.empty()) return fallback;
  if (o.epsilons.size() > 1)
    throw CliError(kExitValidation, "this subcommand takes a single --epsilon");
  return o.epsilons.front();
}

// ---- single-model subcommands ----------------------------------------------

struct LoadedModel {
  Model model;
  json config;  // resolved sampling config, or the input document
};

LoadedModel load_model(const Options& o) {
  hopest_model* raw = nullptr;
  if (!o.input.empty()) {
    const std::string text = read_file(o.input);
    check(hopest_model_from_json(text.c_str(), &raw));
    Model m(raw);
    return {std::move(m), json{{"input", o.input}}};
  }
  if (!o.given("--sites") && o.config_path.empty())
    throw CliError(kExitValidation, "give --input <model.json> or --sites N");
  json doc = ensemble_document(o);
  if (!o.topologies.empty()) doc["topology"] = o.topologies.front();
  const json config = resolve(doc);
  check(hopest_model_sample(doc.dump().c_str(), o.instance,
                            single_epsilon(o, 0.0), &raw));
  return {Model(raw), config};
}

std::vector<double> couplings(const hopest_model* m) {
  std::vector<double> c(hopest_model_sites(m) - 1);
  check(hopest_model_couplings(m, c.data(), c.size()));
  return c;
}

int run_build(const Options& o, const std::string& started) {
  require_format(o);
  LoadedModel lm = load_model(o);
  const std::size_t n = hopest_model_sites(lm.model.get());
  std::vector<double> h(n * n);
  check(hopest_model_hamiltonian(lm.model.get(), h.data(), h.size()));
  std::string text;
  if (o.format == "csv") {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c) text += ',';
        text += fmt(h[r * n + c]);
      }
      text += '\n';
    }
  } else {
    char* model_json = nullptr;
    check(hopest_model_to_json(lm.model.get(), &model_json));
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r)
      rows.push_back(std::vector<double>(h.begin() + static_cast<long>(r * n),
                                         h.begin() + static_cast<long>((r + 1) * n)));
    text = json{{"model", json::parse(take(model_json))}, {"hamiltonian", rows}}
               .dump(2) + "\n";
  }
  emit(o, "build", lm.config, started, text, "");
  return 0;
}

Spectrum spectrum_of(const hopest_model* m) {
  hopest_spectrum* raw = nullptr;
  check(hopest_spectrum_compute(m, &raw));
  return Spectrum(raw);
}

std::vector<double> overlaps(const hopest_spectrum* s, std::size_t site) {
  std::vector<double> row(hopest_spectrum_dim(s));
  check(hopest_spectrum_overlaps(s, site, row.data(), row.size()));
  return row;
}

std::vector<double> eigenvalues(const hopest_spectrum* s) {
  std::vector<double> e(hopest_spectrum_dim(s));
  check(hopest_spectrum_eigenvalues(s, e.data(), e.size()));
  return e;
}

int run_spectrum(const Options& o, const std::string& started) {
  require_format(o);
  LoadedModel lm = load_model(o);
  Spectrum s = spectrum_of(lm.model.get());
  if (hopest_spectrum_near_degenerate(s.get()))
    std::cerr << "warning: near-degenerate spectrum; overlaps may be unstable\n";
  std::string text;
  if (o.format == "csv") {
    char* csv = nullptr;
    check(hopest_spectrum_csv(s.get(), &csv));
    text = take(csv);
  } else {
    json doc = {{"eigenvalues", eigenvalues(s.get())},
                {"overlaps_site1", overlaps(s.get(), 1)},
                {"near_degenerate", hopest_spectrum_near_degenerate(s.get()) != 0}};
    if (hopest_spectrum_dim(s.get()) >= 2)
      doc["overlaps_site2"] = overlaps(s.get(), 2);
    text = doc.dump(2) + "\n";
  }
  std::vector<hopest::cli::Series> series{{"e_k", {}}};
  const auto e = eigenvalues(s.get());
  for (std::size_t k = 0; k < e.size(); ++k)
    series[0].points.emplace_back(static_cast<double>(k + 1), e[k]);
  emit(o, "spectrum", lm.config, started, text,
       hopest::cli::render_svg("spectrum", "k", "e_k", series));
  return 0;
}

int run_reconstruct(const Options& o, const std::string& started) {
  require_format(o);
  if (o.method != "nn" && o.method != "nnn")
    throw CliError(kExitValidation, "--method must be nn or nnn");
  LoadedModel lm = load_model(o);
  const hopest_model* m = lm.model.get();
  const std::size_t n = hopest_model_sites(m);
  const std::vector<double> truth = couplings(m);
  Spectrum s = spectrum_of(m);
  hopest_reconstruction* raw = nullptr;
  if (o.method == "nn")
    check(hopest_reconstruct_spectrum_nearest(s.get(), n - 1, &raw));
  else
    check(hopest_reconstruct_spectrum_next_nearest(
        s.get(), hopest_model_epsilon(m), &raw));
  Reconstruction r(raw);
  std::vector<double> est(hopest_reconstruction_count(r.get()));
  check(hopest_reconstruction_couplings(r.get(), est.data(), est.size()));
  std::vector<double> delta(est.size());
  check(hopest_reconstruction_errors(r.get(), truth.data(), truth.size(),
                                     delta.data(), delta.size()));
  std::vector<double> d_est(hopest_reconstruction_second_count(r.get()));
  check(hopest_reconstruction_second_couplings(r.get(), d_est.data(),
                                               d_est.size()));
  std::vector<double> d_true(n >= 2 ? n - 2 : 0, 0.0);
  std::vector<hopest_edge> edges(hopest_model_edges(m, nullptr, 0));
  hopest_model_edges(m, edges.data(), edges.size());
  for (const hopest_edge& x : edges)
    if (x.j == x.i + 2) d_true[x.i - 1] = x.weight;

  if (const std::size_t b = hopest_reconstruction_breakdown(r.get()))
    std::cerr << "warning: recursion broke down at position " << b << "\n";

  const bool extended = o.method == "nnn";
  std::string text;
  if (o.format == "csv") {
    text = extended ? "n,c_true,c_est,delta,d_true,d_est\n"
                    : "n,c_true,c_est,delta\n";
    for (std::size_t i = 0; i < est.size(); ++i) {
      text += std::to_string(i + 1) + ',' + fmt(truth[i]) + ',' + fmt(est[i]) +
              ',' + fmt(delta[i]);
      if (extended) {
        text += ',';
        if (i < d_true.size()) text += fmt(d_true[i]);
        text += ',';
        if (i < d_est.size()) text += fmt(d_est[i]);
      }
      text += '\n';
    }
  } else {
    json doc = {{"method", o.method},
                {"c_true", truth},
                {"c_est", est},
                {"delta", delta}};
    const std::size_t b = hopest_reconstruction_breakdown(r.get());
    doc["breakdown_at"] = b ? json(b) : json(nullptr);
    if (extended) {
      doc["d_true"] = d_true;
      doc["d_est"] = d_est;
    }
    text = doc.dump(2) + "\n";
  }
  std::vector<hopest::cli::Series> series{{"delta", {}}};
  for (std::size_t i = 0; i < delta.size(); ++i)
    series[0].points.emplace_back(static_cast<double>(i + 1), delta[i]);
  emit(o, "reconstruct", lm.config, started, text,
       hopest::cli::render_svg("reconstruction error", "n", "delta", series));
  return 0;
}

int run_zero_forcing(const Options& o, const std::string& started) {
  require_format(o);
  if (o.input.empty())
    throw CliError(kExitValidation, "zero-forcing needs --input <graph.json>");
  const std::string text = read_file(o.input);
  hopest_graph* raw = nullptr;
  check(hopest_graph_from_json(text.c_str(), &raw));
  Graph g(raw);
  const std::size_t n = hopest_graph_vertices(g.get());
  std::vector<unsigned char> blue(n);
  check(hopest_zero_forcing_closure(g.get(), o.initial.data(), o.initial.size(),
                                    blue.data(), blue.size()));
  int verdict = 0;
  check(hopest_is_zero_forcing_set(g.get(), o.initial.data(), o.initial.size(),
                                   &verdict));
  std::size_t minimum = 0;
  if (o.minimum) check(hopest_minimum_zero_forcing_number(g.get(), o.cap, &minimum));

  std::vector<std::size_t> closure;
  for (std::size_t v = 1; v <= n; ++v)
    if (blue[v - 1]) closure.push_back(v);
  std::string out;
  if (o.format == "csv") {
    out = "closure:";
    for (std::size_t i = 0; i < closure.size(); ++i)
      out += (i ? "," : " ") + std::to_string(closure[i]);
    out += std::string("\nzero_forcing_set: ") + (verdict ? "true" : "false") + "\n";
    if (o.minimum) out += "zero_forcing_number: " + std::to_string(minimum) + "\n";
  } else {
    json doc = {{"initial", o.initial},
                {"closure", closure},
                {"zero_forcing_set", verdict != 0}};
    if (o.minimum) doc["zero_forcing_number"] = minimum;
    out = doc.dump(2) + "\n";
  }
  emit(o, "zero-forcing", json{{"input", o.input}}, started, out, "");
  return 0;
}

// ---- ensemble subcommands ----------------------------------------------------

std::string render(const hopest_table* t, const std::string& format,
                   bool header = true) {
  char* s = nullptr;
  if (format == "csv")
    check(hopest_table_csv(t, header ? 1 : 0, &s));
  else
    check(hopest_table_json(t, &s));
  return take(s);
}

int column_of(const hopest_table* t, const std::string& name) {
  for (std::size_t c = 0; c < hopest_table_columns(t); ++c)
    if (name == hopest_table_column_name(t, c)) return static_cast<int>(c);
  throw CliError(1, "missing column " + name);
}

int run_error_profile(const Options& o, const std::string& started) {
  require_format(o);
  if (o.sites.size() > 1)
    throw CliError(kExitValidation, "error-profile takes a single --sites value");
  json doc = ensemble_document(o);
  if (!o.topologies.empty()) {
    if (o.topologies.size() > 1)
      throw CliError(kExitValidation, "error-profile takes a single --topology");
    doc["topology"] = o.topologies.front();
  }
  const json config = resolve(doc);
  const double eps = single_epsilon(o, 1e-4);
  hopest_table* raw = nullptr;
  check(hopest_error_profile(doc.dump().c_str(), eps, o.workers, &raw));
  Table t(raw);

  std::vector<hopest::cli::Series> series{{"mean_delta", {}}, {"bound", {}}};
  const int cn = column_of(t.get(), "n");
  for (std::size_t r = 0; r < hopest_table_rows(t.get()); ++r) {
    const double x = hopest_table_value(t.get(), r, cn);
    series[0].points.emplace_back(x, hopest_table_value(t.get(), r, column_of(t.get(), "mean_delta")));
    series[1].points.emplace_back(x, hopest_table_value(t.get(), r, column_of(t.get(), "bound")));
  }
  json full = config;
  full["epsilon"] = eps;
  emit(o, "error-profile", full, started, render(t.get(), o.format),
       hopest::cli::render_svg("error profile, eps = " + fmt(eps), "n",
                               "mean delta", series));
  return 0;
}

int run_critical_length(const Options& o, const std::string& started) {
  require_format(o);
  json doc = ensemble_document(o);
  if (!o.epsilons.empty()) doc["epsilon_grid"] = o.epsilons;
  if (!o.topologies.empty()) {
    if (o.topologies.size() > 1)
      throw CliError(kExitValidation, "critical-length takes a single --topology");
    doc["topology"] = o.topologies.front();
  }
  std::vector<std::size_t> sizes = o.sites;
  if (sizes.empty()) sizes.push_back(resolve(doc).at("n_sites").get<std::size_t>());

  // Validate every size before running any of them.
  std::vector<json> docs;
  for (std::size_t n : sizes) {
    json d = doc;
    d["n_sites"] = n;
    resolve(d);
    docs.push_back(d);
  }

  std::string text;
  json rows = json::array();
  std::vector<hopest::cli::Series> series;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    hopest_table* raw = nullptr;
    check(hopest_critical_length_sweep(docs[i].dump().c_str(), o.threshold,
                                       o.workers, &raw));
    Table t(raw);
    if (o.format == "csv") {
      text += render(t.get(), "csv", i == 0);
    } else {
      for (const auto& row : json::parse(render(t.get(), "json"))) rows.push_back(row);
    }
    hopest::cli::Series s{"N = " + std::to_string(sizes[i]), {}};
    for (std::size_t r = 0; r < hopest_table_rows(t.get()); ++r)
      s.points.emplace_back(
          std::log10(hopest_table_value(t.get(), r, column_of(t.get(), "epsilon"))),
          hopest_table_value(t.get(), r, column_of(t.get(), "mean_Lc")));
    series.push_back(std::move(s));
  }
  if (o.format == "json") text = rows.dump(2) + "\n";

  json full = resolve(doc);
  full["n_sites"] = sizes;
  full["threshold"] = o.threshold;
  emit(o, "critical-length", full, started, text,
       hopest::cli::render_svg("critical length, tau = " + fmt(o.threshold),
                               "log10 eps", "mean L_C", series));
  return 0;
}

int run_topology_compare(const Options& o, const std::string& started) {
  require_format(o);
  if (o.sites.size() > 1)
    throw CliError(kExitValidation, "topology-compare takes a single --sites value");
  json doc = ensemble_document(o);
  const json config = resolve(doc);
  const std::size_t n = config.at("n_sites").get<std::size_t>();
  std::vector<std::string> topologies = o.topologies;
  if (topologies.empty())
    topologies = {"nnn", "random:" + std::to_string(n >= 2 ? n - 2 : 0)};
  json variants = json::array();
  for (const std::string& t : topologies)
    variants.push_back({{"label", t}, {"topology", t}});
  const double eps = single_epsilon(o, 1e-4);

  hopest_table* raw = nullptr;
  check(hopest_topology_compare(doc.dump().c_str(), variants.dump().c_str(), eps,
                                o.workers, &raw));
  Table t(raw);

  std::vector<hopest::cli::Series> series;
  const std::size_t per = n - 1;
  for (std::size_t v = 0; v < topologies.size(); ++v) {
    hopest::cli::Series s{topologies[v], {}};
    for (std::size_t r = v * per; r < (v + 1) * per; ++r)
      s.points.emplace_back(hopest_table_value(t.get(), r, column_of(t.get(), "n")),
                            hopest_table_value(t.get(), r, column_of(t.get(), "mean_delta")));
    series.push_back(std::move(s));
  }
  json full = config;
  full["epsilon"] = eps;
  full["variants"] = variants;
  emit(o, "topology-compare", full, started, render(t.get(), o.format),
       hopest::cli::render_svg("topology comparison, eps = " + fmt(eps), "n",
                               "mean delta", series));
  return 0;
}

// ---- wiring ------------------------------------------------------------------

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Output file (stdout when omitted)");
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--svg", o.svg, "Also write <out>.svg");
}

void add_ensemble_flags(CLI::App* sub, Options& o) {
  sub->add_option("--sites", o.sites, "Chain length(s)")->delimiter(',');
  sub->add_option("--epsilon", o.epsilons, "Perturbation strength(s)")
      ->delimiter(',');
  sub->add_option("--instances", o.instances, "Ensemble size");
  sub->add_option("--seed", o.seed, "Master seed (overrides the config file)");
  sub->add_option("--topology", o.topologies,
                  "nnn | random:<count> | file:<path>");
  sub->add_option("--workers", o.workers, "Parallel workers")
      ->check(CLI::PositiveNumber);
  sub->add_option("--config", o.config_path, "Ensemble config JSON")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupling reconstruction from spectral data and its error "
               "under unknown long-range couplings"};
  app.set_version_flag("--version", std::string(hopest_version()));
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Assemble a Hamiltonian matrix");
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and site overlaps");
  auto* reconstruct =
      app.add_subcommand("reconstruct", "Recover couplings from spectral data");
  for (CLI::App* sub : {build, spectrum, reconstruct}) {
    sub->add_option("--input", o.input, "Model JSON document")
        ->check(CLI::ExistingFile);
    sub->add_option("--instance", o.instance,
                    "Ensemble member to sample when no --input is given");
    add_ensemble_flags(sub, o);
    add_output_flags(sub, o);
  }
  reconstruct->add_option("--method", o.method, "nn or nnn")
      ->check(CLI::IsMember({"nn", "nnn"}));

  auto* zf = app.add_subcommand("zero-forcing", "Zero-forcing closure of a set");
  zf->add_option("--input", o.input, "Graph or model JSON document")
      ->required()
      ->check(CLI::ExistingFile);
  zf->add_option("--initial", o.initial, "Initially blue vertices")
      ->delimiter(',');
  zf->add_flag("--minimum", o.minimum, "Also compute the zero-forcing number");
  zf->add_option("--cap", o.cap, "Vertex cap for the exhaustive search");
  add_output_flags(zf, o);

  auto* profile = app.add_subcommand("error-profile", "Ensemble error per coupling");
  auto* critical = app.add_subcommand("critical-length", "Critical length sweep");
  critical->add_option("--threshold", o.threshold, "Error threshold tau")
      ->check(CLI::PositiveNumber);
  auto* compare =
      app.add_subcommand("topology-compare", "Error profiles per topology");
  for (CLI::App* sub : {profile, critical, compare}) {
    add_ensemble_flags(sub, o);
    add_output_flags(sub, o);
  }

  CLI11_PARSE(app, argc, argv);

  const std::string started = utc_now();
  try {
    for (CLI::App* sub : app.get_subcommands()) {
      o.app = sub;
      const std::string name = sub->get_name();
      if (name == "build") return run_build(o, started);
      if (name == "spectrum") return run_spectrum(o, started);
      if (name == "reconstruct") return run_reconstruct(o, started);
      if (name == "zero-forcing") return run_zero_forcing(o, started);
      if (name == "error-profile") return run_error_profile(o, started);
      if (name == "critical-length") return run_critical_length(o, started);
      if (name == "topology-compare") return run_topology_compare(o, started);
    }
  } catch (const CliError& e) {
    std::cerr << "hopest: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "hopest: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
