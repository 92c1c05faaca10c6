// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hopest/errors.hpp"

namespace hopest::io {

using nlohmann::json;

namespace {

json parse_text(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

// Runs a JSON-reading lambda and maps nlohmann type/range errors onto
// ValidationError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid ") + what + ": " + e.what());
  }
}

std::size_t as_index(const json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<std::size_t>(v.get<long long>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && std::floor(d) == d) return static_cast<std::size_t>(d);
  }
  throw ValidationError(std::string(what) + " must be a non-negative integer");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

ModelDocument model_from_json(const json& doc) {
  return guarded("model document", [&]() -> ModelDocument {
    if (!doc.is_object())
      throw ValidationError("model document must be a JSON object");
    const std::size_t n = as_index(doc.at("n_sites"), "n_sites");
    ChainSpec chain(n, doc.at("nearest").get<std::vector<double>>());
    PerturbationSpec pert;
    if (auto it = doc.find("perturbation"); it != doc.end() && !it->is_null()) {
      const double eps = it->value("epsilon", 0.0);
      std::vector<Edge> edges;
      if (auto e = it->find("edges"); e != it->end()) {
        for (const json& row : *e) {
          if (!row.is_array() || row.size() != 3)
            throw ValidationError("perturbation edges must be [i, j, d]");
          edges.push_back({as_index(row[0], "edge site"),
                           as_index(row[1], "edge site"),
                           row[2].get<double>()});
        }
      }
      pert = PerturbationSpec(eps, std::move(edges));
      pert.check_sites(n);
    }
    return {std::move(chain), std::move(pert)};
  });
}

ModelDocument parse_model(std::string_view text) {
  return model_from_json(parse_text(text, "model document"));
}

json model_to_json(const ChainSpec& chain, const PerturbationSpec& pert) {
  json edges = json::array();
  for (const Edge& e : pert.edges()) edges.push_back({e.i, e.j, e.weight});
  return {{"n_sites", chain.n_sites()},
          {"nearest", chain.nearest()},
          {"perturbation", {{"epsilon", pert.epsilon()}, {"edges", edges}}}};
}

CouplingGraph parse_graph(std::string_view text) {
  const json doc = parse_text(text, "graph document");
  if (doc.is_object() && doc.contains("n_sites")) {
    const ModelDocument m = model_from_json(doc);
    return CouplingGraph::from_model(m.chain, m.perturbation);
  }
  return guarded("graph document", [&] {
    const std::size_t n = as_index(doc.at("n_vertices"), "n_vertices");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const json& row : doc.at("edges")) {
      if (!row.is_array() || row.size() < 2)
        throw ValidationError("graph edges must be [i, j]");
      pairs.emplace_back(as_index(row[0], "vertex"), as_index(row[1], "vertex"));
    }
    return CouplingGraph(n, pairs);
  });
}

topology::FixedEdges fixed_edges_from_json(const json& doc) {
  return guarded("edge list", [&] {
    const json& list = doc.is_object() ? doc.at("edges") : doc;
    if (!list.is_array()) throw ValidationError("edge list must be an array");
    topology::FixedEdges out;
    for (const json& row : list) {
      if (!row.is_array() || row.size() < 2)
        throw ValidationError("edge list rows must be [i, j] or [i, j, d]");
      out.pairs.emplace_back(as_index(row[0], "edge site"),
                             as_index(row[1], "edge site"));
    }
    return out;
  });
}

TopologyMode parse_topology(std::string_view text) {
  if (text == "nnn") return topology::NextNearest{};
  if (text == "random") return topology::RandomEdges{};
  if (text.starts_with("random:")) {
    const std::string_view digits = text.substr(7);
    std::size_t count = 0;
    const auto res =
        std::from_chars(digits.data(), digits.data() + digits.size(), count);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() ||
        count == 0)
      throw ValidationError("random topology needs a positive edge count: " +
                            std::string(text));
    return topology::RandomEdges{count};
  }
  if (text.starts_with("file:")) {
    const std::string path(text.substr(5));
    return fixed_edges_from_json(parse_text(read_file(path), path.c_str()));
  }
  throw ValidationError("unknown topology '" + std::string(text) +
                        "' (expected nnn, random:<count> or file:<path>)");
}

void apply_config(const json& doc, EnsembleConfig& config) {
  guarded("ensemble config", [&] {
    if (!doc.is_object())
      throw ValidationError("ensemble config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key == "master_seed") {
        config.master_seed = value.get<std::uint64_t>();
      } else if (key == "instances") {
        config.instances = as_index(value, "instances");
      } else if (key == "n_sites") {
        config.n_sites = as_index(value, "n_sites");
      } else if (key == "coupling_low") {
        config.coupling_low = value.get<double>();
      } else if (key == "coupling_high") {
        config.coupling_high = value.get<double>();
      } else if (key == "epsilon_grid") {
        config.epsilon_grid = value.get<std::vector<double>>();
      } else if (key == "topology") {
        if (value.is_string()) {
          config.topology = parse_topology(value.get<std::string>());
        } else if (value.is_object() && value.contains("edges")) {
          config.topology = fixed_edges_from_json(value);
        } else {
          throw ValidationError(
              "topology must be a string or an object with \"edges\"");
        }
      } else {
        throw ValidationError("unknown ensemble config key '" + key + "'");
      }
    }
    return 0;
  });
}

EnsembleConfig parse_config(std::string_view text, EnsembleConfig base) {
  apply_config(parse_text(text, "ensemble config"), base);
  return base;
}

json config_to_json(const EnsembleConfig& config) {
  json topo;
  if (const auto* f = std::get_if<topology::FixedEdges>(&config.topology)) {
    json edges = json::array();
    for (auto [i, j] : f->pairs) edges.push_back({i, j});
    topo = {{"edges", edges}};
  } else {
    topo = describe(config.topology);
  }
  json grid = json::array();
  for (double eps : config.epsilon_grid) grid.push_back(eps);
  return {{"master_seed", config.master_seed},
          {"instances", config.instances},
          {"n_sites", config.n_sites},
          {"coupling_low", config.coupling_low},
          {"coupling_high", config.coupling_high},
          {"epsilon_grid", grid},
          {"topology", topo}};
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string Table::to_csv(bool header) const {
  std::string out;
  if (header) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += columns[c];
    }
    out += '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>)
              out += format_double(v);
            else if constexpr (std::is_same_v<V, std::size_t>)
              out += std::to_string(v);
            else
              out += csv_field(v);
          },
          row[c]);
    }
    out += '\n';
  }
  return out;
}

json Table::to_json() const {
  json out = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c)
      std::visit([&](const auto& v) { obj[columns[c]] = v; }, row[c]);
    out.push_back(std::move(obj));
  }
  return out;
}

Table spectrum_table(const SpectralData& s) {
  if (s.dim < 2)
    throw ValidationError("spectrum table needs at least two sites");
  Table t{{"k", "e_k", "w1_k", "w2_k"}, {}};
  for (std::size_t k = 1; k <= s.dim; ++k) {
    const double a = s.overlap(1, k);
    const double b = s.overlap(2, k);
    t.rows.push_back({k, s.eigenvalues[k - 1], a * a, b * b});
  }
  return t;
}

Table profile_table(const std::vector<ErrorProfile>& rows) {
  Table t{{"n", "mean_delta", "std_delta", "bound", "n_excluded"}, {}};
  for (const ErrorProfile& p : rows)
    t.rows.push_back({p.site, p.mean_delta, p.std_delta, p.bound, p.n_excluded});
  return t;
}

Table critical_length_table(const std::vector<CriticalLengthResult>& rows) {
  Table t{{"epsilon", "n_sites", "mean_Lc", "std_Lc", "n_excluded"}, {}};
  for (const CriticalLengthResult& r : rows)
    t.rows.push_back({r.epsilon, r.n_sites, r.mean_lc, r.std_lc, r.n_excluded});
  return t;
}

Table topology_table(const std::vector<LabeledProfile>& profiles) {
  Table t{{"label", "n", "mean_delta", "std_delta", "bound", "n_excluded"}, {}};
  for (const LabeledProfile& lp : profiles)
    for (const ErrorProfile& p : lp.profile)
      t.rows.push_back(
          {lp.label, p.site, p.mean_delta, p.std_delta, p.bound, p.n_excluded});
  return t;
}

}  // namespace hopest::io
