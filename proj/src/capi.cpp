// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#include "hopest/hopest.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "hopest/analysis.hpp"
#include "hopest/errors.hpp"
#include "hopest/estimation.hpp"
#include "hopest/graph.hpp"
#include "hopest/io.hpp"
#include "hopest/model.hpp"
#include "hopest/spectral.hpp"
#include "hopest/version.hpp"

struct hopest_model {
  hopest::ChainSpec chain;
  hopest::PerturbationSpec perturbation;
};

struct hopest_spectrum {
  hopest::SpectralData data;
};

struct hopest_reconstruction {
  std::vector<double> couplings;
  std::vector<double> tail;
  std::vector<double> second;
  std::optional<std::size_t> breakdown;
};

struct hopest_graph {
  hopest::CouplingGraph graph;
};

struct hopest_table {
  hopest::io::Table table;
};

namespace {

thread_local std::string last_error;

// Thrown when a caller-provided buffer is too small.
struct CapacityError : std::exception {};

hopest_status record(hopest_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body` and maps exceptions onto status codes.
template <typename F>
hopest_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return HOPEST_OK;
  } catch (const hopest::ValidationError& e) {
    return record(HOPEST_ERR_VALIDATION, e.what());
  } catch (const hopest::ConvergenceError& e) {
    return record(HOPEST_ERR_CONVERGENCE, e.what());
  } catch (const hopest::UnsupportedSizeError& e) {
    return record(HOPEST_ERR_UNSUPPORTED, e.what());
  } catch (const CapacityError&) {
    return record(HOPEST_ERR_CAPACITY, "output buffer too small");
  } catch (const std::bad_alloc&) {
    return record(HOPEST_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(HOPEST_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(HOPEST_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw hopest::ValidationError(what);
}

void copy_out(const std::vector<double>& src, double* out, size_t capacity) {
  require(out != nullptr || src.empty(), "output buffer is null");
  if (src.size() > capacity) throw CapacityError();
  std::copy(src.begin(), src.end(), out);
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<double> span_of(const double* p, size_t n, const char* what) {
  require(p != nullptr || n == 0, what);
  return std::vector<double>(p, p + n);
}

hopest::VertexSet vertex_set(const size_t* v, size_t n) {
  require(v != nullptr || n == 0, "vertex list is null");
  return hopest::VertexSet(v, v + n);
}

hopest::EnsembleConfig config_from(const char* json) {
  require(json != nullptr, "config document is null");
  hopest::EnsembleConfig config;
  config.epsilon_grid = hopest::default_epsilon_grid();
  return hopest::io::parse_config(json, config);
}

}  // namespace

extern "C" {

const char* hopest_version(void) { return HOPEST_VERSION_STRING; }

const char* hopest_last_error(void) { return last_error.c_str(); }

const char* hopest_status_name(hopest_status status) {
  switch (status) {
    case HOPEST_OK: return "ok";
    case HOPEST_ERR_VALIDATION: return "validation error";
    case HOPEST_ERR_CONVERGENCE: return "convergence error";
    case HOPEST_ERR_UNSUPPORTED: return "unsupported size";
    case HOPEST_ERR_CAPACITY: return "buffer too small";
    case HOPEST_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hopest_string_free(char* s) { delete[] s; }

// ---- model ---------------------------------------------------------------

hopest_status hopest_model_create(size_t n_sites, const double* nearest,
                                  double epsilon, const hopest_edge* edges,
                                  size_t n_edges, hopest_model** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    require(edges != nullptr || n_edges == 0, "edge array is null");
    hopest::ChainSpec chain(
        n_sites, span_of(nearest, n_sites ? n_sites - 1 : 0, "couplings are null"));
    std::vector<hopest::Edge> list;
    for (size_t k = 0; k < n_edges; ++k)
      list.push_back({edges[k].i, edges[k].j, edges[k].weight});
    hopest::PerturbationSpec pert(epsilon, std::move(list));
    pert.check_sites(n_sites);
    *out = new hopest_model{std::move(chain), std::move(pert)};
  });
}

hopest_status hopest_model_create_nnn(size_t n_sites, const double* nearest,
                                      const double* d_values, double epsilon,
                                      hopest_model** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    require(n_sites >= 2, "next-nearest model needs at least two sites");
    hopest::ChainSpec chain(n_sites,
                            span_of(nearest, n_sites - 1, "couplings are null"));
    const auto d = span_of(d_values, n_sites - 2, "d values are null");
    *out = new hopest_model{std::move(chain),
                            hopest::nnn_perturbation(d, epsilon)};
  });
}

hopest_status hopest_model_sample(const char* config_json, size_t instance,
                                  double epsilon, hopest_model** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    const auto config = config_from(config_json);
    config.validate();
    auto member = hopest::sample_instance(
        hopest::derive_instance_rng(config.master_seed, instance, 0),
        config.n_sites, config.coupling_low, config.coupling_high, epsilon,
        config.topology);
    *out = new hopest_model{std::move(member.chain),
                            std::move(member.perturbation)};
  });
}

hopest_status hopest_model_from_json(const char* json, hopest_model** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "null argument");
    auto doc = hopest::io::parse_model(json);
    *out = new hopest_model{std::move(doc.chain), std::move(doc.perturbation)};
  });
}

hopest_status hopest_model_to_json(const hopest_model* model, char** out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "null argument");
    *out = duplicate(
        hopest::io::model_to_json(model->chain, model->perturbation).dump());
  });
}

void hopest_model_free(hopest_model* model) { delete model; }

size_t hopest_model_sites(const hopest_model* model) {
  return model ? model->chain.n_sites() : 0;
}

double hopest_model_epsilon(const hopest_model* model) {
  return model ? model->perturbation.epsilon()
               : std::numeric_limits<double>::quiet_NaN();
}

hopest_status hopest_model_couplings(const hopest_model* model, double* out,
                                     size_t capacity) {
  return guard([&] {
    require(model != nullptr, "model is null");
    copy_out(model->chain.nearest(), out, capacity);
  });
}

size_t hopest_model_edges(const hopest_model* model, hopest_edge* out,
                          size_t capacity) {
  if (!model) return 0;
  const auto& edges = model->perturbation.edges();
  for (size_t k = 0; k < edges.size() && k < capacity && out; ++k)
    out[k] = {edges[k].i, edges[k].j, edges[k].weight};
  return edges.size();
}

hopest_status hopest_model_hamiltonian(const hopest_model* model, double* out,
                                       size_t capacity) {
  return guard([&] {
    require(model != nullptr, "model is null");
    const auto h =
        hopest::build_perturbed_hamiltonian(model->chain, model->perturbation);
    copy_out({h.entries().begin(), h.entries().end()}, out, capacity);
  });
}

// ---- spectral ------------------------------------------------------------

hopest_status hopest_spectrum_compute(const hopest_model* model,
                                      hopest_spectrum** out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "null argument");
    *out = new hopest_spectrum{hopest::eigendecompose(
        hopest::build_perturbed_hamiltonian(model->chain, model->perturbation))};
  });
}

hopest_status hopest_spectrum_from_matrix(size_t dim, const double* entries,
                                          hopest_spectrum** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    const auto m = span_of(entries, dim * dim, "matrix entries are null");
    *out = new hopest_spectrum{hopest::eigendecompose(dim, m)};
  });
}

void hopest_spectrum_free(hopest_spectrum* spectrum) { delete spectrum; }

size_t hopest_spectrum_dim(const hopest_spectrum* spectrum) {
  return spectrum ? spectrum->data.dim : 0;
}

int hopest_spectrum_near_degenerate(const hopest_spectrum* spectrum) {
  return spectrum && spectrum->data.near_degenerate ? 1 : 0;
}

hopest_status hopest_spectrum_eigenvalues(const hopest_spectrum* spectrum,
                                          double* out, size_t capacity) {
  return guard([&] {
    require(spectrum != nullptr, "spectrum is null");
    copy_out(spectrum->data.eigenvalues, out, capacity);
  });
}

hopest_status hopest_spectrum_overlaps(const hopest_spectrum* spectrum,
                                       size_t site, double* out,
                                       size_t capacity) {
  return guard([&] {
    require(spectrum != nullptr, "spectrum is null");
    copy_out(hopest::site_overlaps(spectrum->data, site), out, capacity);
  });
}

hopest_status hopest_spectrum_moment(const hopest_spectrum* spectrum,
                                     size_t site, unsigned power, double* out) {
  return guard([&] {
    require(spectrum != nullptr && out != nullptr, "null argument");
    *out = hopest::moment(spectrum->data, site, power);
  });
}

hopest_status hopest_spectrum_csv(const hopest_spectrum* spectrum, char** out) {
  return guard([&] {
    require(spectrum != nullptr && out != nullptr, "null argument");
    *out = duplicate(hopest::io::spectrum_table(spectrum->data).to_csv());
  });
}

// ---- estimation ----------------------------------------------------------

hopest_status hopest_reconstruct_nearest(const double* eigenvalues,
                                         const double* site1_overlaps, size_t n,
                                         size_t max_terms,
                                         hopest_reconstruction** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    auto r = hopest::reconstruct_nearest_neighbor(
        span_of(eigenvalues, n, "eigenvalues are null"),
        span_of(site1_overlaps, n, "overlaps are null"), max_terms);
    *out = new hopest_reconstruction{std::move(r.estimated),
                                     std::move(r.estimated_tail), {},
                                     r.breakdown_at};
  });
}

hopest_status hopest_reconstruct_next_nearest(const double* eigenvalues,
                                              const double* site1_overlaps,
                                              const double* site2_overlaps,
                                              size_t n, double epsilon,
                                              hopest_reconstruction** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    auto r = hopest::reconstruct_next_nearest(
        span_of(eigenvalues, n, "eigenvalues are null"),
        span_of(site1_overlaps, n, "overlaps are null"),
        span_of(site2_overlaps, n, "overlaps are null"), epsilon);
    *out = new hopest_reconstruction{std::move(r.estimated_c), {},
                                     std::move(r.estimated_d), r.breakdown_at};
  });
}

hopest_status hopest_reconstruct_spectrum_nearest(
    const hopest_spectrum* spectrum, size_t max_terms,
    hopest_reconstruction** out) {
  return guard([&] {
    require(spectrum != nullptr, "spectrum is null");
    require(out != nullptr, "output handle is null");
    auto r = hopest::reconstruct_nearest_neighbor(spectrum->data, max_terms);
    *out = new hopest_reconstruction{std::move(r.estimated),
                                     std::move(r.estimated_tail), {},
                                     r.breakdown_at};
  });
}

hopest_status hopest_reconstruct_spectrum_next_nearest(
    const hopest_spectrum* spectrum, double epsilon,
    hopest_reconstruction** out) {
  return guard([&] {
    require(spectrum != nullptr, "spectrum is null");
    require(out != nullptr, "output handle is null");
    auto r = hopest::reconstruct_next_nearest(spectrum->data, epsilon);
    *out = new hopest_reconstruction{std::move(r.estimated_c), {},
                                     std::move(r.estimated_d), r.breakdown_at};
  });
}

void hopest_reconstruction_free(hopest_reconstruction* result) {
  delete result;
}

size_t hopest_reconstruction_count(const hopest_reconstruction* result) {
  return result ? result->couplings.size() : 0;
}

size_t hopest_reconstruction_second_count(const hopest_reconstruction* result) {
  return result ? result->second.size() : 0;
}

size_t hopest_reconstruction_breakdown(const hopest_reconstruction* result) {
  return result && result->breakdown ? *result->breakdown : 0;
}

hopest_status hopest_reconstruction_couplings(
    const hopest_reconstruction* result, double* out, size_t capacity) {
  return guard([&] {
    require(result != nullptr, "result is null");
    copy_out(result->couplings, out, capacity);
  });
}

hopest_status hopest_reconstruction_second_couplings(
    const hopest_reconstruction* result, double* out, size_t capacity) {
  return guard([&] {
    require(result != nullptr, "result is null");
    copy_out(result->second, out, capacity);
  });
}

hopest_status hopest_estimation_errors(const double* truth, size_t n_true,
                                       const double* estimated,
                                       size_t n_estimated, double* out) {
  return guard([&] {
    require(out != nullptr || n_estimated == 0, "output buffer is null");
    const auto d = hopest::estimation_errors(
        span_of(truth, n_true, "true couplings are null"),
        span_of(estimated, n_estimated, "estimates are null"));
    std::copy(d.begin(), d.end(), out);
  });
}

hopest_status hopest_reconstruction_errors(const hopest_reconstruction* result,
                                          const double* truth, size_t n_true,
                                          double* out, size_t capacity) {
  return guard([&] {
    require(result != nullptr, "result is null");
    const auto d = hopest::estimation_errors(
        span_of(truth, n_true, "true couplings are null"), result->couplings,
        result->tail);
    copy_out(d, out, capacity);
  });
}

// ---- zero forcing --------------------------------------------------------

hopest_status hopest_graph_create(size_t n_vertices, const size_t* pairs,
                                  size_t n_edges, hopest_graph** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    require(pairs != nullptr || n_edges == 0, "edge array is null");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (size_t k = 0; k < n_edges; ++k)
      e.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
    *out = new hopest_graph{hopest::CouplingGraph(n_vertices, e)};
  });
}

hopest_status hopest_graph_from_json(const char* json, hopest_graph** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new hopest_graph{hopest::io::parse_graph(json)};
  });
}

void hopest_graph_free(hopest_graph* graph) { delete graph; }

size_t hopest_graph_vertices(const hopest_graph* graph) {
  return graph ? graph->graph.n_vertices() : 0;
}

hopest_status hopest_zero_forcing_closure(const hopest_graph* graph,
                                          const size_t* initial,
                                          size_t n_initial,
                                          unsigned char* blue_out,
                                          size_t capacity) {
  return guard([&] {
    require(graph != nullptr, "graph is null");
    const auto closure = hopest::zero_forcing_closure(
        graph->graph, vertex_set(initial, n_initial));
    const size_t n = graph->graph.n_vertices();
    require(blue_out != nullptr || n == 0, "output buffer is null");
    if (capacity < n) throw CapacityError();
    for (size_t v = 1; v <= n; ++v) blue_out[v - 1] = closure.count(v) ? 1 : 0;
  });
}

hopest_status hopest_is_zero_forcing_set(const hopest_graph* graph,
                                         const size_t* candidate,
                                         size_t n_candidate, int* out) {
  return guard([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = hopest::is_zero_forcing_set(graph->graph,
                                       vertex_set(candidate, n_candidate))
               ? 1
               : 0;
  });
}

hopest_status hopest_minimum_zero_forcing_number(const hopest_graph* graph,
                                                 size_t cap, size_t* out) {
  return guard([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = hopest::minimum_zero_forcing_number(
        graph->graph, cap == 0 ? hopest::kDefaultZeroForcingCap : cap);
  });
}

// ---- analysis ------------------------------------------------------------

double hopest_ansatz_bound(size_t n, double p, double epsilon, double max_d) {
  if (n < 1) return std::numeric_limits<double>::quiet_NaN();
  return hopest::ansatz_bound(n, {p, max_d, epsilon});
}

hopest_status hopest_critical_length(const double* deltas, size_t n_deltas,
                                     size_t n_sites, double threshold,
                                     size_t* out) {
  return guard([&] {
    require(out != nullptr, "output is null");
    *out = hopest::critical_length(span_of(deltas, n_deltas, "deltas are null"),
                                   n_sites, threshold);
  });
}

hopest_status hopest_config_resolve(const char* config_json, char** out) {
  return guard([&] {
    require(out != nullptr, "output is null");
    const auto config = config_from(config_json);
    config.validate();
    *out = duplicate(hopest::io::config_to_json(config).dump());
  });
}

hopest_status hopest_error_profile(const char* config_json, double epsilon,
                                   unsigned workers, hopest_table** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    const auto config = config_from(config_json);
    *out = new hopest_table{hopest::io::profile_table(
        hopest::error_profile(config, epsilon, workers))};
  });
}

hopest_status hopest_critical_length_sweep(const char* config_json,
                                           double threshold, unsigned workers,
                                           hopest_table** out) {
  return guard([&] {
    require(out != nullptr, "output handle is null");
    const auto config = config_from(config_json);
    *out = new hopest_table{hopest::io::critical_length_table(
        hopest::critical_length_sweep(config, threshold, workers))};
  });
}

hopest_status hopest_topology_compare(const char* config_json,
                                      const char* variants_json, double epsilon,
                                      unsigned workers, hopest_table** out) {
  return guard([&] {
    require(out != nullptr && variants_json != nullptr, "null argument");
    const auto config = config_from(config_json);
    std::vector<std::pair<std::string, hopest::TopologyMode>> variants;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(variants_json);
      for (const auto& v : doc) {
        const std::string topo = v.at("topology").get<std::string>();
        variants.emplace_back(v.value("label", topo),
                              hopest::io::parse_topology(topo));
      }
    } catch (const nlohmann::json::exception& e) {
      throw hopest::ValidationError(std::string("invalid variants: ") +
                                    e.what());
    }
    *out = new hopest_table{hopest::io::topology_table(
        hopest::topology_compare(config, variants, epsilon, workers))};
  });
}

void hopest_table_free(hopest_table* table) { delete table; }

size_t hopest_table_rows(const hopest_table* table) {
  return table ? table->table.rows.size() : 0;
}

size_t hopest_table_columns(const hopest_table* table) {
  return table ? table->table.columns.size() : 0;
}

const char* hopest_table_column_name(const hopest_table* table, size_t column) {
  if (!table || column >= table->table.columns.size()) return nullptr;
  return table->table.columns[column].c_str();
}

double hopest_table_value(const hopest_table* table, size_t row,
                          size_t column) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (!table || row >= table->table.rows.size() ||
      column >= table->table.columns.size())
    return nan;
  const auto& cell = table->table.rows[row][column];
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  if (const auto* z = std::get_if<std::size_t>(&cell))
    return static_cast<double>(*z);
  return nan;
}

hopest_status hopest_table_csv(const hopest_table* table, int header,
                               char** out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = duplicate(table->table.to_csv(header != 0));
  });
}

hopest_status hopest_table_json(const hopest_table* table, char** out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = duplicate(table->table.to_json().dump(2));
  });
}

}  // extern "C"
