// Copyright 2026 The hopest Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hopest/analysis.hpp"
#include "hopest/ensemble.hpp"
#include "hopest/graph.hpp"
#include "hopest/model.hpp"
#include "hopest/spectral.hpp"

namespace hopest::io {

/// printf("%.17g") formatting, independent of the global locale.
std::string format_double(double value);

struct ModelDocument {
  ChainSpec chain;
  PerturbationSpec perturbation;
};

/// {"n_sites": N, "nearest": [...], "perturbation": {"epsilon": e,
/// "edges": [[i, j, d], ...]}} with 1-indexed sites; "perturbation" optional.
ModelDocument parse_model(std::string_view text);
ModelDocument model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const ChainSpec& chain,
                             const PerturbationSpec& pert);

/// Either {"n_vertices": n, "edges": [[i, j], ...]} or a model document.
CouplingGraph parse_graph(std::string_view text);

/// Ensemble config document. Absent members keep the values already in `base`.
EnsembleConfig parse_config(std::string_view text, EnsembleConfig base = {});
void apply_config(const nlohmann::json& doc, EnsembleConfig& config);
nlohmann::json config_to_json(const EnsembleConfig& config);

/// "nnn", "random:<count>" or "file:<path>" (the file holds an edge list or
/// graph document; only the pairs are used).
TopologyMode parse_topology(std::string_view text);

/// Pairs from [[i, j], ...] or [[i, j, d], ...], or a document with "edges".
topology::FixedEdges fixed_edges_from_json(const nlohmann::json& doc);

/// A rectangular result table. Integer cells print without a decimal point,
/// real cells with 17 significant digits, text cells verbatim.
struct Table {
  using Cell = std::variant<double, std::size_t, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string to_csv(bool header = true) const;
  /// Array of objects keyed by column name.
  nlohmann::json to_json() const;
};

/// k,e_k,w1_k,w2_k with squared overlaps at sites 1 and 2.
Table spectrum_table(const SpectralData& s);
/// n,mean_delta,std_delta,bound,n_excluded
Table profile_table(const std::vector<ErrorProfile>& rows);
/// epsilon,n_sites,mean_Lc,std_Lc,n_excluded
Table critical_length_table(const std::vector<CriticalLengthResult>& rows);
/// label,n,mean_delta,std_delta,bound,n_excluded
Table topology_table(const std::vector<LabeledProfile>& profiles);

}  // namespace hopest::io
