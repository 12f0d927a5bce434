#pragma once

#include <istream>
#include <string>

#include "radchaos/types.hpp"

namespace radchaos {

// Hypergraph text format: header "n d", then one line per edge holding d
// vertex indices and a weight; '#'-prefixed lines are comments.
WeightedHypergraph parse_hypergraph(std::istream& in);
std::string serialize_hypergraph(const WeightedHypergraph& h);

// Order-2 tensors as CSV, rows = first index.
CoeffTensor parse_tensor_csv(std::istream& in);
std::string serialize_tensor_csv(const CoeffTensor& a);

// Order-d tensors as JSON {"dims": [...], "values": [row-major]}.
CoeffTensor parse_tensor_json(std::istream& in);
std::string serialize_tensor_json(const CoeffTensor& a);

/// Loads a tensor choosing the format by extension (.json vs csv); a leading
/// '{' also selects JSON.
CoeffTensor load_tensor(const std::string& path);
WeightedHypergraph load_hypergraph(const std::string& path);

}  // namespace radchaos
