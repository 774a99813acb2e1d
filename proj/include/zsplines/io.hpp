#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zsplines/basis.hpp"
#include "zsplines/graph.hpp"
#include "zsplines/lattice.hpp"
#include "zsplines/reduction.hpp"
#include "zsplines/spline.hpp"

namespace zsplines::io {

// Strict decimal integer parse; throws InvalidArgumentError on anything else.
Integer parse_integer(const std::string& text);

// Graph document: {"vertices": [{"id", "m"}...], "edges": [{"u", "v", "r"}...]}
// with labels as decimal strings (numbers are accepted on input) and the
// vertex array order defining the flow-up order. Endpoints are vertex ids.
LabeledGraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const LabeledGraph& g);

LabeledGraph load_graph_file(const std::string& path);

Spline spline_from_strings(const std::vector<std::string>& entries);
nlohmann::json spline_to_json(const Spline& f);
// "(10, 90, 42)" in vertex order v_1..v_n.
std::string format_spline(const Spline& f);

nlohmann::json basis_to_json(const FlowUpBasis& basis);
nlohmann::json trace_to_json(const ReductionTrace& trace);
nlohmann::json lattice_to_json(const IntegerLattice& lattice);

}  // namespace zsplines::io
