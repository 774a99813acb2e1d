#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zsplines/crt.hpp"
#include "zsplines/graph.hpp"
#include "zsplines/integer.hpp"

namespace zsplines {

// Vertex labeling f, entry k for vertex position k (f_{v_{k+1}}).
using Spline = std::vector<Integer>;

struct SplineViolation {
  enum class Kind { Vertex, Edge };
  Kind kind;
  std::size_t index;  // vertex position or edge index
  std::string message;
};

// Checks f_v in m_v Z at every vertex and f_u - f_v in r Z on every edge
// (labels 0 read as exact equations). Reports the lowest-index failure,
// vertices before edges. Throws on a length mismatch.
std::optional<SplineViolation> spline_violation(const LabeledGraph& g, const Spline& f);

bool is_spline(const LabeledGraph& g, const Spline& f);

// Leading data of a flow-up class: the 1-based position and value of the
// first nonzero entry. leading_index is empty for the trivial spline.
struct FlowUpInfo {
  std::optional<std::size_t> leading_index;
  Integer leading_term;
};

FlowUpInfo flow_up_info(const Spline& f);

// Extends a spline on the induced subgraph over S to the whole graph:
// entries in S are scaled by the product of all boundary-edge labels
// (each edge of g with exactly one endpoint in S, multiset), entries
// outside S become 0. The result is always a spline on g.
Spline extend_from_subgraph(const LabeledGraph& g, std::span<const std::size_t> s,
                            const Spline& sub);

// Truncation to the first k coordinates; a spline on the induced subgraph
// over v_1..v_k whenever f is a spline on g.
Spline project(const LabeledGraph& g, std::size_t k, const Spline& f);

// Why a lift across the last vertex does not exist: the two congruences
// that cannot hold together (indices into the assembled system, where
// index 0 is the vertex-module constraint of v_n).
struct LiftObstruction {
  std::size_t i;
  std::size_t j;
  Congruence ci;
  Congruence cj;
};

struct SupergraphLift {
  std::optional<Spline> spline;
  std::optional<LiftObstruction> obstruction;
};

// Given a spline on the induced subgraph over v_1..v_{n-1}, solves the
// congruence system for f_{v_n} (0 mod m_{v_n}, plus one congruence per
// edge at v_n) and appends the canonical least-nonnegative solution.
// An unsolvable system is reported as an obstruction, not an error.
SupergraphLift lift_to_supergraph(const LabeledGraph& g, const Spline& sub);

}  // namespace zsplines
