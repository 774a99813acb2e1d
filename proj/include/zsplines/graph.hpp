#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsplines/integer.hpp"

namespace zsplines {

// Vertex carrying the module coefficient m: the vertex module is mZ,
// so m == 0 pins the spline entry to 0 and m == 1 leaves it free.
struct Vertex {
  std::string id;
  Integer m;

  bool operator==(const Vertex&) const = default;
};

// Undirected edge with modulus r: the edge module is Z/rZ, so r == 0
// forces equal endpoint values and r == 1 imposes nothing.
struct Edge {
  std::size_t u;
  std::size_t v;
  Integer r;

  bool operator==(const Edge&) const = default;
};

// Edge-labeled multigraph. The vertex array order is significant: position
// k holds the (k+1)-th vertex of the flow-up order, bottom first.
struct LabeledGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> find_vertex(std::string_view id) const;

  bool operator==(const LabeledGraph&) const = default;
};

struct ValidationError {
  std::string message;
};

// First violated type invariant, if any: duplicate/empty id, edge endpoint
// out of range, or a negative label.
std::optional<ValidationError> validate(const LabeledGraph& g);

// Throws InvalidArgumentError when validate reports a problem.
void require_valid(const LabeledGraph& g);

struct EdgeMergeRecord {
  std::size_t u;
  std::size_t v;
  std::vector<Integer> merged_labels;
  Integer result_label;
};

struct NormalizeResult {
  LabeledGraph graph;
  std::vector<EdgeMergeRecord> merges;
};

// Drops self-loops and unit-labeled edges (both constraint-free), then
// replaces each parallel family by one edge labeled with the family lcm.
// Output edges are canonicalized to u < v and sorted; the spline set is
// unchanged. Edges labeled 0 are genuine constraints and are kept.
NormalizeResult normalize(const LabeledGraph& g);

// Subgraph induced by the given vertex positions, in inherited order.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const std::size_t> keep);

// Concatenates vertex lists (a first) and shifts b's edge indices. Colliding
// ids are resolved by prefixing a's ids with "a:" and b's with "b:".
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

// Edges incident to v, as (edge index, neighbor) pairs; self-loops excluded.
std::vector<std::pair<std::size_t, std::size_t>> incident_edges(const LabeledGraph& g,
                                                                std::size_t v);

}  // namespace zsplines
