#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "zsplines/graph.hpp"
#include "zsplines/spline.hpp"

namespace zsplines {

// One audited reduction event. Vertices are recorded by id so the trace
// stays readable after reindexing.
struct MultiEdgeMergeStep {
  std::string u;
  std::string v;
  std::vector<Integer> merged_labels;
  Integer result_label;
};

struct VertexReductionStep {
  std::string removed;
  // neighbor id -> new vertex label lcm(m_i, gcd(m_v, r_{v v_i}))
  std::vector<std::pair<std::string, Integer>> relabels;
  // new edge (u, v, gcd of the two labels at the removed vertex)
  std::vector<std::tuple<std::string, std::string, Integer>> new_edges;
};

struct ZeroVertexReductionStep {
  std::string removed;
  // neighbor id -> new vertex label lcm(m_i, r_{v v_i})
  std::vector<std::pair<std::string, Integer>> relabels;
};

using ReductionStep = std::variant<MultiEdgeMergeStep, VertexReductionStep, ZeroVertexReductionStep>;

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  // Graph after each composite step; every snapshot is simple.
  std::vector<LabeledGraph> snapshots;
};

// Replaces the parallel family between u and v by one edge labeled with the
// family lcm. Requires at least two parallel edges; everything else is
// untouched, and the spline set is unchanged.
std::pair<LabeledGraph, MultiEdgeMergeStep> merge_multiedges(const LabeledGraph& g, std::size_t u,
                                                             std::size_t v);

// Raw vertex reduction: removes v, relabels each neighbor v_i with
// lcm(m_i, gcd(m_v, r_{v v_i})), and joins every neighbor pair by a new
// edge labeled gcd of the two removed labels (possibly parallel to an
// existing edge). Requires no parallel edges at v; normalize first.
std::pair<LabeledGraph, VertexReductionStep> vertex_reduce(const LabeledGraph& g, std::size_t v);

// Composite reduction step: normalize, vertex-reduce at v, then merge the
// parallel families the reduction created and drop unit-labeled edges.
// The result is a simple graph with the same splines up to dropping
// coordinate v.
std::pair<LabeledGraph, ReductionTrace> reduce(const LabeledGraph& g, std::size_t v);

// Vertex removal valid when the surrounding spline context has f_v = 0:
// each neighbor is relabeled lcm(m_i, r_{v v_i}) and no edges are added.
std::pair<LabeledGraph, ZeroVertexReductionStep> zero_vertex_reduce(const LabeledGraph& g,
                                                                    std::size_t v);

// Section of the projection that drops coordinate v: inserts at v the
// canonical solution of {x = 0 mod m_v} + {x = g_u mod r_{vu}} over the
// edges of g at v. Solvability is guaranteed when reduced == reduce(g, v)
// and g_red is a spline on it; an incompatible system means a bug here.
Spline lift(const LabeledGraph& g, const LabeledGraph& reduced, std::size_t v,
            const Spline& g_red);

}  // namespace zsplines
