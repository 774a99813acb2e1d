#include "zsplines/reduction.hpp"

#include <algorithm>
#include <map>

#include "zsplines/crt.hpp"
#include "zsplines/errors.hpp"

namespace zsplines {

namespace {

void check_vertex(const LabeledGraph& g, std::size_t v, const char* who) {
  if (v >= g.size()) {
    throw UnknownVertexError(std::string(who) + ": vertex index " + std::to_string(v) +
                             " out of range");
  }
}

LabeledGraph erase_vertex(const LabeledGraph& g, std::size_t v) {
  LabeledGraph out;
  out.vertices.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != v) out.vertices.push_back(g.vertices[i]);
  }
  for (const Edge& e : g.edges) {
    if (e.u == v || e.v == v) continue;
    out.edges.push_back(Edge{e.u - (e.u > v ? 1 : 0), e.v - (e.v > v ? 1 : 0), e.r});
  }
  return out;
}

}  // namespace

std::pair<LabeledGraph, MultiEdgeMergeStep> merge_multiedges(const LabeledGraph& g, std::size_t u,
                                                             std::size_t v) {
  require_valid(g);
  check_vertex(g, u, "merge_multiedges");
  check_vertex(g, v, "merge_multiedges");
  const std::size_t lo = std::min(u, v), hi = std::max(u, v);

  std::vector<Integer> family;
  for (const Edge& e : g.edges) {
    if (std::min(e.u, e.v) == lo && std::max(e.u, e.v) == hi) family.push_back(e.r);
  }
  if (family.size() < 2) {
    throw NotMultipleError("merge_multiedges: fewer than two parallel edges between vertices");
  }

  Integer merged = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) merged = lcm(merged, family[i]);

  LabeledGraph out;
  out.vertices = g.vertices;
  bool placed = false;
  for (const Edge& e : g.edges) {
    if (std::min(e.u, e.v) == lo && std::max(e.u, e.v) == hi) {
      if (!placed) {
        out.edges.push_back(Edge{lo, hi, merged});
        placed = true;
      }
      continue;
    }
    out.edges.push_back(e);
  }
  MultiEdgeMergeStep step{g.vertices[lo].id, g.vertices[hi].id, std::move(family), merged};
  return {std::move(out), std::move(step)};
}

std::pair<LabeledGraph, VertexReductionStep> vertex_reduce(const LabeledGraph& g, std::size_t v) {
  require_valid(g);
  check_vertex(g, v, "vertex_reduce");

  // (neighbor, label) pairs, ascending by neighbor; self-loops at v carry
  // no constraint and vanish with the vertex.
  std::vector<std::pair<std::size_t, Integer>> neighbors;
  for (const auto& [edge_index, other] : incident_edges(g, v)) {
    neighbors.emplace_back(other, g.edges[edge_index].r);
  }
  std::sort(neighbors.begin(), neighbors.end());
  for (std::size_t i = 0; i + 1 < neighbors.size(); ++i) {
    if (neighbors[i].first == neighbors[i + 1].first) {
      throw InvalidArgumentError("vertex_reduce: parallel edges incident to the vertex; "
                                 "normalize first");
    }
  }

  LabeledGraph out = erase_vertex(g, v);
  VertexReductionStep step;
  step.removed = g.vertices[v].id;

  const Integer& mv = g.vertices[v].m;
  auto shifted = [v](std::size_t i) { return i - (i > v ? 1 : 0); };
  for (const auto& [n, r] : neighbors) {
    Integer relabeled = lcm(g.vertices[n].m, gcd(mv, r));
    out.vertices[shifted(n)].m = relabeled;
    step.relabels.emplace_back(g.vertices[n].id, std::move(relabeled));
  }
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
      Integer label = gcd(neighbors[i].second, neighbors[j].second);
      out.edges.push_back(
          Edge{shifted(neighbors[i].first), shifted(neighbors[j].first), label});
      step.new_edges.emplace_back(g.vertices[neighbors[i].first].id,
                                  g.vertices[neighbors[j].first].id, std::move(label));
    }
  }
  return {std::move(out), std::move(step)};
}

std::pair<LabeledGraph, ReductionTrace> reduce(const LabeledGraph& g, std::size_t v) {
  require_valid(g);
  check_vertex(g, v, "reduce");

  ReductionTrace trace;
  NormalizeResult pre = normalize(g);
  for (const EdgeMergeRecord& m : pre.merges) {
    trace.steps.push_back(MultiEdgeMergeStep{g.vertices[m.u].id, g.vertices[m.v].id,
                                             m.merged_labels, m.result_label});
  }

  auto [mid, vstep] = vertex_reduce(pre.graph, v);
  trace.steps.push_back(std::move(vstep));

  NormalizeResult post = normalize(mid);
  for (const EdgeMergeRecord& m : post.merges) {
    trace.steps.push_back(MultiEdgeMergeStep{mid.vertices[m.u].id, mid.vertices[m.v].id,
                                             m.merged_labels, m.result_label});
  }
  trace.snapshots.push_back(post.graph);
  return {std::move(post.graph), std::move(trace)};
}

std::pair<LabeledGraph, ZeroVertexReductionStep> zero_vertex_reduce(const LabeledGraph& g,
                                                                    std::size_t v) {
  require_valid(g);
  check_vertex(g, v, "zero_vertex_reduce");

  LabeledGraph out = erase_vertex(g, v);
  auto shifted = [v](std::size_t i) { return i - (i > v ? 1 : 0); };

  std::map<std::size_t, Integer> relabels;  // shifted neighbor -> new label
  for (const auto& [edge_index, other] : incident_edges(g, v)) {
    std::size_t pos = shifted(other);
    Integer base = relabels.count(pos) ? relabels[pos] : g.vertices[other].m;
    relabels[pos] = lcm(base, g.edges[edge_index].r);
  }
  ZeroVertexReductionStep step;
  step.removed = g.vertices[v].id;
  for (const auto& [pos, label] : relabels) {
    out.vertices[pos].m = label;
    step.relabels.emplace_back(out.vertices[pos].id, label);
  }
  return {std::move(out), std::move(step)};
}

Spline lift(const LabeledGraph& g, const LabeledGraph& reduced, std::size_t v,
            const Spline& g_red) {
  require_valid(g);
  check_vertex(g, v, "lift");
  if (reduced.size() + 1 != g.size() || g_red.size() != reduced.size()) {
    throw InvalidArgumentError("lift: reduced graph or spline has the wrong size");
  }
  if (auto violation = spline_violation(reduced, g_red)) {
    throw InvalidArgumentError("lift: input is not a spline on the reduced graph: " +
                               violation->message);
  }

  auto shifted = [v](std::size_t i) { return i - (i > v ? 1 : 0); };
  std::vector<Congruence> system;
  system.push_back(Congruence{0, g.vertices[v].m});
  for (const auto& [edge_index, other] : incident_edges(g, v)) {
    system.push_back(Congruence{g_red[shifted(other)], g.edges[edge_index].r});
  }

  CrtSystemResult solved = crt_system(system);
  if (!solved.solution) {
    throw InternalError("lift: congruence system at \"" + g.vertices[v].id +
                        "\" is unsolvable; reduction invariant violated");
  }
  Spline out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < v; ++i) out.push_back(g_red[i]);
  out.push_back(solved.solution->residue);
  for (std::size_t i = v; i < g_red.size(); ++i) out.push_back(g_red[i]);
  return out;
}

}  // namespace zsplines
