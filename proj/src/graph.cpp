#include "zsplines/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zsplines/errors.hpp"

namespace zsplines {

std::optional<std::size_t> LabeledGraph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<ValidationError> validate(const LabeledGraph& g) {
  std::set<std::string_view> seen;
  for (const Vertex& v : g.vertices) {
    if (v.id.empty()) return ValidationError{"empty vertex id"};
    if (!seen.insert(v.id).second) return ValidationError{"duplicate vertex id \"" + v.id + "\""};
    if (v.m < 0) return ValidationError{"negative vertex label at \"" + v.id + "\""};
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.u >= g.size() || e.v >= g.size()) {
      return ValidationError{"edge " + std::to_string(k) + " has an endpoint out of range"};
    }
    if (e.r < 0) return ValidationError{"negative edge label on edge " + std::to_string(k)};
  }
  return std::nullopt;
}

void require_valid(const LabeledGraph& g) {
  if (auto err = validate(g)) throw InvalidArgumentError("invalid graph: " + err->message);
}

NormalizeResult normalize(const LabeledGraph& g) {
  require_valid(g);
  NormalizeResult out;
  out.graph.vertices = g.vertices;

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Integer>> families;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;  // self-loop: f_v - f_v = 0 always
    if (e.r == 1) continue;    // zero edge module: no condition
    families[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.r);
  }
  for (auto& [pair, labels] : families) {
    Integer merged = labels.front();
    for (std::size_t i = 1; i < labels.size(); ++i) merged = lcm(merged, labels[i]);
    if (labels.size() > 1) {
      out.merges.push_back(EdgeMergeRecord{pair.first, pair.second, labels, merged});
    }
    out.graph.edges.push_back(Edge{pair.first, pair.second, std::move(merged)});
  }
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const std::size_t> keep) {
  require_valid(g);
  if (keep.empty()) throw InvalidArgumentError("induced_subgraph: empty selection");
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= g.size()) throw InvalidArgumentError("induced_subgraph: index out of range");

  std::vector<std::size_t> position(g.size(), g.size());
  LabeledGraph sub;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    position[sorted[i]] = i;
    sub.vertices.push_back(g.vertices[sorted[i]]);
  }
  for (const Edge& e : g.edges) {
    if (position[e.u] != g.size() && position[e.v] != g.size()) {
      sub.edges.push_back(Edge{position[e.u], position[e.v], e.r});
    }
  }
  return sub;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  require_valid(a);
  require_valid(b);
  bool collision = false;
  for (const Vertex& v : b.vertices) {
    if (a.find_vertex(v.id)) {
      collision = true;
      break;
    }
  }
  LabeledGraph out;
  out.vertices.reserve(a.size() + b.size());
  for (const Vertex& v : a.vertices) {
    out.vertices.push_back(Vertex{collision ? "a:" + v.id : v.id, v.m});
  }
  for (const Vertex& v : b.vertices) {
    out.vertices.push_back(Vertex{collision ? "b:" + v.id : v.id, v.m});
  }
  out.edges = a.edges;
  for (const Edge& e : b.edges) {
    out.edges.push_back(Edge{e.u + a.size(), e.v + a.size(), e.r});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> incident_edges(const LabeledGraph& g,
                                                                std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.u == e.v) continue;
    if (e.u == v) out.emplace_back(k, e.v);
    else if (e.v == v) out.emplace_back(k, e.u);
  }
  return out;
}

}  // namespace zsplines
