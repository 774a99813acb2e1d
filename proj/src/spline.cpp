#include "zsplines/spline.hpp"

#include <algorithm>

#include "zsplines/errors.hpp"

namespace zsplines {

std::optional<SplineViolation> spline_violation(const LabeledGraph& g, const Spline& f) {
  require_valid(g);
  if (f.size() != g.size()) {
    throw InvalidArgumentError("spline_violation: entry count does not match vertex count");
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!divides(g.vertices[k].m, f[k])) {
      return SplineViolation{SplineViolation::Kind::Vertex, k,
                             "vertex \"" + g.vertices[k].id + "\": " + g.vertices[k].m.str() +
                                 " does not divide " + f[k].str()};
    }
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (!divides(e.r, f[e.u] - f[e.v])) {
      return SplineViolation{SplineViolation::Kind::Edge, k,
                             "edge " + g.vertices[e.u].id + "-" + g.vertices[e.v].id + ": " +
                                 e.r.str() + " does not divide " + Integer(f[e.u] - f[e.v]).str()};
    }
  }
  return std::nullopt;
}

bool is_spline(const LabeledGraph& g, const Spline& f) { return !spline_violation(g, f); }

FlowUpInfo flow_up_info(const Spline& f) {
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] != 0) return FlowUpInfo{k + 1, f[k]};
  }
  return FlowUpInfo{std::nullopt, 0};
}

Spline extend_from_subgraph(const LabeledGraph& g, std::span<const std::size_t> s,
                            const Spline& sub) {
  LabeledGraph subgraph = induced_subgraph(g, s);
  if (auto v = spline_violation(subgraph, sub)) {
    throw InvalidArgumentError("extend_from_subgraph: input is not a spline on the subgraph: " +
                               v->message);
  }

  std::vector<std::size_t> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<bool> in_s(g.size(), false);
  for (std::size_t idx : sorted) in_s[idx] = true;

  Integer a = 1;
  for (const Edge& e : g.edges) {
    if (in_s[e.u] != in_s[e.v]) a *= e.r;
  }

  Spline out(g.size(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) out[sorted[i]] = a * sub[i];
  return out;
}

Spline project(const LabeledGraph& g, std::size_t k, const Spline& f) {
  require_valid(g);
  if (k < 1 || k > g.size()) throw InvalidArgumentError("project: k out of range");
  if (f.size() != g.size()) throw InvalidArgumentError("project: entry count mismatch");
  return Spline(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
}

SupergraphLift lift_to_supergraph(const LabeledGraph& g, const Spline& sub) {
  require_valid(g);
  if (g.size() == 0) throw InvalidArgumentError("lift_to_supergraph: empty graph");
  if (sub.size() + 1 != g.size()) {
    throw InvalidArgumentError("lift_to_supergraph: expected one entry per vertex but the last");
  }
  const std::size_t last = g.size() - 1;
  {
    std::vector<std::size_t> keep(last);
    for (std::size_t i = 0; i < last; ++i) keep[i] = i;
    LabeledGraph head = induced_subgraph(g, keep);
    if (auto v = spline_violation(head, sub)) {
      throw InvalidArgumentError("lift_to_supergraph: input is not a spline on v_1..v_{n-1}: " +
                                 v->message);
    }
  }

  std::vector<Congruence> system;
  system.push_back(Congruence{0, g.vertices[last].m});
  for (const auto& [edge_index, neighbor] : incident_edges(g, last)) {
    system.push_back(Congruence{sub[neighbor], g.edges[edge_index].r});
  }

  CrtSystemResult solved = crt_system(system);
  if (!solved.solution) {
    return SupergraphLift{std::nullopt,
                          LiftObstruction{solved.bad_i, solved.bad_j, system[solved.bad_i],
                                          system[solved.bad_j]}};
  }
  Spline out = sub;
  out.push_back(solved.solution->residue);
  return SupergraphLift{std::move(out), std::nullopt};
}

}  // namespace zsplines
