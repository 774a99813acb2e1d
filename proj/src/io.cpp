#include "zsplines/io.hpp"

#include <fstream>

#include "zsplines/errors.hpp"

namespace zsplines::io {

using nlohmann::json;

Integer parse_integer(const std::string& text) {
  if (text.empty()) throw InvalidArgumentError("empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw InvalidArgumentError("bad integer literal \"" + text + "\"");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidArgumentError("bad integer literal \"" + text + "\"");
    }
  }
  return Integer(text);
}

namespace {

Integer label_from_json(const json& value, const char* what) {
  if (value.is_string()) return parse_integer(value.get<std::string>());
  if (value.is_number_integer()) {
    return Integer(value.get<long long>());
  }
  if (value.is_number_unsigned()) {
    return Integer(value.get<unsigned long long>());
  }
  throw InvalidArgumentError(std::string(what) + " must be a decimal string or integer");
}

}  // namespace

LabeledGraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InvalidArgumentError("graph document needs a \"vertices\" array");
  }
  LabeledGraph g;
  for (const json& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("m")) {
      throw InvalidArgumentError("vertex entries need \"id\" and \"m\"");
    }
    g.vertices.push_back(Vertex{v["id"].get<std::string>(), label_from_json(v["m"], "vertex label")});
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InvalidArgumentError("\"edges\" must be an array");
    for (const json& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("r") ||
          !e["u"].is_string() || !e["v"].is_string()) {
        throw InvalidArgumentError("edge entries need \"u\", \"v\" and \"r\"");
      }
      auto u = g.find_vertex(e["u"].get<std::string>());
      auto v = g.find_vertex(e["v"].get<std::string>());
      if (!u || !v) {
        throw InvalidArgumentError("edge endpoint \"" + (u ? e["v"] : e["u"]).get<std::string>() +
                                   "\" is not a vertex id");
      }
      g.edges.push_back(Edge{*u, *v, label_from_json(e["r"], "edge label")});
    }
  }
  require_valid(g);
  return g;
}

json graph_to_json(const LabeledGraph& g) {
  json vertices = json::array();
  for (const Vertex& v : g.vertices) {
    vertices.push_back({{"id", v.id}, {"m", v.m.str()}});
  }
  json edges = json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({{"u", g.vertices[e.u].id}, {"v", g.vertices[e.v].id}, {"r", e.r.str()}});
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

LabeledGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open graph file \"" + path + "\"");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw InvalidArgumentError("graph file \"" + path + "\" is not valid JSON: " + err.what());
  }
  return graph_from_json(doc);
}

Spline spline_from_strings(const std::vector<std::string>& entries) {
  Spline f;
  f.reserve(entries.size());
  for (const std::string& s : entries) f.push_back(parse_integer(s));
  return f;
}

json spline_to_json(const Spline& f) {
  json out = json::array();
  for (const Integer& x : f) out.push_back(x.str());
  return out;
}

std::string format_spline(const Spline& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += f[i].str();
  }
  out += ")";
  return out;
}

json basis_to_json(const FlowUpBasis& basis) {
  json elements = json::array();
  for (const Spline& f : basis.elements) elements.push_back(spline_to_json(f));
  json leading = json::array();
  for (const Integer& t : basis.leading_terms) leading.push_back(t.str());
  return json{{"elements", elements}, {"leading_terms", leading}};
}

namespace {

json step_to_json(const ReductionStep& step) {
  if (const auto* merge = std::get_if<MultiEdgeMergeStep>(&step)) {
    json labels = json::array();
    for (const Integer& r : merge->merged_labels) labels.push_back(r.str());
    return json{{"kind", "multi_edge_merge"},
                {"u", merge->u},
                {"v", merge->v},
                {"merged_labels", labels},
                {"result_label", merge->result_label.str()}};
  }
  if (const auto* vr = std::get_if<VertexReductionStep>(&step)) {
    json relabels = json::array();
    for (const auto& [id, m] : vr->relabels) relabels.push_back({{"id", id}, {"m", m.str()}});
    json new_edges = json::array();
    for (const auto& [u, v, r] : vr->new_edges) {
      new_edges.push_back({{"u", u}, {"v", v}, {"r", r.str()}});
    }
    return json{{"kind", "vertex_reduction"},
                {"removed", vr->removed},
                {"relabels", relabels},
                {"new_edges", new_edges}};
  }
  const auto& zr = std::get<ZeroVertexReductionStep>(step);
  json relabels = json::array();
  for (const auto& [id, m] : zr.relabels) relabels.push_back({{"id", id}, {"m", m.str()}});
  return json{{"kind", "zero_vertex_reduction"}, {"removed", zr.removed}, {"relabels", relabels}};
}

}  // namespace

json trace_to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& s : trace.steps) steps.push_back(step_to_json(s));
  json snapshots = json::array();
  for (const LabeledGraph& g : trace.snapshots) snapshots.push_back(graph_to_json(g));
  return json{{"steps", steps}, {"snapshots", snapshots}};
}

json lattice_to_json(const IntegerLattice& lattice) {
  json rows = json::array();
  for (const auto& row : lattice.hermite_form()) {
    json r = json::array();
    for (const Integer& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return json{{"dimension", lattice.dimension()}, {"hnf", rows}};
}

}  // namespace zsplines::io
