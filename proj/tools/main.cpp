// zsplines command line: verify splines, compute flow-up bases and reduced
// graphs, and cross-check everything against the lattice oracle.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsplines/basis.hpp"
#include "zsplines/errors.hpp"
#include "zsplines/io.hpp"
#include "zsplines/lattice.hpp"
#include "zsplines/reduction.hpp"
#include "zsplines/spline.hpp"

namespace {

using nlohmann::json;
using namespace zsplines;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

bool machine_format(const std::string& format) {
  if (format == "machine") return true;
  if (format == "human") return false;
  throw InvalidArgumentError("unknown format \"" + format + "\" (human|machine)");
}

void print_graph_human(const LabeledGraph& g) {
  std::cout << "vertices:\n";
  for (const Vertex& v : g.vertices) std::cout << "  " << v.id << "  m=" << v.m << "\n";
  std::cout << "edges:\n";
  for (const Edge& e : g.edges) {
    std::cout << "  " << g.vertices[e.u].id << " -- " << g.vertices[e.v].id << "  r=" << e.r
              << "\n";
  }
}

std::size_t resolve_vertex(const LabeledGraph& g, const std::string& id) {
  auto idx = g.find_vertex(id);
  if (!idx) throw UnknownVertexError("no vertex with id \"" + id + "\"");
  return *idx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extending generalized splines over Z on edge-labeled graphs"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  std::string graph_path, format = "human", vertex_id, subset_csv;
  std::vector<std::string> entries;
  std::size_t index = 1;
  std::uint64_t budget = EnumerateOptions{}.budget;
  bool with_trace = false, use_enumeration = false;

  auto add_graph_arg = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_path, "graph document (JSON)")->required();
    cmd->add_option("--format", format, "output format: human|machine");
  };

  auto* verify = app.add_subcommand("verify", "check that a vector is a spline");
  add_graph_arg(verify);
  verify->add_option("entries", entries, "spline entries, one decimal per vertex")->required();
  verify->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    Spline f = io::spline_from_strings(entries);
    auto violation = spline_violation(g, f);
    if (machine_format(format)) {
      json out{{"ok", !violation}};
      if (violation) out["violation"] = violation->message;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << (violation ? violation->message : "ok") << "\n";
    }
    if (violation) exit_code = kExitFalse;
  });

  auto* basis_cmd = app.add_subcommand("basis", "flow-up basis via graph reduction");
  add_graph_arg(basis_cmd);
  basis_cmd->add_flag("--trace", with_trace, "also print the reduction trace");
  basis_cmd->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    FlowUpBasis basis = flow_up_basis(g);
    if (machine_format(format)) {
      json out = io::basis_to_json(basis);
      if (with_trace) {
        ReductionSequence seq = reduction_sequence(g);
        json traces = json::array();
        for (const ReductionTrace& t : seq.traces) traces.push_back(io::trace_to_json(t));
        out["traces"] = traces;
      }
      std::cout << out.dump() << "\n";
      return;
    }
    std::cout << "# spline entries are listed in vertex order v_1..v_n"
                 " (column notation reads bottom to top)\n";
    std::size_t shown = 0;
    for (std::size_t i = 0; i < basis.leading_terms.size(); ++i) {
      if (basis.leading_terms[i] == 0) continue;
      std::cout << "F(" << i + 1 << ") = " << io::format_spline(basis.elements[shown++]) << "\n";
    }
    if (with_trace) {
      ReductionSequence seq = reduction_sequence(g);
      for (const ReductionTrace& t : seq.traces) std::cout << io::trace_to_json(t).dump() << "\n";
    }
  });

  auto* minlead = app.add_subcommand("minlead", "minimal leading term at a flow-up index");
  add_graph_arg(minlead);
  minlead->add_option("index", index, "1-based flow-up index")->required();
  minlead->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    std::cout << minimal_leading_term(g, index) << "\n";
  });

  auto* rank_cmd = app.add_subcommand("rank", "rank of the spline module");
  add_graph_arg(rank_cmd);
  rank_cmd->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    std::cout << rank(g) << "\n";
  });

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced graph at a vertex");
  add_graph_arg(reduce_cmd);
  reduce_cmd->add_option("vertex", vertex_id, "vertex id to reduce")->required();
  reduce_cmd->add_flag("--trace", with_trace, "also print the reduction trace");
  reduce_cmd->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    auto [reduced, trace] = reduce(g, resolve_vertex(g, vertex_id));
    if (machine_format(format)) {
      json out{{"graph", io::graph_to_json(reduced)}};
      if (with_trace) out["trace"] = io::trace_to_json(trace);
      std::cout << out.dump() << "\n";
    } else {
      print_graph_human(reduced);
      if (with_trace) std::cout << io::trace_to_json(trace).dump() << "\n";
    }
  });

  auto* oracle = app.add_subcommand("oracle-check",
                                    "compare the flow-up basis lattice with the oracle lattice");
  add_graph_arg(oracle);
  oracle->add_option("--budget", budget, "enumeration budget (candidate vectors)");
  oracle->add_flag("--enumerate", use_enumeration, "use the enumeration oracle");
  oracle->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    FlowUpBasis basis = flow_up_basis(g);
    IntegerMatrix rows;
    for (const Spline& f : basis.elements) rows.push_back(f);
    IntegerLattice from_basis(g.size(), std::move(rows));
    IntegerLattice from_oracle = use_enumeration
                                     ? spline_lattice_enumerate(g, EnumerateOptions{budget})
                                     : spline_lattice_kernel(g);
    bool equal = lattice_equal(from_basis, from_oracle);
    if (machine_format(format)) {
      std::cout << json{{"equal", equal}}.dump() << "\n";
    } else {
      std::cout << (equal ? "equal" : "different") << "\n";
    }
    if (!equal) exit_code = kExitFalse;
  });

  auto* extend = app.add_subcommand("extend", "extend a subgraph spline by the boundary product");
  add_graph_arg(extend);
  extend->add_option("--subset", subset_csv, "comma-separated vertex ids of the subgraph")
      ->required();
  extend->add_option("entries", entries, "spline entries on the subgraph, in inherited order")
      ->required();
  extend->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    std::vector<std::size_t> subset;
    std::string current;
    for (char c : subset_csv + ",") {
      if (c == ',') {
        if (!current.empty()) subset.push_back(resolve_vertex(g, current));
        current.clear();
      } else {
        current += c;
      }
    }
    Spline extended = extend_from_subgraph(g, subset, io::spline_from_strings(entries));
    if (machine_format(format)) {
      std::cout << io::spline_to_json(extended).dump() << "\n";
    } else {
      std::cout << io::format_spline(extended) << "\n";
    }
  });

  auto* project_cmd = app.add_subcommand("project", "truncate a spline to the first k vertices");
  add_graph_arg(project_cmd);
  project_cmd->add_option("k", index, "number of leading vertices to keep")->required();
  project_cmd->add_option("entries", entries, "spline entries, one decimal per vertex")
      ->required();
  project_cmd->callback([&] {
    LabeledGraph g = io::load_graph_file(graph_path);
    Spline f = io::spline_from_strings(entries);
    if (auto violation = spline_violation(g, f)) {
      throw InvalidArgumentError("input is not a spline: " + violation->message);
    }
    Spline truncated = project(g, index, f);
    if (machine_format(format)) {
      std::cout << io::spline_to_json(truncated).dump() << "\n";
    } else {
      std::cout << io::format_spline(truncated) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
