#include "zsplines/basis.hpp"

#include <algorithm>

#include "zsplines/errors.hpp"

namespace zsplines {

ReductionSequence reduction_sequence(const LabeledGraph& g) {
  require_valid(g);
  ReductionSequence seq;
  seq.graphs.push_back(normalize(g).graph);
  while (seq.graphs.back().size() > 1) {
    const LabeledGraph& cur = seq.graphs.back();
    auto [next, trace] = reduce(cur, cur.size() - 1);
    seq.graphs.push_back(std::move(next));
    seq.traces.push_back(std::move(trace));
  }
  return seq;
}

Integer kernel_generator(const ReductionSequence& seq, std::size_t i) {
  if (seq.graphs.empty()) throw InvalidArgumentError("kernel_generator: empty sequence");
  const std::size_t n = seq.graphs.front().size();
  if (i < 1 || i > n) throw InvalidArgumentError("kernel_generator: index out of range");
  const LabeledGraph& gi = seq.graphs[n - i];
  const std::size_t last = gi.size() - 1;
  Integer out = gi.vertices[last].m;
  for (const auto& [edge_index, other] : incident_edges(gi, last)) {
    (void)other;
    out = lcm(out, gi.edges[edge_index].r);
  }
  return out;
}

FlowUpBasis flow_up_basis(const LabeledGraph& g) {
  ReductionSequence seq = reduction_sequence(g);
  const std::size_t n = seq.graphs.front().size();

  FlowUpBasis basis;
  for (std::size_t i = 1; i <= n; ++i) {
    Integer li = kernel_generator(seq, i);
    if (li != 0) {
      Spline f(i, 0);
      f[i - 1] = li;
      // Lift through G_{i+1}, ..., G_n, inserting the canonical value at
      // the vertex each step removed (always the current last vertex).
      for (std::size_t j = i + 1; j <= n; ++j) {
        const LabeledGraph& gj = seq.graphs[n - j];
        f = lift(gj, seq.graphs[n - j + 1], gj.size() - 1, f);
      }
      basis.elements.push_back(std::move(f));
    }
    basis.leading_terms.push_back(std::move(li));
  }
  return basis;
}

Integer minimal_leading_term(const LabeledGraph& g, std::size_t i,
                             std::span<const std::size_t> order) {
  require_valid(g);
  const std::size_t n = g.size();
  if (i < 1 || i > n) throw InvalidArgumentError("minimal_leading_term: index out of range");
  if (order.size() + 1 != n) {
    throw InvalidArgumentError("minimal_leading_term: order must list every vertex but v_i");
  }
  std::vector<bool> seen(n, false);
  seen[i - 1] = true;
  for (std::size_t pos : order) {
    if (pos >= n || seen[pos]) {
      throw InvalidArgumentError("minimal_leading_term: order is not a permutation of the "
                                 "other vertices");
    }
    seen[pos] = true;
  }

  LabeledGraph h = g;
  for (std::size_t s = 0; s + 1 < i; ++s) h.vertices[s].m = 0;

  for (std::size_t pos : order) {
    auto idx = h.find_vertex(g.vertices[pos].id);
    if (!idx) throw InternalError("minimal_leading_term: vertex disappeared mid-reduction");
    h = reduce(h, *idx).first;
  }
  return h.vertices.front().m;
}

Integer minimal_leading_term(const LabeledGraph& g, std::size_t i) {
  require_valid(g);
  if (i < 1 || i > g.size()) throw InvalidArgumentError("minimal_leading_term: index out of range");
  std::vector<std::size_t> order;
  for (std::size_t pos = g.size(); pos-- > 0;) {
    if (pos != i - 1) order.push_back(pos);
  }
  return minimal_leading_term(g, i, order);
}

std::size_t rank(const LabeledGraph& g) {
  require_valid(g);
  if (g.size() == 0) return 0;
  ReductionSequence seq = reduction_sequence(g);
  std::size_t count = 0;
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (kernel_generator(seq, i) != 0) ++count;
  }
  return count;
}

}  // namespace zsplines
