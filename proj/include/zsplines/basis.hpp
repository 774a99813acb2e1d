#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zsplines/graph.hpp"
#include "zsplines/reduction.hpp"
#include "zsplines/spline.hpp"

namespace zsplines {

// Snapshots G_n = normalize(G), G_{n-1}, ..., G_1 where G_{i-1} removes the
// last vertex of G_i via reduce. graphs[k] has n-k vertices.
struct ReductionSequence {
  std::vector<LabeledGraph> graphs;
  std::vector<ReductionTrace> traces;
};

ReductionSequence reduction_sequence(const LabeledGraph& g);

// Generator of ker(psi_i): lcm of the vertex label of v_i in G_i with the
// labels of all edges at v_i in G_i. Zero exactly when that kernel is
// trivial. i is 1-based.
Integer kernel_generator(const ReductionSequence& seq, std::size_t i);

// Triangular generating set: elements[j] has zeros before its leading index
// and the corresponding nonzero leading term on the diagonal. Indices whose
// kernel is trivial (leading term 0) contribute no element, so
// leading_terms always has one entry per vertex while elements may be
// shorter.
struct FlowUpBasis {
  std::vector<Spline> elements;
  std::vector<Integer> leading_terms;
};

// Builds the flow-up basis by seeding (0,...,0,L_i) on G_i and lifting
// through the reduction sequence with canonical congruence solutions.
FlowUpBasis flow_up_basis(const LabeledGraph& g);

// Smallest positive leading term of any spline with zeros before position i
// (1-based): zero out the labels of v_1..v_{i-1}, reduce every other vertex
// away, and read the label of the remaining vertex. The result does not
// depend on the reduction order; the default order is descending.
Integer minimal_leading_term(const LabeledGraph& g, std::size_t i);

// Same, with an explicit reduction order given as original vertex positions
// (a permutation of all positions except i-1).
Integer minimal_leading_term(const LabeledGraph& g, std::size_t i,
                             std::span<const std::size_t> order);

// Size of a minimum generating set: the number of nontrivial kernels.
std::size_t rank(const LabeledGraph& g);

}  // namespace zsplines
