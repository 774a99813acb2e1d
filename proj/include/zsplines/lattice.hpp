#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zsplines/basis.hpp"
#include "zsplines/graph.hpp"
#include "zsplines/integer.hpp"

namespace zsplines {

// Rectangular matrix of exact integers, one row per generator.
using IntegerMatrix = std::vector<std::vector<Integer>>;

// Canonical row-style Hermite normal form: row echelon, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows removed.
// Only unimodular row operations are used, so the row span over Z is
// preserved and equal lattices get identical forms.
IntegerMatrix hnf(IntegerMatrix m);

// Sublattice of Z^n given by row generators, compared and queried through
// its cached Hermite normal form.
class IntegerLattice {
 public:
  IntegerLattice(std::size_t dimension, IntegerMatrix generators);

  std::size_t dimension() const { return dimension_; }
  const IntegerMatrix& generators() const { return generators_; }
  const IntegerMatrix& hermite_form() const { return hnf_; }

  bool operator==(const IntegerLattice& other) const {
    return dimension_ == other.dimension_ && hnf_ == other.hnf_;
  }

 private:
  std::size_t dimension_;
  IntegerMatrix generators_;
  IntegerMatrix hnf_;
};

// True iff the two lattices have identical canonical forms. Throws
// DimensionMismatchError when the ambient dimensions differ.
bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);

// Membership by back-substitution against the canonical form.
bool lattice_contains(const IntegerLattice& lattice, std::span<const Integer> v);

struct EnumerateOptions {
  // Cap on the candidate space Lc^n of the enumeration oracle.
  std::uint64_t budget = 10'000'000;
};

// Brute-force oracle: with Lc = lcm of every label, enumerates all valid
// vectors in [0, Lc)^n and returns the lattice they generate together with
// Lc*e_k for each coordinate. Requires nonzero labels (ZeroLabelError) and
// Lc^n within budget (BudgetExceededError).
IntegerLattice spline_lattice_enumerate(const LabeledGraph& g, const EnumerateOptions& options = {});

// Exact oracle valid for all labels: the spline conditions become integer
// linear equations in (f, t) with one auxiliary t per nonzero modulus, and
// the lattice is the projection of the integer kernel onto f.
IntegerLattice spline_lattice_kernel(const LabeledGraph& g);

struct MinimalityCounterexample {
  std::size_t index;  // 1-based flow-up index
  Integer found;      // observed leading term contradicting the claim
};

// Checks each claimed leading term against the enumeration oracle: every
// observed leading term at index i must be a multiple of leading_terms[i-1]
// and the claimed value itself must be observed. nullopt means certified.
std::optional<MinimalityCounterexample> certify_minimal_leading_terms(
    const LabeledGraph& g, const FlowUpBasis& basis, const EnumerateOptions& options = {});

}  // namespace zsplines
