#include "zsplines/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "zsplines/errors.hpp"

namespace zsplines {

namespace {

void check_rectangular(const IntegerMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) {
      throw InvalidArgumentError("integer matrix must be rectangular");
    }
  }
}

// In-place HNF; when transform is nonnull it receives the same row
// operations starting from the identity, so transform * input == result.
void hnf_in_place(IntegerMatrix& m, IntegerMatrix* transform) {
  if (m.empty()) return;
  check_rectangular(m);
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();

  if (transform) {
    transform->assign(rows, std::vector<Integer>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) (*transform)[i][i] = 1;
  }

  auto add_multiple = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) m[dst][c] -= q * m[src][c];
    if (transform) {
      for (std::size_t c = 0; c < rows; ++c) (*transform)[dst][c] -= q * (*transform)[src][c];
    }
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    m[a].swap(m[b]);
    if (transform) (*transform)[a].swap((*transform)[b]);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = -m[r][c];
    if (transform) {
      for (std::size_t c = 0; c < rows; ++c) (*transform)[r][c] = -(*transform)[r][c];
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclidean elimination below pivot_row: repeatedly reduce by the row
    // with the smallest nonzero entry in this column.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (m[r][col] != 0 &&
            (best == rows || abs(m[r][col]) < abs(m[best][col]))) {
          best = r;
        }
      }
      if (best == rows) break;  // column clear below pivot_row
      swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m[r][col] != 0) {
          add_multiple(r, pivot_row, m[r][col] / m[pivot_row][col]);
          if (m[r][col] != 0) cleared = false;
        }
      }
      if (cleared) break;
    }
    if (m[pivot_row][col] == 0) continue;
    if (m[pivot_row][col] < 0) negate_row(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      add_multiple(r, pivot_row, floor_div(m[r][col], m[pivot_row][col]));
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  // Rows of the transform below pivot_row (the left kernel) are kept by the
  // caller via the transform matrix; m itself drops its zero rows.
}

}  // namespace

IntegerMatrix hnf(IntegerMatrix m) {
  hnf_in_place(m, nullptr);
  return m;
}

IntegerLattice::IntegerLattice(std::size_t dimension, IntegerMatrix generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  for (const auto& row : generators_) {
    if (row.size() != dimension_) {
      throw DimensionMismatchError("lattice generator has the wrong length");
    }
  }
  hnf_ = hnf(generators_);
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatchError("lattice_equal: ambient dimensions differ");
  }
  return a == b;
}

bool lattice_contains(const IntegerLattice& lattice, std::span<const Integer> v) {
  if (v.size() != lattice.dimension()) {
    throw DimensionMismatchError("lattice_contains: vector has the wrong length");
  }
  std::vector<Integer> w(v.begin(), v.end());
  for (const auto& row : lattice.hermite_form()) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (w[pivot] % row[pivot] != 0) return false;
    Integer q = w[pivot] / row[pivot];
    if (q != 0) {
      for (std::size_t c = pivot; c < w.size(); ++c) w[c] -= q * row[c];
    }
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

namespace {

// Shared state for the int64 enumeration walk. All values live in [0, L)
// with L <= budget <= 2^63, so plain int64 arithmetic is exact.
struct EnumWalk {
  std::int64_t big_l = 1;
  std::vector<std::int64_t> step;  // vertex label (candidate stride)
  // Per vertex: (earlier endpoint, edge label) for every edge whose later
  // endpoint is this vertex; self-loops are vacuous and skipped.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> back_edges;
};

std::int64_t to_int64(const Integer& x) { return static_cast<std::int64_t>(x); }

EnumWalk prepare_walk(const LabeledGraph& g, std::uint64_t budget) {
  Integer big_l = 1;
  for (const Vertex& v : g.vertices) {
    if (v.m == 0) throw ZeroLabelError("enumeration oracle requires nonzero vertex labels");
    big_l = lcm(big_l, v.m);
  }
  for (const Edge& e : g.edges) {
    if (e.r == 0) throw ZeroLabelError("enumeration oracle requires nonzero edge labels");
    big_l = lcm(big_l, e.r);
  }
  Integer space = 1;
  for (std::size_t k = 0; k < g.size(); ++k) {
    space *= big_l;
    if (space > budget) {
      throw BudgetExceededError("enumeration oracle: candidate space " + big_l.str() + "^" +
                                std::to_string(g.size()) + " exceeds budget " +
                                std::to_string(budget));
    }
  }

  EnumWalk walk;
  walk.big_l = to_int64(big_l);
  walk.step.reserve(g.size());
  for (const Vertex& v : g.vertices) walk.step.push_back(to_int64(v.m));
  walk.back_edges.resize(g.size());
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    auto [lo, hi] = std::minmax(e.u, e.v);
    walk.back_edges[hi].emplace_back(lo, to_int64(e.r));
  }
  return walk;
}

// Depth-first scan over candidate vectors: coordinate k ranges over the
// multiples of its vertex label below L, and every edge constraint to an
// earlier coordinate prunes immediately. Coordinates below zero_prefix are
// pinned to 0. Calls visit(values) for every valid vector.
template <typename Visit>
void enumerate_valid(const EnumWalk& walk, std::size_t zero_prefix, Visit&& visit) {
  const std::size_t n = walk.step.size();
  std::vector<std::int64_t> values(n, 0);

  auto edges_ok = [&](std::size_t k) {
    for (const auto& [other, r] : walk.back_edges[k]) {
      if ((values[k] - values[other]) % r != 0) return false;
    }
    return true;
  };

  std::size_t k = 0;
  bool descending = true;
  while (true) {
    if (descending) {
      if (k == n) {
        visit(values);
        descending = false;
        if (k == 0) return;
        --k;
        continue;
      }
      values[k] = 0;
      if (edges_ok(k)) {
        ++k;
        continue;
      }
      descending = false;
      continue;
    }
    // Advance coordinate k to its next admissible value, or backtrack.
    while (true) {
      if (k < zero_prefix) {
        if (k == 0) return;
        --k;
        continue;
      }
      values[k] += walk.step[k];
      if (values[k] >= walk.big_l) {
        if (k == 0) return;
        --k;
        continue;
      }
      if (edges_ok(k)) break;
    }
    ++k;
    descending = true;
  }
}

}  // namespace

IntegerLattice spline_lattice_enumerate(const LabeledGraph& g, const EnumerateOptions& options) {
  require_valid(g);
  const std::size_t n = g.size();
  EnumWalk walk = prepare_walk(g, options.budget);

  // Fold hits into a running canonical form so the generator set stays
  // small even when the scan finds many representatives.
  IntegerMatrix compressed;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> row(n, 0);
    row[k] = walk.big_l;
    compressed.push_back(std::move(row));
  }
  compressed = hnf(std::move(compressed));
  enumerate_valid(walk, 0, [&](const std::vector<std::int64_t>& values) {
    std::vector<Integer> row(values.begin(), values.end());
    compressed.push_back(std::move(row));
    if (compressed.size() >= 4 * n + 16) compressed = hnf(std::move(compressed));
  });
  return IntegerLattice(n, std::move(compressed));
}

IntegerLattice spline_lattice_kernel(const LabeledGraph& g) {
  require_valid(g);
  const std::size_t n = g.size();

  // Columns of the constraint system, one per condition; rows are the
  // variables (f_1..f_n, then one t per nonzero modulus).
  std::size_t aux = 0;
  for (const Vertex& v : g.vertices) aux += v.m != 0;
  for (const Edge& e : g.edges) aux += e.r != 0;

  std::size_t constraints = g.vertices.size() + g.edges.size();
  IntegerMatrix m(n + aux, std::vector<Integer>(constraints, 0));
  std::size_t column = 0;
  std::size_t next_aux = n;
  for (std::size_t k = 0; k < g.size(); ++k, ++column) {
    m[k][column] = 1;  // f_k == m_k * t or f_k == 0
    if (g.vertices[k].m != 0) m[next_aux++][column] = -g.vertices[k].m;
  }
  for (const Edge& e : g.edges) {
    m[e.u][column] += 1;  // f_u - f_v == r * t (or == 0); self-loops cancel
    m[e.v][column] -= 1;
    if (e.r != 0) m[next_aux++][column] = -e.r;
    ++column;
  }

  IntegerMatrix transform;
  IntegerMatrix reduced = m;
  hnf_in_place(reduced, &transform);

  // Transform rows beyond the echelon rank span the integer kernel; their
  // first n entries generate the spline lattice.
  IntegerMatrix generators;
  for (std::size_t r = reduced.size(); r < transform.size(); ++r) {
    generators.emplace_back(transform[r].begin(), transform[r].begin() + static_cast<std::ptrdiff_t>(n));
  }
  return IntegerLattice(n, std::move(generators));
}

std::optional<MinimalityCounterexample> certify_minimal_leading_terms(
    const LabeledGraph& g, const FlowUpBasis& basis, const EnumerateOptions& options) {
  require_valid(g);
  const std::size_t n = g.size();
  if (basis.leading_terms.size() != n) {
    throw InvalidArgumentError("certify_minimal_leading_terms: one leading term per vertex "
                               "expected");
  }
  EnumWalk walk = prepare_walk(g, options.budget);

  for (std::size_t i = 1; i <= n; ++i) {
    const Integer& claimed = basis.leading_terms[i - 1];
    std::set<std::int64_t> observed;
    enumerate_valid(walk, i - 1, [&](const std::vector<std::int64_t>& values) {
      if (values[i - 1] != 0) observed.insert(values[i - 1]);
    });
    observed.insert(walk.big_l);  // L*e_i is a spline with zeros before i

    for (std::int64_t term : observed) {
      if (!divides(claimed, Integer(term))) {
        return MinimalityCounterexample{i, Integer(term)};
      }
    }
    bool achieved = claimed > 0 && claimed <= walk.big_l && observed.count(to_int64(claimed));
    if (!achieved) {
      return MinimalityCounterexample{i, Integer(*observed.begin())};
    }
  }
  return std::nullopt;
}

}  // namespace zsplines
