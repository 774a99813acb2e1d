#pragma once

// Shared test utilities: independent brute-force oracles, fixture graphs,
// and deterministic random instance generators. Everything here checks the
// library from the outside; none of it reuses the code paths under test.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zsplines/basis.hpp"
#include "zsplines/crt.hpp"
#include "zsplines/graph.hpp"
#include "zsplines/integer.hpp"
#include "zsplines/lattice.hpp"

namespace ztest {

using zsplines::Congruence;
using zsplines::Edge;
using zsplines::Integer;
using zsplines::LabeledGraph;
using zsplines::Vertex;

// Brute-force reference for congruence systems, int64 domain. Solvability
// and the canonical representative are decided by direct scanning:
// zero-modulus congruences pin the value, otherwise every candidate in
// [0, lcm of moduli) is tried.
struct BruteCrt {
  bool solvable = false;
  std::int64_t residue = 0;
  std::int64_t modulus = 0;
};

inline std::int64_t i64_gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t i64_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t l = a / i64_gcd(a, b) * b;
  return l < 0 ? -l : l;
}

struct I64Congruence {
  std::int64_t residue;
  std::int64_t modulus;  // >= 0
};

inline bool i64_satisfies(const I64Congruence& c, std::int64_t x) {
  if (c.modulus == 0) return x == c.residue;
  return (x - c.residue) % c.modulus == 0;
}

inline BruteCrt brute_crt(const std::vector<I64Congruence>& system) {
  std::int64_t scan = 1;
  std::optional<std::int64_t> forced;
  for (const auto& c : system) {
    if (c.modulus == 0) {
      if (forced && *forced != c.residue) return {};
      forced = c.residue;
    } else {
      scan = i64_lcm(scan, c.modulus);
    }
  }
  if (forced) {
    for (const auto& c : system) {
      if (!i64_satisfies(c, *forced)) return {};
    }
    return {true, *forced, 0};
  }
  for (std::int64_t x = 0; x < scan; ++x) {
    bool ok = true;
    for (const auto& c : system) {
      if (!i64_satisfies(c, x)) {
        ok = false;
        break;
      }
    }
    if (ok) return {true, x, scan};
  }
  return {};
}

inline std::vector<Congruence> lift_congruences(const std::vector<I64Congruence>& system) {
  std::vector<Congruence> out;
  for (const auto& c : system) out.push_back(Congruence{c.residue, c.modulus});
  return out;
}

// --- fixture graphs ------------------------------------------------------

inline LabeledGraph make_path(const std::vector<Integer>& ms, const std::vector<Integer>& rs) {
  LabeledGraph g;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    g.vertices.push_back(Vertex{"v" + std::to_string(i + 1), ms[i]});
  }
  for (std::size_t i = 0; i < rs.size(); ++i) g.edges.push_back(Edge{i, i + 1, rs[i]});
  return g;
}

inline LabeledGraph make_p3() { return make_path({10, 15, 21}, {8, 12}); }

inline LabeledGraph make_cycle(const std::vector<Integer>& ms, const std::vector<Integer>& rs) {
  LabeledGraph g = make_path(ms, {rs.begin(), rs.end() - 1});
  g.edges.push_back(Edge{0, ms.size() - 1, rs.back()});
  return g;
}

// K4 with the edge numbering of the worked example: r1=v1v2, r2=v2v3,
// r3=v1v3, r4=v1v4, r5=v2v4, r6=v3v4.
inline LabeledGraph make_k4(const std::vector<Integer>& ms, const std::vector<Integer>& rs) {
  LabeledGraph g;
  for (std::size_t i = 0; i < 4; ++i) {
    g.vertices.push_back(Vertex{"v" + std::to_string(i + 1), ms[i]});
  }
  g.edges.push_back(Edge{0, 1, rs[0]});
  g.edges.push_back(Edge{1, 2, rs[1]});
  g.edges.push_back(Edge{0, 2, rs[2]});
  g.edges.push_back(Edge{0, 3, rs[3]});
  g.edges.push_back(Edge{1, 3, rs[4]});
  g.edges.push_back(Edge{2, 3, rs[5]});
  return g;
}

// --- random instances ----------------------------------------------------

using Rng = std::mt19937_64;

inline Integer random_label(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return Integer(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

// Connected graph: random spanning tree plus a few extra edges.
inline LabeledGraph random_connected_graph(Rng& rng, std::size_t n, std::int64_t label_lo,
                                           std::int64_t label_hi) {
  LabeledGraph g;
  for (std::size_t i = 0; i < n; ++i) {
    g.vertices.push_back(Vertex{"v" + std::to_string(i + 1), random_label(rng, label_lo, label_hi)});
  }
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    g.edges.push_back(Edge{parent, i, random_label(rng, label_lo, label_hi)});
  }
  if (n >= 2) {
    std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (std::size_t k = 0; k < extra; ++k) {
      std::size_t u = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      if (u != v) g.edges.push_back(Edge{u, v, random_label(rng, label_lo, label_hi)});
    }
  }
  return g;
}

// Messier instance for normalization tests: may add self-loops, unit edges
// and parallel edges on top of a connected core.
inline LabeledGraph random_messy_graph(Rng& rng, std::size_t n, std::int64_t label_lo,
                                       std::int64_t label_hi) {
  LabeledGraph g = random_connected_graph(rng, n, label_lo, label_hi);
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t u = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: g.edges.push_back(Edge{u, u, random_label(rng, label_lo, label_hi)}); break;
      case 1: g.edges.push_back(Edge{u, v, 1}); break;
      default: g.edges.push_back(Edge{u, v, random_label(rng, label_lo, label_hi)}); break;
    }
  }
  return g;
}

inline Integer enumeration_space(const LabeledGraph& g) {
  Integer big_l = 1;
  for (const Vertex& v : g.vertices) big_l = zsplines::lcm(big_l, v.m);
  for (const Edge& e : g.edges) big_l = zsplines::lcm(big_l, e.r);
  Integer space = 1;
  for (std::size_t i = 0; i < g.size(); ++i) space *= big_l;
  return space;
}

inline zsplines::IntegerLattice basis_lattice(const LabeledGraph& g) {
  zsplines::FlowUpBasis basis = zsplines::flow_up_basis(g);
  zsplines::IntegerMatrix rows;
  for (const auto& f : basis.elements) rows.push_back(f);
  return zsplines::IntegerLattice(g.size(), std::move(rows));
}

// Direct evaluation of the closed-form smallest leading term on a cycle:
// lcm of m_1, the clockwise chains gcd(m_k, r_1..r_{k-1}), and the
// counterclockwise chains gcd(m_k, r_k..r_n).
inline Integer cycle_leading_term_formula(const std::vector<Integer>& ms,
                                          const std::vector<Integer>& rs) {
  const std::size_t n = ms.size();
  Integer acc = ms[0];
  Integer chain = 0;
  for (std::size_t k = 1; k < n; ++k) {
    chain = k == 1 ? rs[0] : zsplines::gcd(chain, rs[k - 1]);
    acc = zsplines::lcm(acc, zsplines::gcd(ms[k], chain));
  }
  chain = 0;
  for (std::size_t k = n - 1; k >= 1; --k) {
    chain = k == n - 1 ? rs[n - 1] : zsplines::gcd(chain, rs[k]);
    acc = zsplines::lcm(acc, zsplines::gcd(ms[k], chain));
  }
  return acc;
}

}  // namespace ztest
