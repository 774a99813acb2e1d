#include "zsplines/crt.hpp"

#include "zsplines/errors.hpp"

namespace zsplines {

bool satisfies(const Congruence& c, const Integer& x) {
  return divides(c.modulus, x - c.residue);
}

std::optional<CrtSolution> crt_pair(const Congruence& c1, const Congruence& c2) {
  const Integer& b1 = c1.modulus;
  const Integer& b2 = c2.modulus;
  if (b1 < 0 || b2 < 0) throw InvalidArgumentError("crt_pair: negative modulus");

  if (b1 == 0 && b2 == 0) {
    if (c1.residue != c2.residue) return std::nullopt;
    return CrtSolution{c1.residue, 0};
  }
  if (b1 == 0) {
    if (!satisfies(c2, c1.residue)) return std::nullopt;
    return CrtSolution{c1.residue, 0};
  }
  if (b2 == 0) {
    if (!satisfies(c1, c2.residue)) return std::nullopt;
    return CrtSolution{c2.residue, 0};
  }

  BezoutTriple bez = ext_gcd(b1, b2);
  Integer diff = c2.residue - c1.residue;
  if (diff % bez.g != 0) return std::nullopt;

  Integer modulus = lcm(b1, b2);
  // x = a1 + b1*t with t chosen so that x = a2 (mod b2); reduce t modulo
  // b2/g first to keep the intermediate product small.
  Integer t = mod_floor(bez.x * (diff / bez.g), b2 / bez.g);
  Integer residue = mod_floor(c1.residue + b1 * t, modulus);
  return CrtSolution{std::move(residue), std::move(modulus)};
}

namespace {

bool pair_compatible(const Congruence& a, const Congruence& b) {
  return divides(gcd(a.modulus, b.modulus), a.residue - b.residue);
}

}  // namespace

CrtSystemResult crt_system(std::span<const Congruence> system) {
  CrtSolution acc{0, 1};
  for (std::size_t k = 0; k < system.size(); ++k) {
    auto next = crt_pair(Congruence{acc.residue, acc.modulus}, system[k]);
    if (!next) {
      // The theorem guarantees a pairwise witness whenever the fold fails.
      for (std::size_t i = 0; i + 1 <= k; ++i) {
        for (std::size_t j = i + 1; j <= k; ++j) {
          if (!pair_compatible(system[i], system[j])) {
            return CrtSystemResult{std::nullopt, i, j};
          }
        }
      }
      throw InternalError("crt_system: fold failed without a violated pair");
    }
    acc = std::move(*next);
  }
  return CrtSystemResult{std::move(acc), 0, 0};
}

}  // namespace zsplines
