#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "zsplines/integer.hpp"

namespace zsplines {

// x = residue (mod modulus), with modulus >= 0.
// modulus == 0 encodes the exact equation x == residue (Z/0Z is Z itself);
// modulus == 1 imposes no constraint at all.
struct Congruence {
  Integer residue;
  Integer modulus;
};

// Canonical solution class of a congruence system: residue lies in
// [0, modulus) when modulus > 0, and is the unique forced value when
// modulus == 0.
struct CrtSolution {
  Integer residue;
  Integer modulus;
};

bool satisfies(const Congruence& c, const Integer& x);

// Combine two congruences. Solvable iff the residues agree modulo the gcd
// of the moduli; the result modulus is the lcm. nullopt means incompatible.
std::optional<CrtSolution> crt_pair(const Congruence& c1, const Congruence& c2);

struct CrtSystemResult {
  std::optional<CrtSolution> solution;
  // Indices of a violated input pair when there is no solution.
  std::size_t bad_i = 0;
  std::size_t bad_j = 0;
};

// Left fold of crt_pair over the system. The empty system yields x = 0 (mod 1).
CrtSystemResult crt_system(std::span<const Congruence> system);

}  // namespace zsplines
