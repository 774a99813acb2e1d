#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zsplines {

// Exact signed integer; every label and spline entry uses this type.
using Integer = boost::multiprecision::cpp_int;

// Nonnegative gcd with the ideal-theoretic zero conventions:
// gcd(0,0) = 0 and gcd(a,0) = |a|, so gcd(a,b)Z = aZ + bZ always.
Integer gcd(Integer a, Integer b);

// Nonnegative lcm; lcm(a,0) = lcm(0,0) = 0, so lcm(a,b)Z = aZ intersect bZ.
Integer lcm(const Integer& a, const Integer& b);

struct BezoutTriple {
  Integer g;  // gcd(a,b), nonnegative
  Integer x;
  Integer y;  // a*x + b*y == g
};

BezoutTriple ext_gcd(Integer a, Integer b);

// d | x, with d == 0 read as x == 0 (membership of x in the ideal dZ).
bool divides(const Integer& d, const Integer& x);

// Floor quotient and least nonnegative residue; require b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

}  // namespace zsplines
