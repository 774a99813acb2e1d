#include "zsplines/integer.hpp"

#include <stdexcept>
#include <utility>

namespace zsplines {

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer result = a / gcd(a, b) * b;
  if (result < 0) result = -result;
  return result;
}

BezoutTriple ext_gcd(Integer a, Integer b) {
  Integer old_r = std::move(a), r = std::move(b);
  Integer old_x = 1, x = 0;
  Integer old_y = 0, y = 1;
  while (r != 0) {
    Integer q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return x % d == 0;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  if (b <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  Integer r = a % b;
  if (r < 0) r += b;
  return r;
}

}  // namespace zsplines
