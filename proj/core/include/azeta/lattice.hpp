#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace azeta {

using i64 = std::int64_t;

// Point of the coweight lattice in the root system's chosen basis.
struct LatticeVector {
  i64 x = 0;
  i64 y = 0;

  friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticeVector operator-(LatticeVector a) { return {-a.x, -a.y}; }
  friend LatticeVector operator*(i64 s, LatticeVector a) { return {s * a.x, s * a.y}; }
  friend bool operator==(LatticeVector, LatticeVector) = default;
  friend auto operator<=>(LatticeVector, LatticeVector) = default;
  bool is_zero() const { return x == 0 && y == 0; }
  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

// Element of (1/2)Lambda stored with doubled coordinates.
struct HalfVector {
  LatticeVector doubled;

  static HalfVector from_lattice(LatticeVector v) { return {2 * v}; }
  bool in_lattice() const { return doubled.x % 2 == 0 && doubled.y % 2 == 0; }
  friend bool operator==(HalfVector, HalfVector) = default;
  friend auto operator<=>(HalfVector, HalfVector) = default;
};

inline i64 det2(LatticeVector a, LatticeVector b) { return a.x * b.y - a.y * b.x; }

inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

struct LatticeVectorHash {
  std::size_t operator()(LatticeVector v) const noexcept {
    return std::hash<i64>{}(v.x * 1000003 + v.y);
  }
};

}  // namespace azeta
