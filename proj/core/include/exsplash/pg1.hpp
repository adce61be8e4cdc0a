#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "exsplash/finite_field.hpp"

namespace exsplash {

// Point of the projective line PG(1, q^3) in affine parameter form:
// a field value theta or the point at infinity. Finite points order by
// label; infinity sorts last.
struct Pg1Point {
  Fq3 t{};
  bool inf = false;

  static Pg1Point at(Fq3 x) { return Pg1Point{x, false}; }
  static Pg1Point infinity() { return Pg1Point{Fq3{0}, true}; }

  friend auto operator<=>(const Pg1Point& a, const Pg1Point& b) {
    if (a.inf != b.inf) return a.inf ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.t.v <=> b.t.v;
  }
  friend bool operator==(const Pg1Point&, const Pg1Point&) = default;
};

// 2x2 matrix {a, b, c, d} acting on (x0, x1) with theta = x0 / x1, so the
// induced map is theta -> (a*theta + b) / (c*theta + d).
using Mat2 = std::array<Fq3, 4>;

unsigned pg1_index(const FieldCtx& F, Pg1Point p);            // 0..q^3, infinity last
Pg1Point pg1_from_index(const FieldCtx& F, unsigned i);

Pg1Point mobius_apply(const FieldCtx& F, const Mat2& m, Pg1Point p);
std::vector<Pg1Point> mobius_image(const FieldCtx& F, const Mat2& m,
                                   const std::vector<Pg1Point>& s); // sorted

// Order of the subgroup of PGL(2, q^3) generated by the given matrices,
// computed as a closure of induced permutations of PG(1, q^3).
unsigned mobius_generated_order(const FieldCtx& F, const std::vector<Mat2>& gens);

// Order of the full setwise stabilizer of s in PGL(2, q^3), by brute force
// over all normalized invertible 2x2 matrices. Intended for small q.
unsigned pg1_set_stabilizer_order(const FieldCtx& F, const std::vector<Pg1Point>& s);

// Orbit of the set s under all of PGL(2, q^3), as sorted point sets in
// deterministic order. Intended for small q.
std::vector<std::vector<Pg1Point>> pg1_set_orbit(const FieldCtx& F,
                                                 const std::vector<Pg1Point>& s);

} // namespace exsplash
