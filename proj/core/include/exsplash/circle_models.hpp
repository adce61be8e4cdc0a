#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "exsplash/pg1.hpp"
#include "exsplash/splash.hpp"

namespace exsplash {

enum class CoverKind { TypeI, TypeII };

// Circle-geometry cover of PG(1, q^3):
//   TypeI : { x : N(x - a) = f }                           (never contains infinity)
//   TypeII: { x : N((x - a)/(x - b)) = f } with a != b     (contains infinity iff f = 1)
// f ranges over GF(q)*. Every cover has exactly q^2+q+1 points.
struct Cover {
  CoverKind kind = CoverKind::TypeI;
  Fq3 a{}, b{};
  Fq f{};
  auto operator<=>(const Cover&) const = default;
};

// Throws BadParameters when f = 0 or a TypeII cover has a = b.
std::vector<Pg1Point> cover_points(const FieldCtx& F, const Cover& c); // sorted

// Carrier pair of a cover: {a, infinity} for TypeI, {a, b} for TypeII.
std::pair<Pg1Point, Pg1Point> cover_carriers(const Cover& c); // sorted pair

// Sherk surface S(f, alpha, delta, g): the finite solutions of
//   f N(z) + T(alpha^{q^2} z^{q+1}) + T(delta z) + g = 0
// together with infinity exactly when f = 0. Throws AllZeroParameters when
// all four parameters vanish.
struct SherkSurface {
  Fq f{};
  Fq3 alpha{}, delta{};
  Fq g{};
};

std::vector<Pg1Point> sherk_points(const FieldCtx& F, const SherkSurface& s); // sorted

// Census over all projective parameter classes (f, alpha, delta, g): sizes of
// every surface and the distinct point sets per size.
struct SherkCensus {
  std::map<std::size_t, std::size_t> class_counts; // size -> parameter classes
  std::map<std::size_t, std::set<std::vector<Pg1Point>>> distinct_sets;
};

SherkCensus sherk_size_census(const FieldCtx& F);

// All distinct cover point sets, each with every (deduplicated) carrier pair
// realizing it. Deterministic order: ascending by point set.
struct CoverCensusEntry {
  std::vector<Pg1Point> points;
  std::vector<std::pair<Pg1Point, Pg1Point>> carrier_pairs;
};

std::vector<CoverCensusEntry> enumerate_covers(const FieldCtx& F);

// GF(q)-linear set of rank 3 on PG(1, q^3): the projective image of the
// nonzero GF(q)-span of three vectors of GF(q^3)^2. The rows must be
// GF(q)-independent (DependentBasis otherwise).
struct LinearSetBasis {
  std::array<std::array<Fq3, 2>, 3> rows{};
};

std::vector<Pg1Point> linear_set_points(const FieldCtx& F, const LinearSetBasis& b); // sorted

// A rank-3 linear set is scattered when it attains the maximum size q^2+q+1.
bool is_scattered(const FieldCtx& F, const LinearSetBasis& b);

// Cover parameters whose point set equals the theta image of the exterior
// splash in its carrier frame. Deterministic search order: TypeI by (a, f),
// then TypeII by (a, b, f); the canonical splash fits (TypeI, a=0, f=-1).
// Throws NoFit if no cover matches (never happens for genuine splashes).
Cover fit_cover(const PlaneCtx& pl, const Splash& s);

// The q-1 pairwise disjoint exterior splash point sets sharing the carrier
// pair {e1, e2}: the norm fibers pulled back to the line join(e1, e2),
// listed by ascending norm value. Their union is the host minus the carriers.
std::vector<std::vector<ProjPoint>> disjoint_splashes_with_carriers(const PlaneCtx& pl,
                                                                    const ProjPoint& e1,
                                                                    const ProjPoint& e2);

} // namespace exsplash
