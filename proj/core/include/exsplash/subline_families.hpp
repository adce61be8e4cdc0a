#pragma once

#include <vector>

#include "exsplash/splash.hpp"

namespace exsplash {

// Point of the internal plane PG(2, q), normalized GF(q) coordinates.
struct IntPoint {
  std::array<Fq, 3> c{};
  auto operator<=>(const IntPoint&) const = default;
};

// Line of the internal plane PG(2, q).
struct IntLine {
  std::array<Fq, 3> c{};
  auto operator<=>(const IntLine&) const = default;
};

// Conic of the internal plane, the 6 coefficients (a, b, c, d, e, f) of
// a X^2 + b Y^2 + c Z^2 + d XY + e XZ + f YZ, scaled so the first nonzero
// coefficient is 1. When dual is true the form evaluates line coordinates.
struct InternalConic {
  std::array<Fq, 6> coeffs{};
  bool dual = false;
  auto operator<=>(const InternalConic&) const = default;
};

std::vector<IntPoint> internal_points(const FieldCtx& F); // q^2+q+1, ascending
std::vector<IntLine> internal_lines(const FieldCtx& F);

// Transport between the internal plane of a subplane and PG(2, q^3).
ProjPoint ambient_point(const PlaneCtx& pl, const Subplane& pi, const IntPoint& p);
ProjLine ambient_line(const PlaneCtx& pl, const Subplane& pi, const IntLine& l);
IntPoint internal_point(const PlaneCtx& pl, const Subplane& pi, const ProjPoint& P); // PointNotInSubplane
IntLine internal_line(const PlaneCtx& pl, const Subplane& pi, const ProjLine& L);    // BadParameters

Fq eval_conic(const FieldCtx& F, const InternalConic& c, const std::array<Fq, 3>& x);
Fq3 eval_conic_ext(const FieldCtx& F, const InternalConic& c, const std::array<Fq3, 3>& x);

std::vector<IntPoint> conic_points(const FieldCtx& F, const InternalConic& c); // point conics
std::vector<IntLine> conic_lines(const FieldCtx& F, const InternalConic& c);   // dual conics

// Irreducible <=> more than q zeros and no three of them on a common
// (dual: through a common) element.
bool conic_irreducible(const FieldCtx& F, const InternalConic& c);

// The bundle of conics of pi whose extension passes through the carrier
// triple of the exterior line: exactly q^2+q+1, all irreducible, pairwise
// meeting in one internal point. NotExterior for non-exterior lines.
std::vector<InternalConic> special_point_conics(const PlaneCtx& pl, const Subplane& pi,
                                                const ProjLine& line);

// Dual counterpart: dual conics of pi whose extension contains the host line
// and its two conjugates.
std::vector<InternalConic> special_dual_conics(const PlaneCtx& pl, const Subplane& pi,
                                               const ProjLine& line);

// Subline of the splash cut out by the pencil of subplane lines through a
// point of pi. PointNotInSubplane when the vertex is not a point of pi.
Subline pencil_subline(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                       const ProjPoint& vertex);

// Subline of the splash cut out by the q+1 lines of a special dual conic.
// Throws NotSpecial when the q+1 trace points do not close into a subline
// (which happens exactly for non-special dual conics).
Subline dual_conic_subline(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                           const InternalConic& gamma);

// Every order-q-subline contained in the splash point set, by exhaustive
// closure over point triples. The oracle for the family classification.
std::vector<Subline> sublines_in_splash(const PlaneCtx& pl, const Splash& s);

// The two families of sublines of an exterior splash (q > 2): the pencil
// family and the dual-conic family, each of size q^2+q+1, disjoint, and
// together exhausting all sublines contained in the splash.
struct SublineFamilies {
  std::vector<Subline> pencil;
  std::vector<Subline> conic;
};

SublineFamilies classify_families(const PlaneCtx& pl, const Subplane& pi,
                                  const ProjLine& line); // PreconditionViolation at q = 2

// Membership test independent of the construction: a subline of the splash
// belongs to the pencil family iff its q+1 witness lines in pi (one per
// point) pass through a common point.
bool witnesses_concurrent(const PlaneCtx& pl, const Subplane& pi, const Splash& s,
                          const Subline& c);

// Involution fixing the splash pointwise-as-a-set, swapping the two carriers
// and the two subline families; its image is a second subplane with the same
// splash.
struct FamilySwap {
  Homography involution;
  Subplane image;
};

FamilySwap swap_families(const PlaneCtx& pl, const Splash& s, const Subplane& pi);

} // namespace exsplash
