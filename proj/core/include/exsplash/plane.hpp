#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "exsplash/finite_field.hpp"

namespace exsplash {

// Point of PG(2, q^3) in normalized homogeneous coordinates: the first
// nonzero coordinate equals 1. Normalized triples compare componentwise,
// which makes every enumeration in the library deterministic.
struct ProjPoint {
  std::array<Fq3, 3> c{};
  auto operator<=>(const ProjPoint&) const = default;
};

// Line of PG(2, q^3), same normalization. A point P lies on a line L exactly
// when the dot product of their coordinate triples vanishes.
struct ProjLine {
  std::array<Fq3, 3> c{};
  auto operator<=>(const ProjLine&) const = default;
};

using Mat3 = std::array<Fq3, 9>; // row major

class PlaneCtx;

// Projectivity of PG(2, q^3). The stored matrix is normalized (first nonzero
// entry 1), so equal maps compare equal. Lines transform by the transposed
// adjugate, which agrees with the inverse transpose projectively.
class Homography {
public:
  static Homography identity(const FieldCtx& F);
  // Throws BadParameters when the matrix is singular.
  static Homography from_matrix(const FieldCtx& F, const Mat3& m);

  const Mat3& matrix() const noexcept { return m_; }

  ProjPoint apply(const PlaneCtx& pl, const ProjPoint& P) const;
  ProjLine apply(const PlaneCtx& pl, const ProjLine& L) const;
  Homography compose(const FieldCtx& F, const Homography& rhs) const; // this after rhs
  Homography inverse(const FieldCtx& F) const;
  Homography pow(const FieldCtx& F, unsigned e) const;

  bool operator==(const Homography&) const = default;

private:
  Mat3 m_{};
};

// Context for PG(2, q^3): element enumeration, incidence, and the embedded
// canonical subplane PG(2, q) (points and lines with subfield coordinates).
class PlaneCtx {
public:
  explicit PlaneCtx(FieldCtx F);

  const FieldCtx& field() const noexcept { return F_; }
  unsigned q() const noexcept { return F_.q(); }

  ProjPoint make_point(Fq3 x, Fq3 y, Fq3 z) const;
  ProjLine make_line(Fq3 l, Fq3 m, Fq3 n) const;

  bool incident(const ProjPoint& P, const ProjLine& L) const;
  ProjLine join(const ProjPoint& P, const ProjPoint& Q) const;   // EqualArguments
  ProjPoint meet(const ProjLine& L, const ProjLine& M) const;    // EqualArguments

  // All points/lines in ascending coordinate order.
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const std::vector<ProjLine>& lines() const noexcept { return lines_; }
  std::size_t point_count() const noexcept { return points_.size(); }

  // Index of a normalized point/line in the global enumeration, O(1).
  std::uint32_t point_index(const ProjPoint& P) const;
  std::uint32_t line_index(const ProjLine& L) const;

  std::vector<ProjPoint> points_on_line(const ProjLine& L) const; // sorted, q^3+1
  std::vector<std::uint32_t> point_indices_on_line(const ProjLine& L) const;

  ProjPoint frobenius(const ProjPoint& P, unsigned i) const;
  ProjLine frobenius(const ProjLine& L, unsigned i) const;

  // The canonical order-q-subplane: points and lines with GF(q) coordinates.
  const std::vector<ProjPoint>& canonical_subplane_points() const noexcept { return canon_pts_; }
  const std::vector<ProjLine>& canonical_subplane_lines() const noexcept { return canon_lns_; }

private:
  FieldCtx F_;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<ProjPoint> canon_pts_;
  std::vector<ProjLine> canon_lns_;
};

// Order-q-subline: q+1 points on a common line of PG(2, q^3).
struct Subline {
  ProjLine host;
  std::vector<ProjPoint> points; // sorted
  bool contains(const ProjPoint& P) const;
  bool operator==(const Subline&) const = default;
};

// The unique order-q-subline through three distinct collinear points.
// The result does not depend on the ordering of the arguments.
Subline subline_through(const PlaneCtx& pl, const ProjPoint& P, const ProjPoint& Q,
                        const ProjPoint& R);

// Order-q-subplane of PG(2, q^3), stored with a generating homography that
// maps the canonical subplane onto it. Conjugacy (the order-3 collineation
// fixing the subplane pointwise) acts through that homography.
class Subplane {
public:
  static Subplane canonical(const PlaneCtx& pl);
  static Subplane from_quadrangle(const PlaneCtx& pl, const ProjPoint& P1, const ProjPoint& P2,
                                  const ProjPoint& P3, const ProjPoint& P4); // DegenerateFrame
  static Subplane from_generator(const PlaneCtx& pl, const Homography& gen);

  const std::vector<ProjPoint>& points() const noexcept { return points_; } // sorted, q^2+q+1
  const std::vector<ProjLine>& lines() const noexcept { return lines_; }    // sorted, q^2+q+1
  const Homography& gen() const noexcept { return gen_; }

  bool contains(const ProjPoint& P) const;
  bool contains_line(const ProjLine& L) const;

  // X^{q^i} with respect to this subplane, i in {1, 2}.
  ProjPoint conjugate(const PlaneCtx& pl, const ProjPoint& P, unsigned i) const;
  ProjLine conjugate(const PlaneCtx& pl, const ProjLine& L, unsigned i) const;

  bool operator==(const Subplane& o) const { return points_ == o.points_; }

private:
  Homography gen_, gen_inv_;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
};

// The unique projectivity mapping one ordered quadrangle to another.
// Throws DegenerateFrame when any three of either quadrangle are collinear.
Homography homography_from_frames(const PlaneCtx& pl, const std::array<ProjPoint, 4>& src,
                                  const std::array<ProjPoint, 4>& dst);

std::vector<ProjPoint> fixed_points(const PlaneCtx& pl, const Homography& h);
std::vector<ProjLine> fixed_lines(const PlaneCtx& pl, const Homography& h);

} // namespace exsplash
