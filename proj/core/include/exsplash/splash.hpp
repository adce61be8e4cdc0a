#pragma once

#include <array>
#include <vector>

#include "exsplash/pg1.hpp"
#include "exsplash/plane.hpp"

namespace exsplash {

enum class SplashKind { Exterior, Tangent };

// Splash of an order-q-subplane pi on a line disjoint from or tangent to it:
// the set of points where the extensions of the lines of pi meet the host.
// Exterior splashes carry q^2+q+1 points and the distinguished carrier pair;
// tangent splashes carry q^2+1 points and the centre (the tangency point).
struct Splash {
  ProjLine host;
  SplashKind kind = SplashKind::Exterior;
  std::vector<ProjPoint> points; // sorted
  ProjPoint carrier1, carrier2;  // exterior only, both on host
  ProjPoint third_conjugate;     // exterior only, off host
  ProjPoint centre;              // tangent only

  bool contains(const ProjPoint& P) const;
};

struct CarrierTriple {
  ProjPoint e1, e2; // on the host line
  ProjPoint e3;     // off the host line
};

// The canonical exterior line of the canonical subplane PG(2, q):
// [-tau^{q+1}, tau^q + tau, -1].
ProjLine canonical_exterior_line(const PlaneCtx& pl);

// Throws SecantLine when the line meets the subplane in 2 or more points.
Splash compute_splash(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line);

// Carrier triple of an exterior pair: e1 = line ^ conj^2(line),
// e2 = line ^ conj(line), e3 = conj(line) ^ conj^2(line).
// Throws NotExterior when the line is not exterior to pi.
CarrierTriple carriers(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line);

// Cyclic group of the collineations of PG(2, q^3) fixing both pi and the
// exterior line. Generated by a single homography of order q^2+q+1 whose
// fixed points are exactly the carrier triple.
struct SingerGroup {
  Homography generator;
  unsigned order = 0;
  std::array<ProjPoint, 3> fixed_points; // {e1, e2, e3}
  std::array<ProjLine, 3> fixed_lines;   // {line, conj(line), conj^2(line)}
};

SingerGroup singer_group(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line);

// Affine coordinates on a line through two distinguished points:
// e1 -> 0, e2 -> infinity, and a fixed unit point e1 + e2 -> 1.
class LineFrame {
public:
  LineFrame(const PlaneCtx& pl, const ProjPoint& e1, const ProjPoint& e2); // NotDistinct

  const ProjLine& host() const noexcept { return host_; }
  const ProjPoint& e1() const noexcept { return e1_; }
  const ProjPoint& e2() const noexcept { return e2_; }

  Pg1Point param_of(const ProjPoint& P) const; // BadParameters if P off host
  ProjPoint point_of(Pg1Point t) const;

  std::vector<Pg1Point> image(const std::vector<ProjPoint>& pts) const;    // sorted
  std::vector<ProjPoint> preimage(const std::vector<Pg1Point>& ts) const;  // sorted

private:
  const PlaneCtx* pl_;
  ProjPoint e1_, e2_;
  ProjLine host_;
  int i_ = 0, j_ = 1;
  Fq3 det_{};
};

// Two elements of the setwise stabilizer of an exterior splash inside
// PGL(2, q^3), written in the carrier frame: one fixes both carriers
// (theta -> tau^{1-q} theta), the other swaps them (theta -> c/theta where
// the norm of c is the square of the splash's norm value).
struct StabilizerPair {
  Mat2 carrier_fixing;
  Mat2 carrier_swapping;
};

StabilizerPair stabilizer_pair(const PlaneCtx& pl, const Splash& s);

// Theta image of an exterior splash in its own carrier frame.
std::vector<Pg1Point> splash_theta_set(const PlaneCtx& pl, const Splash& s);

} // namespace exsplash
