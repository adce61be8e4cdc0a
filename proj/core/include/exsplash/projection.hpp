#pragma once

#include <map>
#include <vector>

#include "exsplash/splash.hpp"

namespace exsplash {

// Size class of a central projection image: q^2+1 when the source lies on
// the extension of exactly one subplane line, q^2+q+1 when it lies on none.
enum class ProjectionClass { TangentSize, ExteriorSize };

struct Projection {
  ProjPoint source;
  ProjLine target;
  std::vector<ProjPoint> image; // sorted
  ProjectionClass cls = ProjectionClass::ExteriorSize;
};

// Central projection of the subplane point set from a source point onto a
// target line. Throws PointInSubplane / PointOnLine.
Projection project_subplane(const PlaneCtx& pl, const Subplane& pi, const ProjPoint& source,
                            const ProjLine& target);

// Length of the orbit of a point set under iteration of h.
unsigned set_orbit_size(const PlaneCtx& pl, const Homography& h,
                        const std::vector<ProjPoint>& set);

// One distinct projection image together with everything projecting to it.
struct ProjectionGroup {
  std::vector<ProjPoint> image;
  ProjectionClass cls = ProjectionClass::ExteriorSize;
  std::vector<ProjPoint> sources;  // sorted
  unsigned singer_orbit_size = 0;  // orbit of the image under the fixing group
  bool same_carriers = false;      // exterior-sized image sharing the splash's carriers
  bool equals_splash = false;
};

// Projections of pi from every point off pi and off the exterior line,
// grouped by image. Groups are ordered by image point set.
struct ProjectionCensus {
  ProjLine target;
  std::size_t source_count = 0;
  std::vector<ProjectionGroup> groups;
};

ProjectionCensus projection_census(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                                   unsigned jobs = 1);

// The unique point projecting the subline b onto the subline c (distinct
// host lines, neither subline touching the other's host meet). Throws
// PreconditionViolation, NoPoint, or MultiplePoints.
ProjPoint subline_projection_point(const PlaneCtx& pl, const Subline& b, const Subline& c);

// Exhaustive scan showing that no central projection of pi reproduces the
// tangent splash on the given tangent line.
struct TangentProjectionScan {
  std::size_t candidates = 0;
  std::size_t witnesses = 0; // projections equal to the tangent splash
  std::map<std::size_t, std::size_t> image_size_histogram;
};

TangentProjectionScan scan_tangent_projections(const PlaneCtx& pl, const Subplane& pi,
                                               const ProjLine& tangent_line);

} // namespace exsplash
