#include "exsplash/projection.hpp"

#include <algorithm>
#include <thread>

#include "exsplash/circle_models.hpp"
#include "exsplash/errors.hpp"

namespace exsplash {

namespace {

std::vector<ProjPoint> project_points(const PlaneCtx& pl, const std::vector<ProjPoint>& pts,
                                      const ProjPoint& source, const ProjLine& target) {
  std::vector<ProjPoint> image;
  image.reserve(pts.size());
  for (const auto& x : pts) image.push_back(pl.meet(pl.join(source, x), target));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

ProjectionClass classify_image(const FieldCtx& F, std::size_t size) {
  const std::size_t q = F.q();
  if (size == q * q + 1) return ProjectionClass::TangentSize;
  ensure(size == q * q + q + 1, "projection image has an impossible size");
  return ProjectionClass::ExteriorSize;
}

} // namespace

Projection project_subplane(const PlaneCtx& pl, const Subplane& pi, const ProjPoint& source,
                            const ProjLine& target) {
  if (pi.contains(source)) fail(Errc::PointInSubplane, "projection source lies in the subplane");
  if (pl.incident(source, target)) fail(Errc::PointOnLine, "projection source lies on the target line");
  Projection pr;
  pr.source = source;
  pr.target = target;
  pr.image = project_points(pl, pi.points(), source, target);
  pr.cls = classify_image(pl.field(), pr.image.size());
  return pr;
}

unsigned set_orbit_size(const PlaneCtx& pl, const Homography& h,
                        const std::vector<ProjPoint>& set) {
  std::vector<ProjPoint> start = set;
  std::sort(start.begin(), start.end());
  std::vector<ProjPoint> cur = start;
  unsigned n = 0;
  do {
    std::vector<ProjPoint> next;
    next.reserve(cur.size());
    for (const auto& p : cur) next.push_back(h.apply(pl, p));
    std::sort(next.begin(), next.end());
    cur = std::move(next);
    ++n;
    ensure(n <= 8u * pl.field().ext_size(), "orbit iteration failed to close");
  } while (cur != start);
  return n;
}

ProjectionCensus projection_census(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                                   unsigned jobs) {
  const Splash splash = compute_splash(pl, pi, line);
  if (splash.kind != SplashKind::Exterior)
    fail(Errc::NotExterior, "projection census requires an exterior line");
  const CarrierTriple tri = carriers(pl, pi, line);
  const SingerGroup singer = singer_group(pl, pi, line);
  const auto fibers = disjoint_splashes_with_carriers(pl, tri.e1, tri.e2);

  std::vector<ProjPoint> sources;
  for (const auto& p : pl.points())
    if (!pi.contains(p) && !pl.incident(p, line)) sources.push_back(p);

  using GroupMap = std::map<std::vector<ProjPoint>, std::vector<ProjPoint>>;
  if (jobs == 0) jobs = 1;
  const unsigned nthread = std::min<std::size_t>(jobs, sources.size() ? sources.size() : 1);
  std::vector<GroupMap> partial(nthread);
  {
    std::vector<std::thread> pool;
    pool.reserve(nthread);
    for (unsigned t = 0; t < nthread; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < sources.size(); i += nthread) {
          auto image = project_points(pl, pi.points(), sources[i], line);
          partial[t][std::move(image)].push_back(sources[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  GroupMap merged;
  for (auto& gm : partial)
    for (auto& [image, srcs] : gm) {
      auto& bucket = merged[image];
      bucket.insert(bucket.end(), srcs.begin(), srcs.end());
    }

  ProjectionCensus census;
  census.target = line;
  census.source_count = sources.size();
  census.groups.reserve(merged.size());
  for (auto& [image, srcs] : merged) {
    ProjectionGroup g;
    g.image = image;
    g.cls = classify_image(pl.field(), image.size());
    std::sort(srcs.begin(), srcs.end());
    g.sources = std::move(srcs);
    g.singer_orbit_size = set_orbit_size(pl, singer.generator, image);
    g.equals_splash = (image == splash.points);
    g.same_carriers = false;
    if (g.cls == ProjectionClass::ExteriorSize)
      g.same_carriers =
          std::find(fibers.begin(), fibers.end(), image) != fibers.end();
    census.groups.push_back(std::move(g));
  }
  return census;
}

ProjPoint subline_projection_point(const PlaneCtx& pl, const Subline& b, const Subline& c) {
  if (b.host == c.host)
    fail(Errc::PreconditionViolation, "sublines must lie on distinct host lines");
  const ProjPoint x = pl.meet(b.host, c.host);
  if (b.contains(x) || c.contains(x))
    fail(Errc::PreconditionViolation, "a subline passes through the meet of the host lines");

  std::vector<ProjPoint> found;
  for (const auto& p : pl.points()) {
    if (pl.incident(p, b.host) || pl.incident(p, c.host)) continue;
    std::vector<ProjPoint> image;
    image.reserve(b.points.size());
    for (const auto& bp : b.points) image.push_back(pl.meet(pl.join(p, bp), c.host));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image == c.points) found.push_back(p);
  }
  if (found.empty()) fail(Errc::NoPoint, "no point projects the first subline onto the second");
  if (found.size() > 1)
    fail(Errc::MultiplePoints, "several points project the first subline onto the second");
  return found.front();
}

TangentProjectionScan scan_tangent_projections(const PlaneCtx& pl, const Subplane& pi,
                                               const ProjLine& tangent_line) {
  const Splash splash = compute_splash(pl, pi, tangent_line);
  ensure(splash.kind == SplashKind::Tangent, "scan requires a tangent line");
  TangentProjectionScan scan;
  for (const auto& p : pl.points()) {
    if (pi.contains(p) || pl.incident(p, tangent_line)) continue;
    ++scan.candidates;
    const auto image = project_points(pl, pi.points(), p, tangent_line);
    ++scan.image_size_histogram[image.size()];
    if (image == splash.points) ++scan.witnesses;
  }
  return scan;
}

} // namespace exsplash
