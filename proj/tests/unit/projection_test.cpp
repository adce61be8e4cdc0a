#include "doctest.h"

#include <algorithm>
#include <set>

#include "exsplash/census.hpp"
#include "exsplash/errors.hpp"
#include "exsplash/projection.hpp"

using namespace exsplash;

namespace {

struct Fixture {
  FieldCtx F;
  PlaneCtx pl;
  Subplane pi;
  ProjLine ell;

  explicit Fixture(unsigned q)
      : F(FieldCtx::make(q)), pl(F), pi(Subplane::canonical(pl)), ell(canonical_exterior_line(pl)) {}
};

} // namespace

TEST_SUITE("projection") {

TEST_CASE("projection images are computed pointwise through the source") {
  Fixture fx(2);
  // pick a source off the subplane and off the target line
  ProjPoint src = carriers(fx.pl, fx.pi, fx.ell).e3;
  Projection pr = project_subplane(fx.pl, fx.pi, src, fx.ell);
  CHECK(pr.source == src);
  CHECK(pr.target == fx.ell);
  std::set<ProjPoint> expect;
  for (const auto& p : fx.pi.points()) expect.insert(fx.pl.meet(fx.pl.join(src, p), fx.ell));
  std::vector<ProjPoint> ev(expect.begin(), expect.end());
  CHECK(pr.image == ev);
  CHECK(std::is_sorted(pr.image.begin(), pr.image.end()));
}

TEST_CASE("projection image sizes classify as tangent or exterior size") {
  Fixture fx(2);
  const unsigned q = 2;
  std::size_t tangent = 0, exterior = 0;
  for (const auto& src : fx.pl.points()) {
    if (fx.pi.contains(src) || fx.pl.incident(src, fx.ell)) continue;
    Projection pr = project_subplane(fx.pl, fx.pi, src, fx.ell);
    if (pr.cls == ProjectionClass::TangentSize) {
      CHECK(pr.image.size() == q * q + 1);
      ++tangent;
    } else {
      CHECK(pr.image.size() == q * q + q + 1);
      ++exterior;
    }
  }
  CHECK(tangent + exterior == 57);
}

TEST_CASE("illegal projection sources are rejected") {
  Fixture fx(2);
  CHECK_THROWS_AS(project_subplane(fx.pl, fx.pi, fx.pi.points().front(), fx.ell), Error);
  ProjPoint on_line = fx.pl.points_on_line(fx.ell).front();
  CHECK_THROWS_AS(project_subplane(fx.pl, fx.pi, on_line, fx.ell), Error);
}

TEST_CASE("projection census is grouped by image with sorted sources") {
  Fixture fx(2);
  ProjectionCensus pc = projection_census(fx.pl, fx.pi, fx.ell, 2);
  CHECK(pc.source_count == 57);
  std::size_t total_sources = 0;
  std::set<std::vector<ProjPoint>> images;
  for (const auto& g : pc.groups) {
    total_sources += g.sources.size();
    CHECK(std::is_sorted(g.sources.begin(), g.sources.end()));
    CHECK(images.insert(g.image).second); // image sets are distinct groups
    // recompute one member to confirm group assignment
    Projection pr = project_subplane(fx.pl, fx.pi, g.sources.front(), fx.ell);
    CHECK(pr.image == g.image);
    CHECK(pr.cls == g.cls);
  }
  CHECK(total_sources == pc.source_count);
  // census is independent of the worker count
  ProjectionCensus pc1 = projection_census(fx.pl, fx.pi, fx.ell, 1);
  REQUIRE(pc1.groups.size() == pc.groups.size());
  for (std::size_t i = 0; i < pc.groups.size(); ++i) {
    CHECK(pc1.groups[i].image == pc.groups[i].image);
    CHECK(pc1.groups[i].sources == pc.groups[i].sources);
  }
}

TEST_CASE("third conjugate projects onto the splash exactly in even order") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fixture fx(q);
    Splash S = compute_splash(fx.pl, fx.pi, fx.ell);
    ProjPoint e3 = carriers(fx.pl, fx.pi, fx.ell).e3;
    Projection pr = project_subplane(fx.pl, fx.pi, e3, fx.ell);
    CHECK((pr.image == S.points) == (q % 2 == 0));
  }
}

TEST_CASE("subline projection point recovers a perspectivity centre") {
  Fixture fx(3);
  Rng rng(7);
  const auto& lines = fx.pl.lines();
  unsigned done = 0;
  while (done < 20) {
    // pick a centre O and two lines not through O
    ProjPoint O = fx.pl.points()[rng.next(fx.pl.points().size())];
    ProjLine m = lines[rng.next(lines.size())];
    ProjLine l = lines[rng.next(lines.size())];
    if (m == l || fx.pl.incident(O, m) || fx.pl.incident(O, l)) continue;
    ProjPoint z = fx.pl.meet(m, l);
    // subline c on l avoiding z
    auto pts = fx.pl.points_on_line(l);
    pts.erase(std::remove(pts.begin(), pts.end(), z), pts.end());
    std::array<std::size_t, 3> pick{};
    for (int i = 0; i < 3; ++i) pick[i] = rng.next(pts.size());
    if (pick[0] == pick[1] || pick[0] == pick[2] || pick[1] == pick[2]) continue;
    Subline c = subline_through(fx.pl, pts[pick[0]], pts[pick[1]], pts[pick[2]]);
    if (c.contains(z)) continue;
    // its image b on m under the perspectivity with centre O
    std::vector<ProjPoint> bim;
    for (const auto& p : c.points) bim.push_back(fx.pl.meet(fx.pl.join(O, p), m));
    Subline b = subline_through(fx.pl, bim[0], bim[1], bim[2]);
    if (b.contains(z)) continue;
    ProjPoint got = subline_projection_point(fx.pl, b, c);
    CHECK(got == O);
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("subline projection point rejects bad configurations") {
  Fixture fx(2);
  ProjLine l = fx.pl.lines()[0];
  auto pts = fx.pl.points_on_line(l);
  Subline c1 = subline_through(fx.pl, pts[0], pts[1], pts[2]);
  Subline c2 = subline_through(fx.pl, pts[0], pts[1], pts[3]);
  // both on the same host: precondition violation
  CHECK_THROWS_AS(subline_projection_point(fx.pl, c1, c2), Error);
}

TEST_CASE("tangent projection scan finds no witness for the tangent splash") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    Fixture fx(q);
    ProjLine lt = fx.pl.make_line(fx.F.zero(), fx.F.one(), fx.F.neg(fx.F.tau()));
    TangentProjectionScan scan = scan_tangent_projections(fx.pl, fx.pi, lt);
    CHECK(scan.witnesses == 0);
    // candidates are all points off the subplane and off the line
    std::size_t expect = 0;
    for (const auto& p : fx.pl.points())
      if (!fx.pi.contains(p) && !fx.pl.incident(p, lt)) ++expect;
    CHECK(scan.candidates == expect);
    // image sizes are q^2+1 or q^2+q+1 only
    for (const auto& [size, count] : scan.image_size_histogram) {
      CHECK((size == q * q + 1 || size == q * q + q + 1));
      CHECK(count > 0);
    }
  }
}

TEST_CASE("orbit size helper matches brute force") {
  Fixture fx(2);
  SingerGroup g = singer_group(fx.pl, fx.pi, fx.ell);
  Splash S = compute_splash(fx.pl, fx.pi, fx.ell);
  // the splash is singer-invariant: orbit size 1
  CHECK(set_orbit_size(fx.pl, g.generator, S.points) == 1);
  // a single non-fixed point has orbit size 7 as a set sequence
  std::vector<ProjPoint> single = {fx.pi.points().front()};
  CHECK(set_orbit_size(fx.pl, g.generator, single) == 7);
}

} // TEST_SUITE
