#include "doctest.h"

#include <algorithm>
#include <set>

#include "exsplash/census.hpp"
#include "exsplash/errors.hpp"

using namespace exsplash;

TEST_SUITE("census") {

TEST_CASE("closed forms take their known small values") {
  CHECK(splash_count_closed_form(2) == 36);
  CHECK(splash_count_closed_form(3) == 756);
  CHECK(splash_count_closed_form(4) == 6240);
  CHECK(subplanes_per_splash_closed_form(2) == 896);
  CHECK(subplanes_per_splash_closed_form(3) == 37908);
  CHECK(exterior_subplanes_closed_form(2) == 32256);
  CHECK(exterior_subplanes_closed_form(3) == 28658448ull);
  for (unsigned q : {2u, 3u, 4u, 5u})
    CHECK(splash_count_closed_form(q) * subplanes_per_splash_closed_form(q) ==
          exterior_subplanes_closed_form(q));
}

TEST_CASE("deterministic rng reproduces its stream") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 64; ++i) {
    va.push_back(a.next(1000));
    vb.push_back(b.next(1000));
    vc.push_back(c.next(1000));
  }
  CHECK(va == vb);
  CHECK(va != vc);
  for (auto v : va) CHECK(v < 1000);
}

TEST_CASE("exhaustive census at q=2 matches the closed forms") {
  FieldCtx F = FieldCtx::make(2);
  PlaneCtx pl(F);
  ProjLine ell = canonical_exterior_line(pl);
  ExhaustiveCensus ec = exhaustive_exterior_census(pl, ell, 2);
  CHECK(ec.quadrangle_count == 404544);
  CHECK(ec.subplane_count == 98112);
  CHECK(ec.exterior_subplane_count == 32256);
  CHECK(ec.classes.size() == 36);
  for (const auto& cl : ec.classes) {
    CHECK(cl.subplane_count == 896);
    CHECK(cl.carriers_consistent);
    CHECK(cl.splash_key.size() == 7);
    CHECK(std::is_sorted(cl.splash_key.begin(), cl.splash_key.end()));
  }
  CHECK(ec.canonical_class_members.size() == 896);
  // census is independent of the worker count
  ExhaustiveCensus ec1 = exhaustive_exterior_census(pl, ell, 1);
  CHECK(ec1.exterior_subplane_count == ec.exterior_subplane_count);
  REQUIRE(ec1.classes.size() == ec.classes.size());
  for (std::size_t i = 0; i < ec.classes.size(); ++i) {
    CHECK(ec1.classes[i].splash_key == ec.classes[i].splash_key);
    CHECK(ec1.classes[i].subplane_count == ec.classes[i].subplane_count);
    CHECK(ec1.classes[i].carrier_key == ec.classes[i].carrier_key);
  }
  CHECK(ec1.canonical_class_members == ec.canonical_class_members);
  // the canonical subplane itself is a member of its class
  Subplane pi = Subplane::canonical(pl);
  std::vector<std::uint32_t> key;
  for (const auto& p : pi.points()) key.push_back(static_cast<std::uint32_t>(pl.point_index(p)));
  std::sort(key.begin(), key.end());
  CHECK(std::find(ec.canonical_class_members.begin(), ec.canonical_class_members.end(), key) !=
        ec.canonical_class_members.end());
}

TEST_CASE("splash classes partition the exterior subplanes") {
  FieldCtx F = FieldCtx::make(2);
  PlaneCtx pl(F);
  ExhaustiveCensus ec = exhaustive_exterior_census(pl, canonical_exterior_line(pl), 2);
  std::uint64_t total = 0;
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& cl : ec.classes) {
    total += cl.subplane_count;
    CHECK(keys.insert(cl.splash_key).second);
  }
  CHECK(total == ec.exterior_subplane_count);
}

TEST_CASE("random splash sublines avoid the meet of the hosts") {
  FieldCtx F = FieldCtx::make(3);
  PlaneCtx pl(F);
  Subplane pi = Subplane::canonical(pl);
  Splash S = compute_splash(pl, pi, canonical_exterior_line(pl));
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Subline b = random_splash_subline(pl, S, rng);
    CHECK(b.points.size() == 4);
    CHECK(!(b.host == S.host));
    ProjPoint z = pl.meet(b.host, S.host);
    CHECK(!b.contains(z));
    CHECK(S.contains(z));
  }
}

TEST_CASE("exactly two subplanes pass through an admissible subline") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    PlaneCtx pl(F);
    Subplane pi = Subplane::canonical(pl);
    Splash S = compute_splash(pl, pi, canonical_exterior_line(pl));
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
      Subline b = random_splash_subline(pl, S, rng);
      auto subs = subplanes_through_subline_with_splash(pl, b, S);
      REQUIRE(subs.size() == 2);
      CHECK(!(subs[0] == subs[1]));
      for (const auto& sp : subs) {
        for (const auto& p : b.points) CHECK(sp.contains(p));
        CHECK(compute_splash(pl, sp, S.host).points == S.points);
      }
      CHECK(subplane_intersection(subs[0], subs[1]) == b.points);
    }
  }
}

TEST_CASE("random subplanes with the given splash stay in the class") {
  FieldCtx F = FieldCtx::make(3);
  PlaneCtx pl(F);
  Subplane pi = Subplane::canonical(pl);
  Splash S = compute_splash(pl, pi, canonical_exterior_line(pl));
  Rng rng(3);
  std::set<std::vector<ProjPoint>> distinct;
  for (int i = 0; i < 30; ++i) {
    Subplane sp = random_subplane_with_splash(pl, pi, S, rng);
    CHECK(compute_splash(pl, sp, S.host).points == S.points);
    distinct.insert(sp.points());
  }
  CHECK(distinct.size() > 1); // the sampler explores the class
}

TEST_CASE("subplane intersections and subline detection") {
  FieldCtx F = FieldCtx::make(2);
  PlaneCtx pl(F);
  Subplane pi = Subplane::canonical(pl);
  CHECK(subplane_intersection(pi, pi) == pi.points());
  // three collinear points of the subplane form a subline
  ProjLine L = pi.lines().front();
  std::vector<ProjPoint> on;
  for (const auto& p : pi.points())
    if (pl.incident(p, L)) on.push_back(p);
  REQUIRE(on.size() == 3);
  CHECK(points_form_subline(pl, on));
  // a triangle does not
  std::vector<ProjPoint> tri = {pi.points()[0], pi.points()[1], pi.points()[2]};
  if (pl.incident(tri[2], pl.join(tri[0], tri[1]))) tri[2] = pi.points()[3];
  CHECK(!points_form_subline(pl, tri));
}

TEST_CASE("subline search rejects inadmissible inputs") {
  FieldCtx F = FieldCtx::make(2);
  PlaneCtx pl(F);
  Subplane pi = Subplane::canonical(pl);
  Splash S = compute_splash(pl, pi, canonical_exterior_line(pl));
  // a subline on the splash host line itself is rejected
  Subline bad = subline_through(pl, S.points[0], S.points[1], S.points[2]);
  CHECK_THROWS_AS(subplanes_through_subline_with_splash(pl, bad, S), Error);
}

} // TEST_SUITE
