#include "doctest.h"

#include <algorithm>
#include <set>

#include "exsplash/circle_models.hpp"
#include "exsplash/errors.hpp"
#include "exsplash/splash.hpp"

using namespace exsplash;

TEST_SUITE("circle_models") {

TEST_CASE("cover point sets match their defining norm equations") {
  FieldCtx F = FieldCtx::make(3);
  // type I: { x : N(x - a) = f }, never infinity
  Cover c1{CoverKind::TypeI, F.tau(), F.zero(), F.q_el(2)};
  auto pts = cover_points(F, c1);
  std::vector<Pg1Point> expect;
  for (unsigned v = 0; v < F.ext_size(); ++v) {
    Fq3 x = F.el(v);
    if (F.norm(F.sub(x, F.tau())) == F.q_el(2)) expect.push_back(Pg1Point::at(x));
  }
  std::sort(expect.begin(), expect.end());
  CHECK(pts == expect);
  CHECK(pts.size() == 13);
  CHECK(std::none_of(pts.begin(), pts.end(), [](const Pg1Point& p) { return p.inf; }));

  // type II: { x : N((x-a)/(x-b)) = f }, infinity included exactly when f = 1
  Cover c2{CoverKind::TypeII, F.zero(), F.one(), F.q_one()};
  auto pts2 = cover_points(F, c2);
  std::vector<Pg1Point> expect2 = {Pg1Point::infinity()};
  for (unsigned v = 0; v < F.ext_size(); ++v) {
    Fq3 x = F.el(v);
    if (x == F.zero() || x == F.one()) continue;
    if (F.norm(F.div(F.sub(x, F.zero()), F.sub(x, F.one()))) == F.q_one())
      expect2.push_back(Pg1Point::at(x));
  }
  std::sort(expect2.begin(), expect2.end());
  CHECK(pts2 == expect2);
  CHECK(pts2.size() == 13);

  CHECK_THROWS_AS(cover_points(F, Cover{CoverKind::TypeI, F.zero(), F.zero(), F.q_zero()}),
                  Error);
  CHECK_THROWS_AS(cover_points(F, Cover{CoverKind::TypeII, F.one(), F.one(), F.q_one()}),
                  Error);
}

TEST_CASE("cover carriers are the defining pair") {
  FieldCtx F = FieldCtx::make(2);
  Cover c1{CoverKind::TypeI, F.tau(), F.zero(), F.q_one()};
  auto [a, b] = cover_carriers(c1);
  CHECK(((a == Pg1Point::at(F.tau()) && b == Pg1Point::infinity()) ||
         (b == Pg1Point::at(F.tau()) && a == Pg1Point::infinity())));
  Cover c2{CoverKind::TypeII, F.zero(), F.one(), F.q_one()};
  auto [a2, b2] = cover_carriers(c2);
  CHECK(((a2 == Pg1Point::at(F.zero()) && b2 == Pg1Point::at(F.one())) ||
         (b2 == Pg1Point::at(F.zero()) && a2 == Pg1Point::at(F.one()))));
}

TEST_CASE("every cover has q^2+q+1 points") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    const std::size_t n1 = q * q + q + 1;
    for (const auto& entry : enumerate_covers(F)) {
      CHECK(entry.points.size() == n1);
      CHECK(entry.carrier_pairs.size() == 1);
    }
  }
}

TEST_CASE("cover census counts the splashes of one line") {
  for (unsigned q : {2u, 3u, 4u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    auto census = enumerate_covers(F);
    const std::size_t expect =
        static_cast<std::size_t>(q) * q * q * (q * q * q + 1) * (q - 1) / 2;
    CHECK(census.size() == expect);
    // entries are deduplicated and sorted by point set
    CHECK(std::is_sorted(census.begin(), census.end(),
                         [](const CoverCensusEntry& x, const CoverCensusEntry& y) {
                           return x.points < y.points;
                         }));
    for (std::size_t i = 1; i < census.size(); ++i)
      CHECK(census[i - 1].points != census[i].points);
  }
}

TEST_CASE("sherk surfaces match their defining equation") {
  FieldCtx F = FieldCtx::make(2);
  // S(f, alpha, delta, g): f N(z) + T(alpha^{q^2} z^{q+1}) + T(delta z) + g = 0
  SherkSurface s{F.q_one(), F.tau(), F.one(), F.q_zero()};
  auto pts = sherk_points(F, s);
  std::vector<Pg1Point> expect;
  for (unsigned v = 0; v < F.ext_size(); ++v) {
    Fq3 z = F.el(v);
    Fq lhs = F.q_zero();
    lhs = F.add(lhs, F.mul(s.f, F.norm(z)));
    Fq3 az = F.mul(F.frobenius(s.alpha, 2), F.pow(z, 1 + 2));
    lhs = F.add(lhs, F.trace(az));
    lhs = F.add(lhs, F.trace(F.mul(s.delta, z)));
    lhs = F.add(lhs, s.g);
    if (lhs == F.q_zero()) expect.push_back(Pg1Point::at(z));
  }
  // f != 0, so infinity is excluded
  std::sort(expect.begin(), expect.end());
  CHECK(pts == expect);

  // f = 0 includes infinity
  SherkSurface s0{F.q_zero(), F.tau(), F.one(), F.q_one()};
  auto pts0 = sherk_points(F, s0);
  CHECK(std::any_of(pts0.begin(), pts0.end(), [](const Pg1Point& p) { return p.inf; }));

  CHECK_THROWS_AS(sherk_points(F, SherkSurface{F.q_zero(), F.zero(), F.zero(), F.q_zero()}),
                  Error);
}

TEST_CASE("sherk size census covers all parameter classes") {
  FieldCtx F = FieldCtx::make(2);
  SherkCensus census = sherk_size_census(F);
  // sizes are 1, 3, 5, 7 at q=2 with known class counts
  std::map<std::size_t, std::size_t> expect = {{1, 9}, {3, 84}, {5, 126}, {7, 36}};
  CHECK(census.class_counts == expect);
  // total classes = (q^12 - 1)/(q - 1) parameter vectors up to scalars... the
  // count here is just the sum of the strata
  std::size_t total = 0;
  for (const auto& [size, count] : census.class_counts) total += count;
  CHECK(total == 255);
  // distinct point sets of the top stratum are exactly the covers
  auto covers = enumerate_covers(F);
  std::set<std::vector<Pg1Point>> coversets;
  for (const auto& e : covers) coversets.insert(e.points);
  CHECK(census.distinct_sets.at(7) == coversets);
}

TEST_CASE("linear sets of rank three have at most q^2+q+1 points") {
  FieldCtx F = FieldCtx::make(3);
  // the scattered basis used by the splash model
  LinearSetBasis b;
  Fq3 t = F.tau(), t2 = F.mul(t, t);
  b.rows[0] = {F.one(), F.neg(F.one())};
  b.rows[1] = {t, F.neg(F.frobenius(t, 1))};
  b.rows[2] = {t2, F.neg(F.frobenius(t2, 1))};
  CHECK(is_scattered(F, b));
  auto pts = linear_set_points(F, b);
  CHECK(pts.size() == 13);
  // a non-scattered example: all second coordinates zero gives a single point
  LinearSetBasis degenerate;
  degenerate.rows[0] = {F.one(), F.zero()};
  degenerate.rows[1] = {t, F.zero()};
  degenerate.rows[2] = {t2, F.zero()};
  auto dpts = linear_set_points(F, degenerate);
  CHECK(dpts.size() == 1);
  CHECK(!is_scattered(F, degenerate));
  // GF(q)-dependent rows are rejected
  LinearSetBasis dep;
  dep.rows[0] = {F.one(), F.zero()};
  dep.rows[1] = {F.one(), F.zero()};
  dep.rows[2] = {t, F.one()};
  CHECK_THROWS_AS(linear_set_points(F, dep), Error);
}

TEST_CASE("fit_cover recovers the canonical splash parameters") {
  for (unsigned q : {2u, 3u, 4u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    PlaneCtx pl(F);
    Subplane pi = Subplane::canonical(pl);
    Splash S = compute_splash(pl, pi, canonical_exterior_line(pl));
    Cover c = fit_cover(pl, S);
    CHECK(c.kind == CoverKind::TypeI);
    CHECK(c.a == F.zero());
    CHECK(c.f == F.neg(F.q_one()));
    CHECK(cover_points(F, c) == splash_theta_set(pl, S));
  }
}

TEST_CASE("disjoint splash family partitions the host minus carriers") {
  for (unsigned q : {3u, 4u, 5u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    PlaneCtx pl(F);
    Subplane pi = Subplane::canonical(pl);
    ProjLine ell = canonical_exterior_line(pl);
    CarrierTriple tri = carriers(pl, pi, ell);
    auto fibers = disjoint_splashes_with_carriers(pl, tri.e1, tri.e2);
    REQUIRE(fibers.size() == q - 1);
    std::set<ProjPoint> seen;
    for (const auto& f : fibers) {
      CHECK(f.size() == q * q + q + 1);
      for (const auto& p : f) {
        CHECK(pl.incident(p, ell));
        CHECK(seen.insert(p).second);
      }
    }
    CHECK(seen.size() == (q - 1) * (q * q + q + 1));
    CHECK(!seen.count(tri.e1));
    CHECK(!seen.count(tri.e2));
    // the canonical splash is one of the fibers
    Splash S = compute_splash(pl, pi, ell);
    CHECK(std::find(fibers.begin(), fibers.end(), S.points) != fibers.end());
  }
}

TEST_CASE("pg1 helpers: mobius orbits and set stabilizers") {
  FieldCtx F = FieldCtx::make(2);
  // the identity map stabilizes everything
  Mat2 id = {F.one(), F.zero(), F.zero(), F.one()};
  CHECK(mobius_generated_order(F, {id}) == 1);
  // theta -> theta + 1 has order p = 2
  Mat2 shift = {F.one(), F.one(), F.zero(), F.one()};
  CHECK(mobius_generated_order(F, {shift}) == 2);
  // theta -> tau * theta has order 7
  Mat2 scale = {F.tau(), F.zero(), F.zero(), F.one()};
  CHECK(mobius_generated_order(F, {scale}) == 7);
  // a full-line set is stabilized by all of the group: |PGL(2,8)| = 504
  std::vector<Pg1Point> all = {Pg1Point::infinity()};
  for (unsigned v = 0; v < F.ext_size(); ++v) all.push_back(Pg1Point::at(F.el(v)));
  std::sort(all.begin(), all.end());
  CHECK(pg1_set_stabilizer_order(F, all) == 504);
  CHECK(pg1_set_orbit(F, all).size() == 1);
}

} // TEST_SUITE
