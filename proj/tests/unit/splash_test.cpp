#include "doctest.h"

#include <algorithm>
#include <set>

#include "exsplash/errors.hpp"
#include "exsplash/splash.hpp"

using namespace exsplash;

namespace {

// Independent construction of the canonical exterior line and splash from
// raw field arithmetic.
struct Fixture {
  FieldCtx F;
  PlaneCtx pl;
  Subplane pi;

  explicit Fixture(unsigned q) : F(FieldCtx::make(q)), pl(F), pi(Subplane::canonical(pl)) {}

  ProjLine expected_line() const {
    Fq3 t = F.tau();
    Fq3 tq = F.frobenius(t, 1);
    return pl.make_line(F.neg(F.mul(t, tq)), F.add(tq, t), F.neg(F.one()));
  }

  ProjPoint e1() const {
    Fq3 t = F.tau();
    return pl.make_point(F.one(), t, F.mul(t, t));
  }

  std::vector<ProjPoint> expected_splash() const {
    ProjPoint E1 = e1();
    ProjPoint E2 = pl.frobenius(E1, 1);
    std::vector<ProjPoint> out;
    for (unsigned v = 1; v < F.ext_size(); ++v) {
      Fq3 th = F.el(v);
      if (F.norm(th) != F.neg(F.q_one())) continue;
      out.push_back(pl.make_point(F.add(E1.c[0], F.mul(th, E2.c[0])),
                                  F.add(E1.c[1], F.mul(th, E2.c[1])),
                                  F.add(E1.c[2], F.mul(th, E2.c[2]))));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

} // namespace

TEST_SUITE("splash") {

TEST_CASE("canonical exterior line matches its closed form") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fixture fx(q);
    CHECK(canonical_exterior_line(fx.pl) == fx.expected_line());
    for (const auto& p : fx.pi.points()) CHECK(!fx.pl.incident(p, fx.expected_line()));
  }
}

TEST_CASE("exterior splash equals the theta parametrisation") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fixture fx(q);
    ProjLine ell = canonical_exterior_line(fx.pl);
    Splash S = compute_splash(fx.pl, fx.pi, ell);
    CHECK(S.kind == SplashKind::Exterior);
    CHECK(S.host == ell);
    CHECK(S.points.size() == q * q + q + 1);
    CHECK(S.points == fx.expected_splash());
    for (const auto& p : S.points) CHECK(S.contains(p));
    CHECK(!S.contains(fx.e1()));
  }
}

TEST_CASE("splash points are meets of extended subplane lines with the host") {
  Fixture fx(3);
  ProjLine ell = canonical_exterior_line(fx.pl);
  Splash S = compute_splash(fx.pl, fx.pi, ell);
  std::set<ProjPoint> meets;
  for (const auto& L : fx.pi.lines()) meets.insert(fx.pl.meet(L, ell));
  std::vector<ProjPoint> expect(meets.begin(), meets.end());
  CHECK(S.points == expect);
}

TEST_CASE("carriers are the conjugate triangle of the splash") {
  for (unsigned q : {2u, 3u, 5u}) {
    CAPTURE(q);
    Fixture fx(q);
    ProjLine ell = canonical_exterior_line(fx.pl);
    CarrierTriple tri = carriers(fx.pl, fx.pi, ell);
    CHECK(tri.e1 == fx.e1());
    CHECK(tri.e2 == fx.pl.frobenius(fx.e1(), 1));
    CHECK(tri.e3 == fx.pl.frobenius(fx.e1(), 2));
    CHECK(fx.pl.incident(tri.e1, ell));
    CHECK(fx.pl.incident(tri.e2, ell));
    CHECK(!fx.pl.incident(tri.e3, ell));
    // carriers are not splash points
    Splash S = compute_splash(fx.pl, fx.pi, ell);
    CHECK(!S.contains(tri.e1));
    CHECK(!S.contains(tri.e2));
    CHECK(S.carrier1 == tri.e1);
    CHECK(S.carrier2 == tri.e2);
    CHECK(S.third_conjugate == tri.e3);
  }
}

TEST_CASE("singer group fixes subplane and exterior line with regular action") {
  Fixture fx(3);
  ProjLine ell = canonical_exterior_line(fx.pl);
  SingerGroup g = singer_group(fx.pl, fx.pi, ell);
  const unsigned n1 = 13;
  CHECK(g.order == n1);
  CHECK(g.generator.pow(fx.F, n1) == Homography::identity(fx.F));
  CHECK(g.generator.apply(fx.pl, ell) == ell);
  // setwise fixes the subplane, acting in one cycle on its points
  std::set<ProjPoint> seen;
  ProjPoint p = fx.pi.points().front();
  for (unsigned i = 0; i < n1; ++i) {
    CHECK(fx.pi.contains(p));
    seen.insert(p);
    p = g.generator.apply(fx.pl, p);
  }
  CHECK(p == fx.pi.points().front());
  CHECK(seen.size() == n1);
  // nontrivial powers fix only the carrier triangle
  CarrierTriple tri = carriers(fx.pl, fx.pi, ell);
  for (unsigned e = 1; e < n1; ++e) {
    auto fp = fixed_points(fx.pl, g.generator.pow(fx.F, e));
    std::vector<ProjPoint> expect = {tri.e1, tri.e2, tri.e3};
    std::sort(expect.begin(), expect.end());
    CHECK(fp == expect);
  }
}

TEST_CASE("splash is one orbit of the singer group on the host line") {
  Fixture fx(2);
  ProjLine ell = canonical_exterior_line(fx.pl);
  Splash S = compute_splash(fx.pl, fx.pi, ell);
  SingerGroup g = singer_group(fx.pl, fx.pi, ell);
  std::vector<ProjPoint> orbit;
  ProjPoint p = S.points.front();
  for (unsigned i = 0; i < g.order; ++i) {
    orbit.push_back(p);
    p = g.generator.apply(fx.pl, p);
  }
  std::sort(orbit.begin(), orbit.end());
  CHECK(orbit == S.points);
}

TEST_CASE("theta set is the norm fiber of minus one") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    Fixture fx(q);
    Splash S = compute_splash(fx.pl, fx.pi, canonical_exterior_line(fx.pl));
    auto theta = splash_theta_set(fx.pl, S);
    std::vector<Pg1Point> expect;
    for (Fq3 x : fx.F.solve_norm_eq(fx.F.neg(fx.F.q_one()))) expect.push_back(Pg1Point::at(x));
    CHECK(theta == expect);
  }
}

TEST_CASE("line frame round-trips between host points and parameters") {
  Fixture fx(3);
  ProjLine ell = canonical_exterior_line(fx.pl);
  CarrierTriple tri = carriers(fx.pl, fx.pi, ell);
  LineFrame frame(fx.pl, tri.e1, tri.e2);
  CHECK(frame.host() == ell);
  for (const auto& p : fx.pl.points_on_line(ell)) {
    Pg1Point t = frame.param_of(p);
    CHECK(frame.point_of(t) == p);
  }
  CHECK(frame.param_of(tri.e1) == Pg1Point::at(fx.F.zero()));
  CHECK(frame.param_of(tri.e2) == Pg1Point::infinity());
}

TEST_CASE("stabilizer pair acts by scaling and by inversion on theta") {
  for (unsigned q : {2u, 3u, 4u}) {
    CAPTURE(q);
    Fixture fx(q);
    Splash S = compute_splash(fx.pl, fx.pi, canonical_exterior_line(fx.pl));
    StabilizerPair sp = stabilizer_pair(fx.pl, S);
    // carrier_fixing is theta -> c * theta for a norm-one c of full order
    Fq3 c = mobius_apply(fx.F, sp.carrier_fixing, Pg1Point::at(fx.F.one())).t;
    CHECK(fx.F.norm(c) == fx.F.q_one());
    CHECK(fx.F.mul_order(c) == q * q + q + 1);
    for (unsigned v = 1; v < fx.F.ext_size(); ++v) {
      Fq3 x = fx.F.el(v);
      CHECK(mobius_apply(fx.F, sp.carrier_fixing, Pg1Point::at(x)) ==
            Pg1Point::at(fx.F.mul(c, x)));
    }
    // carrier_swapping is theta -> d / theta with N(d) = (-1)^2 = 1
    Fq3 d = mobius_apply(fx.F, sp.carrier_swapping, Pg1Point::at(fx.F.one())).t;
    CHECK(fx.F.norm(d) == fx.F.mul(fx.F.neg(fx.F.q_one()), fx.F.neg(fx.F.q_one())));
    for (unsigned v = 1; v < fx.F.ext_size(); ++v) {
      Fq3 x = fx.F.el(v);
      CHECK(mobius_apply(fx.F, sp.carrier_swapping, Pg1Point::at(x)) ==
            Pg1Point::at(fx.F.div(d, x)));
    }
    CHECK(mobius_apply(fx.F, sp.carrier_swapping, Pg1Point::infinity()) ==
          Pg1Point::at(fx.F.zero()));
    // both preserve the theta set
    auto theta = splash_theta_set(fx.pl, S);
    CHECK(mobius_image(fx.F, sp.carrier_fixing, theta) == theta);
    CHECK(mobius_image(fx.F, sp.carrier_swapping, theta) == theta);
  }
}

TEST_CASE("tangent splash has q^2+1 points and a centre on the subplane") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    Fixture fx(q);
    // [0, 1, -tau] passes through (1,0,0) only
    ProjLine lt = fx.pl.make_line(fx.F.zero(), fx.F.one(), fx.F.neg(fx.F.tau()));
    Splash S = compute_splash(fx.pl, fx.pi, lt);
    CHECK(S.kind == SplashKind::Tangent);
    CHECK(S.points.size() == q * q + 1);
    CHECK(fx.pi.contains(S.centre));
    CHECK(fx.pl.incident(S.centre, lt));
    CHECK(S.contains(S.centre));
  }
}

TEST_CASE("secant lines have no splash") {
  Fixture fx(2);
  // z = 0 meets the canonical subplane in q+1 points
  ProjLine sec = fx.pl.make_line(fx.F.zero(), fx.F.zero(), fx.F.one());
  CHECK_THROWS_AS(compute_splash(fx.pl, fx.pi, sec), Error);
  CHECK_THROWS_AS(carriers(fx.pl, fx.pi, sec), Error);
}

} // TEST_SUITE
