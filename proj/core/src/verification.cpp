#include "exsplash/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "exsplash/census.hpp"
#include "exsplash/circle_models.hpp"
#include "exsplash/errors.hpp"
#include "exsplash/projection.hpp"
#include "exsplash/subline_families.hpp"

namespace exsplash {

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.report_only && !r.pass) return false;
  return true;
}

namespace {

using Verdict = std::pair<bool, std::string>;

std::string num(std::uint64_t v) { return std::to_string(v); }

class Harness {
public:
  void run(const std::string& name, bool report_only, const std::function<Verdict()>& fn) {
    using clock = std::chrono::steady_clock;
    CheckResult r;
    r.name = name;
    r.report_only = report_only;
    const auto t0 = clock::now();
    try {
      auto [ok, details] = fn();
      r.pass = ok;
      r.details = std::move(details);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

// Orbit of a single point under repeated application of h, as a sorted set.
std::vector<ProjPoint> point_orbit(const PlaneCtx& pl, const Homography& h, ProjPoint p,
                                   unsigned cap) {
  std::vector<ProjPoint> orbit;
  for (unsigned i = 0; i < cap; ++i) {
    orbit.push_back(p);
    p = h.apply(pl, p);
    if (p == orbit.front()) break;
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool sources_are_one_orbit(const PlaneCtx& pl, const Homography& gen, unsigned n1,
                           const std::vector<ProjPoint>& sources) {
  if (sources.empty()) return false;
  return point_orbit(pl, gen, sources.front(), n1 + 1) == sources;
}

struct Ctx {
  FieldCtx F;
  PlaneCtx pl;
  Subplane pi;
  ProjLine ell;
  Splash S;
  CarrierTriple tri;
  SingerGroup singer;
  std::vector<Pg1Point> theta;
  std::vector<std::vector<ProjPoint>> fibers;
  unsigned n1; // q^2 + q + 1

  explicit Ctx(FieldCtx field)
      : F(field),
        pl(F),
        pi(Subplane::canonical(pl)),
        ell(canonical_exterior_line(pl)),
        S(compute_splash(pl, pi, ell)),
        tri(carriers(pl, pi, ell)),
        singer(singer_group(pl, pi, ell)),
        theta(splash_theta_set(pl, S)),
        fibers(disjoint_splashes_with_carriers(pl, tri.e1, tri.e2)),
        n1(F.q() * F.q() + F.q() + 1) {}
};

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Harness h;
  const unsigned q = opt.q;

  FieldCtx F = opt.poly ? FieldCtx::make(q, *opt.poly) : FieldCtx::make(q);
  Ctx cx(F);
  const unsigned n1 = cx.n1;
  const unsigned jobs = opt.jobs ? opt.jobs : 1;

  // ---------------------------------------------------------------- fields
  h.run("field-tau-primitive", false, [&]() -> Verdict {
    unsigned ord = cx.F.mul_order(cx.F.tau());
    return {ord == cx.F.ext_units(), "order(tau) = " + num(ord)};
  });

  h.run("field-norm-trace-laws", false, [&]() -> Verdict {
    const auto& Fx = cx.F;
    bool ok = true;
    for (unsigned a = 0; a < Fx.ext_size() && ok; ++a) {
      for (unsigned b = 0; b < Fx.ext_size(); ++b) {
        Fq3 x = Fx.el(a), y = Fx.el(b);
        if (Fx.norm(Fx.mul(x, y)) != Fx.mul(Fx.norm(x), Fx.norm(y))) { ok = false; break; }
        if (Fx.trace(Fx.add(x, y)) != Fx.add(Fx.trace(x), Fx.trace(y))) { ok = false; break; }
      }
    }
    bool lin = true;
    for (unsigned l = 0; l < Fx.q() && lin; ++l) {
      for (unsigned a = 0; a < Fx.ext_size(); ++a) {
        Fq lam = Fx.q_el(l);
        Fq3 x = Fx.el(a);
        if (Fx.trace(Fx.mul(Fx.embed(lam), x)) != Fx.mul(lam, Fx.trace(x))) { lin = false; break; }
      }
    }
    return {ok && lin, "multiplicativity and GF(q)-linearity over all pairs"};
  });

  h.run("field-norm-fibers-partition", false, [&]() -> Verdict {
    const auto& Fx = cx.F;
    std::set<std::uint16_t> seen;
    bool ok = true;
    for (unsigned f = 1; f < Fx.q(); ++f) {
      auto fiber = Fx.solve_norm_eq(Fx.q_el(f));
      if (fiber.size() != n1) ok = false;
      for (Fq3 x : fiber)
        if (!seen.insert(x.v).second) ok = false;
    }
    if (seen.size() != Fx.ext_units()) ok = false;
    return {ok, num(q - 1) + " fibers of " + num(n1) + " covering all units"};
  });

  // ---------------------------------------------------------- splash core
  h.run("canonical-line-exterior", false, [&]() -> Verdict {
    std::size_t common = 0;
    for (const auto& p : cx.pi.points())
      if (cx.pl.incident(p, cx.ell)) ++common;
    return {common == 0 && cx.S.kind == SplashKind::Exterior,
            "0 subplane points on the canonical line"};
  });

  h.run("canonical-splash-theta-set", false, [&]() -> Verdict {
    // expected: {E1 + theta E2 : N(theta) = -1}
    LineFrame frame(cx.pl, cx.tri.e1, cx.tri.e2);
    std::vector<Pg1Point> fiber;
    for (Fq3 x : cx.F.solve_norm_eq(cx.F.neg(cx.F.q_one()))) fiber.push_back(Pg1Point::at(x));
    auto expected = frame.preimage(fiber);
    bool ok = expected == cx.S.points && cx.theta == fiber;
    return {ok, num(cx.S.points.size()) + " points match the norm fiber of -1"};
  });

  h.run("canonical-carrier-triple", false, [&]() -> Verdict {
    Fq3 t = cx.F.tau();
    ProjPoint e1 = cx.pl.make_point(cx.F.one(), t, cx.F.mul(t, t));
    bool ok = cx.tri.e1 == e1;
    ok = ok && cx.tri.e2 == cx.pl.frobenius(e1, 1);
    ok = ok && cx.tri.e3 == cx.pl.frobenius(e1, 2);
    ok = ok && cx.pl.incident(cx.tri.e1, cx.ell) && cx.pl.incident(cx.tri.e2, cx.ell) &&
         !cx.pl.incident(cx.tri.e3, cx.ell);
    return {ok, "(1,tau,tau^2) and conjugates"};
  });

  h.run("singer-group-regular", false, [&]() -> Verdict {
    bool ok = cx.singer.order == n1;
    ok = ok && cx.singer.generator.pow(cx.F, n1) == Homography::identity(cx.F);
    // regular on subplane points: the orbit of one point is the whole subplane
    auto orbit = point_orbit(cx.pl, cx.singer.generator, cx.pi.points().front(), n1 + 1);
    ok = ok && orbit == cx.pi.points();
    // regular on subplane lines
    {
      std::vector<ProjLine> lorbit;
      ProjLine L = cx.pi.lines().front();
      for (unsigned i = 0; i < n1; ++i) {
        lorbit.push_back(L);
        L = cx.singer.generator.apply(cx.pl, L);
      }
      std::sort(lorbit.begin(), lorbit.end());
      ok = ok && L == cx.pi.lines().front() && lorbit == cx.pi.lines();
    }
    // exactly three fixed points / lines: the carrier triple and conjugate triangle
    auto fp = fixed_points(cx.pl, cx.singer.generator);
    std::vector<ProjPoint> efp = {cx.tri.e1, cx.tri.e2, cx.tri.e3};
    std::sort(efp.begin(), efp.end());
    ok = ok && fp == efp;
    auto fl = fixed_lines(cx.pl, cx.singer.generator);
    std::vector<ProjLine> efl = {cx.ell, cx.pi.conjugate(cx.pl, cx.ell, 1),
                                 cx.pi.conjugate(cx.pl, cx.ell, 2)};
    std::sort(efl.begin(), efl.end());
    ok = ok && fl == efl;
    std::vector<ProjLine> sfl(cx.singer.fixed_lines.begin(), cx.singer.fixed_lines.end());
    std::sort(sfl.begin(), sfl.end());
    ok = ok && sfl == efl;
    return {ok, "order " + num(n1) + ", regular, 3 fixed points and lines"};
  });

  // -------------------------------------------------------------- models
  h.run("model-cover-equivalence", false, [&]() -> Verdict {
    Cover c = fit_cover(cx.pl, cx.S);
    bool ok = c.kind == CoverKind::TypeI && c.a == cx.F.zero() &&
              c.f == cx.F.neg(cx.F.q_one());
    ok = ok && cover_points(cx.F, c) == cx.theta;
    return {ok, "type I, a=0, f=-1"};
  });

  h.run("model-sherk-equivalence", false, [&]() -> Verdict {
    SherkSurface s{cx.F.q_one(), cx.F.zero(), cx.F.zero(), cx.F.q_one()};
    return {sherk_points(cx.F, s) == cx.theta, "S(1,0,0,1) equals the theta set"};
  });

  h.run("model-linear-set-equivalence", false, [&]() -> Verdict {
    LinearSetBasis basis;
    Fq3 t = cx.F.tau(), t2 = cx.F.mul(cx.F.tau(), cx.F.tau());
    basis.rows[0] = {cx.F.one(), cx.F.neg(cx.F.one())};
    basis.rows[1] = {t, cx.F.neg(cx.F.frobenius(t, 1))};
    basis.rows[2] = {t2, cx.F.neg(cx.F.frobenius(t2, 1))};
    bool ok = is_scattered(cx.F, basis) && linear_set_points(cx.F, basis) == cx.theta;
    return {ok, "scattered rank-3 set {(x, -x^q)} equals the theta set"};
  });

  if (q <= 4) {
    h.run("cover-census-closed-form", false, [&]() -> Verdict {
      auto cc = enumerate_covers(cx.F);
      bool ok = cc.size() == splash_count_closed_form(q);
      std::size_t multi = 0;
      for (const auto& e : cc)
        if (e.carrier_pairs.size() != 1) ++multi;
      ok = ok && multi == 0;
      return {ok, num(cc.size()) + " cover point sets, unique carrier pair each"};
    });
  }

  if (q == 2) {
    h.run("sherk-size-census-matches-covers", false, [&]() -> Verdict {
      auto sc = sherk_size_census(cx.F);
      auto cc = enumerate_covers(cx.F);
      std::set<std::vector<Pg1Point>> coversets;
      for (const auto& e : cc) coversets.insert(e.points);
      bool ok = sc.distinct_sets.count(n1) && sc.distinct_sets.at(n1) == coversets;
      std::string strata;
      for (const auto& [sz, cnt] : sc.class_counts) {
        if (!strata.empty()) strata += " ";
        strata += num(sz) + ":" + num(cnt);
      }
      return {ok, "size strata " + strata + "; size-7 sets = 36 covers"};
    });
  }

  h.run("disjoint-splash-family", false, [&]() -> Verdict {
    bool ok = cx.fibers.size() == q - 1;
    std::set<ProjPoint> uni;
    for (const auto& f : cx.fibers) {
      if (f.size() != n1) ok = false;
      for (const auto& p : f)
        if (!uni.insert(p).second) ok = false; // pairwise disjoint
    }
    // union = host line minus the two carriers
    auto host = cx.pl.points_on_line(cx.ell);
    std::set<ProjPoint> expect(host.begin(), host.end());
    expect.erase(cx.tri.e1);
    expect.erase(cx.tri.e2);
    ok = ok && uni == expect;
    ok = ok && std::find(cx.fibers.begin(), cx.fibers.end(), cx.S.points) != cx.fibers.end();
    return {ok, num(q - 1) + " pairwise disjoint splashes through the carriers"};
  });

  h.run("stabilizer-pair-group-order", false, [&]() -> Verdict {
    StabilizerPair sp = stabilizer_pair(cx.pl, cx.S);
    bool ok = mobius_image(cx.F, sp.carrier_fixing, cx.theta) == cx.theta;
    ok = ok && mobius_image(cx.F, sp.carrier_swapping, cx.theta) == cx.theta;
    unsigned order = mobius_generated_order(cx.F, {sp.carrier_fixing, sp.carrier_swapping});
    ok = ok && order == 2 * n1;
    return {ok, "generated group order " + num(order)};
  });

  if (q <= 4) {
    h.run("splash-stabilizer-full-order", false, [&]() -> Verdict {
      unsigned order = pg1_set_stabilizer_order(cx.F, cx.theta);
      return {order == 2 * n1, "setwise stabilizer order " + num(order)};
    });
  }

  if (q == 2) {
    h.run("splash-pgl-orbit", false, [&]() -> Verdict {
      auto orbit = pg1_set_orbit(cx.F, cx.theta);
      auto cc = enumerate_covers(cx.F);
      std::set<std::vector<Pg1Point>> coversets;
      for (const auto& e : cc) coversets.insert(e.points);
      std::set<std::vector<Pg1Point>> orbitsets(orbit.begin(), orbit.end());
      bool ok = orbit.size() == splash_count_closed_form(q) && orbitsets == coversets;
      return {ok, "orbit of size " + num(orbit.size()) + " equals the cover census"};
    });
  }

  // ------------------------------------------------------ subline families
  std::optional<SublineFamilies> families;
  if (q >= 3) {
    h.run("splash-subline-count", false, [&]() -> Verdict {
      auto subs = sublines_in_splash(cx.pl, cx.S);
      return {subs.size() == 2 * n1, num(subs.size()) + " sublines in the splash"};
    });

    h.run("subline-families-partition", false, [&]() -> Verdict {
      families.emplace(classify_families(cx.pl, cx.pi, cx.ell));
      bool ok = families->pencil.size() == n1 && families->conic.size() == n1;
      std::set<std::vector<ProjPoint>> all;
      for (const auto& b : families->pencil) all.insert(b.points);
      for (const auto& b : families->conic) all.insert(b.points);
      ok = ok && all.size() == 2 * n1;
      std::set<std::vector<ProjPoint>> oracle;
      for (const auto& b : sublines_in_splash(cx.pl, cx.S)) oracle.insert(b.points);
      ok = ok && all == oracle;
      return {ok, "pencil and dual-conic families partition all " + num(2 * n1) + " sublines"};
    });

    h.run("pencil-iff-concurrent-witnesses", false, [&]() -> Verdict {
      if (!families) return {false, "family classification unavailable"};
      bool ok = true;
      for (const auto& b : families->pencil)
        if (!witnesses_concurrent(cx.pl, cx.pi, cx.S, b)) ok = false;
      for (const auto& b : families->conic)
        if (witnesses_concurrent(cx.pl, cx.pi, cx.S, b)) ok = false;
      return {ok, "witness lines concurrent exactly on the pencil family"};
    });

    h.run("special-conic-bundles", false, [&]() -> Verdict {
      auto spc = special_point_conics(cx.pl, cx.pi, cx.ell);
      auto sdc = special_dual_conics(cx.pl, cx.pi, cx.ell);
      bool ok = spc.size() == n1 && sdc.size() == n1;
      for (const auto& c : spc)
        if (!conic_irreducible(cx.F, c)) ok = false;
      for (const auto& c : sdc)
        if (!conic_irreducible(cx.F, c)) ok = false;
      // projective bundle: pairwise meet in exactly one element
      for (std::size_t i = 0; i < spc.size() && ok; ++i) {
        auto pi_ = conic_points(cx.F, spc[i]);
        for (std::size_t j = i + 1; j < spc.size(); ++j) {
          auto pj = conic_points(cx.F, spc[j]);
          std::vector<IntPoint> common;
          std::set_intersection(pi_.begin(), pi_.end(), pj.begin(), pj.end(),
                                std::back_inserter(common));
          if (common.size() != 1) { ok = false; break; }
        }
      }
      for (std::size_t i = 0; i < sdc.size() && ok; ++i) {
        auto li = conic_lines(cx.F, sdc[i]);
        for (std::size_t j = i + 1; j < sdc.size(); ++j) {
          auto lj = conic_lines(cx.F, sdc[j]);
          std::vector<IntLine> common;
          std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(),
                                std::back_inserter(common));
          if (common.size() != 1) { ok = false; break; }
        }
      }
      // Singer action regular on both bundles
      auto ambient_rep = [&](const InternalConic& c) {
        std::vector<ProjPoint> rep;
        for (const auto& ip : conic_points(cx.F, c)) rep.push_back(ambient_point(cx.pl, cx.pi, ip));
        std::sort(rep.begin(), rep.end());
        return rep;
      };
      auto ambient_rep_dual = [&](const InternalConic& c) {
        std::vector<ProjLine> rep;
        for (const auto& il : conic_lines(cx.F, c)) rep.push_back(ambient_line(cx.pl, cx.pi, il));
        std::sort(rep.begin(), rep.end());
        return rep;
      };
      {
        std::set<std::vector<ProjPoint>> bundle;
        for (const auto& c : spc) bundle.insert(ambient_rep(c));
        std::set<std::vector<ProjPoint>> orbit;
        auto cur = ambient_rep(spc.front());
        for (unsigned i = 0; i < n1; ++i) {
          orbit.insert(cur);
          std::vector<ProjPoint> next;
          for (const auto& p : cur) next.push_back(cx.singer.generator.apply(cx.pl, p));
          std::sort(next.begin(), next.end());
          cur = std::move(next);
        }
        ok = ok && orbit == bundle;
      }
      {
        std::set<std::vector<ProjLine>> bundle;
        for (const auto& c : sdc) bundle.insert(ambient_rep_dual(c));
        std::set<std::vector<ProjLine>> orbit;
        auto cur = ambient_rep_dual(sdc.front());
        for (unsigned i = 0; i < n1; ++i) {
          orbit.insert(cur);
          std::vector<ProjLine> next;
          for (const auto& l : cur) next.push_back(cx.singer.generator.apply(cx.pl, l));
          std::sort(next.begin(), next.end());
          cur = std::move(next);
        }
        ok = ok && orbit == bundle;
      }
      return {ok, num(n1) + " conics per bundle, pairwise meeting once, one Singer orbit"};
    });

    h.run("subline-family-swap", false, [&]() -> Verdict {
      if (!families) return {false, "family classification unavailable"};
      FamilySwap fs = swap_families(cx.pl, cx.S, cx.pi);
      bool ok = fs.involution.compose(cx.F, fs.involution) == Homography::identity(cx.F);
      for (const auto& p : cx.S.points)
        if (!cx.S.contains(fs.involution.apply(cx.pl, p))) ok = false;
      ok = ok && fs.involution.apply(cx.pl, cx.tri.e1) == cx.tri.e2;
      ok = ok && fs.involution.apply(cx.pl, cx.tri.e2) == cx.tri.e1;
      ok = ok && !(fs.image == cx.pi);
      ok = ok && compute_splash(cx.pl, fs.image, cx.ell).points == cx.S.points;
      std::set<std::vector<ProjPoint>> pencilset, conicset;
      for (const auto& b : families->pencil) pencilset.insert(b.points);
      for (const auto& b : families->conic) conicset.insert(b.points);
      auto image_of = [&](const Subline& b) {
        std::vector<ProjPoint> img;
        for (const auto& p : b.points) img.push_back(fs.involution.apply(cx.pl, p));
        std::sort(img.begin(), img.end());
        return img;
      };
      for (const auto& b : families->pencil)
        if (!conicset.count(image_of(b))) ok = false;
      for (const auto& b : families->conic)
        if (!pencilset.count(image_of(b))) ok = false;
      // the image subplane sees the families with the roles reversed
      auto f2 = classify_families(cx.pl, fs.image, cx.ell);
      std::set<std::vector<ProjPoint>> p2;
      for (const auto& b : f2.pencil) p2.insert(b.points);
      ok = ok && p2 == conicset;
      return {ok, "involution swaps carriers and exchanges the families"};
    });
  }

  // ----------------------------------------------------------- projection
  h.run("projection-third-conjugate-parity", false, [&]() -> Verdict {
    Projection pr = project_subplane(cx.pl, cx.pi, cx.tri.e3, cx.ell);
    bool even = (q % 2 == 0);
    bool ok;
    std::string det;
    if (even) {
      ok = pr.image == cx.S.points;
      det = "q even: projection from the third conjugate equals the splash";
    } else {
      ok = pr.image != cx.S.points;
      ok = ok && std::find(cx.fibers.begin(), cx.fibers.end(), pr.image) != cx.fibers.end();
      det = "q odd: image differs but shares the carrier pair";
    }
    return {ok, det};
  });

  std::optional<ProjectionCensus> pcensus;
  if (q <= 3) {
    h.run("projection-census-structure", false, [&]() -> Verdict {
      pcensus.emplace(projection_census(cx.pl, cx.pi, cx.ell, jobs));
      const auto& pc = *pcensus;
      const std::size_t q3 = cx.F.ext_size();
      bool ok = pc.source_count == cx.pl.point_count() - n1 - (q3 + 1);
      std::size_t tangent_groups = 0, ext_groups = 0;
      bool orbit_ok = true, fiber_counts_ok = true, tangent_orbit_ok = true;
      std::size_t equals_splash = 0;
      for (const auto& g : pc.groups) {
        if (g.cls == ProjectionClass::TangentSize) {
          ++tangent_groups;
          if (g.singer_orbit_size != n1) tangent_orbit_ok = false;
        } else {
          ++ext_groups;
          if (g.singer_orbit_size != 1 && g.singer_orbit_size != n1) orbit_ok = false;
          if (g.same_carriers) {
            std::size_t k = g.sources.size();
            if (q % 2 == 0) {
              if (k != 1 && k != n1) fiber_counts_ok = false;
            } else {
              if (k != n1 && k != n1 + 1) fiber_counts_ok = false;
            }
          }
          if (g.equals_splash) ++equals_splash;
        }
      }
      ok = ok && orbit_ok && tangent_orbit_ok && fiber_counts_ok;
      if (q % 2 == 0) {
        // the splash itself is projected from the third conjugate point only
        bool found = false;
        for (const auto& g : pc.groups)
          if (g.equals_splash) {
            found = true;
            if (!(g.sources.size() == 1 && g.sources.front() == cx.tri.e3)) ok = false;
          }
        ok = ok && found && equals_splash == 1;
      } else {
        ok = ok && equals_splash == 0;
      }
      if (q == 2) {
        ok = ok && tangent_groups == 35;
        for (const auto& g : pc.groups)
          if (g.cls == ProjectionClass::TangentSize && g.sources.size() != 1) ok = false;
        for (const auto& g : pc.groups)
          if (g.cls == ProjectionClass::ExteriorSize &&
              !(g.sources.size() == 1 || g.sources.size() == n1))
            ok = false;
      }
      return {ok, num(pc.source_count) + " sources, " + num(tangent_groups) + " tangent + " +
                      num(ext_groups) + " exterior images"};
    });

    h.run("projection-census-conjecture", true, [&]() -> Verdict {
      if (!pcensus) return {false, "projection census unavailable"};
      const auto& pc = *pcensus;
      const std::size_t q3 = cx.F.ext_size();
      bool ok = true;
      std::string det;

      // Part 1: sources on extended subplane lines give distinct tangent images.
      std::size_t tangent_groups = 0;
      bool single = true, location = true;
      for (const auto& g : pc.groups) {
        bool tangent = g.cls == ProjectionClass::TangentSize;
        if (tangent) {
          ++tangent_groups;
          if (g.sources.size() != 1) single = false;
        }
        for (const auto& s : g.sources) {
          bool on_ext = false;
          for (const auto& L : cx.pi.lines())
            if (cx.pl.incident(s, L)) { on_ext = true; break; }
          if (on_ext != tangent) location = false;
        }
      }
      std::size_t expected_tangent = n1 * (q3 - q - 1);
      ok = ok && tangent_groups == expected_tangent && single && location;
      det += "tangent " + num(tangent_groups) + "/" + num(expected_tangent);

      // Part 2a: same-carrier strata.
      std::size_t fiber_images = 0, exceptional = 0;
      bool orbits_ok = true;
      for (const auto& g : pc.groups) {
        if (g.cls != ProjectionClass::ExteriorSize || !g.same_carriers) continue;
        ++fiber_images;
        if (g.equals_splash) {
          if (!(q % 2 == 0 && g.sources.size() == 1 && g.sources.front() == cx.tri.e3))
            orbits_ok = false;
          continue;
        }
        std::vector<ProjPoint> srcs = g.sources;
        if (q % 2 == 1 && srcs.size() == n1 + 1) {
          ++exceptional;
          auto it = std::find(srcs.begin(), srcs.end(), cx.tri.e3);
          if (it == srcs.end()) orbits_ok = false;
          else srcs.erase(it);
        }
        if (srcs.size() != n1 || !sources_are_one_orbit(cx.pl, cx.singer.generator, n1, srcs))
          orbits_ok = false;
      }
      std::size_t expected_fibers = (q % 2 == 0) ? (q - 1) : (q - 2);
      ok = ok && fiber_images == expected_fibers && orbits_ok;
      if (q % 2 == 1) ok = ok && exceptional == 1;
      det += "; same-carrier images " + num(fiber_images) + "/" + num(expected_fibers);

      // Part 2b: every remaining exterior image from one point, or from two
      // points in different Singer orbits.
      std::size_t one = 0, two = 0;
      bool rest_ok = true;
      for (const auto& g : pc.groups) {
        if (g.cls != ProjectionClass::ExteriorSize || g.same_carriers) continue;
        if (g.sources.size() == 1) ++one;
        else if (g.sources.size() == 2) {
          ++two;
          auto orbit = point_orbit(cx.pl, cx.singer.generator, g.sources[0], n1 + 1);
          if (std::binary_search(orbit.begin(), orbit.end(), g.sources[1])) rest_ok = false;
        } else rest_ok = false;
      }
      ok = ok && rest_ok;
      det += "; other exterior images: " + num(one) + " single, " + num(two) + " double";
      return {ok, det};
    });
  }

  if (q <= 3) {
    h.run("subline-projection-unique", false, [&]() -> Verdict {
      Rng rng(opt.seed);
      const auto& lines = cx.pl.lines();
      const unsigned samples = 20;
      unsigned done = 0;
      while (done < samples) {
        const ProjLine m = lines[rng.next(lines.size())];
        if (m == cx.ell) continue;
        const ProjPoint z = cx.pl.meet(m, cx.ell);
        auto pick_subline = [&](const ProjLine& host) -> std::optional<Subline> {
          auto pts = cx.pl.points_on_line(host);
          pts.erase(std::remove(pts.begin(), pts.end(), z), pts.end());
          std::array<std::size_t, 3> pick{};
          for (int i = 0; i < 3; ++i) pick[i] = static_cast<std::size_t>(rng.next(pts.size()));
          if (pick[0] == pick[1] || pick[0] == pick[2] || pick[1] == pick[2]) return std::nullopt;
          Subline b = subline_through(cx.pl, pts[pick[0]], pts[pick[1]], pts[pick[2]]);
          if (b.contains(z)) return std::nullopt;
          return b;
        };
        auto b = pick_subline(m);
        if (!b) continue;
        auto c = pick_subline(cx.ell);
        if (!c) continue;
        ProjPoint p = subline_projection_point(cx.pl, *b, *c); // throws unless unique
        if (cx.pl.incident(p, m) || cx.pl.incident(p, cx.ell)) return {false, "projection point on a host"};
        ++done;
      }
      return {true, num(samples) + " sampled pairs, one projection point each"};
    });

    h.run("tangent-splash-not-projection", false, [&]() -> Verdict {
      ProjLine lt = cx.pl.make_line(cx.F.zero(), cx.F.one(), cx.F.neg(cx.F.tau()));
      std::size_t common = 0;
      for (const auto& p : cx.pi.points())
        if (cx.pl.incident(p, lt)) ++common;
      if (common != 1) return {false, "fixture line is not tangent"};
      TangentProjectionScan scan = scan_tangent_projections(cx.pl, cx.pi, lt);
      return {scan.witnesses == 0,
              num(scan.candidates) + " candidates, " + num(scan.witnesses) + " reproduce the tangent splash"};
    });
  }

  // --------------------------------------------------------------- census
  std::optional<ExhaustiveCensus> ecensus;
  if (q == 2) {
    h.run("exterior-census-counts", false, [&]() -> Verdict {
      ecensus.emplace(exhaustive_exterior_census(cx.pl, cx.ell, jobs));
      const auto& ec = *ecensus;
      bool ok = ec.exterior_subplane_count == exterior_subplanes_closed_form(q);
      ok = ok && ec.classes.size() == splash_count_closed_form(q);
      for (const auto& cl : ec.classes) {
        if (cl.subplane_count != subplanes_per_splash_closed_form(q)) ok = false;
        if (!cl.carriers_consistent) ok = false;
      }
      ok = ok && ec.canonical_class_members.size() == subplanes_per_splash_closed_form(q);
      return {ok, num(ec.exterior_subplane_count) + " exterior subplanes in " +
                      num(ec.classes.size()) + " classes of " +
                      num(subplanes_per_splash_closed_form(q)) + ", carriers shared"};
    });

    h.run("intersection-profile-exhaustive", false, [&]() -> Verdict {
      if (!ecensus) return {false, "census unavailable"};
      const auto& mem = ecensus->canonical_class_members;
      const auto& pts = cx.pl.points();
      std::map<std::size_t, std::uint64_t> hist;
      std::uint64_t sublines = 0, triangles = 0;
      bool ok = true;
      for (std::size_t a = 0; a < mem.size(); ++a) {
        for (std::size_t b = a + 1; b < mem.size(); ++b) {
          std::vector<std::uint32_t> in;
          std::set_intersection(mem[a].begin(), mem[a].end(), mem[b].begin(), mem[b].end(),
                                std::back_inserter(in));
          ++hist[in.size()];
          if (in.size() > q + 1) ok = false; // never q+2 or more common points
          if (in.size() == q + 1) {
            ProjPoint P = pts[in[0]], Q = pts[in[1]], R = pts[in[2]];
            if (cx.pl.incident(R, cx.pl.join(P, Q))) {
              // collinear triples must close into a common subline
              if (points_form_subline(cx.pl, {P, Q, R})) ++sublines;
              else ok = false;
            } else {
              ++triangles;
            }
          }
        }
      }
      // every member shares each of its q^2+q+1 sublines with exactly one
      // other member, so the subline-sharing pairs are counted exactly
      std::uint64_t expect_subline_pairs = mem.size() * n1 / 2;
      ok = ok && sublines == expect_subline_pairs;
      std::string det = "sizes";
      for (const auto& [sz, cnt] : hist) det += " " + num(sz) + ":" + num(cnt);
      det += "; " + num(sublines) + " subline pairs (expected " + num(expect_subline_pairs) +
             "), " + num(triangles) + " triangle pairs";
      return {ok, det};
    });
  }

  if (q <= 3) {
    h.run("two-subplanes-per-subline", false, [&]() -> Verdict {
      Rng rng(opt.seed + 1);
      const unsigned samples = (q == 2) ? 100 : 20;
      for (unsigned i = 0; i < samples; ++i) {
        Subline b = random_splash_subline(cx.pl, cx.S, rng);
        auto subs = subplanes_through_subline_with_splash(cx.pl, b, cx.S);
        if (subs.size() != 2)
          return {false, "sample " + num(i) + " yields " + num(subs.size()) + " subplanes"};
        for (const auto& sp : subs) {
          for (const auto& x : b.points)
            if (!sp.contains(x)) return {false, "subplane misses the subline"};
        }
        // the two subplanes share exactly the subline
        auto common = subplane_intersection(subs[0], subs[1]);
        if (common != b.points) return {false, "pair shares more than the subline"};
      }
      return {true, num(samples) + " sampled sublines, exactly two subplanes each"};
    });
  }

  if (q == 3) {
    h.run("splash-count-identity", false, [&]() -> Verdict {
      auto cc = enumerate_covers(cx.F);
      bool ok = cc.size() == splash_count_closed_form(q);
      ok = ok && splash_count_closed_form(q) * subplanes_per_splash_closed_form(q) ==
                     exterior_subplanes_closed_form(q);
      Rng rng(opt.seed + 2);
      for (int i = 0; i < 20; ++i) {
        Subplane sp = random_subplane_with_splash(cx.pl, cx.pi, cx.S, rng);
        if (compute_splash(cx.pl, sp, cx.ell).points != cx.S.points) ok = false;
      }
      return {ok, num(cc.size()) + " splashes per line; orbit samples stay in the class"};
    });

    h.run("intersection-profile-sampled", false, [&]() -> Verdict {
      Rng rng(opt.seed + 3);
      std::map<std::size_t, std::uint64_t> hist;
      bool ok = true;
      for (int i = 0; i < 25; ++i) {
        Subplane a = random_subplane_with_splash(cx.pl, cx.pi, cx.S, rng);
        Subplane b = random_subplane_with_splash(cx.pl, cx.pi, cx.S, rng);
        if (a == b) continue;
        auto common = subplane_intersection(a, b);
        ++hist[common.size()];
        if (common.size() > q + 1) ok = false;
        if (common.size() == q + 1 && !points_form_subline(cx.pl, common)) ok = false;
      }
      std::string det = "sizes";
      for (const auto& [sz, cnt] : hist) det += " " + num(sz) + ":" + num(cnt);
      return {ok, det};
    });

    h.run("common-splash-family-swap-conjecture", true, [&]() -> Verdict {
      Rng rng(opt.seed + 4);
      bool ok = true;
      for (int i = 0; i < 5; ++i) {
        Subline b = random_splash_subline(cx.pl, cx.S, rng);
        auto subs = subplanes_through_subline_with_splash(cx.pl, b, cx.S);
        if (subs.size() != 2) { ok = false; continue; }
        auto f1 = classify_families(cx.pl, subs[0], cx.ell);
        auto f2 = classify_families(cx.pl, subs[1], cx.ell);
        std::set<std::vector<ProjPoint>> p1, c1, p2, c2;
        for (const auto& s : f1.pencil) p1.insert(s.points);
        for (const auto& s : f1.conic) c1.insert(s.points);
        for (const auto& s : f2.pencil) p2.insert(s.points);
        for (const auto& s : f2.conic) c2.insert(s.points);
        if (!(p1 == c2 && c1 == p2)) ok = false;
      }
      return {ok, ok ? "families swapped for all sampled subline-sharing pairs"
                     : "a sampled pair does not swap families"};
    });
  }

  return h.results;
}

} // namespace exsplash
