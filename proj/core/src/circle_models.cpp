#include "exsplash/circle_models.hpp"

#include <algorithm>

namespace exsplash {

std::vector<Pg1Point> cover_points(const FieldCtx& F, const Cover& c) {
  if (c.f.v == 0) fail(Errc::BadParameters, "cover needs a nonzero norm value");
  if (c.f.v >= F.q()) fail(Errc::BadParameters, "cover norm value must be a GF(q) label");
  std::vector<Pg1Point> out;
  out.reserve(F.q() * F.q() + F.q() + 1);
  if (c.kind == CoverKind::TypeI) {
    for (unsigned v = 0; v < F.ext_size(); ++v) {
      Fq3 x = F.el(v);
      if (F.norm(F.sub(x, c.a)) == c.f) out.push_back(Pg1Point::at(x));
    }
  } else {
    if (c.a == c.b) fail(Errc::BadParameters, "TypeII cover needs distinct base points");
    if (c.f.v == 1) out.push_back(Pg1Point::infinity());
    for (unsigned v = 0; v < F.ext_size(); ++v) {
      Fq3 x = F.el(v);
      if (x == c.b) continue;
      Fq3 r = F.div(F.sub(x, c.a), F.sub(x, c.b));
      if (F.norm(r) == c.f) out.push_back(Pg1Point::at(x));
    }
  }
  std::sort(out.begin(), out.end());
  ensure(out.size() == static_cast<std::size_t>(F.q()) * F.q() + F.q() + 1,
         "every cover has q^2+q+1 points");
  return out;
}

std::pair<Pg1Point, Pg1Point> cover_carriers(const Cover& c) {
  Pg1Point u = Pg1Point::at(c.a);
  Pg1Point v = c.kind == CoverKind::TypeI ? Pg1Point::infinity() : Pg1Point::at(c.b);
  if (v < u) std::swap(u, v);
  return {u, v};
}

std::vector<Pg1Point> sherk_points(const FieldCtx& F, const SherkSurface& s) {
  if (s.f.v == 0 && s.g.v == 0 && s.alpha.v == 0 && s.delta.v == 0)
    fail(Errc::AllZeroParameters, "the zero form does not define a surface");
  if (s.f.v >= F.q() || s.g.v >= F.q())
    fail(Errc::BadParameters, "f and g must be GF(q) labels");
  Fq3 aq2 = F.frobenius(s.alpha, 2);
  std::vector<Pg1Point> out;
  for (unsigned v = 0; v < F.ext_size(); ++v) {
    Fq3 z = F.el(v);
    Fq3 zq1 = F.mul(z, F.frobenius(z, 1)); // z^{q+1}
    Fq acc = F.mul(s.f, F.norm(z));
    acc = F.add(acc, F.trace(F.mul(aq2, zq1)));
    acc = F.add(acc, F.trace(F.mul(s.delta, z)));
    acc = F.add(acc, s.g);
    if (acc.v == 0) out.push_back(Pg1Point::at(z));
  }
  if (s.f.v == 0) out.push_back(Pg1Point::infinity());
  std::sort(out.begin(), out.end());
  return out;
}

SherkCensus sherk_size_census(const FieldCtx& F) {
  const unsigned q = F.q(), Q = F.ext_size();
  SherkCensus census;
  // canonical class representatives: the first nonzero GF(q) component of
  // (f, alpha_0, alpha_1, alpha_2, delta_0, delta_1, delta_2, g) equals 1
  for (unsigned fv = 0; fv < q; ++fv)
    for (unsigned av = 0; av < Q; ++av)
      for (unsigned dv = 0; dv < Q; ++dv)
        for (unsigned gv = 0; gv < q; ++gv) {
          if (fv == 0 && av == 0 && dv == 0 && gv == 0) continue;
          Fq3 alpha = F.el(av), delta = F.el(dv);
          std::array<std::uint16_t, 8> comps = {
              static_cast<std::uint16_t>(fv), F.coeff(alpha, 0).v, F.coeff(alpha, 1).v,
              F.coeff(alpha, 2).v,            F.coeff(delta, 0).v, F.coeff(delta, 1).v,
              F.coeff(delta, 2).v,            static_cast<std::uint16_t>(gv)};
          unsigned lead = 0;
          while (comps[lead] == 0) ++lead;
          if (comps[lead] != 1) continue;
          SherkSurface s{F.q_el(fv), alpha, delta, F.q_el(gv)};
          auto pts = sherk_points(F, s);
          census.class_counts[pts.size()] += 1;
          census.distinct_sets[pts.size()].insert(std::move(pts));
        }
  return census;
}

std::vector<CoverCensusEntry> enumerate_covers(const FieldCtx& F) {
  std::map<std::vector<Pg1Point>, std::set<std::pair<Pg1Point, Pg1Point>>> acc;
  const unsigned Q = F.ext_size(), q = F.q();
  for (unsigned av = 0; av < Q; ++av)
    for (unsigned fv = 1; fv < q; ++fv) {
      Cover c{CoverKind::TypeI, F.el(av), F.zero(), F.q_el(fv)};
      acc[cover_points(F, c)].insert(cover_carriers(c));
    }
  for (unsigned av = 0; av < Q; ++av)
    for (unsigned bv = 0; bv < Q; ++bv) {
      if (av == bv) continue;
      for (unsigned fv = 1; fv < q; ++fv) {
        Cover c{CoverKind::TypeII, F.el(av), F.el(bv), F.q_el(fv)};
        acc[cover_points(F, c)].insert(cover_carriers(c));
      }
    }
  std::vector<CoverCensusEntry> out;
  out.reserve(acc.size());
  for (auto& [pts, pairs] : acc)
    out.push_back(CoverCensusEntry{pts, {pairs.begin(), pairs.end()}});
  return out;
}

namespace {

// GF(q)-rank of the rows, each row seen as a vector of GF(q) components.
unsigned gfq_rank(const FieldCtx& F, std::vector<std::array<Fq, 6>> rows) {
  unsigned rank = 0;
  for (unsigned col = 0; col < 6 && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].v == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Fq lead_inv = F.inv(rows[rank][col]);
    for (unsigned c = 0; c < 6; ++c) rows[rank][c] = F.mul(rows[rank][c], lead_inv);
    for (unsigned r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].v == 0) continue;
      Fq s = rows[r][col];
      for (unsigned c = 0; c < 6; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(s, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::vector<Pg1Point> linear_set_points(const FieldCtx& F, const LinearSetBasis& b) {
  std::vector<std::array<Fq, 6>> rows(3);
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned half = 0; half < 2; ++half)
      for (unsigned i = 0; i < 3; ++i) rows[r][half * 3 + i] = F.coeff(b.rows[r][half], i);
  if (gfq_rank(F, rows) != 3)
    fail(Errc::DependentBasis, "linear set basis must be GF(q)-independent");

  std::vector<Pg1Point> out;
  const unsigned q = F.q();
  for (unsigned c0 = 0; c0 < q; ++c0)
    for (unsigned c1 = 0; c1 < q; ++c1)
      for (unsigned c2 = 0; c2 < q; ++c2) {
        if (c0 == 0 && c1 == 0 && c2 == 0) continue;
        Fq3 s0 = F.embed(F.q_el(c0)), s1 = F.embed(F.q_el(c1)), s2 = F.embed(F.q_el(c2));
        Fq3 u0 = F.add(F.add(F.mul(s0, b.rows[0][0]), F.mul(s1, b.rows[1][0])),
                       F.mul(s2, b.rows[2][0]));
        Fq3 u1 = F.add(F.add(F.mul(s0, b.rows[0][1]), F.mul(s1, b.rows[1][1])),
                       F.mul(s2, b.rows[2][1]));
        ensure(u0.v != 0 || u1.v != 0, "independent rows span no zero vector");
        out.push_back(u1.v == 0 ? Pg1Point::infinity() : Pg1Point::at(F.div(u0, u1)));
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_scattered(const FieldCtx& F, const LinearSetBasis& b) {
  return linear_set_points(F, b).size() ==
         static_cast<std::size_t>(F.q()) * F.q() + F.q() + 1;
}

Cover fit_cover(const PlaneCtx& pl, const Splash& s) {
  const FieldCtx& F = pl.field();
  auto target = splash_theta_set(pl, s);
  const unsigned Q = F.ext_size(), q = F.q();
  for (unsigned av = 0; av < Q; ++av)
    for (unsigned fv = 1; fv < q; ++fv) {
      Cover c{CoverKind::TypeI, F.el(av), F.zero(), F.q_el(fv)};
      if (cover_points(F, c) == target) return c;
    }
  for (unsigned av = 0; av < Q; ++av)
    for (unsigned bv = 0; bv < Q; ++bv) {
      if (av == bv) continue;
      for (unsigned fv = 1; fv < q; ++fv) {
        Cover c{CoverKind::TypeII, F.el(av), F.el(bv), F.q_el(fv)};
        if (cover_points(F, c) == target) return c;
      }
    }
  fail(Errc::NoFit, "no cover reproduces the splash image");
}

std::vector<std::vector<ProjPoint>> disjoint_splashes_with_carriers(const PlaneCtx& pl,
                                                                    const ProjPoint& e1,
                                                                    const ProjPoint& e2) {
  const FieldCtx& F = pl.field();
  LineFrame frame(pl, e1, e2);
  std::vector<std::vector<ProjPoint>> out;
  out.reserve(pl.q() - 1);
  for (unsigned fv = 1; fv < pl.q(); ++fv) {
    auto fiber = F.solve_norm_eq(F.q_el(fv));
    std::vector<Pg1Point> ts;
    ts.reserve(fiber.size());
    for (auto x : fiber) ts.push_back(Pg1Point::at(x));
    out.push_back(frame.preimage(ts));
  }
  return out;
}

} // namespace exsplash
