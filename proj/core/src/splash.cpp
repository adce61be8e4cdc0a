#include "exsplash/splash.hpp"

#include <algorithm>
#include <cassert>

namespace exsplash {

namespace {

unsigned count_common_points(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                             ProjPoint* witness = nullptr) {
  unsigned n = 0;
  for (const auto& p : pi.points())
    if (pl.incident(p, line)) {
      if (witness && n == 0) *witness = p;
      ++n;
    }
  return n;
}

} // namespace

bool Splash::contains(const ProjPoint& P) const {
  return std::binary_search(points.begin(), points.end(), P);
}

ProjLine canonical_exterior_line(const PlaneCtx& pl) {
  const FieldCtx& F = pl.field();
  Fq3 t = F.tau(), tq = F.frobenius(F.tau(), 1);
  return pl.make_line(F.neg(F.mul(t, tq)), F.add(tq, t), F.neg(F.one()));
}

Splash compute_splash(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line) {
  ProjPoint touch;
  unsigned common = count_common_points(pl, pi, line, &touch);
  if (common >= 2) fail(Errc::SecantLine, "line meets the subplane in 2 or more points");

  Splash s;
  s.host = line;
  s.points.reserve(pi.lines().size());
  for (const auto& m : pi.lines()) s.points.push_back(pl.meet(m, line));
  std::sort(s.points.begin(), s.points.end());
  s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());

  const unsigned q = pl.q();
  if (common == 0) {
    s.kind = SplashKind::Exterior;
    ensure(s.points.size() == static_cast<std::size_t>(q) * q + q + 1,
           "exterior splash meets every subplane line once");
    CarrierTriple ct = carriers(pl, pi, line);
    s.carrier1 = ct.e1;
    s.carrier2 = ct.e2;
    s.third_conjugate = ct.e3;
  } else {
    s.kind = SplashKind::Tangent;
    ensure(s.points.size() == static_cast<std::size_t>(q) * q + 1,
           "tangent splash has q^2+1 points");
    s.centre = touch;
  }
  return s;
}

CarrierTriple carriers(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line) {
  if (count_common_points(pl, pi, line) != 0)
    fail(Errc::NotExterior, "carriers exist only for exterior lines");
  ProjLine c1 = pi.conjugate(pl, line, 1);
  ProjLine c2 = pi.conjugate(pl, line, 2);
  CarrierTriple ct;
  ct.e1 = pl.meet(line, c2);
  ct.e2 = pl.meet(line, c1);
  ct.e3 = pl.meet(c1, c2);
  return ct;
}

SingerGroup singer_group(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line) {
  const FieldCtx& F = pl.field();
  if (count_common_points(pl, pi, line) != 0)
    fail(Errc::NotExterior, "the fixing group is cyclic only for exterior pairs");

  // pull the line back to the canonical subplane
  Homography gen_inv = pi.gen().inverse(F);
  ProjLine lp = gen_inv.apply(pl, line);

  // first carrier of (canonical subplane, pulled-back line)
  ProjPoint Fpt = pl.meet(lp, pl.frobenius(lp, 2));
  ensure(Fpt.c[0].v == 1, "carriers avoid every GF(q)-rational line");

  // GF(q)-rational change of frame sending (1, tau, tau^2) to that carrier
  Mat3 hm{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hm[3 * i + j] = F.embed(F.coeff(Fpt.c[i], j));
  Homography h = Homography::from_matrix(F, hm);

  // companion matrix of the defining cubic: the canonical pair's generator
  CubicCoeffs cc = F.poly();
  Mat3 tm{};
  tm[1] = F.one();
  tm[5] = F.one();
  tm[6] = F.embed(cc.t0);
  tm[7] = F.embed(cc.t1);
  tm[8] = F.embed(cc.t2);
  Homography phi = Homography::from_matrix(F, tm);

  Homography g = pi.gen().compose(F, h);
  Homography generator = g.compose(F, phi).compose(F, g.inverse(F));

  SingerGroup out;
  out.generator = generator;
  out.order = pl.q() * pl.q() + pl.q() + 1;
  CarrierTriple ct = carriers(pl, pi, line);
  out.fixed_points = {ct.e1, ct.e2, ct.e3};
  out.fixed_lines = {line, pi.conjugate(pl, line, 1), pi.conjugate(pl, line, 2)};
  return out;
}

LineFrame::LineFrame(const PlaneCtx& pl, const ProjPoint& e1, const ProjPoint& e2)
    : pl_(&pl), e1_(e1), e2_(e2) {
  if (e1 == e2) fail(Errc::NotDistinct, "line frame needs two distinct points");
  host_ = pl.join(e1, e2);
  const FieldCtx& F = pl.field();
  i_ = -1;
  for (int a = 0; a < 3 && i_ < 0; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Fq3 d = F.sub(F.mul(e1.c[a], e2.c[b]), F.mul(e1.c[b], e2.c[a]));
      if (d.v != 0) { i_ = a; j_ = b; det_ = d; break; }
    }
  assert(i_ >= 0);
}

Pg1Point LineFrame::param_of(const ProjPoint& P) const {
  const FieldCtx& F = pl_->field();
  Fq3 a = F.div(F.sub(F.mul(P.c[i_], e2_.c[j_]), F.mul(e2_.c[i_], P.c[j_])), det_);
  Fq3 b = F.div(F.sub(F.mul(e1_.c[i_], P.c[j_]), F.mul(P.c[i_], e1_.c[j_])), det_);
  int k = 3 - i_ - j_;
  Fq3 check = F.add(F.mul(a, e1_.c[k]), F.mul(b, e2_.c[k]));
  if (check != P.c[k]) fail(Errc::BadParameters, "point is not on the frame's line");
  if (a.v == 0) return Pg1Point::infinity();
  return Pg1Point::at(F.div(b, a));
}

ProjPoint LineFrame::point_of(Pg1Point t) const {
  const FieldCtx& F = pl_->field();
  if (t.inf) return e2_;
  return pl_->make_point(F.add(e1_.c[0], F.mul(t.t, e2_.c[0])),
                         F.add(e1_.c[1], F.mul(t.t, e2_.c[1])),
                         F.add(e1_.c[2], F.mul(t.t, e2_.c[2])));
}

std::vector<Pg1Point> LineFrame::image(const std::vector<ProjPoint>& pts) const {
  std::vector<Pg1Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(param_of(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> LineFrame::preimage(const std::vector<Pg1Point>& ts) const {
  std::vector<ProjPoint> out;
  out.reserve(ts.size());
  for (auto t : ts) out.push_back(point_of(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pg1Point> splash_theta_set(const PlaneCtx& pl, const Splash& s) {
  if (s.kind != SplashKind::Exterior)
    fail(Errc::NotExterior, "theta coordinates use the carrier frame of an exterior splash");
  LineFrame frame(pl, s.carrier1, s.carrier2);
  return frame.image(s.points);
}

StabilizerPair stabilizer_pair(const PlaneCtx& pl, const Splash& s) {
  const FieldCtx& F = pl.field();
  auto thetas = splash_theta_set(pl, s);
  ensure(!thetas.empty() && !thetas.front().inf && thetas.front().t.v != 0,
         "carrier-frame image of an exterior splash avoids 0 and infinity");
  Fq f = F.norm(thetas.front().t); // the splash is the norm fiber over f
  // smallest-label c with N(c) = f^2; c = 1 whenever f^2 = 1
  Fq f2 = F.mul(f, f);
  Fq3 c = F.solve_norm_eq(f2).front();
  StabilizerPair out;
  out.carrier_fixing = {F.tau(), F.zero(), F.zero(), F.frobenius(F.tau(), 1)};
  out.carrier_swapping = {F.zero(), c, F.one(), F.zero()};
  return out;
}

} // namespace exsplash
