#include "exsplash/plane.hpp"

#include <algorithm>
#include <cassert>

namespace exsplash {

namespace {

using Vec3 = std::array<Fq3, 3>;

bool is_zero(const Vec3& v) { return v[0].v == 0 && v[1].v == 0 && v[2].v == 0; }

Vec3 normalize_vec(const FieldCtx& F, Vec3 v) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i].v != 0) { lead = i; break; }
  if (lead < 0) fail(Errc::BadParameters, "zero coordinate triple");
  Fq3 s = F.inv(v[lead]);
  for (int i = lead; i < 3; ++i) v[i] = F.mul(v[i], s);
  return v;
}

Vec3 cross(const FieldCtx& F, const Vec3& a, const Vec3& b) {
  auto d = [&](Fq3 x, Fq3 y, Fq3 z, Fq3 w) { return F.sub(F.mul(x, y), F.mul(z, w)); };
  return {d(a[1], b[2], a[2], b[1]), d(a[2], b[0], a[0], b[2]), d(a[0], b[1], a[1], b[0])};
}

Fq3 dot(const FieldCtx& F, const Vec3& a, const Vec3& b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

Vec3 matvec(const FieldCtx& F, const Mat3& m, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = F.add(F.add(F.mul(m[3 * i + 0], v[0]), F.mul(m[3 * i + 1], v[1])),
                 F.mul(m[3 * i + 2], v[2]));
  return r;
}

Mat3 matmul(const FieldCtx& F, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fq3 s = F.zero();
      for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = s;
    }
  return r;
}

Fq3 det3(const FieldCtx& F, const Mat3& m) {
  Fq3 s = F.zero();
  s = F.add(s, F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7]))));
  s = F.sub(s, F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6]))));
  s = F.add(s, F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6]))));
  return s;
}

// Classical adjugate: m * adj(m) = det(m) * I.
Mat3 adjugate(const FieldCtx& F, const Mat3& m) {
  auto c = [&](int a, int b, int cc, int d) { return F.sub(F.mul(m[a], m[b]), F.mul(m[cc], m[d])); };
  return {c(4, 8, 5, 7), c(2, 7, 1, 8), c(1, 5, 2, 4),
          c(5, 6, 3, 8), c(0, 8, 2, 6), c(2, 3, 0, 5),
          c(3, 7, 4, 6), c(1, 6, 0, 7), c(0, 4, 1, 3)};
}

Mat3 normalize_mat(const FieldCtx& F, Mat3 m) {
  int lead = -1;
  for (int i = 0; i < 9; ++i)
    if (m[i].v != 0) { lead = i; break; }
  if (lead < 0) fail(Errc::BadParameters, "zero matrix");
  Fq3 s = F.inv(m[lead]);
  for (int i = lead; i < 9; ++i) m[i] = F.mul(m[i], s);
  return m;
}

Mat3 transpose(const Mat3& m) {
  return {m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]};
}

} // namespace

Homography Homography::identity(const FieldCtx& F) {
  Mat3 m{};
  m[0] = m[4] = m[8] = F.one();
  Homography h;
  h.m_ = m;
  return h;
}

Homography Homography::from_matrix(const FieldCtx& F, const Mat3& m) {
  if (det3(F, m).v == 0) fail(Errc::BadParameters, "singular matrix is not a homography");
  Homography h;
  h.m_ = normalize_mat(F, m);
  return h;
}

ProjPoint Homography::apply(const PlaneCtx& pl, const ProjPoint& P) const {
  Vec3 v = matvec(pl.field(), m_, P.c);
  ProjPoint out;
  out.c = normalize_vec(pl.field(), v);
  return out;
}

ProjLine Homography::apply(const PlaneCtx& pl, const ProjLine& L) const {
  Mat3 adjt = transpose(adjugate(pl.field(), m_));
  Vec3 w = matvec(pl.field(), adjt, L.c);
  ProjLine out;
  out.c = normalize_vec(pl.field(), w);
  return out;
}

Homography Homography::compose(const FieldCtx& F, const Homography& rhs) const {
  Homography h;
  h.m_ = normalize_mat(F, matmul(F, m_, rhs.m_));
  return h;
}

Homography Homography::inverse(const FieldCtx& F) const {
  Homography h;
  h.m_ = normalize_mat(F, adjugate(F, m_));
  return h;
}

Homography Homography::pow(const FieldCtx& F, unsigned e) const {
  Homography r = identity(F);
  for (unsigned i = 0; i < e; ++i) r = r.compose(F, *this);
  return r;
}

PlaneCtx::PlaneCtx(FieldCtx F) : F_(std::move(F)) {
  const unsigned Q = F_.ext_size();
  points_.reserve(static_cast<std::size_t>(Q) * Q + Q + 1);
  points_.push_back(ProjPoint{{F_.zero(), F_.zero(), F_.one()}});
  for (unsigned z = 0; z < Q; ++z)
    points_.push_back(ProjPoint{{F_.zero(), F_.one(), F_.el(z)}});
  for (unsigned y = 0; y < Q; ++y)
    for (unsigned z = 0; z < Q; ++z)
      points_.push_back(ProjPoint{{F_.one(), F_.el(y), F_.el(z)}});
  lines_.reserve(points_.size());
  for (const auto& p : points_) lines_.push_back(ProjLine{p.c});

  const unsigned q = F_.q();
  canon_pts_.reserve(q * q + q + 1);
  canon_pts_.push_back(ProjPoint{{F_.zero(), F_.zero(), F_.one()}});
  for (unsigned z = 0; z < q; ++z)
    canon_pts_.push_back(ProjPoint{{F_.zero(), F_.one(), F_.el(z)}});
  for (unsigned y = 0; y < q; ++y)
    for (unsigned z = 0; z < q; ++z)
      canon_pts_.push_back(ProjPoint{{F_.one(), F_.el(y), F_.el(z)}});
  canon_lns_.reserve(canon_pts_.size());
  for (const auto& p : canon_pts_) canon_lns_.push_back(ProjLine{p.c});
}

ProjPoint PlaneCtx::make_point(Fq3 x, Fq3 y, Fq3 z) const {
  ProjPoint p;
  p.c = normalize_vec(F_, {x, y, z});
  return p;
}

ProjLine PlaneCtx::make_line(Fq3 l, Fq3 m, Fq3 n) const {
  ProjLine L;
  L.c = normalize_vec(F_, {l, m, n});
  return L;
}

bool PlaneCtx::incident(const ProjPoint& P, const ProjLine& L) const {
  return dot(F_, P.c, L.c).v == 0;
}

ProjLine PlaneCtx::join(const ProjPoint& P, const ProjPoint& Q) const {
  Vec3 w = cross(F_, P.c, Q.c);
  if (is_zero(w)) fail(Errc::EqualArguments, "join of equal points");
  ProjLine L;
  L.c = normalize_vec(F_, w);
  return L;
}

ProjPoint PlaneCtx::meet(const ProjLine& L, const ProjLine& M) const {
  Vec3 w = cross(F_, L.c, M.c);
  if (is_zero(w)) fail(Errc::EqualArguments, "meet of equal lines");
  ProjPoint P;
  P.c = normalize_vec(F_, w);
  return P;
}

std::uint32_t PlaneCtx::point_index(const ProjPoint& P) const {
  const unsigned Q = F_.ext_size();
  if (P.c[0].v == 1) return 1 + Q + P.c[1].v * Q + P.c[2].v;
  if (P.c[1].v == 1) return 1 + P.c[2].v;
  return 0;
}

std::uint32_t PlaneCtx::line_index(const ProjLine& L) const {
  ProjPoint p;
  p.c = L.c;
  return point_index(p);
}

std::vector<ProjPoint> PlaneCtx::points_on_line(const ProjLine& L) const {
  // the crosses of L with the standard basis span the rank-2 solution space
  Vec3 basis[3] = {cross(F_, L.c, {F_.one(), F_.zero(), F_.zero()}),
                   cross(F_, L.c, {F_.zero(), F_.one(), F_.zero()}),
                   cross(F_, L.c, {F_.zero(), F_.zero(), F_.one()})};
  Vec3 A{}, B{};
  bool haveA = false, haveB = false;
  for (auto& cnd : basis) {
    if (is_zero(cnd)) continue;
    if (!haveA) {
      A = normalize_vec(F_, cnd);
      haveA = true;
    } else {
      Vec3 nb = normalize_vec(F_, cnd);
      if (nb != A) { B = nb; haveB = true; break; }
    }
  }
  ensure(haveA && haveB, "line has no independent point pair");
  std::vector<ProjPoint> out;
  out.reserve(F_.ext_size() + 1);
  ProjPoint Bp;
  Bp.c = B;
  out.push_back(Bp);
  for (unsigned t = 0; t < F_.ext_size(); ++t) {
    Fq3 tt = F_.el(t);
    Vec3 v{F_.add(A[0], F_.mul(tt, B[0])), F_.add(A[1], F_.mul(tt, B[1])),
           F_.add(A[2], F_.mul(tt, B[2]))};
    ProjPoint P;
    P.c = normalize_vec(F_, v);
    out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> PlaneCtx::point_indices_on_line(const ProjLine& L) const {
  auto pts = points_on_line(L);
  std::vector<std::uint32_t> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(point_index(p));
  return out;
}

ProjPoint PlaneCtx::frobenius(const ProjPoint& P, unsigned i) const {
  ProjPoint r;
  for (int j = 0; j < 3; ++j) r.c[j] = F_.frobenius(P.c[j], i);
  return r; // normalization is preserved: 0 and 1 are Frobenius-fixed
}

ProjLine PlaneCtx::frobenius(const ProjLine& L, unsigned i) const {
  ProjLine r;
  for (int j = 0; j < 3; ++j) r.c[j] = F_.frobenius(L.c[j], i);
  return r;
}

bool Subline::contains(const ProjPoint& P) const {
  return std::binary_search(points.begin(), points.end(), P);
}

Subline subline_through(const PlaneCtx& pl, const ProjPoint& P, const ProjPoint& Q,
                        const ProjPoint& R) {
  const FieldCtx& F = pl.field();
  if (P == Q || P == R || Q == R) fail(Errc::NotDistinct, "subline needs three distinct points");
  ProjLine host = pl.join(P, Q);
  if (!pl.incident(R, host)) fail(Errc::NotCollinear, "subline needs collinear points");

  // write R = a*P + b*Q via an invertible 2x2 coordinate minor
  int i = -1, j = -1;
  Fq3 det = F.zero();
  for (int a = 0; a < 3 && i < 0; ++a)
    for (int b = a + 1; b < 3; ++b) {
      Fq3 d = F.sub(F.mul(P.c[a], Q.c[b]), F.mul(P.c[b], Q.c[a]));
      if (d.v != 0) { i = a; j = b; det = d; break; }
    }
  assert(i >= 0);
  Fq3 a = F.div(F.sub(F.mul(R.c[i], Q.c[j]), F.mul(Q.c[i], R.c[j])), det);
  Fq3 b = F.div(F.sub(F.mul(P.c[i], R.c[j]), F.mul(R.c[i], P.c[j])), det);
  assert(a.v != 0 && b.v != 0);

  Vec3 Ap{F.mul(a, P.c[0]), F.mul(a, P.c[1]), F.mul(a, P.c[2])};
  Vec3 Bp{F.mul(b, Q.c[0]), F.mul(b, Q.c[1]), F.mul(b, Q.c[2])};
  Subline s;
  s.host = host;
  s.points.reserve(pl.q() + 1);
  ProjPoint BB;
  BB.c = normalize_vec(F, Bp);
  s.points.push_back(BB);
  for (unsigned t = 0; t < pl.q(); ++t) {
    Fq3 tt = F.embed(F.q_el(t));
    Vec3 v{F.add(Ap[0], F.mul(tt, Bp[0])), F.add(Ap[1], F.mul(tt, Bp[1])),
           F.add(Ap[2], F.mul(tt, Bp[2]))};
    ProjPoint X;
    X.c = normalize_vec(F, v);
    s.points.push_back(X);
  }
  std::sort(s.points.begin(), s.points.end());
  assert(std::adjacent_find(s.points.begin(), s.points.end()) == s.points.end());
  return s;
}

Subplane Subplane::canonical(const PlaneCtx& pl) {
  return from_generator(pl, Homography::identity(pl.field()));
}

Subplane Subplane::from_generator(const PlaneCtx& pl, const Homography& gen) {
  Subplane s;
  s.gen_ = gen;
  s.gen_inv_ = gen.inverse(pl.field());
  s.points_.reserve(pl.canonical_subplane_points().size());
  for (const auto& p : pl.canonical_subplane_points()) s.points_.push_back(gen.apply(pl, p));
  s.lines_.reserve(pl.canonical_subplane_lines().size());
  for (const auto& l : pl.canonical_subplane_lines()) s.lines_.push_back(gen.apply(pl, l));
  std::sort(s.points_.begin(), s.points_.end());
  std::sort(s.lines_.begin(), s.lines_.end());
  return s;
}

Subplane Subplane::from_quadrangle(const PlaneCtx& pl, const ProjPoint& P1, const ProjPoint& P2,
                                   const ProjPoint& P3, const ProjPoint& P4) {
  const FieldCtx& F = pl.field();
  std::array<ProjPoint, 4> canon = {pl.make_point(F.one(), F.zero(), F.zero()),
                                    pl.make_point(F.zero(), F.one(), F.zero()),
                                    pl.make_point(F.zero(), F.zero(), F.one()),
                                    pl.make_point(F.one(), F.one(), F.one())};
  Homography h = homography_from_frames(pl, canon, {P1, P2, P3, P4});
  return from_generator(pl, h);
}

bool Subplane::contains(const ProjPoint& P) const {
  return std::binary_search(points_.begin(), points_.end(), P);
}

bool Subplane::contains_line(const ProjLine& L) const {
  return std::binary_search(lines_.begin(), lines_.end(), L);
}

ProjPoint Subplane::conjugate(const PlaneCtx& pl, const ProjPoint& P, unsigned i) const {
  return gen_.apply(pl, pl.frobenius(gen_inv_.apply(pl, P), i));
}

ProjLine Subplane::conjugate(const PlaneCtx& pl, const ProjLine& L, unsigned i) const {
  return gen_.apply(pl, pl.frobenius(gen_inv_.apply(pl, L), i));
}

namespace {

// Columns lambda_i * P_i scaled so that the standard frame maps onto the
// quadrangle; singular data raises DegenerateFrame.
Mat3 frame_matrix(const PlaneCtx& pl, const std::array<ProjPoint, 4>& f) {
  const FieldCtx& F = pl.field();
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[3 * i + j] = f[j].c[i];
  if (det3(F, m).v == 0) fail(Errc::DegenerateFrame, "three frame points are collinear");
  Vec3 lambda = matvec(F, adjugate(F, m), f[3].c);
  if (lambda[0].v == 0 || lambda[1].v == 0 || lambda[2].v == 0)
    fail(Errc::DegenerateFrame, "fourth frame point lies on a side of the triangle");
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[3 * i + j] = F.mul(m[3 * i + j], lambda[j]);
  return out;
}

} // namespace

Homography homography_from_frames(const PlaneCtx& pl, const std::array<ProjPoint, 4>& src,
                                  const std::array<ProjPoint, 4>& dst) {
  const FieldCtx& F = pl.field();
  Mat3 ms = frame_matrix(pl, src);
  Mat3 md = frame_matrix(pl, dst);
  return Homography::from_matrix(F, matmul(F, md, adjugate(F, ms)));
}

std::vector<ProjPoint> fixed_points(const PlaneCtx& pl, const Homography& h) {
  std::vector<ProjPoint> out;
  for (const auto& p : pl.points())
    if (h.apply(pl, p) == p) out.push_back(p);
  return out;
}

std::vector<ProjLine> fixed_lines(const PlaneCtx& pl, const Homography& h) {
  std::vector<ProjLine> out;
  for (const auto& l : pl.lines())
    if (h.apply(pl, l) == l) out.push_back(l);
  return out;
}

} // namespace exsplash
