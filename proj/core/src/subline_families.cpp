#include "exsplash/subline_families.hpp"

#include <algorithm>
#include <set>

namespace exsplash {

namespace {

std::array<Fq, 3> normalize_int(const FieldCtx& F, std::array<Fq, 3> v) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (v[i].v != 0) { lead = i; break; }
  ensure(lead >= 0, "internal triple is nonzero");
  Fq s = F.inv(v[lead]);
  for (int i = lead; i < 3; ++i) v[i] = F.mul(v[i], s);
  return v;
}

std::vector<std::array<Fq, 3>> internal_triples(const FieldCtx& F) {
  const unsigned q = F.q();
  std::vector<std::array<Fq, 3>> out;
  out.reserve(q * q + q + 1);
  out.push_back({F.q_zero(), F.q_zero(), F.q_one()});
  for (unsigned z = 0; z < q; ++z) out.push_back({F.q_zero(), F.q_one(), F.q_el(z)});
  for (unsigned y = 0; y < q; ++y)
    for (unsigned z = 0; z < q; ++z) out.push_back({F.q_one(), F.q_el(y), F.q_el(z)});
  return out;
}

Fq int_dot(const FieldCtx& F, const std::array<Fq, 3>& a, const std::array<Fq, 3>& b) {
  return F.add(F.add(F.mul(a[0], b[0]), F.mul(a[1], b[1])), F.mul(a[2], b[2]));
}

// monomial order X^2, Y^2, Z^2, XY, XZ, YZ
template <typename T, typename MulT, typename AddT>
T eval_form(const std::array<T, 3>& x, const std::array<T, 6>& k, MulT mul, AddT add) {
  T acc = mul(k[0], mul(x[0], x[0]));
  acc = add(acc, mul(k[1], mul(x[1], x[1])));
  acc = add(acc, mul(k[2], mul(x[2], x[2])));
  acc = add(acc, mul(k[3], mul(x[0], x[1])));
  acc = add(acc, mul(k[4], mul(x[0], x[2])));
  acc = add(acc, mul(k[5], mul(x[1], x[2])));
  return acc;
}

// solutions in GF(q)^6 of the three GF(q)-linear conditions expressing that
// the form vanishes on the given GF(q^3) triple; returns the projective
// representatives of the nullspace, canonically scaled.
std::vector<InternalConic> conic_bundle_through(const FieldCtx& F, const std::array<Fq3, 3>& X,
                                                bool dual) {
  std::array<Fq3, 6> mono = {F.mul(X[0], X[0]), F.mul(X[1], X[1]), F.mul(X[2], X[2]),
                             F.mul(X[0], X[1]), F.mul(X[0], X[2]), F.mul(X[1], X[2])};
  // rows: tau-basis components; columns: the 6 coefficients
  std::array<std::array<Fq, 6>, 3> rows;
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned i = 0; i < 6; ++i) rows[r][i] = F.coeff(mono[i], r);

  // Gauss-Jordan over GF(q)
  std::array<int, 3> pivot_col = {-1, -1, -1};
  unsigned rank = 0;
  for (unsigned col = 0; col < 6 && rank < 3; ++col) {
    unsigned pr = rank;
    while (pr < 3 && rows[pr][col].v == 0) ++pr;
    if (pr == 3) continue;
    std::swap(rows[rank], rows[pr]);
    Fq li = F.inv(rows[rank][col]);
    for (unsigned c = 0; c < 6; ++c) rows[rank][c] = F.mul(rows[rank][c], li);
    for (unsigned r = 0; r < 3; ++r) {
      if (r == rank || rows[r][col].v == 0) continue;
      Fq s = rows[r][col];
      for (unsigned c = 0; c < 6; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(s, rows[rank][c]));
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  ensure(rank == 3, "carrier conditions have rank 3");

  // nullspace basis: one vector per free column
  std::vector<std::array<Fq, 6>> basis;
  for (unsigned col = 0; col < 6; ++col) {
    bool is_pivot = false;
    for (int pc : pivot_col)
      if (pc == static_cast<int>(col)) is_pivot = true;
    if (is_pivot) continue;
    std::array<Fq, 6> v{};
    v[col] = F.q_one();
    for (unsigned r = 0; r < 3; ++r)
      v[pivot_col[r]] = F.neg(rows[r][col]);
    basis.push_back(v);
  }
  ensure(basis.size() == 3, "special conics form a bundle of rank 3");

  std::vector<InternalConic> out;
  out.reserve(F.q() * F.q() + F.q() + 1);
  auto add_combo = [&](Fq s0, Fq s1, Fq s2) {
    std::array<Fq, 6> k{};
    for (unsigned i = 0; i < 6; ++i) {
      Fq acc = F.mul(s0, basis[0][i]);
      acc = F.add(acc, F.mul(s1, basis[1][i]));
      acc = F.add(acc, F.mul(s2, basis[2][i]));
      k[i] = acc;
    }
    // canonical projective scaling
    int lead = -1;
    for (int i = 0; i < 6; ++i)
      if (k[i].v != 0) { lead = i; break; }
    ensure(lead >= 0, "bundle members are nonzero forms");
    Fq li = F.inv(k[lead]);
    for (int i = lead; i < 6; ++i) k[i] = F.mul(k[i], li);
    out.push_back(InternalConic{k, dual});
  };
  const unsigned q = F.q();
  add_combo(F.q_zero(), F.q_zero(), F.q_one());
  for (unsigned z = 0; z < q; ++z) add_combo(F.q_zero(), F.q_one(), F.q_el(z));
  for (unsigned y = 0; y < q; ++y)
    for (unsigned z = 0; z < q; ++z) add_combo(F.q_one(), F.q_el(y), F.q_el(z));
  std::sort(out.begin(), out.end());
  ensure(std::adjacent_find(out.begin(), out.end()) == out.end(),
         "bundle members are pairwise distinct");
  return out;
}

} // namespace

std::vector<IntPoint> internal_points(const FieldCtx& F) {
  std::vector<IntPoint> out;
  for (auto& t : internal_triples(F)) out.push_back(IntPoint{t});
  return out;
}

std::vector<IntLine> internal_lines(const FieldCtx& F) {
  std::vector<IntLine> out;
  for (auto& t : internal_triples(F)) out.push_back(IntLine{t});
  return out;
}

ProjPoint ambient_point(const PlaneCtx& pl, const Subplane& pi, const IntPoint& p) {
  const FieldCtx& F = pl.field();
  ProjPoint raw;
  for (int i = 0; i < 3; ++i) raw.c[i] = F.embed(p.c[i]);
  return pi.gen().apply(pl, raw);
}

ProjLine ambient_line(const PlaneCtx& pl, const Subplane& pi, const IntLine& l) {
  const FieldCtx& F = pl.field();
  ProjLine raw;
  for (int i = 0; i < 3; ++i) raw.c[i] = F.embed(l.c[i]);
  return pi.gen().apply(pl, raw);
}

IntPoint internal_point(const PlaneCtx& pl, const Subplane& pi, const ProjPoint& P) {
  const FieldCtx& F = pl.field();
  ProjPoint raw = pi.gen().inverse(F).apply(pl, P);
  IntPoint out;
  for (int i = 0; i < 3; ++i) {
    if (!F.in_subfield(raw.c[i]))
      fail(Errc::PointNotInSubplane, "point has no GF(q)-rational internal coordinates");
    out.c[i] = F.subfield_label(raw.c[i]);
  }
  out.c = normalize_int(F, out.c);
  return out;
}

IntLine internal_line(const PlaneCtx& pl, const Subplane& pi, const ProjLine& L) {
  const FieldCtx& F = pl.field();
  ProjLine raw = pi.gen().inverse(F).apply(pl, L);
  IntLine out;
  for (int i = 0; i < 3; ++i) {
    if (!F.in_subfield(raw.c[i]))
      fail(Errc::BadParameters, "line has no GF(q)-rational internal coordinates");
    out.c[i] = F.subfield_label(raw.c[i]);
  }
  out.c = normalize_int(F, out.c);
  return out;
}

Fq eval_conic(const FieldCtx& F, const InternalConic& c, const std::array<Fq, 3>& x) {
  return eval_form<Fq>(x, c.coeffs, [&](Fq a, Fq b) { return F.mul(a, b); },
                       [&](Fq a, Fq b) { return F.add(a, b); });
}

Fq3 eval_conic_ext(const FieldCtx& F, const InternalConic& c, const std::array<Fq3, 3>& x) {
  std::array<Fq3, 6> k{};
  for (unsigned i = 0; i < 6; ++i) k[i] = F.embed(c.coeffs[i]);
  return eval_form<Fq3>(x, k, [&](Fq3 a, Fq3 b) { return F.mul(a, b); },
                        [&](Fq3 a, Fq3 b) { return F.add(a, b); });
}

std::vector<IntPoint> conic_points(const FieldCtx& F, const InternalConic& c) {
  ensure(!c.dual, "point enumeration needs a point conic");
  std::vector<IntPoint> out;
  for (auto& p : internal_points(F))
    if (eval_conic(F, c, p.c).v == 0) out.push_back(p);
  return out;
}

std::vector<IntLine> conic_lines(const FieldCtx& F, const InternalConic& c) {
  ensure(c.dual, "line enumeration needs a dual conic");
  std::vector<IntLine> out;
  for (auto& l : internal_lines(F))
    if (eval_conic(F, c, l.c).v == 0) out.push_back(IntLine{l.c});
  return out;
}

bool conic_irreducible(const FieldCtx& F, const InternalConic& c) {
  std::vector<std::array<Fq, 3>> zeros;
  if (c.dual) {
    for (auto& l : conic_lines(F, c)) zeros.push_back(l.c);
  } else {
    for (auto& p : conic_points(F, c)) zeros.push_back(p.c);
  }
  if (zeros.size() <= F.q()) return false;
  // three zeros incident with a common element of the other kind
  for (auto& other : internal_triples(F)) {
    unsigned hits = 0;
    for (auto& z : zeros)
      if (int_dot(F, z, other).v == 0 && ++hits == 3) return false;
  }
  return true;
}

std::vector<InternalConic> special_point_conics(const PlaneCtx& pl, const Subplane& pi,
                                                const ProjLine& line) {
  const FieldCtx& F = pl.field();
  CarrierTriple ct = carriers(pl, pi, line); // NotExterior on bad input
  ProjPoint e1_internal = pi.gen().inverse(F).apply(pl, ct.e1);
  auto bundle = conic_bundle_through(F, e1_internal.c, false);
  for (const auto& c : bundle)
    ensure(conic_irreducible(F, c), "special conics are irreducible");
  return bundle;
}

std::vector<InternalConic> special_dual_conics(const PlaneCtx& pl, const Subplane& pi,
                                               const ProjLine& line) {
  const FieldCtx& F = pl.field();
  carriers(pl, pi, line); // NotExterior on bad input
  ProjLine l_internal = pi.gen().inverse(F).apply(pl, line);
  auto bundle = conic_bundle_through(F, l_internal.c, true);
  for (const auto& c : bundle)
    ensure(conic_irreducible(F, c), "special dual conics are irreducible");
  return bundle;
}

Subline pencil_subline(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                       const ProjPoint& vertex) {
  if (!pi.contains(vertex)) fail(Errc::PointNotInSubplane, "pencil vertex must lie in pi");
  std::vector<ProjPoint> trace;
  for (const auto& m : pi.lines())
    if (pl.incident(vertex, m)) trace.push_back(pl.meet(m, line));
  std::sort(trace.begin(), trace.end());
  ensure(trace.size() == pl.q() + 1, "a subplane point carries q+1 subplane lines");
  ensure(std::adjacent_find(trace.begin(), trace.end()) == trace.end(),
         "pencil trace points are distinct");
  Subline s = subline_through(pl, trace[0], trace[1], trace[2]);
  ensure(s.points == trace, "a pencil trace closes into a subline");
  return s;
}

Subline dual_conic_subline(const PlaneCtx& pl, const Subplane& pi, const ProjLine& line,
                           const InternalConic& gamma) {
  const FieldCtx& F = pl.field();
  if (!gamma.dual) fail(Errc::BadParameters, "dual conic required");
  auto lines = conic_lines(F, gamma);
  if (lines.size() != pl.q() + 1)
    fail(Errc::NotSpecial, "dual conic does not consist of q+1 lines");
  std::vector<ProjPoint> trace;
  trace.reserve(lines.size());
  for (const auto& il : lines) trace.push_back(pl.meet(ambient_line(pl, pi, il), line));
  std::sort(trace.begin(), trace.end());
  if (std::adjacent_find(trace.begin(), trace.end()) != trace.end())
    fail(Errc::NotSpecial, "dual conic trace has repeated points");
  Subline s = subline_through(pl, trace[0], trace[1], trace[2]);
  if (s.points != trace) fail(Errc::NotSpecial, "dual conic trace is not a subline");
  return s;
}

std::vector<Subline> sublines_in_splash(const PlaneCtx& pl, const Splash& s) {
  const auto& pts = s.points;
  std::set<std::vector<ProjPoint>> seen;
  std::vector<Subline> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        Subline cand = subline_through(pl, pts[i], pts[j], pts[k]);
        bool inside = true;
        for (const auto& p : cand.points)
          if (!s.contains(p)) { inside = false; break; }
        if (inside && seen.insert(cand.points).second) out.push_back(std::move(cand));
      }
  std::sort(out.begin(), out.end(),
            [](const Subline& a, const Subline& b) { return a.points < b.points; });
  return out;
}

SublineFamilies classify_families(const PlaneCtx& pl, const Subplane& pi,
                                  const ProjLine& line) {
  if (pl.q() == 2)
    fail(Errc::PreconditionViolation,
         "family classification needs q > 2; at q = 2 every point triple is a subline");
  SublineFamilies fam;
  std::set<std::vector<ProjPoint>> seen;
  for (const auto& A : pi.points()) {
    Subline s = pencil_subline(pl, pi, line, A);
    if (seen.insert(s.points).second) fam.pencil.push_back(std::move(s));
  }
  ensure(fam.pencil.size() == pi.points().size(), "pencil sublines are pairwise distinct");
  std::set<std::vector<ProjPoint>> seen2;
  for (const auto& gamma : special_dual_conics(pl, pi, line)) {
    Subline s = dual_conic_subline(pl, pi, line, gamma);
    ensure(!seen.count(s.points), "the two families are disjoint");
    if (seen2.insert(s.points).second) fam.conic.push_back(std::move(s));
  }
  ensure(fam.conic.size() == pi.points().size(), "dual conic sublines are pairwise distinct");
  auto by_points = [](const Subline& a, const Subline& b) { return a.points < b.points; };
  std::sort(fam.pencil.begin(), fam.pencil.end(), by_points);
  std::sort(fam.conic.begin(), fam.conic.end(), by_points);
  return fam;
}

bool witnesses_concurrent(const PlaneCtx& pl, const Subplane& pi, const Splash& s,
                          const Subline& c) {
  std::vector<ProjLine> witnesses;
  for (const auto& p : c.points) {
    ensure(s.contains(p), "subline must lie inside the splash");
    const ProjLine* found = nullptr;
    for (const auto& m : pi.lines())
      if (pl.incident(p, m)) {
        ensure(found == nullptr, "each splash point lies on exactly one subplane line");
        found = &m;
      }
    ensure(found != nullptr, "each splash point lies on one subplane line");
    witnesses.push_back(*found);
  }
  ProjPoint common = pl.meet(witnesses[0], witnesses[1]);
  for (std::size_t i = 2; i < witnesses.size(); ++i)
    if (!pl.incident(common, witnesses[i])) return false;
  return true;
}

FamilySwap swap_families(const PlaneCtx& pl, const Splash& s, const Subplane& pi) {
  const FieldCtx& F = pl.field();
  if (s.kind != SplashKind::Exterior) fail(Errc::NotExterior, "family swap needs an exterior splash");

  // norm value of the splash in its carrier frame
  auto thetas = splash_theta_set(pl, s);
  Fq f = F.norm(thetas.front().t);
  Fq3 x = F.solve_norm_eq(f).front(); // smallest-label x with N(x) = f

  // in the carrier frame: (u, v, w) -> (v, x^2 u, x w); theta -> x^2 / theta
  Mat3 inner{};
  inner[1] = F.one();
  inner[3] = F.mul(x, x);
  inner[8] = x;
  Mat3 carrier_cols{};
  const ProjPoint cols[3] = {s.carrier1, s.carrier2, s.third_conjugate};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) carrier_cols[3 * i + j] = cols[j].c[i];
  Homography M = Homography::from_matrix(F, carrier_cols);
  Homography delta = M.compose(F, Homography::from_matrix(F, inner)).compose(F, M.inverse(F));

  FamilySwap out;
  out.involution = delta;
  out.image = Subplane::from_generator(pl, delta.compose(F, pi.gen()));
  return out;
}

} // namespace exsplash
