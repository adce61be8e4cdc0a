#include "exsplash/census.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>

#include "exsplash/errors.hpp"
#include "exsplash/subline_families.hpp"

namespace exsplash {

std::uint64_t Rng::next(std::uint64_t bound) {
  ensure(bound > 0, "random draw needs a positive bound");
  return gen_() % bound;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct SubplaneRecord {
  bool exterior = false;
  std::vector<std::uint32_t> splash_key;
  std::pair<std::uint32_t, std::uint32_t> carrier_key{};
};

using SubplaneMap = std::unordered_map<std::vector<std::uint32_t>, SubplaneRecord, KeyHash>;

} // namespace

ExhaustiveCensus exhaustive_exterior_census(const PlaneCtx& pl, const ProjLine& line,
                                            unsigned jobs) {
  const FieldCtx& F = pl.field();

  std::vector<ProjPoint> off;
  off.reserve(pl.point_count());
  for (const auto& p : pl.points())
    if (!pl.incident(p, line)) off.push_back(p);
  const std::size_t n = off.size();

  const std::array<ProjPoint, 4> std_frame = {
      pl.make_point(F.one(), F.zero(), F.zero()), pl.make_point(F.zero(), F.one(), F.zero()),
      pl.make_point(F.zero(), F.zero(), F.one()), pl.make_point(F.one(), F.one(), F.one())};
  const auto& cpts = pl.canonical_subplane_points();

  if (jobs == 0) jobs = 1;
  const unsigned nthread = static_cast<unsigned>(std::min<std::size_t>(jobs, n ? n : 1));
  std::vector<SubplaneMap> partial(nthread);
  std::vector<std::uint64_t> quad_counts(nthread, 0);

  auto worker = [&](unsigned t) {
    SubplaneMap& local = partial[t];
    std::vector<std::uint32_t> key(cpts.size());
    for (std::size_t i = t; i < n; i += nthread) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const ProjLine lij = pl.join(off[i], off[j]);
        for (std::size_t k = j + 1; k < n; ++k) {
          if (pl.incident(off[k], lij)) continue;
          const ProjLine lik = pl.join(off[i], off[k]);
          const ProjLine ljk = pl.join(off[j], off[k]);
          for (std::size_t l = k + 1; l < n; ++l) {
            if (pl.incident(off[l], lij) || pl.incident(off[l], lik) ||
                pl.incident(off[l], ljk))
              continue;
            ++quad_counts[t];
            const Homography h = homography_from_frames(
                pl, std_frame, {off[i], off[j], off[k], off[l]});
            for (std::size_t m = 0; m < cpts.size(); ++m)
              key[m] = pl.point_index(h.apply(pl, cpts[m]));
            std::sort(key.begin(), key.end());
            if (local.find(key) != local.end()) continue;

            Subplane sp = Subplane::from_generator(pl, h);
            std::size_t common = 0;
            for (const auto& p : sp.points())
              if (pl.incident(p, line)) ++common;
            SubplaneRecord rec;
            rec.exterior = (common == 0);
            if (rec.exterior) {
              const Splash s = compute_splash(pl, sp, line);
              rec.splash_key.reserve(s.points.size());
              for (const auto& p : s.points) rec.splash_key.push_back(pl.point_index(p));
              rec.carrier_key = std::minmax(pl.point_index(s.carrier1),
                                            pl.point_index(s.carrier2));
            }
            local.emplace(key, std::move(rec));
          }
        }
      }
    }
  };

  if (nthread == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthread);
    for (unsigned t = 0; t < nthread; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  SubplaneMap all;
  for (auto& local : partial) {
    for (auto& [key, rec] : local) all.emplace(key, std::move(rec));
    local.clear();
  }

  ExhaustiveCensus census;
  for (std::uint64_t c : quad_counts) census.quadrangle_count += c;
  census.subplane_count = all.size();

  // The class holding the canonical subplane's splash, when that subplane is
  // exterior to the census line.
  std::vector<std::uint32_t> canon_splash_key;
  {
    const Subplane canon = Subplane::canonical(pl);
    bool ext = true;
    for (const auto& p : canon.points())
      if (pl.incident(p, line)) ext = false;
    if (ext) {
      const Splash s = compute_splash(pl, canon, line);
      for (const auto& p : s.points) canon_splash_key.push_back(pl.point_index(p));
    }
  }

  std::map<std::vector<std::uint32_t>, SplashClass> classes;
  for (const auto& [key, rec] : all) {
    if (!rec.exterior) continue;
    ++census.exterior_subplane_count;
    auto it = classes.find(rec.splash_key);
    if (it == classes.end()) {
      SplashClass sc;
      sc.splash_key = rec.splash_key;
      sc.subplane_count = 1;
      sc.carriers_consistent = true;
      sc.carrier_key = rec.carrier_key;
      classes.emplace(rec.splash_key, std::move(sc));
    } else {
      ++it->second.subplane_count;
      if (it->second.carrier_key != rec.carrier_key) it->second.carriers_consistent = false;
    }
    if (!canon_splash_key.empty() && rec.splash_key == canon_splash_key)
      census.canonical_class_members.push_back(key);
  }
  census.classes.reserve(classes.size());
  for (auto& [key, sc] : classes) census.classes.push_back(std::move(sc));
  std::sort(census.canonical_class_members.begin(), census.canonical_class_members.end());
  return census;
}

std::vector<Subplane> subplanes_through_subline_with_splash(const PlaneCtx& pl, const Subline& b,
                                                            const Splash& s) {
  if (s.kind != SplashKind::Exterior)
    fail(Errc::PreconditionViolation, "the splash must be exterior");
  if (b.host == s.host)
    fail(Errc::PreconditionViolation, "the subline must live on a line other than the splash host");
  const ProjPoint z = pl.meet(b.host, s.host);
  if (b.contains(z))
    fail(Errc::PreconditionViolation,
         "the subline must avoid the meet of its host with the splash host");
  if (!s.contains(z))
    fail(Errc::PreconditionViolation, "the host lines must meet inside the splash");

  std::vector<ProjPoint> cand;
  for (const auto& p : pl.points()) {
    if (pl.incident(p, b.host) || pl.incident(p, s.host)) continue;
    bool ok = true;
    for (const auto& x : b.points) {
      if (!s.contains(pl.meet(pl.join(x, p), s.host))) {
        ok = false;
        break;
      }
    }
    if (ok) cand.push_back(p);
  }

  std::vector<Subplane> result;
  std::set<std::vector<ProjPoint>> seen;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      std::optional<Subplane> sp;
      try {
        sp.emplace(Subplane::from_quadrangle(pl, b.points[0], b.points[1], cand[i], cand[j]));
      } catch (const Error& e) {
        if (e.code() != Errc::DegenerateFrame) throw;
        continue;
      }
      bool keep = true;
      for (const auto& x : b.points)
        if (!sp->contains(x)) keep = false;
      if (!keep) continue;
      bool exterior = true;
      for (const auto& p : sp->points())
        if (pl.incident(p, s.host)) exterior = false;
      if (!exterior) continue;
      const Splash sps = compute_splash(pl, *sp, s.host);
      if (sps.points != s.points) continue;
      if (seen.insert(sp->points()).second) result.push_back(std::move(*sp));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Subplane& a, const Subplane& c) { return a.points() < c.points(); });
  return result;
}

std::vector<ProjPoint> subplane_intersection(const Subplane& a, const Subplane& b) {
  std::vector<ProjPoint> out;
  std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                        b.points().end(), std::back_inserter(out));
  return out;
}

bool points_form_subline(const PlaneCtx& pl, const std::vector<ProjPoint>& pts) {
  if (pts.size() != pl.q() + 1) return false;
  std::vector<ProjPoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  try {
    const Subline b = subline_through(pl, sorted[0], sorted[1], sorted[2]);
    return b.points == sorted;
  } catch (const Error&) {
    return false;
  }
}

Subplane random_exterior_subplane(const PlaneCtx& pl, const ProjLine& line, Rng& rng) {
  std::vector<ProjPoint> off;
  for (const auto& p : pl.points())
    if (!pl.incident(p, line)) off.push_back(p);
  for (;;) {
    std::array<std::size_t, 4> pick{};
    bool distinct = true;
    for (int i = 0; i < 4; ++i) {
      pick[i] = static_cast<std::size_t>(rng.next(off.size()));
      for (int j = 0; j < i; ++j)
        if (pick[j] == pick[i]) distinct = false;
    }
    if (!distinct) continue;
    try {
      Subplane sp =
          Subplane::from_quadrangle(pl, off[pick[0]], off[pick[1]], off[pick[2]], off[pick[3]]);
      bool exterior = true;
      for (const auto& p : sp.points())
        if (pl.incident(p, line)) exterior = false;
      if (exterior) return sp;
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateFrame) throw;
    }
  }
}

Subline random_splash_subline(const PlaneCtx& pl, const Splash& s, Rng& rng) {
  ensure(s.kind == SplashKind::Exterior, "subline sampling requires an exterior splash");
  const auto& pts = pl.points();
  for (;;) {
    const ProjPoint z = s.points[rng.next(s.points.size())];
    const ProjPoint x = pts[rng.next(pts.size())];
    if (pl.incident(x, s.host)) continue;
    const ProjLine m = pl.join(z, x);
    std::vector<ProjPoint> cand = pl.points_on_line(m);
    cand.erase(std::remove(cand.begin(), cand.end(), z), cand.end());
    std::array<std::size_t, 3> pick{};
    bool distinct = true;
    for (int i = 0; i < 3; ++i) {
      pick[i] = static_cast<std::size_t>(rng.next(cand.size()));
      for (int j = 0; j < i; ++j)
        if (pick[j] == pick[i]) distinct = false;
    }
    if (!distinct) continue;
    const Subline b = subline_through(pl, cand[pick[0]], cand[pick[1]], cand[pick[2]]);
    if (!b.contains(z)) return b;
  }
}

Subplane random_subplane_with_splash(const PlaneCtx& pl, const Subplane& base, const Splash& s,
                                     Rng& rng) {
  const FieldCtx& F = pl.field();
  const FamilySwap fs = swap_families(pl, s, base);
  const std::size_t n = F.ext_size();
  for (;;) {
    const Fq3 c = F.el(static_cast<unsigned>(1 + rng.next(n - 1)));
    std::array<Fq3, 3> v = {F.el(static_cast<unsigned>(rng.next(n))),
                            F.el(static_cast<unsigned>(rng.next(n))),
                            F.el(static_cast<unsigned>(rng.next(n)))};
    Fq3 t = c;
    for (int i = 0; i < 3; ++i) t = F.add(t, F.mul(s.host.c[i], v[i]));
    if (t == F.zero()) continue; // singular perspectivity matrix
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m[3 * i + j] = F.add(i == j ? c : F.zero(), F.mul(v[i], s.host.c[j]));
    const Homography persp = Homography::from_matrix(F, m);
    const bool swap = rng.next(2) == 1;
    Homography g = swap ? persp.compose(F, fs.involution) : persp;
    return Subplane::from_generator(pl, g.compose(F, base.gen()));
  }
}

std::uint64_t splash_count_closed_form(unsigned q) {
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  return q3 * (q3 + 1) * (q - 1) / 2;
}

std::uint64_t subplanes_per_splash_closed_form(unsigned q) {
  const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
  return 2 * q3 * q3 * (q3 - 1);
}

std::uint64_t exterior_subplanes_closed_form(unsigned q) {
  return splash_count_closed_form(q) * subplanes_per_splash_closed_form(q);
}

} // namespace exsplash
