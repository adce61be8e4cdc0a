#include "exsplash/pg1.hpp"

#include <algorithm>
#include <set>

namespace exsplash {

unsigned pg1_index(const FieldCtx& F, Pg1Point p) { return p.inf ? F.ext_size() : p.t.v; }

Pg1Point pg1_from_index(const FieldCtx& F, unsigned i) {
  return i == F.ext_size() ? Pg1Point::infinity() : Pg1Point::at(F.el(i));
}

Pg1Point mobius_apply(const FieldCtx& F, const Mat2& m, Pg1Point p) {
  Fq3 x0, x1;
  if (p.inf) {
    x0 = m[0];
    x1 = m[2];
  } else {
    x0 = F.add(F.mul(m[0], p.t), m[1]);
    x1 = F.add(F.mul(m[2], p.t), m[3]);
  }
  if (x1.v == 0) return Pg1Point::infinity();
  return Pg1Point::at(F.div(x0, x1));
}

std::vector<Pg1Point> mobius_image(const FieldCtx& F, const Mat2& m,
                                   const std::vector<Pg1Point>& s) {
  std::vector<Pg1Point> out;
  out.reserve(s.size());
  for (auto p : s) out.push_back(mobius_apply(F, m, p));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Perm = std::vector<std::uint16_t>;

Perm induced_perm(const FieldCtx& F, const Mat2& m) {
  const unsigned n = F.ext_size() + 1;
  Perm p(n);
  for (unsigned i = 0; i < n; ++i)
    p[i] = static_cast<std::uint16_t>(pg1_index(F, mobius_apply(F, m, pg1_from_index(F, i))));
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) { // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

} // namespace

unsigned mobius_generated_order(const FieldCtx& F, const std::vector<Mat2>& gens) {
  std::vector<Perm> gen_perms;
  gen_perms.reserve(gens.size());
  for (const auto& g : gens) gen_perms.push_back(induced_perm(F, g));
  std::set<Perm> seen;
  std::vector<Perm> queue;
  Perm id(F.ext_size() + 1);
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint16_t>(i);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gen_perms) {
      Perm nx = compose_perm(g, cur);
      if (seen.insert(nx).second) queue.push_back(nx);
    }
  }
  return static_cast<unsigned>(seen.size());
}

unsigned pg1_set_stabilizer_order(const FieldCtx& F, const std::vector<Pg1Point>& s) {
  std::vector<Pg1Point> target = s;
  std::sort(target.begin(), target.end());
  const unsigned N = F.ext_size();
  unsigned count = 0;
  auto test = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    Mat2 m{F.el(a), F.el(b), F.el(c), F.el(d)};
    if (F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2])).v == 0) return;
    if (mobius_image(F, m, target) == target) ++count;
  };
  // normalized matrices: first nonzero of (a, b, c, d) equals 1; a = b = 0 is singular
  for (unsigned b = 0; b < N; ++b)
    for (unsigned c = 0; c < N; ++c)
      for (unsigned d = 0; d < N; ++d) test(1, b, c, d);
  for (unsigned c = 0; c < N; ++c)
    for (unsigned d = 0; d < N; ++d) test(0, 1, c, d);
  return count;
}

std::vector<std::vector<Pg1Point>> pg1_set_orbit(const FieldCtx& F,
                                                 const std::vector<Pg1Point>& s) {
  std::vector<Mat2> gens = {
      {F.one(), F.one(), F.zero(), F.one()},  // t -> t + 1
      {F.tau(), F.zero(), F.zero(), F.one()}, // t -> tau * t
      {F.zero(), F.one(), F.one(), F.zero()}, // t -> 1 / t
  };
  std::vector<Pg1Point> start = s;
  std::sort(start.begin(), start.end());
  std::set<std::vector<Pg1Point>> seen{start};
  std::vector<std::vector<Pg1Point>> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto cur = queue[head];
    for (const auto& g : gens) {
      auto nx = mobius_image(F, g, cur);
      if (seen.insert(nx).second) queue.push_back(nx);
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace exsplash
