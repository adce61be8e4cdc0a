#include "exsplash/finite_field.hpp"

#include <cassert>
#include <numeric>

namespace exsplash {

namespace {

struct PrimePower {
  unsigned p, k;
};

// Supported range: every prime power q with 2 <= q <= 9.
PrimePower decompose(unsigned q) {
  switch (q) {
    case 2: return {2, 1};
    case 3: return {3, 1};
    case 4: return {2, 2};
    case 5: return {5, 1};
    case 7: return {7, 1};
    case 8: return {2, 3};
    case 9: return {3, 2};
    default:
      fail(Errc::NotPrimePower,
           "q = " + std::to_string(q) + " is not a prime power in the supported range 2..9");
  }
}

} // namespace

struct FieldBuilder {
  enum class ExtStatus { Ok, Reducible, NonPrimitive };

  // GF(q) tables. For k >= 2 the field is GF(p)[y]/(m(y)) with m the
  // lexicographically smallest monic polynomial (coefficients ordered from
  // y^{k-1} down to the constant) that is irreducible with primitive root.
  static void build_subfield(FieldCtx& F) {
    const unsigned q = F.q_, p = F.p_, k = F.k_;
    F.sadd_.assign(q * q, 0);
    F.smul_.assign(q * q, 0);
    F.sneg_.assign(q, 0);
    F.sinv_.assign(q, 0);

    if (k == 1) {
      for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
          F.sadd_[a * q + b] = static_cast<std::uint16_t>((a + b) % p);
          F.smul_[a * q + b] = static_cast<std::uint16_t>((a * b) % p);
        }
        F.sneg_[a] = static_cast<std::uint16_t>((p - a) % p);
      }
    } else {
      std::vector<unsigned> m(k, 0); // m[i] = coefficient of y^i, monic part implicit
      if (!find_subfield_poly(p, k, m)) {
        fail(Errc::NotPrimePower, "internal: no primitive polynomial for subfield");
      }
      auto digits = [&](unsigned v) {
        std::vector<unsigned> d(k);
        for (unsigned i = 0; i < k; ++i) { d[i] = v % p; v /= p; }
        return d;
      };
      auto label = [&](const std::vector<unsigned>& d) {
        unsigned v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + d[i];
        return v;
      };
      for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<unsigned> nd(k);
        for (unsigned i = 0; i < k; ++i) nd[i] = (p - da[i]) % p;
        F.sneg_[a] = static_cast<std::uint16_t>(label(nd));
        for (unsigned b = 0; b < q; ++b) {
          auto db = digits(b);
          std::vector<unsigned> s(k);
          for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
          F.sadd_[a * q + b] = static_cast<std::uint16_t>(label(s));
          F.smul_[a * q + b] = static_cast<std::uint16_t>(label(polymul_mod(da, db, m, p)));
        }
      }
    }
    for (unsigned a = 1; a < q; ++a) {
      for (unsigned b = 1; b < q; ++b) {
        if (F.smul_[a * q + b] == 1) { F.sinv_[a] = static_cast<std::uint16_t>(b); break; }
      }
    }
  }

  static std::vector<unsigned> polymul_mod(const std::vector<unsigned>& a,
                                           const std::vector<unsigned>& b,
                                           const std::vector<unsigned>& m, unsigned p) {
    const unsigned k = static_cast<unsigned>(m.size());
    std::vector<unsigned> c(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (unsigned d = 2 * k - 2; d >= k; --d) {
      unsigned co = c[d];
      if (co) {
        c[d] = 0;
        for (unsigned i = 0; i < k; ++i)
          c[d - k + i] = (c[d - k + i] + co * (p - m[i])) % p; // y^k = -sum m_i y^i
      }
    }
    c.resize(k);
    return c;
  }

  static bool find_subfield_poly(unsigned p, unsigned k, std::vector<unsigned>& out) {
    const unsigned total = [&] { unsigned t = 1; for (unsigned i = 0; i < k; ++i) t *= p; return t; }();
    for (unsigned code = 0; code < total; ++code) {
      // code encodes (c_{k-1}, ..., c_0) with c_{k-1} most significant
      std::vector<unsigned> m(k);
      unsigned v = code;
      for (unsigned i = 0; i < k; ++i) { m[i] = v % p; v /= p; }
      bool has_root = false;
      for (unsigned r = 0; r < p && !has_root; ++r) {
        unsigned val = 1; // r^k
        for (unsigned i = 0; i < k; ++i) val = (val * r) % p;
        unsigned rp = 1;
        for (unsigned i = 0; i < k; ++i) { val = (val + m[i] * rp) % p; rp = (rp * r) % p; }
        has_root = (val == 0);
      }
      if (has_root) continue;
      // order of the residue class of y must be p^k - 1
      std::vector<unsigned> x(k, 0), y(k, 0);
      if (k > 1) y[1] = 1;
      x = y;
      unsigned order = 1;
      auto is_one = [&](const std::vector<unsigned>& t) {
        if (t[0] != 1) return false;
        for (unsigned i = 1; i < k; ++i) if (t[i] != 0) return false;
        return true;
      };
      while (!is_one(x) && order <= total) { x = polymul_mod(x, y, m, p); ++order; }
      if (order == total - 1) { out = m; return true; }
    }
    return false;
  }

  // GF(q^3) tables for the cubic tau^3 = t2 tau^2 + t1 tau + t0.
  static ExtStatus build_ext(FieldCtx& F, CubicCoeffs c) {
    const unsigned q = F.q_, n1 = q * q * q;
    auto sadd = [&](unsigned a, unsigned b) { return F.sadd_[a * q + b]; };
    auto smul = [&](unsigned a, unsigned b) { return F.smul_[a * q + b]; };

    // degree-3 polynomial with no subfield root is irreducible
    for (unsigned r = 0; r < q; ++r) {
      unsigned r2 = smul(r, r), r3 = smul(r2, r);
      unsigned rhs = sadd(sadd(smul(c.t2.v, r2), smul(c.t1.v, r)), c.t0.v);
      if (r3 == rhs) return ExtStatus::Reducible;
    }

    F.poly_ = c;
    F.n_ = n1 - 1;
    F.eadd_.assign(n1 * n1, 0);
    F.emul_.assign(n1 * n1, 0);
    F.eneg_.assign(n1, 0);
    F.einv_.assign(n1, 0);
    F.frob1_.assign(n1, 0);
    F.frob2_.assign(n1, 0);
    F.norm_.assign(n1, 0);
    F.trace_.assign(n1, 0);
    F.dlog_.assign(n1, 0);
    F.powtab_.assign(F.n_, 0);

    auto unpack = [&](unsigned v, unsigned d[3]) { d[0] = v % q; d[1] = v / q % q; d[2] = v / (q * q); };
    auto pack = [&](const unsigned d[3]) { return d[0] + d[1] * q + d[2] * q * q; };

    for (unsigned a = 0; a < n1; ++a) {
      unsigned da[3], na[3];
      unpack(a, da);
      for (unsigned i = 0; i < 3; ++i) na[i] = F.sneg_[da[i]];
      F.eneg_[a] = static_cast<std::uint16_t>(pack(na));
      for (unsigned b = 0; b < n1; ++b) {
        unsigned db[3], s[3];
        unpack(b, db);
        for (unsigned i = 0; i < 3; ++i) s[i] = sadd(da[i], db[i]);
        F.eadd_[a * n1 + b] = static_cast<std::uint16_t>(pack(s));

        unsigned cprod[5] = {0, 0, 0, 0, 0};
        for (unsigned i = 0; i < 3; ++i)
          for (unsigned j = 0; j < 3; ++j) cprod[i + j] = sadd(cprod[i + j], smul(da[i], db[j]));
        for (unsigned d = 4; d >= 3; --d) {
          unsigned co = cprod[d];
          if (co) {
            cprod[d] = 0;
            cprod[d - 3] = sadd(cprod[d - 3], smul(co, c.t0.v));
            cprod[d - 2] = sadd(cprod[d - 2], smul(co, c.t1.v));
            cprod[d - 1] = sadd(cprod[d - 1], smul(co, c.t2.v));
          }
        }
        F.emul_[a * n1 + b] = static_cast<std::uint16_t>(pack(cprod));
      }
    }

    // discrete logs via the tau power walk; primitivity = full cycle
    const unsigned tau = q;
    unsigned x = 1;
    for (unsigned e = 0; e < F.n_; ++e) {
      if (x == 1 && e > 0) return ExtStatus::NonPrimitive;
      F.powtab_[e] = static_cast<std::uint16_t>(x);
      F.dlog_[x] = static_cast<std::uint16_t>(e);
      x = F.emul_[x * n1 + tau];
    }
    if (x != 1) return ExtStatus::NonPrimitive; // defensive; cannot happen in a field

    for (unsigned e = 0; e < F.n_; ++e)
      F.einv_[F.powtab_[e]] = F.powtab_[(F.n_ - e) % F.n_];

    for (unsigned v = 1; v < n1; ++v) {
      unsigned e = F.dlog_[v];
      F.frob1_[v] = F.powtab_[static_cast<unsigned>((static_cast<unsigned long long>(e) * q) % F.n_)];
      F.frob2_[v] = F.powtab_[static_cast<unsigned>((static_cast<unsigned long long>(e) * q * q) % F.n_)];
    }

    for (unsigned v = 0; v < n1; ++v) {
      unsigned nm = F.emul_[F.emul_[v * n1 + F.frob1_[v]] * n1 + F.frob2_[v]];
      unsigned tr = F.eadd_[F.eadd_[v * n1 + F.frob1_[v]] * n1 + F.frob2_[v]];
      assert(nm < q && tr < q); // both are Frobenius-fixed, hence subfield labels
      F.norm_[v] = static_cast<std::uint16_t>(nm);
      F.trace_[v] = static_cast<std::uint16_t>(tr);
    }
    return ExtStatus::Ok;
  }
};

FieldCtx FieldCtx::make(unsigned q) {
  auto pp = decompose(q);
  FieldCtx F;
  F.q_ = q;
  F.p_ = pp.p;
  F.k_ = pp.k;
  FieldBuilder::build_subfield(F);
  for (unsigned t2 = 0; t2 < q; ++t2)
    for (unsigned t1 = 0; t1 < q; ++t1)
      for (unsigned t0 = 0; t0 < q; ++t0) {
        CubicCoeffs c{Fq{static_cast<std::uint16_t>(t0)}, Fq{static_cast<std::uint16_t>(t1)},
                      Fq{static_cast<std::uint16_t>(t2)}};
        if (FieldBuilder::build_ext(F, c) == FieldBuilder::ExtStatus::Ok) return F;
      }
  fail(Errc::NotPrimePower, "internal: no primitive cubic found"); // unreachable
}

FieldCtx FieldCtx::make(unsigned q, CubicCoeffs poly) {
  auto pp = decompose(q);
  if (poly.t0.v >= q || poly.t1.v >= q || poly.t2.v >= q)
    fail(Errc::BadParameters, "cubic coefficients must be GF(q) labels below q");
  FieldCtx F;
  F.q_ = q;
  F.p_ = pp.p;
  F.k_ = pp.k;
  FieldBuilder::build_subfield(F);
  switch (FieldBuilder::build_ext(F, poly)) {
    case FieldBuilder::ExtStatus::Ok: return F;
    case FieldBuilder::ExtStatus::Reducible:
      fail(Errc::ReduciblePolynomial, "the cubic has a root in GF(q)");
    case FieldBuilder::ExtStatus::NonPrimitive:
      fail(Errc::NonPrimitiveRoot, "tau is not a generator of the multiplicative group");
  }
  fail(Errc::BadParameters, "unreachable");
}

Fq3 FieldCtx::pow(Fq3 a, long long e) const {
  if (a.v == 0) {
    if (e <= 0) fail(Errc::BadParameters, "pow(0, e) with e <= 0");
    return Fq3{0};
  }
  long long n = static_cast<long long>(n_);
  long long r = (static_cast<long long>(dlog_[a.v]) * (e % n)) % n;
  if (r < 0) r += n;
  return Fq3{powtab_[static_cast<unsigned>(r)]};
}

Fq FieldCtx::subfield_label(Fq3 a) const {
  if (!in_subfield(a)) fail(Errc::BadParameters, "element is not in the subfield");
  return Fq{a.v};
}

std::vector<Fq3> FieldCtx::solve_norm_eq(Fq f) const {
  if (f.v == 0) fail(Errc::ZeroRightHandSide, "norm equation N(x) = 0 has only the zero solution");
  if (f.v >= q_) fail(Errc::BadParameters, "right hand side must be a GF(q) label");
  std::vector<Fq3> out;
  out.reserve(q_ * q_ + q_ + 1);
  for (unsigned v = 1; v <= n_; ++v)
    if (norm_[v] == f.v) out.push_back(Fq3{static_cast<std::uint16_t>(v)});
  return out;
}

unsigned FieldCtx::mul_order(Fq3 a) const {
  require_nonzero(a.v);
  unsigned e = dlog_[a.v];
  if (e == 0) return 1;
  unsigned g = std::gcd(n_, e);
  return n_ / g;
}

} // namespace exsplash
