#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "exsplash/errors.hpp"

namespace exsplash {

// Element of the base field GF(q), labelled 0..q-1. For prime q the label is
// the residue; for q = p^k it is the base-p digit string of the coefficient
// vector, least significant digit first.
struct Fq {
  std::uint16_t v = 0;
  auto operator<=>(const Fq&) const = default;
};

// Element of the cubic extension GF(q^3) = GF(q)[tau], stored as the label
// a0 + a1*q + a2*q^2 of its coordinate triple a0 + a1*tau + a2*tau^2.
struct Fq3 {
  std::uint16_t v = 0;
  auto operator<=>(const Fq3&) const = default;
};

// Coefficients of the defining cubic tau^3 = t2*tau^2 + t1*tau + t0.
struct CubicCoeffs {
  Fq t0, t1, t2;
  auto operator<=>(const CubicCoeffs&) const = default;
};

// Exact arithmetic context for GF(q) and GF(q^3), fully table-driven.
// Supported q: 2, 3, 4, 5, 7, 8, 9. All operations are O(1) lookups.
// Elements from different contexts must not be mixed; this is not checked.
class FieldCtx {
public:
  // Builds the context with the default cubic: the lexicographically smallest
  // (t2, t1, t0) whose cubic is irreducible over GF(q) with primitive root.
  static FieldCtx make(unsigned q);

  // Builds the context with an explicit cubic. Throws ReduciblePolynomial or
  // NonPrimitiveRoot when the polynomial does not define the field with a
  // primitive tau, NotPrimePower for unsupported q.
  static FieldCtx make(unsigned q, CubicCoeffs poly);

  unsigned q() const noexcept { return q_; }
  unsigned p() const noexcept { return p_; }
  unsigned ext_size() const noexcept { return n_ + 1; } // q^3
  unsigned ext_units() const noexcept { return n_; }    // q^3 - 1
  CubicCoeffs poly() const noexcept { return poly_; }
  Fq3 tau() const noexcept { return Fq3{static_cast<std::uint16_t>(q_)}; }

  // --- GF(q) ---
  Fq q_zero() const noexcept { return Fq{0}; }
  Fq q_one() const noexcept { return Fq{1}; }
  Fq q_el(unsigned v) const noexcept { return Fq{static_cast<std::uint16_t>(v)}; }
  Fq add(Fq a, Fq b) const noexcept { return Fq{sadd_[a.v * q_ + b.v]}; }
  Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
  Fq neg(Fq a) const noexcept { return Fq{sneg_[a.v]}; }
  Fq mul(Fq a, Fq b) const noexcept { return Fq{smul_[a.v * q_ + b.v]}; }
  Fq inv(Fq a) const { require_nonzero(a.v); return Fq{sinv_[a.v]}; }
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

  // --- GF(q^3) ---
  Fq3 zero() const noexcept { return Fq3{0}; }
  Fq3 one() const noexcept { return Fq3{1}; }
  Fq3 el(unsigned v) const noexcept { return Fq3{static_cast<std::uint16_t>(v)}; }
  Fq3 add(Fq3 a, Fq3 b) const noexcept { return Fq3{eadd_[a.v * (n_ + 1) + b.v]}; }
  Fq3 sub(Fq3 a, Fq3 b) const noexcept { return add(a, neg(b)); }
  Fq3 neg(Fq3 a) const noexcept { return Fq3{eneg_[a.v]}; }
  Fq3 mul(Fq3 a, Fq3 b) const noexcept { return Fq3{emul_[a.v * (n_ + 1) + b.v]}; }
  Fq3 inv(Fq3 a) const { require_nonzero(a.v); return Fq3{einv_[a.v]}; }
  Fq3 div(Fq3 a, Fq3 b) const { return mul(a, inv(b)); }
  Fq3 pow(Fq3 a, long long e) const;

  Fq3 embed(Fq a) const noexcept { return Fq3{a.v}; }
  bool in_subfield(Fq3 a) const noexcept { return a.v < q_; }
  Fq subfield_label(Fq3 a) const;

  Fq coeff(Fq3 a, unsigned i) const noexcept {
    unsigned v = a.v;
    if (i == 1) v /= q_;
    if (i == 2) v /= q_ * q_;
    return Fq{static_cast<std::uint16_t>(v % q_)};
  }
  Fq3 from_coeffs(Fq a0, Fq a1, Fq a2) const noexcept {
    return Fq3{static_cast<std::uint16_t>(a0.v + a1.v * q_ + a2.v * q_ * q_)};
  }

  // x^{q^i}; the exponent i is taken mod 3.
  Fq3 frobenius(Fq3 a, unsigned i) const noexcept {
    switch (i % 3) {
      case 1: return Fq3{frob1_[a.v]};
      case 2: return Fq3{frob2_[a.v]};
      default: return a;
    }
  }

  // Norm over GF(q): N(x) = x^{q^2+q+1}. Always lands in the subfield.
  Fq norm(Fq3 a) const noexcept { return Fq{norm_[a.v]}; }
  // Trace over GF(q): T(x) = x + x^q + x^{q^2}.
  Fq trace(Fq3 a) const noexcept { return Fq{trace_[a.v]}; }

  // All x with N(x) = f, ascending by label. Throws ZeroRightHandSide if f = 0.
  std::vector<Fq3> solve_norm_eq(Fq f) const;

  // Multiplicative order of a nonzero element.
  unsigned mul_order(Fq3 a) const;

  // Discrete log base tau of a nonzero element.
  unsigned dlog(Fq3 a) const { require_nonzero(a.v); return dlog_[a.v]; }

private:
  FieldCtx() = default;
  void require_nonzero(unsigned v) const {
    if (v == 0) fail(Errc::BadParameters, "division by zero");
  }

  unsigned q_ = 0, p_ = 0, k_ = 0, n_ = 0; // n_ = q^3 - 1
  CubicCoeffs poly_{};
  std::vector<std::uint16_t> sadd_, smul_, sneg_, sinv_;
  std::vector<std::uint16_t> eadd_, emul_, eneg_, einv_;
  std::vector<std::uint16_t> frob1_, frob2_, norm_, trace_;
  std::vector<std::uint16_t> dlog_, powtab_;

  friend struct FieldBuilder;
};

} // namespace exsplash
