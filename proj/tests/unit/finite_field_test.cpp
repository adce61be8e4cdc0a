#include "doctest.h"

#include <set>

#include "exsplash/errors.hpp"
#include "exsplash/finite_field.hpp"

using namespace exsplash;

TEST_SUITE("finite_field") {

TEST_CASE("extension field satisfies the field axioms") {
  for (unsigned q : {2u, 3u, 4u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    const unsigned n = F.ext_size();
    for (unsigned a = 0; a < n; ++a) {
      Fq3 x = F.el(a);
      CHECK(F.add(x, F.zero()) == x);
      CHECK(F.mul(x, F.one()) == x);
      CHECK(F.add(x, F.neg(x)) == F.zero());
      if (a != 0) CHECK(F.mul(x, F.inv(x)) == F.one());
      for (unsigned b = 0; b < n; ++b) {
        Fq3 y = F.el(b);
        CHECK(F.add(x, y) == F.add(y, x));
        CHECK(F.mul(x, y) == F.mul(y, x));
      }
    }
    // associativity and distributivity over all triples
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c) {
          Fq3 x = F.el(a), y = F.el(b), z = F.el(c);
          if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) FAIL("add not associative");
          if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) FAIL("mul not associative");
          if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z)))
            FAIL("mul not distributive");
        }
  }
}

TEST_CASE("defining cubic is satisfied by tau and has no subfield root") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    CubicCoeffs c = F.poly();
    Fq3 t = F.tau();
    Fq3 lhs = F.pow(t, 3);
    Fq3 rhs = F.add(F.mul(F.embed(c.t2), F.mul(t, t)),
                    F.add(F.mul(F.embed(c.t1), t), F.embed(c.t0)));
    CHECK(lhs == rhs);
    // a cubic with no root in GF(q) is irreducible over GF(q)
    for (unsigned v = 0; v < F.q(); ++v) {
      Fq x = F.q_el(v);
      Fq x3 = F.mul(x, F.mul(x, x));
      Fq val = F.sub(x3, F.add(F.mul(c.t2, F.mul(x, x)), F.add(F.mul(c.t1, x), c.t0)));
      CHECK(val != F.q_zero());
    }
  }
}

TEST_CASE("tau is primitive and dlog inverts its powers") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    // order by direct repeated multiplication
    Fq3 x = F.tau();
    unsigned order = 1;
    while (x != F.one()) {
      x = F.mul(x, F.tau());
      ++order;
    }
    CHECK(order == F.ext_units());
    CHECK(F.mul_order(F.tau()) == F.ext_units());
    for (unsigned k = 0; k < F.ext_units(); ++k)
      CHECK(F.dlog(F.pow(F.tau(), k)) == k);
  }
}

TEST_CASE("norm and trace match their defining power sums") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    const unsigned qv = F.q();
    for (unsigned a = 0; a < F.ext_size(); ++a) {
      Fq3 x = F.el(a);
      Fq3 n = F.mul(x, F.mul(F.frobenius(x, 1), F.frobenius(x, 2)));
      CHECK(F.embed(F.norm(x)) == n);
      CHECK(F.in_subfield(n));
      Fq3 t = F.add(x, F.add(F.frobenius(x, 1), F.frobenius(x, 2)));
      CHECK(F.embed(F.trace(x)) == t);
      CHECK(F.frobenius(x, 1) == F.pow(x, qv));
      CHECK(F.frobenius(x, 2) == F.pow(x, qv * qv));
    }
  }
}

TEST_CASE("frobenius is an automorphism of order three fixing the subfield") {
  FieldCtx F = FieldCtx::make(3);
  for (unsigned a = 0; a < F.ext_size(); ++a) {
    Fq3 x = F.el(a);
    CHECK(F.frobenius(F.frobenius(x, 1), 2) == x);
    CHECK((F.frobenius(x, 1) == x) == F.in_subfield(x));
    for (unsigned b = 0; b < F.ext_size(); ++b) {
      Fq3 y = F.el(b);
      CHECK(F.frobenius(F.add(x, y), 1) == F.add(F.frobenius(x, 1), F.frobenius(y, 1)));
      CHECK(F.frobenius(F.mul(x, y), 1) == F.mul(F.frobenius(x, 1), F.frobenius(y, 1)));
    }
  }
}

TEST_CASE("solve_norm_eq returns exactly the fiber, ascending") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    CAPTURE(q);
    FieldCtx F = FieldCtx::make(q);
    for (unsigned f = 1; f < F.q(); ++f) {
      auto fiber = F.solve_norm_eq(F.q_el(f));
      std::vector<Fq3> expect;
      for (unsigned a = 1; a < F.ext_size(); ++a)
        if (F.norm(F.el(a)) == F.q_el(f)) expect.push_back(F.el(a));
      CHECK(fiber == expect); // scan order is already ascending
    }
    CHECK_THROWS_AS(F.solve_norm_eq(F.q_zero()), Error);
  }
}

TEST_CASE("coefficient access round-trips") {
  FieldCtx F = FieldCtx::make(4);
  for (unsigned a = 0; a < F.ext_size(); ++a) {
    Fq3 x = F.el(a);
    CHECK(F.from_coeffs(F.coeff(x, 0), F.coeff(x, 1), F.coeff(x, 2)) == x);
  }
  // embed/subfield_label round-trip
  for (unsigned v = 0; v < F.q(); ++v) {
    CHECK(F.in_subfield(F.embed(F.q_el(v))));
    CHECK(F.subfield_label(F.embed(F.q_el(v))) == F.q_el(v));
  }
}

TEST_CASE("construction rejects bad orders and bad cubics") {
  CHECK_THROWS_AS(FieldCtx::make(6), Error);
  CHECK_THROWS_AS(FieldCtx::make(1), Error);
  CHECK_THROWS_AS(FieldCtx::make(11), Error);
  // the zero cubic has the root 0
  CHECK_THROWS_AS(FieldCtx::make(2, CubicCoeffs{Fq{0}, Fq{0}, Fq{0}}), Error);

  // over GF(3), every cubic is either accepted or rejected for a stated
  // reason, and both rejection reasons occur
  unsigned accepted = 0, reducible = 0, nonprimitive = 0;
  for (unsigned t0 = 0; t0 < 3; ++t0)
    for (unsigned t1 = 0; t1 < 3; ++t1)
      for (unsigned t2 = 0; t2 < 3; ++t2) {
        try {
          FieldCtx F = FieldCtx::make(
              3, CubicCoeffs{Fq{static_cast<std::uint16_t>(t0)},
                             Fq{static_cast<std::uint16_t>(t1)},
                             Fq{static_cast<std::uint16_t>(t2)}});
          CHECK(F.mul_order(F.tau()) == F.ext_units());
          ++accepted;
        } catch (const Error& e) {
          if (e.code() == Errc::ReduciblePolynomial) ++reducible;
          else if (e.code() == Errc::NonPrimitiveRoot) ++nonprimitive;
          else FAIL("unexpected error code");
        }
      }
  CHECK(accepted > 0);
  CHECK(reducible > 0);
  CHECK(nonprimitive > 0);
  CHECK(accepted + reducible + nonprimitive == 27);
}

TEST_CASE("explicit cubic override is honoured") {
  // tau^3 = tau + 1 over GF(2) (t0=1, t1=1, t2=0)
  FieldCtx F = FieldCtx::make(2, CubicCoeffs{Fq{1}, Fq{1}, Fq{0}});
  Fq3 t = F.tau();
  CHECK(F.pow(t, 3) == F.add(t, F.one()));
  CHECK(F.poly().t0 == Fq{1});
  CHECK(F.poly().t1 == Fq{1});
  CHECK(F.poly().t2 == Fq{0});
}

TEST_CASE("non-prime base fields have characteristic p, not q") {
  FieldCtx F4 = FieldCtx::make(4);
  CHECK(F4.p() == 2);
  CHECK(F4.add(F4.q_one(), F4.q_one()) == F4.q_zero());
  FieldCtx F9 = FieldCtx::make(9);
  CHECK(F9.p() == 3);
  Fq two = F9.add(F9.q_one(), F9.q_one());
  CHECK(two != F9.q_zero());
  CHECK(F9.add(two, F9.q_one()) == F9.q_zero());
}

} // TEST_SUITE
