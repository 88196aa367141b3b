#include <random>

#include "doctest.h"
#include "dyadic/common.hpp"
#include "dyadic/field.hpp"
#include "dyadic/gf.hpp"
#include "dyadic/scalar.hpp"

using namespace dyadic;

namespace {

Field q2() { static Field F = FieldSpec::parse("q2"); return F; }
Field q2x2() { static Field F = FieldSpec::parse("q2x2"); return F; }
Field q4() { static Field F = FieldSpec::parse("q4"); return F; }
Field q4x2() { static Field F = FieldSpec::parse("q4x2"); return F; }
Field f2t() { static Field F = FieldSpec::parse("f2t"); return F; }
Field f4t() { static Field F = FieldSpec::parse("f4t"); return F; }

std::vector<Field> all_fields() { return {q2(), q2x2(), q4(), q4x2(), f2t(), f4t()}; }

Scalar random_unit(const Field& F, std::mt19937_64& rng) {
  FieldSpec::Digits d(static_cast<std::size_t>(F->N()));
  for (auto& x : d) x = static_cast<std::uint16_t>(rng() % F->q());
  d[0] = static_cast<std::uint16_t>(1 + rng() % (F->q() - 1));
  return Scalar::unit(F, d);
}

Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
  int v = static_cast<int>(rng() % 7) - 3;
  return random_unit(F, rng).shifted(v);
}

}  // namespace

TEST_CASE("residue fields") {
  GF g1(1), g2(2), g3(3);
  CHECK(g1.q() == 2);
  CHECK(g2.modulus() == 0b111);      // y^2+y+1
  CHECK(g3.modulus() == 0b1011);     // y^3+y+1
  CHECK(g2.trace(2) == 1);           // Tr(y) = y + y^2 = 1 in F_4
  CHECK(g2.trace(1) == 0);
  CHECK(g3.trace(1) == 1);
  int tr0 = 0;
  for (int a = 0; a < 8; ++a)
    if (g3.trace(static_cast<std::uint16_t>(a)) == 0) ++tr0;
  CHECK(tr0 == 4);
  CHECK(g2.mul(2, 2) == 3);          // y^2 = y+1
  CHECK(g2.inv(2) == 3);
  for (int a = 1; a < 4; ++a) CHECK(g2.mul(static_cast<std::uint16_t>(a), g2.inv(static_cast<std::uint16_t>(a))) == 1);
  CHECK(g2.in_subfield(1, 1));
  CHECK(!g2.in_subfield(2, 1));
  auto img = g2.artin_schreier_image(1);  // x^2 + x over F_4
  CHECK(img == std::vector<std::uint16_t>{0, 1});
  CHECK(g1.artin_schreier_image(1) == std::vector<std::uint16_t>{0});
}

TEST_CASE("cyclotomic integers") {
  CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_poly(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(Cyc::degree(63) == 36);

  Cyc z = Cyc::root(12, 6);
  CHECK(z.is_integer());
  CHECK(z.as_integer() == -1);
  Cyc sum(12);
  for (int j = 0; j < 12; ++j) sum += Cyc::root(12, j);
  CHECK(sum.is_zero());
  Cyc a = Cyc::root(15, 2), b = Cyc::root(15, 13);
  CHECK(a.conj() == b);
  CHECK((a * b).as_integer() == 1);

  RootOfUnity m1 = RootOfUnity::make(1, 2);
  CHECK(m1.is_real());
  CHECK(m1.sign_if_real() == -1);
  CHECK((m1 * m1).is_one());
  RootOfUnity r = RootOfUnity::make(3, 6) * RootOfUnity::make(1, 2);
  CHECK(r.is_one());
  CHECK(RootOfUnity::make(1, 4).pow(2) == m1);
}

TEST_CASE("field construction and parsing") {
  CHECK(q2()->characteristic() == 0);
  CHECK(q2()->q() == 2);
  CHECK(q2()->e() == 1);
  CHECK(q2()->diff_val() == 0);
  CHECK(q2()->iota_residue() == 1);
  CHECK(q2()->aleph() == 1);

  CHECK(q2x2()->e() == 2);
  CHECK(q2x2()->diff_val() == 3);  // E' = 2x, val(2 pi) = e + e*1 - ... = 3
  CHECK(q2x2()->iota_residue() == 1);

  CHECK(q4()->q() == 4);
  CHECK(q4()->e() == 1);
  CHECK(q4()->diff_val() == 0);
  CHECK(q4()->aleph() == 2);

  CHECK(q4x2()->q() == 4);
  CHECK(q4x2()->e() == 2);
  CHECK(q4x2()->diff_val() == 3);

  CHECK(f2t()->characteristic() == 2);
  CHECK(f2t()->lt_e(1000000));
  CHECK(!f2t()->ge_e(5));
  CHECK(f2t()->le_4e(1000000));
  CHECK_THROWS_AS(f2t()->e(), InvalidInput);
  CHECK(f4t()->q() == 4);

  CHECK(q2()->lt_e(0));
  CHECK(!q2()->lt_e(1));
  CHECK(q2x2()->le_4e(8));
  CHECK(!q2x2()->le_4e(9));

  for (const auto& F : all_fields()) {
    Field G = FieldSpec::parse(F->config_string());
    CHECK(G->characteristic() == F->characteristic());
    CHECK(G->q() == F->q());
    CHECK(G->N() == F->N());
    if (F->characteristic() == 0) CHECK(G->e() == F->e());
  }

  Field with_n = FieldSpec::parse("q2 N=20");
  CHECK(with_n->N() == 20);
  Field expl = FieldSpec::parse("kind=eisenstein,f=1,eisenstein=x^2+2*x+2,N=12");
  CHECK(expl->e() == 2);
  CHECK(expl->diff_val() == 2);  // E'(pi) = 2 pi + 2, valuation = val(2) = 2

  CHECK_THROWS_AS(FieldSpec::parse("kind=eisenstein,f=1,eisenstein=x^2-1"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::parse("kind=eisenstein,f=1,eisenstein=x^2-4"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::parse("kind=eisenstein,f=1,eisenstein=x^2+x+2"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::parse("nonsense"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::make_laurent(1, 0), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::make_laurent(9, 16), InvalidInput);
}

TEST_CASE("integer embedding and basic arithmetic") {
  Field F = q2();
  Scalar three = Scalar::from_int(F, 3);
  Scalar nine = three * three;
  CHECK(nine.val() == 0);
  CHECK(nine.digit(0) == 1);
  CHECK(nine.digit(1) == 0);
  CHECK(nine.digit(2) == 0);
  CHECK(nine.digit(3) == 1);
  CHECK(nine == Scalar::from_int(F, 9));
  CHECK(nine.str().find("pi^3") != std::string::npos);

  CHECK(Scalar::from_int(F, 17).digit(4) == 1);
  Scalar minus1 = Scalar::from_int(F, -1);
  for (int i = 0; i < F->N(); ++i) CHECK(minus1.digit(i) == 1);
  CHECK(-Scalar::from_int(F, 1) == minus1);
  CHECK(Scalar::from_int(F, 1) + Scalar::from_int(F, 1) == Scalar::from_int(F, 2));
  CHECK(Scalar::from_int(F, 5) - Scalar::from_int(F, 3) == Scalar::from_int(F, 2));
  CHECK((Scalar::from_int(F, 3) - Scalar::from_int(F, 3)).is_zero());
  CHECK(Scalar::from_int(F, 3).shifted(2) == Scalar::from_int(F, 12));
  CHECK(Scalar::from_int(F, 12).val() == 2);

  Scalar third = Scalar::from_int(F, 3).inverse();
  CHECK(third * Scalar::from_int(F, 3) == Scalar::one(F));
  CHECK(third.digit(0) == 1);
  CHECK(third.digit(1) == 1);
  CHECK(third.digit(2) == 0);
  CHECK(third.digit(3) == 1);  // 1/3 = ...01011 in base 2

  Scalar half = Scalar::from_int(F, 2).inverse();
  CHECK(half.val() == -1);
  CHECK(half * Scalar::from_int(F, 2) == Scalar::one(F));
}

TEST_CASE("ramified quadratic arithmetic") {
  Field F = q2x2();
  Scalar pi = Scalar::uniformizer_pow(F, 1);
  CHECK((pi * pi).eq_mod(Scalar::from_int(F, 2), 10));
  CHECK(Scalar::from_int(F, 2).val() == 2);
  CHECK(Scalar::from_int(F, 3).val() == 0);

  Scalar s = (Scalar::one(F) + pi).square();  // (1+pi)^2 = 3 + 2 pi = 1 + pi^2 + pi^3
  CHECK(s.digit(0) == 1);
  CHECK(s.digit(1) == 0);
  CHECK(s.digit(2) == 1);
  CHECK(s.digit(3) == 1);
}

TEST_CASE("laurent series arithmetic") {
  Field F = f2t();
  Scalar t = Scalar::uniformizer_pow(F, 1);
  Scalar one = Scalar::one(F);
  Scalar sq = (one + t).square();
  CHECK(sq.digit(0) == 1);
  CHECK(sq.digit(1) == 0);
  CHECK(sq.digit(2) == 1);  // (1+t)^2 = 1 + t^2
  CHECK((one + one).is_zero());
  CHECK(Scalar::from_int(F, 2).is_zero());

  Scalar inv = (one + t).inverse();
  for (int i = 0; i < 8; ++i) CHECK(inv.digit(i) == 1);  // geometric series
  CHECK(inv * (one + t) == one);
}

TEST_CASE("algebra laws on random windows") {
  std::mt19937_64 rng(12345);
  for (const auto& F : all_fields()) {
    Scalar two = Scalar::from_int(F, 2);
    for (int it = 0; it < 60; ++it) {
      Scalar a = random_scalar(F, rng), b = random_scalar(F, rng), c = random_scalar(F, rng);
      int k = std::min({(a + b).prec_end(), 6});
      CHECK((a + b).eq_mod(b + a, k));
      CHECK(((a + b) + c).eq_mod(a + (b + c), std::min((a + b + c).prec_end(), 6)));
      Scalar lhs = (a + b).square();
      Scalar rhs = a.square() + two * a * b + b.square();
      CHECK(lhs.eq_mod(rhs, std::min(lhs.prec_end(), rhs.prec_end())));
      Scalar p = a * b;
      CHECK(p.val() == a.val() + b.val());
      CHECK((a * (b + c)).eq_mod(a * b + a * c, std::min({(a * b).prec_end(), (a * c).prec_end(), 6})));
    }
  }
}

TEST_CASE("unit inversion, many random windows") {
  std::mt19937_64 rng(777);
  for (const auto& F : all_fields()) {
    for (int it = 0; it < 1000; ++it) {
      Scalar u = random_unit(F, rng);
      CHECK((u * u.inverse()).eq_mod(Scalar::one(F), F->N()));
    }
  }
}

TEST_CASE("additive character pins") {
  Psi psi2{q2()};
  CHECK(psi2(Scalar::one(q2())) == RootOfUnity::make(1, 2));
  CHECK(psi2(Scalar::from_int(q2(), 2)).is_one());
  CHECK(psi2(Scalar::uniformizer_pow(q2(), 1)).is_one());
  CHECK(psi2(Scalar::from_int(q2(), 3)) == RootOfUnity::make(1, 2));
  CHECK(psi2(Scalar::from_int(q2(), 2).inverse()) == RootOfUnity::make(1, 4));

  Psi psir{q2x2()};
  CHECK(psir(Scalar::one(q2x2())) == RootOfUnity::make(1, 2));
  CHECK(psir(Scalar::uniformizer_pow(q2x2(), 1)).is_one());
  CHECK(psir(Scalar::uniformizer_pow(q2x2(), -1)).is_one());  // Tr(pi^{-5}) = 0

  Psi psi4t{f4t()};
  Scalar ylift = Scalar::unit(f4t(), {2});
  CHECK(psi4t(ylift) == RootOfUnity::make(1, 2));   // Tr(y) = 1 in F_4
  CHECK(psi4t(Scalar::one(f4t())).is_one());        // Tr(1) = 0 in F_4
  CHECK(psi4t(Scalar::uniformizer_pow(f4t(), 1)).is_one());

  Psi psi4{q4()};
  Scalar ylift0 = Scalar::unit(q4(), {2});
  CHECK(psi4(ylift0) == RootOfUnity::make(1, 2));
  CHECK(psi4(Scalar::one(q4())).is_one());  // Tr_{W/Z2}(1) = 2 is even
}

TEST_CASE("additive character is additive on P^-2 / P") {
  for (const auto& F : all_fields()) {
    Psi psi{F};
    int q = F->q();
    std::vector<Scalar> xs;
    for (int d0 = 0; d0 < q; ++d0)
      for (int d1 = 0; d1 < q; ++d1)
        for (int d2 = 0; d2 < q; ++d2)
          xs.push_back(Scalar::make(F, -2,
                                    {static_cast<std::uint16_t>(d0), static_cast<std::uint16_t>(d1),
                                     static_cast<std::uint16_t>(d2)},
                                    1));
    for (const auto& x : xs)
      for (const auto& y : xs) CHECK(psi(x + y) == psi(x) * psi(y));
    // nontrivial on units
    bool nontrivial = false;
    for (const auto& x : xs)
      if (!x.is_zero() && x.val() == 0 && !psi(x).is_one()) nontrivial = true;
    CHECK(nontrivial);
  }
}

TEST_CASE("twisted character") {
  Field F = q2();
  Psi psi{F};
  Psi psi3{F, Scalar::from_int(F, 3)};
  for (int n : {1, 2, 3, 5, 7}) {
    Scalar x = Scalar::from_int(F, n);
    CHECK(psi3(x) == psi(Scalar::from_int(F, 3) * x));
  }
  CHECK_THROWS_AS(Psi(F, Scalar::from_int(F, 2)), InvalidInput);
  CHECK_THROWS_AS(Psi(F, Scalar::zero(F)), InvalidInput);
}

TEST_CASE("precision discipline") {
  Field F = q2();
  Scalar a = Scalar::from_int(F, 3);
  CHECK_THROWS_AS(a.digit(F->N()), InvalidInput);
  CHECK_THROWS_AS(a.eq_mod(Scalar::one(F), F->N() + 1), InvalidInput);
  Scalar za = Scalar::zero(F, 0);
  Psi psi{F};
  CHECK_THROWS_AS(psi(za), InvalidInput);
  CHECK(psi(Scalar::zero(F, 1)).is_one());
  Scalar t = a.truncated(2);
  CHECK(t.prec_end() == 2);
  CHECK(t.eq_mod(a, 2));
  CHECK_THROWS_AS(t.eq_mod(a, 3), InvalidInput);
  CHECK_THROWS_AS(Scalar::zero(F).val(), InvalidInput);
  CHECK_THROWS_AS(Scalar::zero(F).inverse(), InvalidInput);
  // truncated windows propagate their precision through arithmetic
  Scalar u = a.truncated(4) * Scalar::from_int(F, 5);
  CHECK(u.prec_end() == 4);
  Scalar sh = a.truncated(4).shifted(3);
  CHECK(sh.prec_end() == 7);
  CHECK(sh.val() == 3);
}
