#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dyadic/common.hpp"
#include "dyadic/groups.hpp"

using namespace dyadic;

namespace {

Field q2() { static Field F = FieldSpec::parse("q2"); return F; }
Field q2x2() { static Field F = FieldSpec::parse("q2x2"); return F; }
Field f2t() { static Field F = FieldSpec::parse("f2t"); return F; }
Field f4t() { static Field F = FieldSpec::parse("f4t"); return F; }

}  // namespace

TEST_CASE("residue ring tables agree with scalar arithmetic") {
  for (const auto& F : {q2(), q2x2(), f2t(), f4t()}) {
    Ring R = ResidueRing::make(F, 3);
    CHECK(R->card() == ipow(F->q(), 3));
    CHECK(R->val(R->zero()) == 3);
    CHECK(R->val(R->one()) == 0);
    CHECK(R->val(R->pi()) == 1);
    for (std::uint32_t a = 0; a < R->card(); ++a) {
      std::uint16_t ai = static_cast<std::uint16_t>(a);
      const Scalar& sa = R->to_scalar(ai);
      CHECK(R->from_scalar(sa) == ai);
      CHECK(R->add(ai, R->neg(ai)) == 0);
      if (R->is_unit(ai)) {
        CHECK(R->mul(ai, R->inv(ai)) == R->one());
        CHECK(sa.val() == 0);
      }
      // index order is lexicographic digit order
      auto padded = [&](std::uint16_t x) {
        FieldSpec::Digits d(3);
        for (int j = 0; j < 3; ++j) d[static_cast<std::size_t>(j)] = R->to_scalar(x).digit(j);
        return d;
      };
      if (a + 1 < R->card()) CHECK(padded(ai) < padded(static_cast<std::uint16_t>(a + 1)));
    }
    // distributivity on a sample
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      std::uint16_t a = static_cast<std::uint16_t>(rng() % R->card());
      std::uint16_t b = static_cast<std::uint16_t>(rng() % R->card());
      std::uint16_t c = static_cast<std::uint16_t>(rng() % R->card());
      CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
    }
  }
}

TEST_CASE("ring index lift and projection round-trip") {
  Ring big = ResidueRing::make(q2(), 4);
  Ring small = ResidueRing::make(q2(), 2);
  for (std::uint32_t a = 0; a < small->card(); ++a) {
    std::uint16_t lift = big->lift_from(*small, static_cast<std::uint16_t>(a));
    CHECK(big->project_to(*small, lift) == a);
    CHECK(big->to_scalar(lift).is_zero_mod(2) ==
          small->to_scalar(static_cast<std::uint16_t>(a)).is_zero_mod(2));
  }
  for (std::uint32_t a = 0; a < big->card(); ++a) {
    std::uint16_t down = big->project_to(*small, static_cast<std::uint16_t>(a));
    for (int j = 0; j < 2; ++j)
      CHECK(small->to_scalar(down).digit(j) ==
            big->to_scalar(static_cast<std::uint16_t>(a)).digit(j));
  }
}

TEST_CASE("special linear group cardinalities, pinned") {
  CHECK(enumerate_sl(*ResidueRing::make(q2(), 1)).size() == 6);
  CHECK(enumerate_sl(*ResidueRing::make(q2(), 3)).size() == 384);
  CHECK(enumerate_sl(*ResidueRing::make(f4t(), 2)).size() == 3840);
  CHECK(sl_order(q2(), 1) == 6);
  CHECK(sl_order(q2(), 3) == 384);
  CHECK(sl_order(f4t(), 2) == 3840);
  CHECK(gl_order(q2(), 1) == 6);
  CHECK(gl_order(f4t(), 1) == 180);

  // all six elements of SL(2, F_2), in canonical (lexicographic) order
  Ring R = ResidueRing::make(q2(), 1);
  auto sl = enumerate_sl(*R);
  auto mat = [&](int a, int b, int c, int d) {
    return Mat2{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                 static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)}};
  };
  REQUIRE(sl.size() == 6);
  CHECK(sl[0] == mat(0, 1, 1, 0));
  CHECK(sl[1] == mat(0, 1, 1, 1));
  CHECK(sl[2] == mat(1, 0, 0, 1));
  CHECK(sl[3] == mat(1, 0, 1, 1));
  CHECK(sl[4] == mat(1, 1, 0, 1));
  CHECK(sl[5] == mat(1, 1, 1, 0));

  for (const auto& g : enumerate_gl(*ResidueRing::make(f2t(), 2)))
    CHECK(ResidueRing::make(f2t(), 2)->is_unit(mat_det(*ResidueRing::make(f2t(), 2), g)));
  CHECK(enumerate_gl(*ResidueRing::make(f2t(), 2)).size() == gl_order(f2t(), 2));
}

TEST_CASE("enumeration refuses over-budget groups, naming the cardinality") {
  Ring R = ResidueRing::make(q2(), 8);
  try {
    enumerate_sl(*R);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.cardinality == sl_order(q2(), 8));
    CHECK(std::string(e.what()).find(std::to_string(sl_order(q2(), 8))) != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_sl(*ResidueRing::make(q2(), 3), 100), ResourceError);
}

TEST_CASE("group axioms hold on random samples") {
  Ring R = ResidueRing::make(q2(), 3);
  auto sl = enumerate_sl(*R);
  std::mt19937_64 rng(11);
  Mat2 I = mat_identity(*R);
  for (int t = 0; t < 10000; ++t) {
    const Mat2& x = sl[rng() % sl.size()];
    const Mat2& y = sl[rng() % sl.size()];
    const Mat2& z = sl[rng() % sl.size()];
    CHECK(mat_mul(*R, mat_mul(*R, x, y), z) == mat_mul(*R, x, mat_mul(*R, y, z)));
    CHECK(mat_mul(*R, x, mat_inv(*R, x)) == I);
    CHECK(mat_det(*R, x) == R->one());
  }
}

TEST_CASE("lower-triangular double cosets: pinned representative lists") {
  auto cells1 = double_cosets_Bell(q2(), 1);
  REQUIRE(cells1.size() == 2);
  CHECK(cells1[0].label() == "I");
  CHECK(cells1[1].label() == "w");

  CHECK(double_cosets_Bell(q2(), 2).size() == 3);

  auto cells3 = double_cosets_Bell(q2(), 3);
  REQUIRE(cells3.size() == 4);
  CHECK(cells3[2].label() == "g(1, 1)");
  CHECK(cells3[3].label() == "g(2, 1)");

  auto cells4 = double_cosets_Bell(q2(), 4);
  REQUIRE(cells4.size() == 6);
  CHECK(cells4[2].label() == "g(1, 1)");
  CHECK(cells4[3].label() == "g(2, 1)");
  CHECK(cells4[4].label() == "g(2, 1+pi)");
  CHECK(cells4[5].label() == "g(3, 1)");

  CHECK(double_cosets_Bell(q2(), 5).size() == 8);
  CHECK(double_cosets_Bell(f2t(), 5).size() == 8);
  CHECK(double_cosets_Bell(f4t(), 2).size() == 3);
}

TEST_CASE("double cosets match the brute-force orbit partition") {
  for (const auto& F : {q2(), q2x2(), f2t()}) {
    for (int ell = 1; ell <= 4; ++ell) {
      DoubleCosetAudit a = double_cosets_oracle(F, ell);
      INFO(F->config_string(), " ell=", ell);
      CHECK(a.group_size == sl_order(F, ell + 1));
      CHECK(a.orbit_count == double_cosets_Bell(F, ell).size());
      CHECK(a.reps_bijective);
      CHECK(a.classifier_matches_orbits);
    }
  }
  DoubleCosetAudit a = double_cosets_oracle(f4t(), 2);
  CHECK(a.orbit_count == 3);
  CHECK(a.reps_bijective);
  CHECK(a.classifier_matches_orbits);
}

TEST_CASE("cell classification is a two-sided invariant") {
  Ring R = ResidueRing::make(q2(), 5);
  int ell = 4;
  auto sl = enumerate_sl(*R);
  std::mt19937_64 rng(13);
  auto bp = [&](Mat2 g) { return in_Bprime(*R, g, ell); };
  for (int t = 0; t < 2000; ++t) {
    const Mat2& g = sl[rng() % sl.size()];
    Mat2 b1 = sl[rng() % sl.size()];
    Mat2 b2 = sl[rng() % sl.size()];
    if (!bp(b1) || !bp(b2)) continue;
    BruhatCell c0 = classify_double_coset(*R, g, ell);
    BruhatCell c1 = classify_double_coset(*R, mat_mul(*R, mat_mul(*R, b1, g), b2), ell);
    CHECK(c0.kind == c1.kind);
    CHECK(c0.k == c1.k);
    if (c0.kind == BruhatCell::Kind::unipotent) CHECK(c0.alpha == c1.alpha);
  }
}

TEST_CASE("torus conjugation rescales the cell parameter by a square") {
  for (const auto& F : {q2(), q2x2(), f2t()}) {
    Ring R = ResidueRing::make(F, 3);
    Mat2 rep = mat_unipotent_cell_rep(*R, 1, Scalar::one(F));
    for (std::uint32_t t = 0; t < R->card(); ++t) {
      std::uint16_t u = static_cast<std::uint16_t>(t);
      if (!R->is_unit(u)) continue;
      Mat2 h = mat_diag(*R, u, R->inv(u));
      Mat2 conj = mat_conj(*R, h, rep);
      CHECK(conj == mat_upper(*R, R->mul(R->mul(u, u), R->pi())));
    }
  }
}

TEST_CASE("coset representatives: counts and partition audit") {
  CHECK(coset_reps_Bell(q2(), 1).size() == 3);
  CHECK(coset_reps_Bell(q2(), 3).size() == 12);
  CHECK(coset_reps_Bell(f4t(), 2).size() == 20);
  CHECK(coset_reps_Bell(f2t(), 4).size() == 24);
  for (const auto& F : {q2(), q2x2(), f2t()})
    for (int ell = 1; ell <= 3; ++ell) {
      INFO(F->config_string(), " ell=", ell);
      CHECK(coset_reps_audit(F, ell));
    }
  CHECK(coset_reps_audit(q2(), 4));
  CHECK(coset_reps_audit(f4t(), 2));
}

TEST_CASE("coset and double-coset counts satisfy the index identity") {
  for (const auto& F : {q2(), q2x2(), f2t(), f4t()}) {
    int top = F->q() == 2 ? 3 : 2;  // q=4 at level 3 would blow the element budget
    for (int ell = 1; ell <= top; ++ell) {
      Ring R = ResidueRing::make(F, ell + 1);
      auto sl = enumerate_sl(*R);
      std::uint64_t bsize = 0;
      for (const Mat2& g : sl)
        if (in_Bprime(*R, g, ell)) ++bsize;
      std::uint64_t q = F->q();
      CHECK(bsize * (q + 1) * ipow(q, ell - 1) == sl.size());
    }
  }
}

TEST_CASE("congruence subgroup predicates close under products") {
  Field F = q2();
  int ell = 3;
  Ring R = ResidueRing::make(F, ell + 1);
  auto sl = enumerate_sl(*R);
  std::vector<Mat2> gamma;
  for (const Mat2& g : sl)
    if (in_GammaPrime(*R, g, ell)) gamma.push_back(g);
  REQUIRE(!gamma.empty());
  for (const Mat2& x : gamma)
    for (const Mat2& y : gamma) {
      CHECK(in_GammaPrime(*R, mat_mul(*R, x, y), ell));
      CHECK(in_GammaPrime(*R, mat_inv(*R, x), ell));
    }
  // Gamma' contains the factorization generators and K_{m,m'}
  int m = (ell + 1) / 2, mp = ell / 2 + 1;
  for (const Mat2& g : sl) {
    if (in_K_mm(*R, g, m, mp)) CHECK(in_GammaPrime(*R, g, ell));
    if (g.m[1] == 0 && g.m[2] != 0 && g.m[0] == R->one() && g.m[3] == R->one())
      CHECK(in_GammaPrime(*R, g, ell));
  }
  // and Z0 U0 K_{m,m'} products land inside Gamma (general linear version)
  std::mt19937_64 rng(17);
  auto gl = enumerate_gl(*R);
  std::vector<Mat2> kmm;
  for (const Mat2& g : gl)
    if (in_K_mm(*R, g, m, mp)) kmm.push_back(g);
  for (int t = 0; t < 2000; ++t) {
    std::uint16_t z = static_cast<std::uint16_t>(rng() % R->card());
    if (!R->is_unit(z)) continue;
    Mat2 zu = mat_diag(*R, z, z);
    Mat2 lo = mat_lower(*R, static_cast<std::uint16_t>(rng() % R->card()));
    const Mat2& k = kmm[rng() % kmm.size()];
    CHECK(in_Gamma(*R, mat_mul(*R, mat_mul(*R, zu, lo), k), ell));
  }
}

TEST_CASE("normalizer of the depth character: pinned closed forms") {
  NormalizerReport r = normalizer_check(q2(), Scalar::one(q2()), 2);
  CHECK(r.match_K);
  CHECK(r.match_Kprime);
  CHECK(r.closed_form_K == "Z0*U0*K_1");
  CHECK(r.closed_form_Kprime == "U0*K'_1");
  CHECK_FALSE(r.center_branch);
  CHECK(r.size_K == 2);
  CHECK(r.size_Kprime == 2);

  NormalizerReport r5 = normalizer_check(q2(), Scalar::one(q2()), 5);
  CHECK(r5.match_K);
  CHECK(r5.match_Kprime);
  CHECK(r5.closed_form_Kprime == "Z'*U0*K'_2");
  CHECK(r5.center_branch);

  NormalizerReport rt = normalizer_check(f2t(), Scalar::one(f2t()), 3);
  CHECK(rt.match_K);
  CHECK(rt.match_Kprime);
  CHECK(rt.closed_form_Kprime == "U0*K'_1");
  CHECK_FALSE(rt.center_branch);
}

TEST_CASE("normalizer brute force agrees with the closed form across levels") {
  for (int ell = 2; ell <= 4; ++ell) {
    NormalizerReport r = normalizer_check(q2(), Scalar::one(q2()), ell);
    INFO("q2 ell=", ell, " witness=", r.witness);
    CHECK(r.match_K);
    CHECK(r.match_Kprime);
  }
  for (int ell = 2; ell <= 3; ++ell) {
    NormalizerReport r = normalizer_check(f2t(), Scalar::one(f2t()), ell);
    INFO("f2t ell=", ell, " witness=", r.witness);
    CHECK(r.match_K);
    CHECK(r.match_Kprime);
  }
  NormalizerReport re = normalizer_check(q2x2(), Scalar::one(q2x2()), 3);
  INFO("q2x2 ell=3 witness=", re.witness);
  CHECK(re.match_K);
  CHECK(re.match_Kprime);
  CHECK_FALSE(re.center_branch);  // 4e = 8 here, so level 3 stays in the shallow branch

  // the normalizer does not depend on the unit twisting the character
  NormalizerReport ru = normalizer_check(q2(), Scalar::from_int(q2(), 3), 4);
  CHECK(ru.match_K);
  CHECK(ru.match_Kprime);
}
