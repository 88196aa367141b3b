#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <map>
#include <set>
#include <vector>

#include "dyadic/gl2chars.hpp"
#include "dyadic/ring.hpp"
#include "dyadic/squares.hpp"

using namespace dyadic;

namespace {

std::vector<Mat2> bprime_elements(const ResidueRing& R, int ell) {
  std::vector<Mat2> out;
  for (const Mat2& g : enumerate_sl(R))
    if (in_Bprime(R, g, ell)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("character table shape and degrees") {
  for (int f : {1, 2, 3}) {
    Gl2Table T(f);
    const int q = T.q();
    CHECK(T.root_order() == q * q - 1);
    CHECK(static_cast<int>(T.classes().size()) == q * q - 1);
    CHECK(T.reps().size() == T.classes().size());
    CHECK(T.group_order() ==
          std::uint64_t(q * q - 1) * (std::uint64_t(q) * q - q));

    // first column (identity class) recovers the degrees q+1, 1, q, q-1
    const Gl2Class id{Gl2Class::Shape::central, 0, 0};
    std::set<long long> degs;
    std::uint64_t degsq = 0, total = 0;
    for (const auto& r : T.reps()) {
      const long long d = T.value(r, id).as_integer();
      CHECK(d == T.degree(r));
      degs.insert(d);
      degsq += std::uint64_t(d) * d;
    }
    std::set<long long> want{1, q, q - 1};
    if (q > 2) want.insert(q + 1);  // no principal pairs over F_2
    CHECK(degs == want);
    CHECK(degsq == T.group_order());

    for (const auto& c : T.classes()) total += T.class_size(c);
    CHECK(total == T.group_order());

    std::set<std::string> labels;
    for (const auto& c : T.classes()) labels.insert(T.class_label(c));
    for (const auto& r : T.reps()) labels.insert(T.rep_label(r));
    CHECK(labels.size() == 2 * T.classes().size());
  }
}

TEST_CASE("q=2 table is the symmetric-group table") {
  Gl2Table T(1);
  REQUIRE(T.classes().size() == 3);
  const Gl2Class z{Gl2Class::Shape::central, 0, 0};
  const Gl2Class e{Gl2Class::Shape::elliptic, 1, 0};
  const Gl2Class u{Gl2Class::Shape::unipotent, 0, 0};
  const Gl2Rep triv{Gl2Rep::Family::det_twist, 0, 0};
  const Gl2Rep st{Gl2Rep::Family::steinberg, 0, 0};
  const Gl2Rep cusp{Gl2Rep::Family::cuspidal, 0, 1};

  CHECK(T.value(triv, z).as_integer() == 1);
  CHECK(T.value(triv, e).as_integer() == 1);
  CHECK(T.value(triv, u).as_integer() == 1);
  CHECK(T.value(st, z).as_integer() == 2);
  CHECK(T.value(st, e).as_integer() == -1);
  CHECK(T.value(st, u).as_integer() == 0);
  CHECK(T.value(cusp, z).as_integer() == 1);   // q - 1
  CHECK(T.value(cusp, e).as_integer() == 1);   // -(zeta_3 + zeta_3^2)
  CHECK(T.value(cusp, u).as_integer() == -1);
}

TEST_CASE("cuspidal counts and regularity") {
  CHECK(count_cuspidals(2) == 1);
  CHECK(count_cuspidals(4) == 6);
  CHECK(count_cuspidals(8) == 28);
  CHECK_THROWS_AS(count_cuspidals(6), InvalidInput);

  for (int f : {1, 2, 3}) {
    Gl2Table T(f);
    const int q = T.q();
    CHECK(T.cuspidal_params().size() == count_cuspidals(q));
    std::uint64_t ncusp = 0;
    for (const auto& r : T.reps())
      if (r.family == Gl2Rep::Family::cuspidal) {
        CHECK(T.degree(r) == q - 1);
        CHECK(T.regular(r.t));
        ++ncusp;
      }
    CHECK(ncusp == count_cuspidals(q));
  }

  // a non-regular parameter is rejected on the cuspidal row
  Gl2Table T2(1);
  const Gl2Class z{Gl2Class::Shape::central, 0, 0};
  CHECK_THROWS_AS(T2.value({Gl2Rep::Family::cuspidal, 0, 3}, z), InvalidInput);
  Gl2Table T4(2);
  CHECK_THROWS_AS(T4.value({Gl2Rep::Family::cuspidal, 0, 5}, z), InvalidInput);
}

TEST_CASE("row and column orthogonality, exact") {
  for (int f : {1, 2}) {
    Gl2Table T(f);
    const int n = T.root_order();
    const auto& cls = T.classes();
    const auto& reps = T.reps();
    const long long G = static_cast<long long>(T.group_order());

    // rows: sum_c |c| chi(c) conj(chi'(c)) = delta |G|
    for (std::size_t r1 = 0; r1 < reps.size(); ++r1)
      for (std::size_t r2 = r1; r2 < reps.size(); ++r2) {
        Cyc acc(n);
        for (const auto& c : cls) {
          Cyc term = T.value(reps[r1], c) * T.value(reps[r2], c).conj();
          Cyc wterm(n);
          wterm.add_root(static_cast<long long>(T.class_size(c)), 0);
          acc += term * wterm;
        }
        CHECK(acc.as_integer() == (r1 == r2 ? G : 0));
      }

    // columns: sum_chi chi(c) conj(chi(c')) = delta |G| / |c|
    for (std::size_t c1 = 0; c1 < cls.size(); ++c1)
      for (std::size_t c2 = c1; c2 < cls.size(); ++c2) {
        Cyc acc(n);
        for (const auto& r : reps)
          acc += T.value(r, cls[c1]) * T.value(r, cls[c2]).conj();
        const long long want =
            c1 == c2 ? G / static_cast<long long>(T.class_size(cls[c1])) : 0;
        CHECK(acc.as_integer() == want);
      }
  }
}

TEST_CASE("float table values agree with the exact backend") {
  for (int f : {1, 2}) {
    Gl2Table T(f);
    // expand rows by class size so plain inner products carry the weights
    std::vector<std::vector<std::complex<double>>> rows;
    for (const auto& r : T.reps()) {
      std::vector<std::complex<double>> row;
      for (const auto& c : T.classes()) {
        const std::complex<double> v = T.value_approx(r, c);
        CHECK(std::abs(v - T.value(r, c).approx()) < 1e-9);
        for (std::uint64_t k = 0; k < T.class_size(c); ++k) row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(inner_product_float(rows[i], rows[i]) == 1);
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
          dot += std::abs(rows[i][k] * std::conj(rows[j][k]));
        // orthogonal rows: the compensated mean must certify the integer 0
        std::vector<std::complex<double>> a = rows[i], b = rows[j];
        CHECK(inner_product_float(a, b) == 0);
        (void)dot;
      }
    }
  }
}

TEST_CASE("unit character via residue discrete log") {
  Gl2Table T(2);
  CHECK_THROWS_AS(T.unit_character(1, 0), InvalidInput);
  CHECK(T.unit_character(0, 3).is_one());
  const GF& k = T.residue();
  // multiplicativity on F_4^x
  for (std::uint16_t a = 1; a < 4; ++a)
    for (std::uint16_t b = 1; b < 4; ++b)
      CHECK(T.unit_character(1, k.mul(a, b)) ==
            T.unit_character(1, a) * T.unit_character(1, b));
  CHECK(T.unit_character(1, k.gen()).order() == 3);
}

TEST_CASE("chi_ell pinned examples") {
  Field F = FieldSpec::parse("q2");
  const int ell = 2;
  Ring R = ResidueRing::make(F, ell + 1);
  const int q = F->q();

  Mat2 I = mat_identity(*R);
  CHECK(chi_ell(*R, I, ell) == q - 1);

  // upper unipotent with entry exactly pi^ell: the stripped entry is a unit
  std::uint16_t pe = R->one();
  for (int i = 0; i < ell; ++i) pe = R->mul(pe, R->pi());
  Mat2 up = mat_upper(*R, pe);
  CHECK(chi_ell(*R, up, ell) == -1);
  // entry pi^{ell+1} = 0 in this ring: back on the q-1 branch
  Mat2 up2 = mat_upper(*R, R->mul(pe, R->pi()));
  CHECK(chi_ell(*R, up2, ell) == q - 1);

  // not in B'_ell
  CHECK_THROWS_AS(chi_ell(*R, mat_w(*R), ell), InvalidInput);
  // ring modulus too small to read the split between ell and ell+1
  Ring Rs = ResidueRing::make(F, ell);
  CHECK_THROWS_AS(chi_ell(*Rs, mat_identity(*Rs), ell), InvalidInput);

  // diagonal with unit not in 1+P needs q > 2
  Field F4 = FieldSpec::parse("f4t");
  Ring R4 = ResidueRing::make(F4, 2);
  std::uint16_t u = 0;
  for (std::uint16_t x = 0; x < R4->card(); ++x)
    if (R4->val(x) == 0 && R4->val(R4->sub(x, R4->one())) == 0) { u = x; break; }
  REQUIRE(u != 0);
  Mat2 du = mat_diag(*R4, u, R4->inv(u));
  CHECK(chi_ell(*R4, du, 1) == 0);
}

TEST_CASE("chi_ell is invariant under its congruence kernel") {
  Field F = FieldSpec::parse("q2");
  for (int ell = 1; ell <= 4; ++ell) {
    Ring R = ResidueRing::make(F, ell + 1);
    std::vector<Mat2> bp = bprime_elements(*R, ell);
    std::vector<Mat2> ker;
    for (const Mat2& g : bp)
      if (in_chi_kernel(*R, g, ell)) ker.push_back(g);
    REQUIRE(!ker.empty());
    CHECK(bp.size() % ker.size() == 0);
    for (const Mat2& a : bp) {
      const long long base = chi_ell(*R, a, ell);
      for (const Mat2& g : ker) {
        CHECK(chi_ell(*R, mat_mul(*R, a, g), ell) == base);
        CHECK(chi_ell(*R, mat_mul(*R, g, a), ell) == base);
      }
    }
  }
}

TEST_CASE("chi_ell has norm one on B'_ell") {
  auto norm_one = [](const Field& F, int ell) {
    Ring R = ResidueRing::make(F, ell + 1);
    std::vector<Mat2> bp = bprime_elements(*R, ell);
    std::vector<Cyc> vals;
    for (const Mat2& a : bp) {
      Cyc v(1);
      v.add_root(chi_ell(*R, a, ell), 0);
      vals.push_back(v);
    }
    return inner_product_exact(vals, vals);
  };
  Field F2 = FieldSpec::parse("q2");
  for (int ell = 1; ell <= 4; ++ell) CHECK(norm_one(F2, ell) == 1);
  CHECK(norm_one(FieldSpec::parse("q2x2"), 2) == 1);
  CHECK(norm_one(FieldSpec::parse("f2t"), 3) == 1);
  CHECK(norm_one(FieldSpec::parse("f4t"), 1) == 1);
}

TEST_CASE("chi_ell and its Weyl conjugate are disjoint on the overlap") {
  auto overlap_ip = [](const Field& F, int ell) {
    Ring R = ResidueRing::make(F, ell + 1);
    Mat2 w = mat_w(*R), wi = mat_inv(*R, w);
    long long sum = 0, count = 0;
    for (const Mat2& g : enumerate_sl(*R)) {
      if (!in_Bprime(*R, g, ell) || R->val(g.m[2]) < ell) continue;
      Mat2 conj = mat_mul(*R, mat_mul(*R, wi, g), w);
      sum += chi_ell(*R, g, ell) * chi_ell(*R, conj, ell);
      ++count;
    }
    REQUIRE(count > 0);
    return std::pair<long long, long long>(sum, count);
  };
  Field F2 = FieldSpec::parse("q2");
  for (int ell = 1; ell <= 3; ++ell) {
    auto [sum, count] = overlap_ip(F2, ell);
    CHECK(sum == 0);
    (void)count;
  }
  auto [sum4, count4] = overlap_ip(FieldSpec::parse("f4t"), 1);
  CHECK(sum4 == 0);
  (void)count4;
}

TEST_CASE("inner product helpers certify integrality") {
  // constant function 1 on any set has norm 1
  std::vector<Cyc> ones;
  for (int i = 0; i < 12; ++i) {
    Cyc c(4);
    c.add_root(1, 0);
    ones.push_back(c);
  }
  CHECK(inner_product_exact(ones, ones) == 1);

  // a full root-of-unity orbit sums to zero against the constant
  std::vector<Cyc> orbit, triv;
  for (int j = 0; j < 8; ++j) {
    orbit.push_back(Cyc::root(8, j));
    Cyc c(8);
    c.add_root(1, 0);
    triv.push_back(c);
  }
  CHECK(inner_product_exact(orbit, triv) == 0);
  CHECK(inner_product_exact(orbit, orbit) == 1);

  // non-integral mean is rejected
  std::vector<Cyc> half;
  Cyc c1(1);
  c1.add_root(1, 0);
  half.push_back(c1);
  Cyc c0(1);
  half.push_back(c0);
  CHECK_THROWS_AS(inner_product_exact(half, half), VerifyError);

  std::vector<std::complex<double>> fh = {{1.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(inner_product_float(fh, fh), VerifyError);
  std::vector<std::complex<double>> f1 = {{1.0, 0.0}, {1.0, 0.0}};
  CHECK(inner_product_float(f1, f1) == 1);
  CHECK_THROWS_AS(inner_product_exact({}, {}), InvalidInput);
}

TEST_CASE("unit sums of the additive character") {
  for (const char* name : {"q2", "q2x2", "q4", "q4x2", "f2t", "f4t", "f8t"}) {
    Field F = FieldSpec::parse(name);
    const int q = F->q();
    for (const Scalar& u : ring_windows(F, 2)) {
      const long long want = (u.is_zero() || u.val() >= 1) ? q - 1 : -1;
      CHECK(psi_unit_sum(F, u).as_integer() == want);
    }
    // deeper units and a deeper P-element behave the same way
    for (const Scalar& w : unit_windows(F, 3)) {
      CHECK(psi_unit_sum(F, w).as_integer() == -1);
      CHECK(psi_unit_sum(F, w.shifted(2)).as_integer() == q - 1);
    }
    CHECK_THROWS_AS(psi_unit_sum(F, Scalar::uniformizer_pow(F, -1)), InvalidInput);
  }
}
