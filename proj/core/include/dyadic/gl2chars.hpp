#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dyadic/cyclo.hpp"
#include "dyadic/gf.hpp"
#include "dyadic/groups.hpp"

namespace dyadic {

// Conjugacy classes of GL(2, F_q), q = 2^f, in the four standard shapes.
// Parameters are discrete logs: F_{q^2}^x = <g>, and F_q^x = <h> with
// h = g^{q+1}. central/unipotent carry a = h^i; split carries {h^i, h^j}
// with i < j; elliptic carries x = g^t with t regular and t = min(t, tq).
struct Gl2Class {
  enum class Shape { central, split, elliptic, unipotent };
  Shape shape = Shape::central;
  int i = 0, j = 0;
};

// Irreducible representations: principal series R({alpha_s, alpha_t}) with
// s < t, determinant twists gamma_s, Steinberg twists, and the cuspidal
// family indexed by regular characters omega_t of F_{q^2}^x up to t ~ tq.
struct Gl2Rep {
  enum class Family { principal, det_twist, steinberg, cuspidal };
  Family family = Family::principal;
  int s = 0, t = 0;
};

class Gl2Table {
 public:
  explicit Gl2Table(int f);

  int f() const { return f_; }
  int q() const { return q_; }
  int root_order() const { return n_; }  // q^2 - 1
  std::uint64_t group_order() const;     // (q^2 - 1)(q^2 - q)

  const std::vector<Gl2Class>& classes() const { return classes_; }
  const std::vector<Gl2Rep>& reps() const { return reps_; }
  const std::vector<int>& cuspidal_params() const { return cusp_; }

  std::uint64_t class_size(const Gl2Class& c) const;
  long long degree(const Gl2Rep& r) const;
  bool regular(long long t) const;  // omega_t != omega_t^q

  Cyc value(const Gl2Rep& r, const Gl2Class& c) const;
  std::complex<double> value_approx(const Gl2Rep& r, const Gl2Class& c) const;

  // omega_s evaluated on a nonzero residue mask of F_q (via its discrete log),
  // returned at order q - 1
  RootOfUnity unit_character(long long s, std::uint16_t mask) const;
  const GF& residue() const { return gf_; }

  std::string class_label(const Gl2Class& c) const;
  std::string rep_label(const Gl2Rep& r) const;

 private:
  int f_, q_, n_;
  GF gf_;
  std::vector<Gl2Class> classes_;
  std::vector<Gl2Rep> reps_;
  std::vector<int> cusp_;
};

// q(q-1)/2, cross-checked against the enumeration of regular orbits {t, tq}
std::uint64_t count_cuspidals(int q);

// Trace character of the depth-ell conjugate cuspidal on B'_ell: q-1 when
// a11 is in 1+P and the pi^ell-stripped a12 lies in P, -1 when that strip is
// a unit, 0 otherwise. The matrix must lie in B'_ell at modulus >= ell+1.
long long chi_ell(const ResidueRing& R, const Mat2& a, int ell);
// The congruence kernel chi_ell factors through.
bool in_chi_kernel(const ResidueRing& R, const Mat2& g, int ell);

// sum of psi(x u) over the one-digit lifts x of F_q^x: q-1 if u in P, else -1
Cyc psi_unit_sum(const Field& F, const Scalar& u);

// (1/N) sum a_i conj(b_i) with N = len, certified integral and nonnegative
long long inner_product_exact(const std::vector<Cyc>& a, const std::vector<Cyc>& b);
long long inner_product_float(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b,
                              double tol = 1e-6);

}  // namespace dyadic
