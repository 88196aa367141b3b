#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "dyadic/common.hpp"

namespace dyadic {

// A primitive n-th root of unity raised to some power: e^{2*pi*i*num/den},
// stored with 0 <= num < den and gcd(num, den) = 1. This is the exact value
// type returned by additive/multiplicative character evaluations.
struct RootOfUnity {
  long long num = 0;
  long long den = 1;

  static RootOfUnity make(long long num, long long den);
  static RootOfUnity one() { return {0, 1}; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity pow(long long k) const;
  RootOfUnity conj() const;
  bool operator==(const RootOfUnity& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }

  bool is_one() const { return num == 0; }
  bool is_real() const { return num == 0 || 2 * num == den; }
  int sign_if_real() const;  // +1 or -1; throws if not real
  long long order() const { return den; }

  std::complex<double> approx() const;
  std::string str() const;
};

// Exact element of Z[zeta_n] (zeta_n = e^{2*pi*i/n}) in the power basis
// 1, zeta, ..., zeta^{d-1} where d = deg(Phi_n), with int64 coefficients.
// Supports the accumulate/compare/conjugate operations character sums need.
class Cyc {
 public:
  explicit Cyc(int n);
  static Cyc root(int n, long long j);  // zeta_n^j

  int order() const { return n_; }

  void add_root(long long coeff, long long j);      // += coeff * zeta_n^j
  void add(long long coeff, const RootOfUnity& r);  // += coeff * r (r.den | n)
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc operator*(const Cyc& o) const;
  Cyc conj() const;

  bool is_zero() const;
  bool is_integer() const;
  long long as_integer() const;  // throws VerifyError when not a rational integer
  bool operator==(const Cyc& o) const { return n_ == o.n_ && c_ == o.c_; }

  std::complex<double> approx() const;

  // deg Phi_n, exposed for sizing checks
  static int degree(int n);

 private:
  int n_;
  std::vector<long long> c_;
};

// Euler phi and the (exact, integer) coefficients of the n-th cyclotomic
// polynomial; exposed for tests.
std::vector<long long> cyclotomic_poly(int n);

}  // namespace dyadic
