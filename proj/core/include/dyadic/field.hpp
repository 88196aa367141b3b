#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dyadic/cyclo.hpp"
#include "dyadic/gf.hpp"

namespace dyadic {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// A residual-characteristic-2 local field, truncated to N uniformizer digits:
// either a finite totally-tamely-described extension of Q_2 cut out by an
// Eisenstein polynomial over the unramified ring of residue degree f, or the
// Laurent-series field F_q((t)). Immutable after construction; all scalar
// arithmetic is routed through the backend methods below.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  using Digits = std::vector<std::uint16_t>;  // residue digits, GF masks

  // kind=q2 is shorthand for the Eisenstein polynomial x - 2 with f = 1.
  static Field make_q2(int N);
  static Field make_laurent(int f, int N);
  static Field make_eisenstein(int f, std::vector<long long> low_coeffs, int N);
  // Plain-text config: either a preset (q2, q2x2, q4, q4x2, f2t, f4t, f8t) or
  // key=value pairs with keys kind, f, e, eisenstein, N; comma/space separated.
  static Field parse(const std::string& config);

  int characteristic() const { return char_; }
  bool is_char2() const { return char_ == 2; }
  int f() const { return f_; }
  int q() const { return q_; }
  int N() const { return N_; }
  const GF& gf() const { return gf_; }
  const std::string& kind() const { return kind_; }

  // Ramification index; infinite (and unrepresentable) in characteristic 2.
  int e() const;
  // Comparisons against e with the characteristic-2 convention that every
  // "m < e" is true and every "m >= e" is false.
  bool lt_e(long long m) const { return char_ == 2 || m < e_; }
  bool ge_e(long long m) const { return !lt_e(m); }
  bool le_4e(long long l) const { return char_ == 2 || l <= 4LL * e_; }
  bool ge_4e1(long long l) const { return !le_4e(l); }

  // Residue of the unit iota with 2 = iota * pi^e (zero in characteristic 2).
  std::uint16_t iota_residue() const { return iota_res_; }
  // Lexicographically least residue outside the image of x -> x^2 + x.
  std::uint16_t aleph() const { return aleph_; }
  // Valuation of E'(pi) (the different exponent); characteristic 0 only.
  int diff_val() const;

  std::string describe() const;
  std::string config_string() const;  // round-trips through parse()
  std::string residue_str(std::uint16_t mask) const;

  // --- digit-window backend -------------------------------------------------
  // A window d[0..L) stands for sum_i d[i] pi^i known modulo P^L, P = (pi).
  Digits dig_add(const Digits& a, const Digits& b) const;
  Digits dig_sub(const Digits& a, const Digits& b) const;
  Digits dig_neg(const Digits& a) const;
  Digits dig_mul(const Digits& a, const Digits& b) const;
  // Inverse of a unit window (a[0] != 0), to L digits.
  Digits dig_inv(const Digits& a, int L) const;
  // Digits of the integer n, L of them starting at exponent 0; in
  // characteristic 0 this is the 2-adic expansion re-expanded in pi.
  Digits dig_from_int(long long n, int L) const;

  // Additive character with conductor P on the element pi^v * window,
  // window known modulo P^{prec_len}: exp(2 pi i {Tr(pi^{-d-1} x)}_2) in
  // characteristic 0 and (-1)^{Tr(coefficient of t^0)} in characteristic 2.
  RootOfUnity psi_value(const Digits& window, int v, int prec_len) const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;
  ~FieldSpec();

 private:
  FieldSpec(int characteristic, int f, int N, std::string kind);
  void init_char0(const std::vector<long long>& low);

  int char_;
  int f_;
  int q_;
  int N_;
  int e_ = 0;  // valid in characteristic 0 only
  std::string kind_;
  GF gf_;
  std::uint16_t iota_res_ = 0;
  std::uint16_t aleph_ = 0;
  int diff_val_ = -1;
  std::vector<long long> eis_low_;  // integer Eisenstein coefficients

  struct Backend;  // Witt-ring machinery for characteristic 0
  std::unique_ptr<Backend> b_;
};

}  // namespace dyadic
