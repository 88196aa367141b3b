#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyadic/cyclo.hpp"
#include "dyadic/field.hpp"

namespace dyadic {

// A field element known modulo P^{prec_end}: pi^v * (d0 + d1 pi + ...), with
// d0 != 0 and exactly prec_end - v digits stored. The zero window (element
// congruent to 0 at the available precision) has an empty digit vector.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& F);  // exact zero
  static Scalar zero(const Field& F, int prec_end);
  static Scalar from_int(const Field& F, long long n);
  static Scalar uniformizer_pow(const Field& F, int k);
  static Scalar one(const Field& F) { return from_int(F, 1); }
  // canonicalizes: strips leading zero digits, clamps the window to prec_end
  static Scalar make(const Field& F, int v, FieldSpec::Digits digits, int prec_end);
  // unit with the given digits, full default precision
  static Scalar unit(const Field& F, FieldSpec::Digits digits);

  const Field& field() const { return F_; }
  bool valid() const { return static_cast<bool>(F_); }
  bool is_zero() const { return d_.empty(); }
  bool is_unit() const { return !d_.empty() && v_ == 0; }
  int val() const;        // throws on a zero window
  int prec_end() const { return pe_; }
  int ndigits() const { return static_cast<int>(d_.size()); }
  const FieldSpec::Digits& digits() const { return d_; }
  // digit at absolute exponent j: 0 below the window, throws at/after prec_end
  std::uint16_t digit(int j) const;
  std::uint16_t residue() const { return d_.empty() ? 0 : (v_ == 0 ? d_[0] : 0); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar square() const { return *this * *this; }
  Scalar shifted(int k) const;     // multiply by pi^k
  Scalar truncated(int prec) const;
  bool eq_mod(const Scalar& o, int k) const;
  bool is_zero_mod(int k) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

  static constexpr int kExactPrec = 1 << 20;

 private:
  Field F_;
  int v_ = 0;
  int pe_ = kExactPrec;
  FieldSpec::Digits d_;
};

// The additive character with conductor P, optionally twisted by a unit c:
// psi_c(x) = psi(c x). Twisting by a unit preserves the conductor.
class Psi {
 public:
  explicit Psi(Field F) : F_(std::move(F)) {}
  Psi(Field F, Scalar twist);
  RootOfUnity operator()(const Scalar& x) const;
  const Field& field() const { return F_; }
  bool twisted() const { return twist_.has_value(); }
  const Scalar& twist() const;

 private:
  Field F_;
  std::optional<Scalar> twist_;
};

}  // namespace dyadic
