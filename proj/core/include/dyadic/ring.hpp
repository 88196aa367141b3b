#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dyadic/scalar.hpp"

namespace dyadic {

class ResidueRing;
using Ring = std::shared_ptr<const ResidueRing>;

// R/P^n with dense operation tables. Elements are indices 0..q^n-1 ranked
// big-endian on digit vectors, so index order equals lexicographic digit
// order. Table construction is limited to cardinality 1024.
class ResidueRing {
 public:
  static constexpr std::uint32_t kMaxCard = 1024;

  ResidueRing(Field F, int n);
  static Ring make(const Field& F, int n);  // cached per (field, n)

  const Field& field() const { return F_; }
  int n() const { return n_; }
  int q() const { return q_; }
  std::uint32_t card() const { return card_; }

  std::uint16_t zero() const { return 0; }
  std::uint16_t one() const { return one_; }
  std::uint16_t pi() const { return pi_; }  // 0 when n == 1

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, b)]; }
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, neg_[b])]; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[idx(a, b)]; }
  std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
  std::uint16_t inv(std::uint16_t a) const;
  bool is_unit(std::uint16_t a) const { return val_[a] == 0; }
  int val(std::uint16_t a) const { return val_[a]; }  // val(0) = n
  std::uint16_t pow(std::uint16_t a, long long k) const;

  std::uint16_t digit_of(std::uint16_t a, int j) const;  // GF mask of digit j
  std::uint16_t from_digits(const std::vector<std::uint16_t>& d) const;
  std::uint16_t from_scalar(const Scalar& s) const;
  std::uint16_t from_int(long long v) const;
  const Scalar& to_scalar(std::uint16_t a) const { return elems_[a]; }

  // reinterpret an element of R/P^m (m <= n) as the zero-padded window here
  std::uint16_t lift_from(const ResidueRing& smaller, std::uint16_t a) const;
  // truncate an element here to R/P^m (m <= n)
  std::uint16_t project_to(const ResidueRing& smaller, std::uint16_t a) const;

 private:
  std::size_t idx(std::uint16_t a, std::uint16_t b) const {
    return static_cast<std::size_t>(a) * card_ + b;
  }
  Field F_;
  int n_;
  int q_;
  std::uint32_t card_;
  std::uint16_t one_ = 0, pi_ = 0;
  std::vector<Scalar> elems_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::uint8_t> val_;
};

}  // namespace dyadic
