#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/common.hpp"

namespace dyadic {

// Carryless (GF(2)[x]) polynomial helpers on bitmask-encoded polynomials.
std::uint32_t polymul2(std::uint32_t a, std::uint32_t b);
std::uint32_t polymod2(std::uint32_t a, std::uint32_t m);
int polydeg2(std::uint32_t a);

// The finite field GF(2^f) in the polynomial basis 1, y, ..., y^{f-1}.
// The modulus is the lexicographically least irreducible monic polynomial of
// degree f over GF(2) (least when the non-leading coefficient bits are read as
// an integer). Elements are bitmasks: bit i is the coefficient of y^i.
class GF {
 public:
  explicit GF(int f);

  int f() const { return f_; }
  int q() const { return q_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint16_t gen() const { return gen_; }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, long long k) const;
  std::uint16_t exp(long long k) const;  // gen^k (k may be negative)
  int dlog(std::uint16_t a) const;       // a = gen^dlog(a), 0 <= dlog < q-1
  int trace(std::uint16_t a) const { return trace_[a]; }  // absolute trace, 0/1

  // True iff a lies in the subfield GF(2^s) (requires s | f).
  bool in_subfield(std::uint16_t a, int s) const;

  // Image of the additive map x -> c*x + x^2, sorted and deduplicated.
  // For c != 0 the kernel is {0, c}, so the image has q/2 elements.
  std::vector<std::uint16_t> artin_schreier_image(std::uint16_t c) const;

  static bool irreducible(std::uint32_t poly);
  static std::uint32_t least_irreducible(int deg);

 private:
  int f_;
  int q_;
  std::uint32_t mod_;
  std::uint16_t gen_;
  std::vector<std::uint16_t> exp_;  // size 2(q-1), wraps once
  std::vector<int> log_;            // size q, log_[0] = -1
  std::vector<std::uint8_t> trace_;
};

}  // namespace dyadic
