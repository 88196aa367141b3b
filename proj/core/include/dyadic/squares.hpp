#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "dyadic/scalar.hpp"

namespace dyadic {

// Level of the stable quotient R^x / (R^x)^2 (finite only in characteristic 0).
inline constexpr int kLevelFull = std::numeric_limits<int>::max();

// Representatives of the unit square classes at a level: units modulo
// (R^x)^2 (1 + P^level), ordered lexicographically by digit vector.
struct SquareClassSet {
  Field field;
  int level = 1;
  std::vector<Scalar> reps;
};

SquareClassSet square_class_reps(const Field& F, int level);
std::uint64_t square_class_count(const Field& F, int level);

// The unique rep r with u in r (R^x)^2 (1+P^level); idempotent.
Scalar canonicalize(const Scalar& u, int level);
int square_class_index(const Scalar& u, int level);
bool same_square_class(const Scalar& u, const Scalar& v, int level);
bool is_square_class_trivial(const Scalar& u, int level);

// Representatives attached to a double-coset parameter pair: level min(l-k, k).
SquareClassSet square_class_reps_lk(const Field& F, int ell, int k);

// Checks the containment a in +-1 + P^{max(delta-e, ceil(delta/2))} for a unit
// with a^2 in 1 + P^delta (raises if the precondition fails).
bool squaring_bound_check(const Field& F, const Scalar& a, int delta);

// Image of a |-> digit_delta(a - a^{-1}) over units with a^2 = 1 mod P^delta,
// as a sorted set of residue masks. Closed form and enumeration oracles.
std::vector<std::uint16_t> rho_image(const Field& F, int delta);
std::vector<std::uint16_t> rho_image_oracle(const Field& F, int delta, bool pair_based = false);

// All units of R/P^k as k-digit windows in lexicographic digit order.
std::vector<Scalar> unit_windows(const Field& F, int k);
// All of R/P^k (including non-units) in lexicographic digit order.
std::vector<Scalar> ring_windows(const Field& F, int k);

}  // namespace dyadic
