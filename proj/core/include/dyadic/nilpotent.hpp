#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dyadic/field.hpp"
#include "dyadic/groups.hpp"
#include "dyadic/ring.hpp"
#include "dyadic/squares.hpp"

namespace dyadic {

// Combinatorics of the nilpotent adjoint orbits X_v = v E21 (v a scalar) of
// the rank-one group: orbit labels, which orbits meet a degenerate coset,
// equivalence of congruence-subgroup orbits modulo a depth, the index tower
// T over a base level, and the wavefront label sets at the two vertices.

// An orbit is named by the square class of the unit part of its parameter
// and the parity of the parameter's valuation.  In characteristic 0 the
// stable (full) square-class quotient is finite; in characteristic 2 labels
// exist only truncated at an explicit level.
struct OrbitLabel {
  bool zero = false;  // the distinguished zero orbit
  Scalar unit;        // canonical square-class representative of the unit part
  int parity = 0;     // valuation mod 2
  int level = kLevelFull;
  std::string str() const;
};
bool operator==(const OrbitLabel& a, const OrbitLabel& b);
inline bool operator!=(const OrbitLabel& a, const OrbitLabel& b) { return !(a == b); }

// Label of the orbit of X_v for nonzero v; X_{a^2 v} maps to the same label
// for every unit a.  Characteristic 2 requires a finite level.
OrbitLabel orbit_label(const Field& F, const Scalar& v, int level = kLevelFull);

// The matrix v E21 inside a residue ring (v needs valuation >= 0 there).
Mat2 nilpotent_rep(const ResidueRing& R, const Scalar& v);

// Orbits meeting the degenerate coset X_{u pi^s} + (depth-t lattice at the
// standard vertex): every orbit of a parameter u' pi^s with u' a^2 = u mod
// P^{t-s} for some unit a.  Finitely many full labels in characteristic 0;
// in characteristic 2 the family is infinite and is described by the one
// square class of u truncated at level t-s.
struct MeetList {
  bool infinite = false;
  std::vector<OrbitLabel> labels;
};
MeetList orbits_meeting(const Field& F, const Scalar& u, int s, int t);

// Whether the congruence-subgroup orbits of X_{u pi^s} and X_{u' pi^s} agree
// modulo depth t: a closed form via the square class of u'/u at level t-s.
bool kprime_orbit_equiv(const Field& F, const Scalar& u, const Scalar& u2, int s, int t);

// Independent witness search: enumerate SL(2, R/P^{t-s}) literally and look
// for a conjugator moving u E21 onto u' E21 at that modulus.  When the group
// exceeds the budget no search runs and `found` stays false, but
// `equivalent` still carries the closed-form answer.
struct EquivWitness {
  bool equivalent = false;
  bool found = false;
  Mat2 k{};        // the conjugator, when found
  int modulus = 0;  // k lives in SL(2, R/P^modulus)
};
EquivWitness kprime_orbit_equiv_brute(const Field& F, const Scalar& u, const Scalar& u2,
                                      int s, int t, std::uint64_t budget = kDefaultBudget);

// The index tower over (u, ell): pairs (u', ell') with ell' running from ell
// to depth_bound in steps of two and u' over the square classes at level
// ceil(ell'/2) refining the class of u at level ceil(ell/2).  u may be any
// unit; it is canonicalized internally, so equivalent units give the same
// tower and inequivalent units give disjoint towers.  Ordered by ell', then
// by the representative's digit order.
std::vector<std::pair<Scalar, int>> T_set(const Field& F, const Scalar& u, int ell,
                                          int depth_bound);

// All orbit labels of the given valuation parity: the 2 q^e full labels in
// characteristic 0, or the level-truncated classes in characteristic 2
// (which requires passing a finite level).
std::vector<OrbitLabel> wavefront(const Field& F, int parity, int level = kLevelFull);

}  // namespace dyadic
