#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyadic/field.hpp"
#include "dyadic/groups.hpp"
#include "dyadic/intertwine.hpp"
#include "dyadic/ring.hpp"

namespace dyadic {

// Convolution algebra of the level-ell induced space when the residue field
// is F_2: the inducing representation is then the sign character theta_ell,
// the algebra has one basis operator per supported double coset, and each
// operator acts on the right-coset basis Sigma_0 u Sigma_w as a sum of
// parameter translations -- a single one (a monomial matrix) whenever unit
// squares are trivial at depth min(k, ell-k), as over the 2-adic numbers.

// theta_ell(b) = (-1)^{digit_ell(b12)} on matrices with det 1 and b12 of
// valuation >= ell; identical to the branch character at q = 2.
long long theta_ell(const ResidueRing& R, const Mat2& b, int ell);

// The basis function F_gamma of the algebra as an explicit table on its
// double coset, key(matrix) -> +-1, built by propagating the two-sided
// transformation law from F_gamma(gamma) = 1.  Throws VerifyError when the
// coset cannot carry a bi-equivariant function, which happens exactly when
// gamma falls outside the supported set -- this is the executable form of the
// support criterion.
std::unordered_map<std::uint64_t, int> hecke_support_table(
    const Field& F, int ell, const BruhatCell& gamma,
    std::uint64_t budget = kDefaultBudget);

// Each operator preserves the two blocks of the basis and acts there as a sum
// of parameter translations beta -> beta + delta, one translation per element
// of the coset's strip {delta : u_delta in the double coset} mod P^ell; every
// entry has magnitude vol and a sign that depends on the parameter lifts.
// Over the 2-adic numbers the strip is a single residue and the action is
// monomial; in characteristic 2 (and in ramified extensions at depth
// min(k, ell-k) >= 3) unit squares are not all congruent to 1 at the
// relevant depth, so the strip -- and hence the set of nonzero rows per
// column -- genuinely has several elements.
struct HeckeOperator {
  int ell = 0;
  BruhatCell gamma;
  CosetReps basis;  // Sigma_0 first, then Sigma_w
  // convolution action under counting measure: action[row][col] is the
  // coefficient of h_{basis[row]} in F_gamma * h_{basis[col]}
  std::vector<std::vector<long long>> action;
  std::vector<std::uint16_t> shifts;  // the strip, as elements of R/P^ell
  bool monomial = false;              // exactly one shift
  std::vector<std::size_t> target;    // monomial only: col -> nonzero row
  std::vector<long long> scale;       // monomial only: that entry's value
  std::uint64_t vol = 0;              // |B'_ell| in SL(2, R/P^{ell+1})
  std::size_t size() const { return action.size(); }
};

// Literal convolution of F_gamma against each basis function; requires a
// residue field of two elements and gamma in the supported set.
HeckeOperator hecke_action(const Field& F, int ell, const BruhatCell& gamma,
                           std::uint64_t budget = kDefaultBudget);

// Multiplicative order of the normalized permutation part; requires a
// monomial operator.
long long operator_order(const HeckeOperator& op);
long long operator_order(const Field& F, int ell, const BruhatCell& gamma,
                         std::uint64_t budget = kDefaultBudget);

struct CommutativityReport {
  int ell = 0;
  std::size_t dim = 0;         // number of basis operators
  long long max_offdiag = 0;   // largest |off-diagonal| over all commutators
  bool commutators_diagonal = false;
  bool pass = false;           // diagonal commutators and dim == Sigma(ell)
  // Additive group generated by every operator's translation strip inside
  // R/P^ell; for monomial operators this is the group their normalized
  // permutation parts generate.
  std::uint64_t perm_group_order = 0;
  bool perm_group_cyclic = false;
  std::vector<std::string> op_labels;
  // Exponent of each operator's strip (lcm of additive orders); equals the
  // multiplicative order of the permutation part when the operator is
  // monomial.
  std::vector<long long> op_orders;
};

// Certifies that every commutator of basis operators is diagonal on the
// coset basis (exact integer arithmetic), the root of multiplicity-freeness.
CommutativityReport commutativity_certificate(const Field& F, int ell,
                                              std::uint64_t budget = kDefaultBudget);

}  // namespace dyadic
