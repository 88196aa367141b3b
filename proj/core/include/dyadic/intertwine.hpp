#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/cyclo.hpp"
#include "dyadic/gf.hpp"
#include "dyadic/gl2chars.hpp"
#include "dyadic/groups.hpp"
#include "dyadic/scalar.hpp"

namespace dyadic {

// The extension of eta_{(u,ell)} to Gamma(ell) (matrices with det a unit,
// g12 in P^{m'}, g11 = g22 mod P^m, where m = ceil(ell/2), m' = ell+1-m):
//   g |-> zeta(g11) psi(u pi^{-ell} g11^{-1} g12),
// with zeta a depth-zero character of R^x given by its exponent relative to
// the residue-field generator (0 = trivial). Restriction to SL lands in
// Gamma'(ell).
class EtaHat {
 public:
  enum class Domain { gl, sl };
  EtaHat(Field F, int ell, Scalar u, int zeta_exp = 0, Domain dom = Domain::sl);

  int ell() const { return ell_; }
  int m() const { return m_; }
  int mprime() const { return mp_; }
  const Scalar& u() const { return u_; }
  int zeta_exp() const { return zeta_; }
  Domain domain() const { return dom_; }

  // g must lie in the domain subgroup, read in R at modulus >= ell+1
  RootOfUnity value(const ResidueRing& R, const Mat2& g) const;

 private:
  Field F_;
  GF gf_;
  int ell_, m_, mp_, zeta_;
  Scalar u_;
  Domain dom_;
  Psi psi_;
};

// All of B'_ell in R/P^n (n = R.n() >= ell+1 recommended ell+1), by direct
// parametrization; sorted canonically.
std::vector<Mat2> enumerate_Bprime(const ResidueRing& R, int ell,
                                   std::uint64_t budget = kDefaultBudget);

// Per-double-coset intertwining dimension of the depth-ell Mackey component,
// closed form: 1 for the identity cell, q-1 for g(k,alpha) with ell-k < 2e
// odd and 2k > ell, 1 for ell-k = 2e with 2k > ell, 0 otherwise.
long long intertwine_dim_coset(const Field& F, int ell, const BruhatCell& gamma);

// Brute-force evaluation of the same dimension as a character inner product
// over {a in B'_ell : gamma a gamma^{-1} in B'_ell} at modulus ell+1. The
// trace character can be evaluated three ways, which must agree: by its
// branch formula, or as the unit sum of an additive character (standard or
// twisted by a unit c).
enum class ChiRoute { branch, psi_sum, psi_sum_twisted };
long long intertwine_dim_coset_brute(const Field& F, int ell, const BruhatCell& gamma,
                                     ChiRoute route = ChiRoute::branch,
                                     std::uint64_t budget = kDefaultBudget);

// The double cosets supporting nonzero intertwining, as a subset of the
// canonical cell list.
std::vector<BruhatCell> supported_cosets(const Field& F, int ell);

// dim End(sigma(ell)) = |S_{ceil(ell/2)}|: q^{floor((ell+1)/4)} when
// ell <= 4e, and 2 q^e when ell >= 4e+1.
std::uint64_t sigma_end_dim(const Field& F, int ell);
// Mackey-Frobenius sum of the per-coset brute dimensions; must agree.
std::uint64_t sigma_end_dim_brute(const Field& F, int ell,
                                  std::uint64_t budget = kDefaultBudget);

// Double coset representatives of Gamma'(ell)\SL(2,R)/Gamma'(ell): w together
// with diag-type cells [[a^{-1}, b],[0, a]], a over units modulo
// +-1 + P^{max(m-e, ceil(m/2))}, b over R/P^{m'}.
std::vector<Mat2> gamma_prime_dcoset_reps(const ResidueRing& R, int ell);
// Exhaustive BFS audit that the representatives partition SL(2, R/P^n).
// The listed representatives form a covering set, not a bijection: w always
// lies in the coset of an upper unipotent with unit entry (conjugate it by
// lower unipotents), and distinct b with the same valuation often merge.  What
// the Mackey computation actually needs, and what the audit certifies, is that
// the list hits every double coset and that the diagonal representatives --
// the only ones that can carry intertwining -- sit in pairwise distinct
// cosets, with only the trivial class meeting Gamma' itself.
struct GammaCosetAudit {
  std::uint64_t group_size = 0, orbit_count = 0, rep_count = 0;
  bool reps_cover = false;
  bool diagonals_distinct = false;
};
GammaCosetAudit gamma_prime_dcosets_oracle(const Field& F, int ell,
                                           std::uint64_t budget = kDefaultBudget);

// Whether I(zeta,u,ell) and I(zeta,u',ell) are isomorphic: 1 iff u and u'
// fall in the same square class at level m = ceil(ell/2).
int I_intertwine(const Field& F, int ell, const Scalar& u, const Scalar& uprime);
// The Mackey sum of character inner products over Gamma'\SL/Gamma'; the
// diagonal self-case returning exactly 1 certifies irreducibility.
int I_intertwine_brute(const Field& F, int ell, const Scalar& u, const Scalar& uprime,
                       int zeta_exp = 0, std::uint64_t budget = kDefaultBudget);

// dim Hom over Gamma(ell) cap B_ell between eta-hat_{omega,ell} and the
// depth-ell conjugate of a cuspidal with central character omega.
long long j_mackey_dim(const Field& F, int ell, int omega_exp,
                       std::uint64_t budget = kDefaultBudget);
// Certifies the dimension is 1, i.e. J(omega,ell) is that Mackey component.
bool J_is_mackey(const Field& F, int ell, int omega_exp,
                 std::uint64_t budget = kDefaultBudget);

}  // namespace dyadic
