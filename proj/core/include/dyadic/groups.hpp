#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyadic/ring.hpp"
#include "dyadic/squares.hpp"

namespace dyadic {

// 2x2 matrix over a residue ring, entries stored as ring indices in row-major
// order (0,0),(0,1),(1,0),(1,1). The packed key sorts matrices lexicographically
// on their entries' digit strings.
struct Mat2 {
  std::array<std::uint16_t, 4> m{};
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(m[0]) << 48) | (static_cast<std::uint64_t>(m[1]) << 32) |
           (static_cast<std::uint64_t>(m[2]) << 16) | m[3];
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend bool operator<(const Mat2& a, const Mat2& b) { return a.key() < b.key(); }
};

Mat2 mat_identity(const ResidueRing& R);
Mat2 mat_w(const ResidueRing& R);  // [[0,1],[-1,0]]
Mat2 mat_diag(const ResidueRing& R, std::uint16_t a, std::uint16_t d);
Mat2 mat_upper(const ResidueRing& R, std::uint16_t b);  // [[1,b],[0,1]]
Mat2 mat_lower(const ResidueRing& R, std::uint16_t c);  // [[1,0],[c,1]]
// [[1, alpha pi^k],[0,1]]
Mat2 mat_unipotent_cell_rep(const ResidueRing& R, int k, const Scalar& alpha);
Mat2 mat_mul(const ResidueRing& R, const Mat2& x, const Mat2& y);
std::uint16_t mat_det(const ResidueRing& R, const Mat2& x);
Mat2 mat_inv(const ResidueRing& R, const Mat2& x);  // requires unit determinant
Mat2 mat_conj(const ResidueRing& R, const Mat2& g, const Mat2& x);  // g x g^{-1}
std::string mat_str(const ResidueRing& R, const Mat2& x);

std::uint64_t sl_order(const Field& F, int n);  // (q^3 - q) q^{3(n-1)}
std::uint64_t gl_order(const Field& F, int n);  // (q^2-1)(q^2-q) q^{4(n-1)}

// All of SL(2, R/P^n) (resp. GL) in canonical order. Throws ResourceError
// naming the cardinality when it exceeds the budget.
std::vector<Mat2> enumerate_sl(const ResidueRing& R, std::uint64_t budget = kDefaultBudget);
std::vector<Mat2> enumerate_gl(const ResidueRing& R, std::uint64_t budget = kDefaultBudget);

// Congruence conditions (entries read in R/P^n; each level must be <= n).
bool in_Bprime(const ResidueRing& R, const Mat2& g, int ell);        // g12 in P^ell
bool in_K_m(const ResidueRing& R, const Mat2& g, int m);             // g == I mod P^m
bool in_K_mm(const ResidueRing& R, const Mat2& g, int m, int mp);    // diag 1+P^m, off P^mp
bool in_Gamma(const ResidueRing& R, const Mat2& g, int ell);         // Z0 U0 K_{m,m'}
bool in_GammaPrime(const ResidueRing& R, const Mat2& g, int ell);    // Gamma with det 1

// Double cosets B'_ell \ SL(2,R) / B'_ell.
struct BruhatCell {
  enum class Kind { identity, weyl, unipotent };
  Kind kind = Kind::identity;
  int k = 0;     // depth of the unipotent representative, 1 <= k < ell
  Scalar alpha;  // canonical square-class representative at level min(k, ell-k)
  Mat2 rep;      // representative matrix in R/P^{ell+1}
  std::string label() const;
};
std::vector<BruhatCell> double_cosets_Bell(const Field& F, int ell);
BruhatCell classify_double_coset(const ResidueRing& R, const Mat2& g, int ell);
// Rebuild the representative matrix of a cell inside the given ring.
Mat2 cell_representative(const ResidueRing& R, const BruhatCell& cell);

// Brute-force oracle: partitions SL(2, R/P^{ell+1}) into B' x B' orbits and
// checks the closed-form representatives hit every orbit exactly once.
struct DoubleCosetAudit {
  std::uint64_t group_size = 0;
  std::uint64_t orbit_count = 0;
  bool reps_bijective = false;
  bool classifier_matches_orbits = false;
};
DoubleCosetAudit double_cosets_oracle(const Field& F, int ell,
                                      std::uint64_t budget = kDefaultBudget);

// Right-coset representatives for B'_ell \ SL(2,R): the section
// {u_beta : beta in R/P^ell} U {u_beta w : beta in P/P^ell}.
struct CosetReps {
  Ring ring;  // R/P^{ell+1}
  std::vector<Mat2> sigma0, sigmaw;
  std::size_t size() const { return sigma0.size() + sigmaw.size(); }
};
CosetReps coset_reps_Bell(const Field& F, int ell);
// verifies pairwise disjointness and exhaustiveness against the full group
bool coset_reps_audit(const Field& F, int ell, std::uint64_t budget = kDefaultBudget);

// Normalizers of the character eta_{(u,ell)}(g) = psi(u pi^{-ell} g12) of
// K_{m'} inside K = GL2(R) and K' = SL2(R), computed by brute conjugation at
// modulus m and compared with the closed forms Z0 U0 K_m and U0 K'_j
// (j = ceil(m/2) for ell <= 4e, with the center adjoined and j = m - e
// beyond).
struct NormalizerReport {
  int ell = 0, m = 0, mprime = 0, j = 0;
  bool center_branch = false;  // closed form Z' U0 K'_j rather than U0 K'_j
  std::uint64_t size_K = 0, size_Kprime = 0;  // counted mod P^m
  bool match_K = false, match_Kprime = false;
  std::string witness;  // set on the first mismatch
  std::string closed_form_K, closed_form_Kprime;
};
NormalizerReport normalizer_check(const Field& F, const Scalar& u, int ell,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace dyadic
