#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dyadic/common.hpp"
#include "dyadic/field.hpp"
#include "dyadic/scalar.hpp"

namespace dyadic {

// Assembly layer over the one-parameter components: formal labels for the
// irreducible constituents seen by the maximal compact subgroups, their
// degrees, the per-depth decomposition tables, fixed-vector dimensions under
// congruence subgroups, the growth of component degrees, and the two
// local-expansion bookkeeping identities (nilpotent-orbit sums in
// characteristic 0, degenerate-coset tower sums in either characteristic).
//
// Everything here is exact integer bookkeeping: a "representation" is a
// label carrying its degree, and every isomorphism assertion is an equality
// of canonicalized labels.

// ----- labels ------------------------------------------------------------

enum class LabelKind {
  trivial,  // the trivial character (degree 1)
  sigma0,   // the depth-zero cuspidal inflation (degree q - 1)
  I,        // depth-ell component attached to a unit square class u
  J,        // depth-ell component for the full 2x2 unit group (one per depth)
};

// A constituent label.  For kind I the unit u is stored canonicalized in the
// level-ceil(ell/2) square-class transversal, so label equality is exactly
// the isomorphism test.  Only the trivial central twist is instantiated.
struct IrrepLabel {
  LabelKind kind = LabelKind::trivial;
  Field field;
  int ell = 0;  // depth; 0 for trivial and sigma0
  Scalar u;     // kind I only

  static IrrepLabel make_trivial(const Field& F);
  static IrrepLabel make_sigma0(const Field& F);
  static IrrepLabel make_I(const Field& F, const Scalar& u, int ell);
  static IrrepLabel make_J(const Field& F, int ell);

  int depth() const { return ell; }
  long long degree() const;
  std::string str() const;
};
bool operator==(const IrrepLabel& a, const IrrepLabel& b);
inline bool operator!=(const IrrepLabel& a, const IrrepLabel& b) { return !(a == b); }
bool operator<(const IrrepLabel& a, const IrrepLabel& b);

// Integer-coefficient formal sum of labels (the trivial character rides
// along as the label of kind trivial).  Zero coefficients are erased, so
// equality is coefficient-wise.
class GrothendieckExpr {
 public:
  void add(const IrrepLabel& label, long long c = 1);
  long long coeff(const IrrepLabel& label) const;
  const std::map<IrrepLabel, long long>& terms() const { return terms_; }
  std::size_t label_count() const { return terms_.size(); }
  // Sum of coefficient * degree over all terms.
  long long degree_sum() const;
  std::string str() const;
  friend bool operator==(const GrothendieckExpr& a, const GrothendieckExpr& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GrothendieckExpr& a, const GrothendieckExpr& b) {
    return !(a == b);
  }

 private:
  std::map<IrrepLabel, long long> terms_;
};

// ----- degrees ------------------------------------------------------------

// Degree q^{ell-1} (q^2 - 1) of the whole depth-ell component.
long long mackey_degree(const Field& F, int ell);

// Degree of one irreducible depth-ell constituent: q^2 - 1 at ell = 1,
// (q^2 - 1) q^{ell - 1 - floor((ell+1)/4)} for 1 < ell <= 4e, and
// (q^2 - 1) q^{ell - 1 - e} / 2 for ell >= 4e + 1.  Self-checked against
// mackey_degree: class count at level ceil(ell/2) times this degree must
// give the whole component back.
long long irrep_degree(const Field& F, int ell);

// ----- decomposition tables ------------------------------------------------

// All constituent labels of the parity-i supercuspidal up to the depth
// bound: the depth-zero inflation (i = 0 only) plus, for each depth ell <=
// depth_bound with ell = i mod 2, one I-label per unit square class at level
// ceil(ell/2).
std::vector<IrrepLabel> branching_table(const Field& F, int i, int depth_bound);

// Per-depth summary of branching_table: component count and common
// constituent degree at each admissible depth.
struct BranchRow {
  int depth = 0;
  std::uint64_t count = 0;
  long long degree = 0;
};
std::vector<BranchRow> branching_rows(const Field& F, int i, int depth_bound);

// dim of the subspace of the parity-i supercuspidal fixed by the depth-n
// congruence subgroup: constituents of depth < n survive.  Closed form
// q^{2t-1} - 1 (i = 0) or q^{2t} - 1 (i = 1) at an even index n = 2t, cross
// checked internally against the degree tally over mackey_degree (plus the
// depth-zero part q - 1 when i = 0).
long long fixed_dim(const Field& F, int i, int n);

// Degree of the largest irreducible constituent fixed by the depth-n
// congruence subgroup (taken for the supercuspidal whose parity matches
// n - 1, where the deepest surviving component lives); read off the
// branching table.  Requires n >= 2.
long long largest_component_dim(const Field& F, int n);

// d(n+4) / d(n) for d = largest_component_dim, as the exact four-case value:
// q^3 for n <= 4e-3, q^3/2 for n in {4e-2, 4e-1}, q^4/2 for n in {4e, 4e+1},
// q^4 for n >= 4e+2 (characteristic 2 always lands in the first case).  For
// n >= 2 the value is verified against the degree quotient; n = 1 returns
// the table value alone since d(1) is not the degree of any component.
Rational growth_ratio(const Field& F, int n);

// d(n+2) / d(n), the single-parity two-step quotient; n >= 2.  Takes the
// values q and q^2, with {d(n+2)/d(n), d(n)/d(n-2)} = {q, q^2} below the
// ramification threshold and the constant value q^2 above it.
Rational growth_step(const Field& F, int n);

// Constant term of the shallow-restriction expansion: the fixed-space
// dimension at depth 4e+1 minus the full orbit sum of constituent degrees
// over depths 1..4e of parity i.  Always negative.  Characteristic 0 only
// (the stable square-class set must be finite).
long long n_pi(const Field& F, int i);

// ----- expansion certificates ----------------------------------------------

// Per-depth tally of the orbit sum against the branching table at depths
// where classes collide: each of the branch_count distinct labels is hit
// multiplicity times by the orbit sum (multiplicity > 1 iff the depth is a
// genuine collision depth).
struct DepthTally {
  int depth = 0;
  std::uint64_t branch_count = 0;  // distinct labels at this depth
  std::uint64_t orbit_count = 0;   // labels counted with multiplicity
  std::uint64_t multiplicity = 0;  // orbit_count / branch_count
};

// Certificate that, after restriction to the depth-(4e+1) congruence
// subgroup, the branching table equals the trivial-coefficient term n_pi
// plus the sum over parity-i nilpotent orbits of their component towers:
// label multisets agree exactly at depths > 4e, and at each shallow depth
// the tower sum over-counts each label by the uniform collision
// multiplicity.  The report pins its truncation depth and exhibits two
// distinct stable class representatives that collide at the deepest shallow
// depth.  Characteristic 0 only.
struct LceReport {
  int i = 0;
  int radius = 0;       // 4e + 1, the restriction depth
  int depth_bound = 0;  // labels tracked up to this depth
  long long trivial_coeff = 0;    // n_pi
  long long fixed_space_dim = 0;  // fixed_dim at the radius
  bool deep_match = false;        // multiset equality at depths > 4e
  std::vector<DepthTally> shallow;
  int collision_depth = 0;  // deepest parity-i depth <= 4e
  std::pair<std::string, std::string> collision_witness;
  GrothendieckExpr lhs, rhs;  // both sides, restricted and truncated
  bool pass = false;
};
LceReport lce_expand(const Field& F, int i, int depth_bound = -1);  // default 4e+6

// Certificate that the branching table splits as the fixed part at depth ell
// (all constituents of depth < ell) plus one pairwise-disjoint tower per
// unit square class at level ceil(ell/2), truncated at the stated depth
// bound.  Valid in characteristic 0 and 2; ell must be positive with
// ell = i mod 2.
struct Lce2Report {
  int i = 0;
  int ell = 0;
  int depth_bound = 0;            // default ell + 4
  std::uint64_t summand_count = 0;  // number of towers = class count
  long long fixed_space_dim = 0;    // fixed_dim at depth ell
  std::size_t fixed_label_count = 0;
  // One entry per tower: base-class representative and its label count
  // within the bound.
  std::vector<std::pair<std::string, std::size_t>> pieces;
  bool pieces_disjoint = false;
  bool match = false;  // fixed part + towers == branching table
  GrothendieckExpr lhs, rhs;
  bool pass = false;
};
Lce2Report lce2_expand(const Field& F, int i, int ell, int depth_bound = -1);

// Certificate for the full 2x2 unit group: one J-label per positive depth on
// both sides, fixed space of dimension q - 1 (the depth-zero inflation), and
// the expansion's constant term 1 - q, mirroring the character-expansion
// sign convention (minus the fixed-space dimension).
struct Gl2Report {
  int depth_bound = 0;
  long long fixed_space_dim = 0;  // q - 1
  long long trivial_coeff = 0;    // 1 - q
  bool slices_match = false;      // per-depth slices agree
  GrothendieckExpr lhs, rhs;      // unrestricted identity to the bound
  bool pass = false;
};
Gl2Report gl2_lce(const Field& F, int depth_bound = 8);

}  // namespace dyadic
