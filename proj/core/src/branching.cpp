#include "dyadic/branching.hpp"

#include <map>
#include <set>
#include <utility>

#include "dyadic/nilpotent.hpp"
#include "dyadic/squares.hpp"

namespace dyadic {

namespace {

void require_parity(int i, const char* who) {
  if (i != 0 && i != 1) throw InvalidInput(std::string(who) + ": parity must be 0 or 1");
}

// first positive depth of parity i (the depth-zero part is listed separately)
int first_depth(int i) { return i == 0 ? 2 : 1; }

}  // namespace

// ----- labels ------------------------------------------------------------

IrrepLabel IrrepLabel::make_trivial(const Field& F) {
  IrrepLabel lb;
  lb.kind = LabelKind::trivial;
  lb.field = F;
  return lb;
}

IrrepLabel IrrepLabel::make_sigma0(const Field& F) {
  IrrepLabel lb;
  lb.kind = LabelKind::sigma0;
  lb.field = F;
  return lb;
}

IrrepLabel IrrepLabel::make_I(const Field& F, const Scalar& u, int ell) {
  if (ell < 1) throw InvalidInput("component label: depth must be >= 1");
  IrrepLabel lb;
  lb.kind = LabelKind::I;
  lb.field = F;
  lb.ell = ell;
  lb.u = canonicalize(u, (ell + 1) / 2);
  return lb;
}

IrrepLabel IrrepLabel::make_J(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("component label: depth must be >= 1");
  IrrepLabel lb;
  lb.kind = LabelKind::J;
  lb.field = F;
  lb.ell = ell;
  return lb;
}

long long IrrepLabel::degree() const {
  if (!field) throw InvalidInput("component label: missing field");
  switch (kind) {
    case LabelKind::trivial:
      return 1;
    case LabelKind::sigma0:
      return field->q() - 1;
    case LabelKind::I:
      return irrep_degree(field, ell);
    case LabelKind::J:
      return mackey_degree(field, ell);
  }
  throw InvalidInput("component label: unknown kind");
}

std::string IrrepLabel::str() const {
  switch (kind) {
    case LabelKind::trivial:
      return "1";
    case LabelKind::sigma0:
      return "sigma";
    case LabelKind::I:
      return "I(1, " + u.str() + ", " + std::to_string(ell) + ")";
    case LabelKind::J:
      return "J(1, " + std::to_string(ell) + ")";
  }
  return "?";
}

bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.field.get() != b.field.get() || a.kind != b.kind || a.ell != b.ell) return false;
  if (a.kind != LabelKind::I) return true;
  return a.u.digits() == b.u.digits();
}

bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.field.get() != b.field.get()) return a.field.get() < b.field.get();
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.ell != b.ell) return a.ell < b.ell;
  if (a.kind != LabelKind::I) return false;
  return a.u.digits() < b.u.digits();
}

void GrothendieckExpr::add(const IrrepLabel& label, long long c) {
  if (c == 0) return;
  auto it = terms_.try_emplace(label, 0LL).first;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long long GrothendieckExpr::coeff(const IrrepLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

long long GrothendieckExpr::degree_sum() const {
  long long s = 0;
  for (const auto& [lb, c] : terms_) s += c * lb.degree();
  return s;
}

std::string GrothendieckExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lb, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += lb.str();
  }
  return out;
}

// ----- degrees ------------------------------------------------------------

long long mackey_degree(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("mackey_degree: depth must be >= 1");
  const long long q = F->q();
  return ipow(q, ell - 1) * (q * q - 1);
}

long long irrep_degree(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("irrep_degree: depth must be >= 1");
  const long long q = F->q();
  long long deg;
  if (F->le_4e(ell)) {
    deg = (q * q - 1) * ipow(q, ell - 1 - (ell + 1) / 4);
  } else {
    deg = (q * q - 1) * ipow(q, ell - 1 - F->e()) / 2;
  }
  const long long count = static_cast<long long>(square_class_count(F, (ell + 1) / 2));
  if (count * deg != mackey_degree(F, ell))
    throw VerifyError("irrep_degree: class count times degree misses the component degree");
  return deg;
}

// ----- decomposition tables ------------------------------------------------

std::vector<IrrepLabel> branching_table(const Field& F, int i, int depth_bound) {
  require_parity(i, "branching_table");
  if (depth_bound < 0) throw InvalidInput("branching_table: depth bound must be >= 0");
  std::vector<IrrepLabel> out;
  if (i == 0) out.push_back(IrrepLabel::make_sigma0(F));
  for (int l = first_depth(i); l <= depth_bound; l += 2)
    for (const Scalar& u : square_class_reps(F, (l + 1) / 2).reps)
      out.push_back(IrrepLabel::make_I(F, u, l));
  return out;
}

std::vector<BranchRow> branching_rows(const Field& F, int i, int depth_bound) {
  std::map<int, BranchRow> rows;
  for (const IrrepLabel& lb : branching_table(F, i, depth_bound)) {
    BranchRow& r = rows[lb.depth()];
    r.depth = lb.depth();
    if (r.count == 0)
      r.degree = lb.degree();
    else if (r.degree != lb.degree())
      throw VerifyError("branching_rows: constituents at one depth must share a degree");
    ++r.count;
  }
  std::vector<BranchRow> out;
  out.reserve(rows.size());
  for (const auto& [d, r] : rows) out.push_back(r);
  return out;
}

long long fixed_dim(const Field& F, int i, int n) {
  require_parity(i, "fixed_dim");
  if (n < 1) throw InvalidInput("fixed_dim: subgroup depth must be >= 1");
  const long long q = F->q();
  long long formula;
  if (i == 0) {
    const int t = (n - 1) / 2;  // positive even depths < n: 2, 4, ..., 2t
    formula = ipow(q, 2 * t + 1) - 1;
  } else {
    const int t = n / 2;  // odd depths < n: 1, 3, ..., 2t - 1
    formula = ipow(q, 2 * t) - 1;
  }
  long long tally = i == 0 ? q - 1 : 0;
  for (int l = first_depth(i); l < n; l += 2) tally += mackey_degree(F, l);
  if (formula != tally)
    throw VerifyError("fixed_dim: closed form disagrees with the component degree tally");
  return formula;
}

long long largest_component_dim(const Field& F, int n) {
  if (n < 2)
    throw InvalidInput("largest_component_dim: the deepest constituent needs depth n-1 >= 1");
  const int lstar = n - 1;
  long long best = 0;
  bool seen_deepest = false;
  for (const IrrepLabel& lb : branching_table(F, lstar % 2, lstar)) {
    if (lb.degree() > best) best = lb.degree();
    seen_deepest = seen_deepest || lb.depth() == lstar;
  }
  if (!seen_deepest)
    throw VerifyError("largest_component_dim: no constituent at the deepest admissible depth");
  if (best != irrep_degree(F, lstar))
    throw VerifyError("largest_component_dim: the deepest constituent is not the largest");
  return best;
}

Rational growth_ratio(const Field& F, int n) {
  if (n < 1) throw InvalidInput("growth_ratio: n must be >= 1");
  const long long q = F->q();
  Rational table;
  if (F->le_4e(n + 3)) {
    table = Rational(q * q * q);  // n <= 4e - 3 (always in characteristic 2)
  } else if (F->le_4e(n + 1)) {
    table = Rational(q * q * q, 2);  // n in {4e - 2, 4e - 1}
  } else if (F->le_4e(n - 1)) {
    table = Rational(q * q * q * q, 2);  // n in {4e, 4e + 1}
  } else {
    table = Rational(q * q * q * q);  // n >= 4e + 2
  }
  if (n >= 2) {
    const Rational quotient(largest_component_dim(F, n + 4), largest_component_dim(F, n));
    if (quotient != table)
      throw VerifyError("growth_ratio: table value disagrees with the degree quotient");
  }
  return table;
}

Rational growth_step(const Field& F, int n) {
  if (n < 2) throw InvalidInput("growth_step: n must be >= 2");
  return Rational(largest_component_dim(F, n + 2), largest_component_dim(F, n));
}

long long n_pi(const Field& F, int i) {
  require_parity(i, "n_pi");
  if (F->characteristic() == 2)
    throw InvalidInput("n_pi: needs the stable square-class set, which is infinite here");
  const int e = F->e();
  const long long stable = static_cast<long long>(square_class_count(F, kLevelFull));
  long long result = fixed_dim(F, i, 4 * e + 1);
  for (int l = first_depth(i); l <= 4 * e; l += 2) result -= stable * irrep_degree(F, l);
  if (result >= 0) throw VerifyError("n_pi: the expansion constant must be negative");
  return result;
}

// ----- expansion certificates ----------------------------------------------

LceReport lce_expand(const Field& F, int i, int depth_bound) {
  require_parity(i, "lce_expand");
  if (F->characteristic() == 2)
    throw InvalidInput(
        "lce_expand: needs the stable square-class set, which is infinite here; "
        "use lce2_expand");
  const int e = F->e();
  LceReport rep;
  rep.i = i;
  rep.radius = 4 * e + 1;
  rep.depth_bound = depth_bound < 0 ? 4 * e + 6 : depth_bound;
  if (rep.depth_bound <= 4 * e)
    throw InvalidInput("lce_expand: the depth bound must exceed the collision range 4e");
  rep.trivial_coeff = n_pi(F, i);
  rep.fixed_space_dim = fixed_dim(F, i, rep.radius);

  const IrrepLabel one = IrrepLabel::make_trivial(F);

  // Branching side, restricted at the radius: constituents of depth <= 4e
  // restrict to multiples of the trivial character.
  std::map<int, std::map<IrrepLabel, long long>> deep_branch;
  for (const IrrepLabel& lb : branching_table(F, i, rep.depth_bound)) {
    if (lb.depth() <= 4 * e) {
      rep.lhs.add(one, lb.degree());
    } else {
      rep.lhs.add(lb);
      ++deep_branch[lb.depth()][lb];
    }
  }

  // Orbit side: the constant term plus one component tower per parity-i
  // orbit, restricted the same way.
  rep.rhs.add(one, rep.trivial_coeff);
  std::map<int, std::map<IrrepLabel, long long>> deep_orbit;
  std::map<int, std::map<IrrepLabel, long long>> shallow_orbit;
  for (const OrbitLabel& o : wavefront(F, i)) {
    for (int l = first_depth(i); l <= rep.depth_bound; l += 2) {
      IrrepLabel lb = IrrepLabel::make_I(F, o.unit, l);
      if (l <= 4 * e) {
        rep.rhs.add(one, lb.degree());
        ++shallow_orbit[l][lb];
      } else {
        rep.rhs.add(lb);
        ++deep_orbit[l][lb];
      }
    }
  }

  rep.deep_match = deep_branch == deep_orbit;

  // Shallow depths: the tower sum hits every label of the branching table,
  // each the same number of times.
  const std::uint64_t stable = square_class_count(F, kLevelFull);
  bool shallow_ok = true;
  for (int l = first_depth(i); l <= 4 * e; l += 2) {
    DepthTally t;
    t.depth = l;
    t.branch_count = square_class_count(F, (l + 1) / 2);
    const auto& hits = shallow_orbit[l];
    std::uint64_t total = 0;
    for (const auto& [lb, c] : hits) total += static_cast<std::uint64_t>(c);
    t.orbit_count = total;
    t.multiplicity = t.branch_count == 0 ? 0 : total / t.branch_count;
    bool uniform = hits.size() == t.branch_count && total == stable &&
                   t.multiplicity * t.branch_count == total;
    for (const auto& [lb, c] : hits)
      uniform = uniform && static_cast<std::uint64_t>(c) == t.multiplicity;
    shallow_ok = shallow_ok && uniform;
    rep.shallow.push_back(t);
  }

  // Witness two stable classes that merge at the deepest shallow depth.
  rep.collision_depth = i == 0 ? 4 * e : 4 * e - 1;
  const int mstar = (rep.collision_depth + 1) / 2;
  const std::vector<Scalar>& full = square_class_reps(F, kLevelFull).reps;
  for (std::size_t a = 0; a < full.size() && rep.collision_witness.first.empty(); ++a)
    for (std::size_t b = a + 1; b < full.size(); ++b)
      if (same_square_class(full[a], full[b], mstar)) {
        rep.collision_witness = {full[a].str(), full[b].str()};
        break;
      }

  rep.pass = rep.deep_match && shallow_ok && rep.lhs == rep.rhs &&
             !rep.collision_witness.first.empty();
  return rep;
}

Lce2Report lce2_expand(const Field& F, int i, int ell, int depth_bound) {
  require_parity(i, "lce2_expand");
  if (ell < 1) throw InvalidInput("lce2_expand: base depth must be >= 1");
  if ((ell - i) % 2 != 0)
    throw InvalidInput("lce2_expand: base depth parity must match the component parity");
  Lce2Report rep;
  rep.i = i;
  rep.ell = ell;
  rep.depth_bound = depth_bound < 0 ? ell + 4 : depth_bound;
  if (rep.depth_bound < ell)
    throw InvalidInput("lce2_expand: the depth bound must reach the base depth");
  const int m = (ell + 1) / 2;
  rep.summand_count = square_class_count(F, m);
  rep.fixed_space_dim = fixed_dim(F, i, ell);

  const std::vector<IrrepLabel> table = branching_table(F, i, rep.depth_bound);
  for (const IrrepLabel& lb : table) rep.lhs.add(lb);

  // Fixed part: everything of depth below the base depth.
  long long fixed_degrees = 0;
  for (const IrrepLabel& lb : table)
    if (lb.depth() < ell) {
      rep.rhs.add(lb);
      ++rep.fixed_label_count;
      fixed_degrees += lb.degree();
    }

  // One tower per square class at the base level.
  bool disjoint = true;
  for (const Scalar& u : square_class_reps(F, m).reps) {
    std::size_t count = 0;
    for (const auto& [uprime, lprime] : T_set(F, u, ell, rep.depth_bound)) {
      IrrepLabel lb = IrrepLabel::make_I(F, uprime, lprime);
      if (rep.rhs.coeff(lb) != 0) disjoint = false;
      rep.rhs.add(lb);
      ++count;
    }
    rep.pieces.emplace_back(canonicalize(u, m).str(), count);
  }

  rep.pieces_disjoint = disjoint;
  rep.match = rep.lhs == rep.rhs;
  rep.pass = disjoint && rep.match && fixed_degrees == rep.fixed_space_dim &&
             rep.summand_count == rep.pieces.size();
  return rep;
}

Gl2Report gl2_lce(const Field& F, int depth_bound) {
  if (depth_bound < 1) throw InvalidInput("gl2_lce: depth bound must be >= 1");
  Gl2Report rep;
  rep.depth_bound = depth_bound;
  const long long q = F->q();
  rep.fixed_space_dim = q - 1;
  rep.trivial_coeff = 1 - q;

  // Branching side: the depth-zero inflation plus one full component per
  // positive depth.  Expansion side: the fixed part (that same inflation)
  // plus the single orbit's tower, again one label per depth.
  rep.lhs.add(IrrepLabel::make_sigma0(F));
  rep.rhs.add(IrrepLabel::make_sigma0(F));
  for (int l = 1; l <= depth_bound; ++l) {
    rep.lhs.add(IrrepLabel::make_J(F, l));
    rep.rhs.add(IrrepLabel::make_J(F, l));
  }

  bool slices = true;
  for (int l = 1; l <= depth_bound; ++l) {
    const IrrepLabel lb = IrrepLabel::make_J(F, l);
    slices = slices && rep.lhs.coeff(lb) == 1 && rep.rhs.coeff(lb) == 1 &&
             lb.degree() == mackey_degree(F, l);
  }
  rep.slices_match = slices;

  rep.pass = slices && rep.lhs == rep.rhs &&
             IrrepLabel::make_sigma0(F).degree() == rep.fixed_space_dim &&
             rep.trivial_coeff == -rep.fixed_space_dim;
  return rep;
}

}  // namespace dyadic
