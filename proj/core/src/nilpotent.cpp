#include "dyadic/nilpotent.hpp"

#include <algorithm>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

int parity_of(int s) { return ((s % 2) + 2) % 2; }

Scalar unit_part(const Field& F, const Scalar& v, const char* what) {
  if (!v.valid() || v.is_zero())
    throw InvalidInput(std::string(what) + ": the parameter must be nonzero at the current precision");
  (void)F;
  return v.shifted(-v.val());
}

void require_unit(const Scalar& u, const char* what) {
  if (!u.valid() || u.is_zero() || u.val() != 0)
    throw InvalidInput(std::string(what) + ": a unit is required");
}

}  // namespace

std::string OrbitLabel::str() const {
  if (zero) return "O(0)";
  std::string s = "O(" + unit.str() + (parity == 1 ? ", odd" : ", even") + ")";
  if (level != kLevelFull) s += " mod " + std::to_string(level);
  return s;
}

bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  return a.unit == b.unit && a.parity == b.parity && a.level == b.level;
}

// Labels computed at any level beyond the stable one coincide with full
// labels in characteristic 0; normalize so that they also compare equal.
static int stored_level(const Field& F, int level) {
  if (!F->is_char2() && (level == kLevelFull || level >= 2 * F->e() + 1)) return kLevelFull;
  return level;
}

OrbitLabel orbit_label(const Field& F, const Scalar& v, int level) {
  const Scalar u = unit_part(F, v, "orbit_label");
  OrbitLabel lab;
  lab.unit = canonicalize(u, level);
  lab.parity = parity_of(v.val());
  lab.level = stored_level(F, level);
  return lab;
}

Mat2 nilpotent_rep(const ResidueRing& R, const Scalar& v) {
  Mat2 m{};
  m.m[0] = m.m[1] = m.m[3] = R.zero();
  m.m[2] = R.from_scalar(v);
  return m;
}

MeetList orbits_meeting(const Field& F, const Scalar& u, int s, int t) {
  require_unit(u, "orbits_meeting");
  if (s >= t) throw InvalidInput("orbits_meeting: the cutoff t must exceed the depth s");
  const int lambda = t - s;
  MeetList out;
  if (F->is_char2()) {
    out.infinite = true;
    OrbitLabel lab;
    lab.unit = canonicalize(u, lambda);
    lab.parity = parity_of(s);
    lab.level = lambda;
    out.labels.push_back(lab);
    return out;
  }
  for (const Scalar& rep : square_class_reps(F, kLevelFull).reps) {
    if (!same_square_class(rep, u, lambda)) continue;
    OrbitLabel lab;
    lab.unit = rep;
    lab.parity = parity_of(s);
    lab.level = kLevelFull;
    out.labels.push_back(lab);
  }
  return out;
}

bool kprime_orbit_equiv(const Field& F, const Scalar& u, const Scalar& u2, int s, int t) {
  require_unit(u, "kprime_orbit_equiv");
  require_unit(u2, "kprime_orbit_equiv");
  (void)F;
  if (t - s <= 0) return true;  // the lattice at depth t already contains both
  return same_square_class(u, u2, t - s);
}

EquivWitness kprime_orbit_equiv_brute(const Field& F, const Scalar& u, const Scalar& u2,
                                      int s, int t, std::uint64_t budget) {
  EquivWitness w;
  w.equivalent = kprime_orbit_equiv(F, u, u2, s, t);
  const int lambda = t - s;
  if (lambda <= 0) {
    Ring R = ResidueRing::make(F, 1);
    w.found = true;
    w.k = mat_identity(*R);
    w.modulus = 1;
    return w;
  }
  if (sl_order(F, lambda) > budget) return w;  // no search; closed form stands
  Ring R = ResidueRing::make(F, lambda);
  w.modulus = lambda;
  const Mat2 X = nilpotent_rep(*R, u.truncated(lambda));
  const Mat2 Y = nilpotent_rep(*R, u2.truncated(lambda));
  for (const Mat2& k : enumerate_sl(*R, budget)) {
    const Mat2 c = mat_mul(*R, mat_mul(*R, k, X), mat_inv(*R, k));
    if (c.m[0] == Y.m[0] && c.m[1] == Y.m[1] && c.m[2] == Y.m[2] && c.m[3] == Y.m[3]) {
      w.found = true;
      w.k = k;
      return w;
    }
  }
  if (w.equivalent)
    throw VerifyError("kprime_orbit_equiv_brute: the closed form promises a witness but none was found");
  return w;
}

std::vector<std::pair<Scalar, int>> T_set(const Field& F, const Scalar& u, int ell,
                                          int depth_bound) {
  require_unit(u, "T_set");
  if (ell < 1) throw InvalidInput("T_set: ell must be >= 1");
  if (depth_bound < ell) throw InvalidInput("T_set: the depth bound must be >= ell");
  const int m = (ell + 1) / 2;
  std::vector<std::pair<Scalar, int>> out;
  for (int ell2 = ell; ell2 <= depth_bound; ell2 += 2) {
    const int m2 = (ell2 + 1) / 2;
    for (const Scalar& rep : square_class_reps(F, m2).reps)
      if (same_square_class(rep, u, m)) out.emplace_back(rep, ell2);
  }
  return out;
}

std::vector<OrbitLabel> wavefront(const Field& F, int parity, int level) {
  if (parity != 0 && parity != 1) throw InvalidInput("wavefront: parity must be 0 or 1");
  std::vector<OrbitLabel> out;
  for (const Scalar& rep : square_class_reps(F, level).reps) {
    OrbitLabel lab;
    lab.unit = rep;
    lab.parity = parity;
    lab.level = stored_level(F, level);
    out.push_back(lab);
  }
  return out;
}

}  // namespace dyadic
