#include "dyadic/groups.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

int level_m(int ell) { return (ell + 1) / 2; }
int level_mp(int ell) { return ell / 2 + 1; }

}  // namespace

Mat2 mat_identity(const ResidueRing& R) { return Mat2{{R.one(), 0, 0, R.one()}}; }

Mat2 mat_w(const ResidueRing& R) { return Mat2{{0, R.one(), R.neg(R.one()), 0}}; }

Mat2 mat_diag(const ResidueRing& R, std::uint16_t a, std::uint16_t d) {
  (void)R;
  return Mat2{{a, 0, 0, d}};
}

Mat2 mat_upper(const ResidueRing& R, std::uint16_t b) { return Mat2{{R.one(), b, 0, R.one()}}; }

Mat2 mat_lower(const ResidueRing& R, std::uint16_t c) { return Mat2{{R.one(), 0, c, R.one()}}; }

Mat2 mat_unipotent_cell_rep(const ResidueRing& R, int k, const Scalar& alpha) {
  if (k < 1 || k >= R.n()) throw InvalidInput("unipotent cell depth out of range");
  std::uint16_t b = R.from_scalar(alpha.shifted(k).truncated(R.n()));
  return mat_upper(R, b);
}

Mat2 cell_representative(const ResidueRing& R, const BruhatCell& cell) {
  switch (cell.kind) {
    case BruhatCell::Kind::identity: return mat_identity(R);
    case BruhatCell::Kind::weyl: return mat_w(R);
    case BruhatCell::Kind::unipotent:
      return mat_unipotent_cell_rep(R, cell.k, cell.alpha);
  }
  throw InvalidInput("cell_representative: bad cell kind");
}

Mat2 mat_mul(const ResidueRing& R, const Mat2& x, const Mat2& y) {
  return Mat2{{R.add(R.mul(x.m[0], y.m[0]), R.mul(x.m[1], y.m[2])),
               R.add(R.mul(x.m[0], y.m[1]), R.mul(x.m[1], y.m[3])),
               R.add(R.mul(x.m[2], y.m[0]), R.mul(x.m[3], y.m[2])),
               R.add(R.mul(x.m[2], y.m[1]), R.mul(x.m[3], y.m[3]))}};
}

std::uint16_t mat_det(const ResidueRing& R, const Mat2& x) {
  return R.sub(R.mul(x.m[0], x.m[3]), R.mul(x.m[1], x.m[2]));
}

Mat2 mat_inv(const ResidueRing& R, const Mat2& x) {
  std::uint16_t det = mat_det(R, x);
  Mat2 adj{{x.m[3], R.neg(x.m[1]), R.neg(x.m[2]), x.m[0]}};
  if (det == R.one()) return adj;
  std::uint16_t di = R.inv(det);
  for (auto& e : adj.m) e = R.mul(e, di);
  return adj;
}

Mat2 mat_conj(const ResidueRing& R, const Mat2& g, const Mat2& x) {
  return mat_mul(R, mat_mul(R, g, x), mat_inv(R, g));
}

std::string mat_str(const ResidueRing& R, const Mat2& x) {
  auto entry = [&](std::uint16_t a) {
    const Field& F = R.field();
    if (a == 0) return std::string("0");
    std::string s;
    for (int j = 0; j < R.n(); ++j) {
      std::uint16_t d = R.digit_of(a, j);
      if (d == 0) continue;
      if (!s.empty()) s += "+";
      std::string c = F->residue_str(d);
      if (c.find('+') != std::string::npos) c = "(" + c + ")";
      if (j == 0)
        s += c;
      else {
        if (c != "1") s += c + "*";
        s += (j == 1) ? "pi" : "pi^" + std::to_string(j);
      }
    }
    return s;
  };
  return "[[" + entry(x.m[0]) + ", " + entry(x.m[1]) + "], [" + entry(x.m[2]) + ", " +
         entry(x.m[3]) + "]] mod P^" + std::to_string(R.n());
}

std::uint64_t sl_order(const Field& F, int n) {
  std::uint64_t q = F->q();
  return (q * q * q - q) * ipow(q * q * q, n - 1);
}

std::uint64_t gl_order(const Field& F, int n) {
  std::uint64_t q = F->q();
  return (q * q - 1) * (q * q - q) * ipow(q * q * q * q, n - 1);
}

std::vector<Mat2> enumerate_sl(const ResidueRing& R, std::uint64_t budget) {
  std::uint64_t order = sl_order(R.field(), R.n());
  std::string what =
      "SL(2, R/P^" + std::to_string(R.n()) + ") over " + R.field()->config_string();
  check_budget(order, budget, what.c_str());
  std::vector<Mat2> out;
  out.reserve(order);
  std::uint32_t card = R.card();
  for (std::uint32_t a = 0; a < card; ++a) {
    bool au = R.is_unit(static_cast<std::uint16_t>(a));
    std::uint16_t ai = au ? R.inv(static_cast<std::uint16_t>(a)) : 0;
    for (std::uint32_t c = 0; c < card; ++c) {
      if (au) {
        // d is determined: ad = 1 + bc
        for (std::uint32_t b = 0; b < card; ++b) {
          std::uint16_t d = R.mul(
              ai, R.add(R.one(), R.mul(static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c))));
          out.push_back(Mat2{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                              static_cast<std::uint16_t>(c), d}});
        }
      } else if (R.is_unit(static_cast<std::uint16_t>(c))) {
        // b is determined: bc = ad - 1
        std::uint16_t ci = R.inv(static_cast<std::uint16_t>(c));
        for (std::uint32_t d = 0; d < card; ++d) {
          std::uint16_t b = R.mul(
              ci, R.sub(R.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(d)), R.one()));
          out.push_back(Mat2{{static_cast<std::uint16_t>(a), b, static_cast<std::uint16_t>(c),
                              static_cast<std::uint16_t>(d)}});
        }
      }
    }
  }
  if (out.size() != order)
    throw VerifyError("SL(2, R/P^n) enumeration produced " + std::to_string(out.size()) +
                      " elements, expected " + std::to_string(order));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat2> enumerate_gl(const ResidueRing& R, std::uint64_t budget) {
  std::uint64_t order = gl_order(R.field(), R.n());
  std::string what =
      "GL(2, R/P^" + std::to_string(R.n()) + ") over " + R.field()->config_string();
  check_budget(order, budget, what.c_str());
  std::vector<Mat2> out;
  out.reserve(order);
  std::uint32_t card = R.card();
  for (std::uint32_t a = 0; a < card; ++a)
    for (std::uint32_t b = 0; b < card; ++b)
      for (std::uint32_t c = 0; c < card; ++c)
        for (std::uint32_t d = 0; d < card; ++d) {
          Mat2 g{{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                  static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)}};
          if (R.is_unit(mat_det(R, g))) out.push_back(g);
        }
  if (out.size() != order)
    throw VerifyError("GL(2, R/P^n) enumeration produced " + std::to_string(out.size()) +
                      " elements, expected " + std::to_string(order));
  return out;  // quadruple loop order is already lexicographic
}

bool in_Bprime(const ResidueRing& R, const Mat2& g, int ell) {
  if (ell > R.n()) throw InvalidInput("congruence level exceeds ring modulus");
  return R.val(g.m[1]) >= ell;
}

bool in_K_m(const ResidueRing& R, const Mat2& g, int m) {
  if (m > R.n()) throw InvalidInput("congruence level exceeds ring modulus");
  return R.val(R.sub(g.m[0], R.one())) >= m && R.val(g.m[1]) >= m && R.val(g.m[2]) >= m &&
         R.val(R.sub(g.m[3], R.one())) >= m;
}

bool in_K_mm(const ResidueRing& R, const Mat2& g, int m, int mp) {
  if (m > R.n() || mp > R.n()) throw InvalidInput("congruence level exceeds ring modulus");
  return R.val(R.sub(g.m[0], R.one())) >= m && R.val(g.m[1]) >= mp && R.val(g.m[2]) >= mp &&
         R.val(R.sub(g.m[3], R.one())) >= m;
}

bool in_Gamma(const ResidueRing& R, const Mat2& g, int ell) {
  int m = level_m(ell), mp = level_mp(ell);
  if (mp > R.n()) throw InvalidInput("congruence level exceeds ring modulus");
  return R.is_unit(mat_det(R, g)) && R.val(g.m[1]) >= mp && R.val(R.sub(g.m[0], g.m[3])) >= m;
}

bool in_GammaPrime(const ResidueRing& R, const Mat2& g, int ell) {
  int m = level_m(ell), mp = level_mp(ell);
  if (mp > R.n()) throw InvalidInput("congruence level exceeds ring modulus");
  return mat_det(R, g) == R.one() && R.val(g.m[1]) >= mp && R.val(R.sub(g.m[0], g.m[3])) >= m;
}

std::string BruhatCell::label() const {
  switch (kind) {
    case Kind::identity:
      return "I";
    case Kind::weyl:
      return "w";
    default:
      break;
  }
  const Field& F = alpha.field();
  std::string a;
  for (int i = 0; i < alpha.ndigits(); ++i) {
    std::uint16_t d = alpha.digits()[static_cast<std::size_t>(i)];
    if (d == 0) continue;
    if (!a.empty()) a += "+";
    int j = alpha.val() + i;
    std::string c = F->residue_str(d);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (j == 0)
      a += c;
    else {
      if (c != "1") a += c + "*";
      a += (j == 1) ? "pi" : "pi^" + std::to_string(j);
    }
  }
  return "g(" + std::to_string(k) + ", " + (a.empty() ? "1" : a) + ")";
}

std::vector<BruhatCell> double_cosets_Bell(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("double cosets need level >= 1");
  Ring R = ResidueRing::make(F, ell + 1);
  std::vector<BruhatCell> out;
  BruhatCell id;
  id.kind = BruhatCell::Kind::identity;
  id.rep = mat_identity(*R);
  out.push_back(id);
  BruhatCell wy;
  wy.kind = BruhatCell::Kind::weyl;
  wy.rep = mat_w(*R);
  out.push_back(wy);
  for (int k = 1; k < ell; ++k) {
    SquareClassSet S = square_class_reps_lk(F, ell, k);
    for (const Scalar& alpha : S.reps) {
      BruhatCell c;
      c.kind = BruhatCell::Kind::unipotent;
      c.k = k;
      c.alpha = alpha;
      c.rep = mat_unipotent_cell_rep(*R, k, alpha);
      out.push_back(c);
    }
  }
  return out;
}

BruhatCell classify_double_coset(const ResidueRing& R, const Mat2& g, int ell) {
  if (ell < 1 || ell > R.n()) throw InvalidInput("classification level out of range");
  BruhatCell c;
  int v = R.val(g.m[1]);
  if (v >= ell) {
    c.kind = BruhatCell::Kind::identity;
    c.rep = mat_identity(R);
    return c;
  }
  if (v == 0) {
    c.kind = BruhatCell::Kind::weyl;
    c.rep = mat_w(R);
    return c;
  }
  if (!R.is_unit(g.m[0]))
    throw InvalidInput("cell classification expects a determinant-one matrix");
  c.kind = BruhatCell::Kind::unipotent;
  c.k = v;
  Scalar y = R.to_scalar(R.mul(g.m[1], R.inv(g.m[0])));
  c.alpha = canonicalize(y.shifted(-v), std::min(v, ell - v));
  c.rep = mat_unipotent_cell_rep(R, v, c.alpha);
  return c;
}

namespace {

// Generators of B'_ell inside SL(2, R/P^{ell+1}): lower unipotents, diagonal
// unit tori, and upper unipotents at depth ell (indices < q are exactly P^ell).
std::vector<Mat2> bprime_generators(const ResidueRing& R, int ell) {
  std::vector<Mat2> gens;
  for (std::uint32_t x = 0; x < R.card(); ++x)
    gens.push_back(mat_lower(R, static_cast<std::uint16_t>(x)));
  for (std::uint32_t t = 0; t < R.card(); ++t)
    if (R.is_unit(static_cast<std::uint16_t>(t)))
      gens.push_back(mat_diag(R, static_cast<std::uint16_t>(t), R.inv(static_cast<std::uint16_t>(t))));
  int q = R.q();
  for (int y = 1; y < q; ++y) {
    std::uint16_t b = static_cast<std::uint16_t>(y);  // digit vector (0,...,0,y) = y pi^ell
    if (R.n() != ell + 1) throw InvalidInput("generator construction expects modulus ell+1");
    gens.push_back(mat_upper(R, b));
  }
  return gens;
}

std::string cell_signature(const BruhatCell& c) {
  switch (c.kind) {
    case BruhatCell::Kind::identity:
      return "I";
    case BruhatCell::Kind::weyl:
      return "w";
    default: {
      std::string s = "g:" + std::to_string(c.k) + ":";
      for (auto d : c.alpha.digits()) s += std::to_string(d) + ",";
      return s;
    }
  }
}

}  // namespace

DoubleCosetAudit double_cosets_oracle(const Field& F, int ell, std::uint64_t budget) {
  Ring R = ResidueRing::make(F, ell + 1);
  std::vector<Mat2> sl = enumerate_sl(*R, budget);
  std::unordered_map<std::uint64_t, std::uint32_t> pos;
  pos.reserve(sl.size() * 2);
  for (std::uint32_t i = 0; i < sl.size(); ++i) pos.emplace(sl[i].key(), i);

  std::vector<Mat2> gens = bprime_generators(*R, ell);
  std::vector<std::int32_t> orbit(sl.size(), -1);
  std::int32_t norbits = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t root = 0; root < sl.size(); ++root) {
    if (orbit[root] >= 0) continue;
    std::int32_t id = norbits++;
    orbit[root] = id;
    stack.assign(1, root);
    while (!stack.empty()) {
      std::uint32_t cur = stack.back();
      stack.pop_back();
      for (const Mat2& h : gens) {
        std::uint32_t left = pos.at(mat_mul(*R, h, sl[cur]).key());
        if (orbit[left] < 0) {
          orbit[left] = id;
          stack.push_back(left);
        }
        std::uint32_t right = pos.at(mat_mul(*R, sl[cur], h).key());
        if (orbit[right] < 0) {
          orbit[right] = id;
          stack.push_back(right);
        }
      }
    }
  }

  DoubleCosetAudit audit;
  audit.group_size = sl.size();
  audit.orbit_count = static_cast<std::uint64_t>(norbits);

  std::vector<BruhatCell> cells = double_cosets_Bell(F, ell);
  std::vector<bool> hit(static_cast<std::size_t>(norbits), false);
  bool bijective = cells.size() == static_cast<std::size_t>(norbits);
  for (const BruhatCell& c : cells) {
    auto it = pos.find(c.rep.key());
    if (it == pos.end()) {
      bijective = false;
      break;
    }
    std::int32_t id = orbit[it->second];
    if (hit[static_cast<std::size_t>(id)]) {
      bijective = false;
      break;
    }
    hit[static_cast<std::size_t>(id)] = true;
  }
  audit.reps_bijective = bijective;

  // the classifier's fibers must coincide with the brute orbits
  std::vector<std::string> orbit_sig(static_cast<std::size_t>(norbits));
  bool match = true;
  std::unordered_map<std::string, std::int32_t> sig_owner;
  for (std::uint32_t i = 0; i < sl.size() && match; ++i) {
    std::string sig = cell_signature(classify_double_coset(*R, sl[i], ell));
    std::int32_t id = orbit[i];
    std::string& stored = orbit_sig[static_cast<std::size_t>(id)];
    if (stored.empty()) {
      stored = sig;
      auto [it, fresh] = sig_owner.emplace(sig, id);
      if (!fresh) match = false;  // two orbits share a signature
    } else if (stored != sig) {
      match = false;  // one orbit classified inconsistently
    }
  }
  audit.classifier_matches_orbits = match;
  return audit;
}

CosetReps coset_reps_Bell(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("coset representatives need level >= 1");
  CosetReps reps;
  reps.ring = ResidueRing::make(F, ell + 1);
  Ring shallow = ResidueRing::make(F, ell);
  const ResidueRing& R = *reps.ring;
  Mat2 w = mat_w(R);
  for (const Scalar& beta : ring_windows(F, ell)) {
    std::uint16_t b = R.lift_from(*shallow, shallow->from_scalar(beta));
    reps.sigma0.push_back(mat_upper(R, b));
    if (beta.is_zero_mod(ell) || beta.val() >= 1)
      reps.sigmaw.push_back(mat_mul(R, mat_upper(R, b), w));
  }
  return reps;
}

bool coset_reps_audit(const Field& F, int ell, std::uint64_t budget) {
  CosetReps reps = coset_reps_Bell(F, ell);
  const ResidueRing& R = *reps.ring;
  std::vector<Mat2> all;
  all.reserve(reps.size());
  for (const Mat2& g : reps.sigma0) all.push_back(g);
  for (const Mat2& g : reps.sigmaw) all.push_back(g);

  std::uint64_t q = F->q();
  if (all.size() != (q + 1) * ipow(q, ell - 1)) return false;

  // pairwise distinct right cosets: a a'^{-1} never lands in B'
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (in_Bprime(R, mat_mul(R, all[i], mat_inv(R, all[j])), ell)) return false;

  // exhaustive: every group element lies in B' a for some representative a
  std::vector<Mat2> sl = enumerate_sl(R, budget);
  std::uint64_t bprime_size = 0;
  for (const Mat2& g : sl)
    if (in_Bprime(R, g, ell)) ++bprime_size;
  if (bprime_size * all.size() != sl.size()) return false;
  for (const Mat2& g : sl) {
    bool covered = false;
    for (const Mat2& a : all)
      if (in_Bprime(R, mat_mul(R, g, mat_inv(R, a)), ell)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

NormalizerReport normalizer_check(const Field& F, const Scalar& u, int ell,
                                  std::uint64_t budget) {
  if (!u.is_unit()) throw InvalidInput("the character parameter must be a unit");
  if (ell < 2) throw InvalidInput("normalizer check needs level >= 2");
  NormalizerReport rep;
  rep.ell = ell;
  rep.m = level_m(ell);
  rep.mprime = level_mp(ell);
  if (F->le_4e(ell)) {
    rep.j = (rep.m + 1) / 2;
    rep.center_branch = false;
  } else {
    rep.j = rep.m - F->e();
    rep.center_branch = true;
  }
  rep.closed_form_K = "Z0*U0*K_" + std::to_string(rep.m);
  rep.closed_form_Kprime =
      (rep.center_branch ? "Z'*U0*K'_" : "U0*K'_") + std::to_string(rep.j);

  Ring big = ResidueRing::make(F, ell + 1);
  Ring small = ResidueRing::make(F, rep.m);
  const ResidueRing& B = *big;
  const ResidueRing& S = *small;

  // eta(k) = psi(u pi^{-ell} k12) depends only on the off-diagonal index
  Psi psi(F);
  std::vector<RootOfUnity> eta12(B.card());
  for (std::uint32_t i = 0; i < B.card(); ++i)
    eta12[i] = psi(u * B.to_scalar(static_cast<std::uint16_t>(i)).shifted(-ell));

  // K_{m'} mod K_{ell+1} = { I + pi^{m'} Y : Y over R/P^m }
  std::uint16_t pimp = B.pow(B.pi(), rep.mprime);
  std::vector<Mat2> kelems;
  std::vector<RootOfUnity> ketas;
  std::vector<std::uint8_t> kdet1;  // marks the K'_{m'} sublist
  std::uint32_t ycard = S.card();
  kelems.reserve(static_cast<std::size_t>(ycard) * ycard * ycard * ycard);
  auto lift = [&](std::uint32_t y) {
    return B.mul(pimp, B.lift_from(S, static_cast<std::uint16_t>(y)));
  };
  for (std::uint32_t y0 = 0; y0 < ycard; ++y0)
    for (std::uint32_t y1 = 0; y1 < ycard; ++y1)
      for (std::uint32_t y2 = 0; y2 < ycard; ++y2)
        for (std::uint32_t y3 = 0; y3 < ycard; ++y3) {
          Mat2 k{{B.add(B.one(), lift(y0)), lift(y1), lift(y2), B.add(B.one(), lift(y3))}};
          kelems.push_back(k);
          ketas.push_back(eta12[k.m[1]]);
          kdet1.push_back(mat_det(B, k) == B.one() ? 1 : 0);
        }

  auto normalizes = [&](const Mat2& gs, bool det_one_only) {
    Mat2 g;
    for (int i = 0; i < 4; ++i) g.m[static_cast<std::size_t>(i)] = B.lift_from(S, gs.m[static_cast<std::size_t>(i)]);
    Mat2 gi = mat_inv(B, g);
    for (std::size_t t = 0; t < kelems.size(); ++t) {
      if (det_one_only && !kdet1[t]) continue;
      Mat2 c = mat_mul(B, mat_mul(B, g, kelems[t]), gi);
      if (!(eta12[c.m[1]] == ketas[t])) return false;
    }
    return true;
  };

  rep.match_K = true;
  for (const Mat2& gs : enumerate_gl(S, budget)) {
    bool brute = normalizes(gs, false);
    bool closed = gs.m[1] == 0 && S.sub(gs.m[0], gs.m[3]) == 0;
    if (brute) ++rep.size_K;
    if (brute != closed) {
      rep.match_K = false;
      rep.witness = "K side: " + mat_str(S, gs) + (brute ? " normalizes" : " fails") +
                    " but the closed form says otherwise";
      break;
    }
  }

  rep.match_Kprime = true;
  for (const Mat2& gs : enumerate_sl(S, budget)) {
    bool brute = normalizes(gs, true);
    bool closed = S.val(gs.m[1]) >= rep.j &&
                  (S.val(S.sub(gs.m[0], S.one())) >= rep.j ||
                   (rep.center_branch && S.val(S.add(gs.m[0], S.one())) >= rep.j));
    if (brute) ++rep.size_Kprime;
    if (brute != closed) {
      rep.match_Kprime = false;
      rep.witness = "K' side: " + mat_str(S, gs) + (brute ? " normalizes" : " fails") +
                    " but the closed form says otherwise";
      break;
    }
  }
  return rep;
}

}  // namespace dyadic
