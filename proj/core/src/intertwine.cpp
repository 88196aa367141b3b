#include "dyadic/intertwine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dyadic/common.hpp"
#include "dyadic/squares.hpp"

namespace dyadic {

namespace {

// least common order for accumulating products of the listed roots exactly
int common_order(const std::vector<RootOfUnity>& rs) {
  long long n = 1;
  for (const auto& r : rs) n = std::lcm(n, r.order());
  return static_cast<int>(n);
}

long long chi_branch(const ResidueRing& R, const Mat2& a, int ell) {
  return chi_ell(R, a, ell);
}

// chi as the unit sum of an additive character: zero off 1+P on the corner,
// otherwise sum over x in f^x of psi(x * a12 pi^{-ell})
long long chi_psi(const ResidueRing& R, const Mat2& a, int ell, const Psi& psi) {
  if (R.val(R.sub(a.m[0], R.one())) < 1) return 0;
  const Field& F = R.field();
  Scalar strip = R.to_scalar(a.m[1]).shifted(-ell);
  std::vector<RootOfUnity> terms;
  for (std::uint16_t x = 1; x < (1u << F->f()); ++x)
    terms.push_back(psi(Scalar::make(F, 0, {x}, 1) * strip));
  Cyc acc(common_order(terms));
  for (const auto& r : terms) acc.add(1, r);
  return acc.as_integer();
}

Mat2 cell_rep(const ResidueRing& R, const BruhatCell& gamma) {
  return cell_representative(R, gamma);
}

}  // namespace

EtaHat::EtaHat(Field F, int ell, Scalar u, int zeta_exp, Domain dom)
    : F_(std::move(F)),
      gf_(F_->f()),
      ell_(ell),
      m_((ell + 1) / 2),
      mp_(ell / 2 + 1),
      zeta_(zeta_exp),
      u_(std::move(u)),
      dom_(dom),
      psi_(F_) {
  if (ell < 1) throw InvalidInput("EtaHat: ell must be >= 1");
  if (u_.is_zero() || u_.val() != 0) throw InvalidInput("EtaHat: u must be a unit");
  const int qm1 = F_->q() - 1;
  zeta_ = ((zeta_ % qm1) + qm1) % qm1;
  if (m_ + mp_ != ell_ + 1) throw VerifyError("EtaHat: m + m' != ell + 1");
}

RootOfUnity EtaHat::value(const ResidueRing& R, const Mat2& g) const {
  if (R.field()->config_string() != F_->config_string() || R.n() < ell_ + 1)
    throw InvalidInput("EtaHat: need the same field at modulus >= ell + 1");
  const bool ok = dom_ == Domain::sl ? in_GammaPrime(R, g, ell_) : in_Gamma(R, g, ell_);
  if (!ok) throw InvalidInput("EtaHat: element outside the domain subgroup");
  RootOfUnity out = RootOfUnity::one();
  if (zeta_ != 0)
    out = RootOfUnity::make(static_cast<long long>(zeta_) * gf_.dlog(R.digit_of(g.m[0], 0)),
                            F_->q() - 1);
  Scalar arg = R.to_scalar(R.mul(R.inv(g.m[0]), g.m[1])).shifted(-ell_) * u_;
  return out * psi_(arg);
}

std::vector<Mat2> enumerate_Bprime(const ResidueRing& R, int ell, std::uint64_t budget) {
  if (ell < 1) throw InvalidInput("enumerate_Bprime: ell must be >= 1");
  const std::uint32_t card = R.card();
  std::uint64_t units = 0, deep = 0;
  for (std::uint32_t x = 0; x < card; ++x) {
    if (R.val(static_cast<std::uint16_t>(x)) == 0) ++units;
    if (R.val(static_cast<std::uint16_t>(x)) >= std::min(ell, R.n())) ++deep;
  }
  check_budget(units * deep * card, budget, "B'_ell enumeration");
  std::vector<Mat2> out;
  out.reserve(units * deep * card);
  for (std::uint32_t a = 0; a < card; ++a) {
    if (R.val(static_cast<std::uint16_t>(a)) != 0) continue;
    const std::uint16_t ai = R.inv(static_cast<std::uint16_t>(a));
    for (std::uint32_t b = 0; b < card; ++b) {
      if (R.val(static_cast<std::uint16_t>(b)) < std::min(ell, R.n())) continue;
      for (std::uint32_t c = 0; c < card; ++c) {
        const std::uint16_t bc = R.mul(static_cast<std::uint16_t>(b),
                                       static_cast<std::uint16_t>(c));
        const std::uint16_t d = R.mul(R.add(R.one(), bc), ai);
        out.push_back(Mat2{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                           static_cast<std::uint16_t>(c), d});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long intertwine_dim_coset(const Field& F, int ell, const BruhatCell& gamma) {
  if (ell < 1) throw InvalidInput("intertwine_dim_coset: ell must be >= 1");
  switch (gamma.kind) {
    case BruhatCell::Kind::identity: return 1;
    case BruhatCell::Kind::weyl: return 0;
    case BruhatCell::Kind::unipotent: break;
  }
  const int i = ell - gamma.k;
  if (2 * gamma.k <= ell) return 0;
  if (F->is_char2() || i < 2 * F->e()) return i % 2 == 1 ? F->q() - 1 : 0;
  if (i == 2 * F->e()) return 1;
  return 0;
}

long long intertwine_dim_coset_brute(const Field& F, int ell, const BruhatCell& gamma,
                                     ChiRoute route, std::uint64_t budget) {
  Ring R = ResidueRing::make(F, ell + 1);
  std::vector<Mat2> bp = enumerate_Bprime(*R, ell, budget);
  const Mat2 g0 = cell_rep(*R, gamma);
  const Mat2 gi = mat_inv(*R, g0);

  Psi psi_plain(F);
  Psi psi_twist(F, Scalar::one(F) + Scalar::uniformizer_pow(F, 1));
  auto chi = [&](const Mat2& a) -> long long {
    switch (route) {
      case ChiRoute::branch: return chi_branch(*R, a, ell);
      case ChiRoute::psi_sum: return chi_psi(*R, a, ell, psi_plain);
      case ChiRoute::psi_sum_twisted: return chi_psi(*R, a, ell, psi_twist);
    }
    throw InvalidInput("intertwine_dim_coset_brute: bad chi route");
  };

  long long sum = 0;
  std::uint64_t size = 0;
  for (const Mat2& a : bp) {
    const Mat2 b = mat_mul(*R, mat_mul(*R, g0, a), gi);
    if (!in_Bprime(*R, b, ell)) continue;
    ++size;
    sum += chi(a) * chi(b);
  }
  if (size == 0 || sum % static_cast<long long>(size) != 0 || sum < 0)
    throw VerifyError("intertwine_dim_coset_brute: non-integral inner product");
  return sum / static_cast<long long>(size);
}

std::vector<BruhatCell> supported_cosets(const Field& F, int ell) {
  std::vector<BruhatCell> out;
  for (const BruhatCell& c : double_cosets_Bell(F, ell))
    if (intertwine_dim_coset(F, ell, c) > 0) out.push_back(c);
  return out;
}

std::uint64_t sigma_end_dim(const Field& F, int ell) {
  if (ell < 1) throw InvalidInput("sigma_end_dim: ell must be >= 1");
  std::uint64_t out = 1;
  if (F->le_4e(ell)) {
    for (int i = 0; i < (ell + 1) / 4; ++i) out *= F->q();
    return out;
  }
  for (int i = 0; i < F->e(); ++i) out *= F->q();
  return 2 * out;
}

std::uint64_t sigma_end_dim_brute(const Field& F, int ell, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (const BruhatCell& c : double_cosets_Bell(F, ell))
    total += static_cast<std::uint64_t>(intertwine_dim_coset_brute(F, ell, c,
                                                                   ChiRoute::branch, budget));
  return total;
}

std::vector<Mat2> gamma_prime_dcoset_reps(const ResidueRing& R, int ell) {
  const Field& F = R.field();
  if (ell < 1 || R.n() < ell + 1)
    throw InvalidInput("gamma_prime_dcoset_reps: need modulus >= ell + 1");
  const int m = (ell + 1) / 2, mp = ell / 2 + 1;
  const int j = F->is_char2() ? (m + 1) / 2 : std::max(m - F->e(), (m + 1) / 2);

  // units modulo the subgroup +-1 + P^j
  std::vector<std::uint16_t> areps;
  for (std::uint32_t x = 0; x < R.card(); ++x) {
    const auto u = static_cast<std::uint16_t>(x);
    if (R.val(u) != 0) continue;
    bool fresh = true;
    for (std::uint16_t r : areps) {
      const std::uint16_t t = R.mul(u, R.inv(r));
      if (R.val(R.sub(t, R.one())) >= j || R.val(R.add(t, R.one())) >= j) {
        fresh = false;
        break;
      }
    }
    if (fresh) areps.push_back(u);
  }

  Ring shallow = ResidueRing::make(F, mp);
  std::vector<Mat2> out;
  out.push_back(mat_w(R));
  for (std::uint16_t a : areps)
    for (std::uint32_t bi = 0; bi < shallow->card(); ++bi) {
      const std::uint16_t b = R.lift_from(*shallow, static_cast<std::uint16_t>(bi));
      out.push_back(Mat2{R.inv(a), b, 0, a});
    }
  return out;
}

GammaCosetAudit gamma_prime_dcosets_oracle(const Field& F, int ell, std::uint64_t budget) {
  Ring R = ResidueRing::make(F, ell + 1);
  std::vector<Mat2> K = enumerate_sl(*R, budget);
  const int m = (ell + 1) / 2, mp = ell / 2 + 1;

  // generators of Gamma'(ell): all lowers, uppers with entry in P^{m'}, and
  // diagonals diag(a, a^{-1}) with a^2 = 1 mod P^m
  std::vector<Mat2> gens;
  for (std::uint32_t c = 0; c < R->card(); ++c)
    gens.push_back(mat_lower(*R, static_cast<std::uint16_t>(c)));
  for (std::uint32_t b = 0; b < R->card(); ++b)
    if (R->val(static_cast<std::uint16_t>(b)) >= mp)
      gens.push_back(mat_upper(*R, static_cast<std::uint16_t>(b)));
  for (std::uint32_t a = 0; a < R->card(); ++a) {
    const auto u = static_cast<std::uint16_t>(a);
    if (R->val(u) != 0) continue;
    if (R->val(R->sub(R->mul(u, u), R->one())) >= m)
      gens.push_back(mat_diag(*R, u, R->inv(u)));
  }
  for (const Mat2& g : gens)
    if (!in_GammaPrime(*R, g, ell))
      throw VerifyError("gamma_prime_dcosets_oracle: generator outside Gamma'");

  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < K.size(); ++i) index[K[i].key()] = i;
  std::vector<int> orbit(K.size(), -1);
  int norb = 0;
  for (std::size_t s = 0; s < K.size(); ++s) {
    if (orbit[s] != -1) continue;
    const int id = norb++;
    std::vector<std::size_t> stack{s};
    orbit[s] = id;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (const Mat2& g : gens) {
        for (const Mat2& nb : {mat_mul(*R, g, K[cur]), mat_mul(*R, K[cur], g)}) {
          const std::size_t t = index.at(nb.key());
          if (orbit[t] == -1) {
            orbit[t] = id;
            stack.push_back(t);
          }
        }
      }
    }
  }

  GammaCosetAudit audit;
  audit.group_size = K.size();
  audit.orbit_count = static_cast<std::uint64_t>(norb);
  const std::vector<Mat2> reps = gamma_prime_dcoset_reps(*R, ell);
  audit.rep_count = reps.size();
  std::set<int> hit;
  std::vector<int> diag_orbits;
  for (const Mat2& rep : reps) {
    const int id = orbit[index.at(rep.key())];
    hit.insert(id);
    if (rep.m[1] == 0 && rep.m[2] == 0) diag_orbits.push_back(id);
  }
  audit.reps_cover = static_cast<int>(hit.size()) == norb;
  const int identity_orbit = orbit[index.at(mat_identity(*R).key())];
  audit.diagonals_distinct = true;
  std::set<int> seen;
  int identity_hits = 0;
  for (int id : diag_orbits) {
    if (!seen.insert(id).second) audit.diagonals_distinct = false;
    if (id == identity_orbit) ++identity_hits;
  }
  // exactly one diagonal class (the trivial one) meets Gamma' itself
  if (identity_hits != 1) audit.diagonals_distinct = false;
  return audit;
}

int I_intertwine(const Field& F, int ell, const Scalar& u, const Scalar& uprime) {
  if (ell < 1) throw InvalidInput("I_intertwine: ell must be >= 1");
  if (u.is_zero() || u.val() != 0 || uprime.is_zero() || uprime.val() != 0)
    throw InvalidInput("I_intertwine: u and u' must be units");
  const int m = (ell + 1) / 2;
  return canonicalize(u, m) == canonicalize(uprime, m) ? 1 : 0;
}

int I_intertwine_brute(const Field& F, int ell, const Scalar& u, const Scalar& uprime,
                       int zeta_exp, std::uint64_t budget) {
  Ring R = ResidueRing::make(F, ell + 1);
  std::vector<Mat2> gammap;
  for (const Mat2& g : enumerate_sl(*R, budget))
    if (in_GammaPrime(*R, g, ell)) gammap.push_back(g);

  EtaHat eta_u(F, ell, u, zeta_exp), eta_up(F, ell, uprime, zeta_exp);
  int total = 0;
  for (const Mat2& gamma : gamma_prime_dcoset_reps(*R, ell)) {
    const Mat2 gi = mat_inv(*R, gamma);
    std::vector<RootOfUnity> terms;
    for (const Mat2& g : gammap) {
      const Mat2 cg = mat_mul(*R, mat_mul(*R, gi, g), gamma);
      if (!in_GammaPrime(*R, cg, ell)) continue;
      terms.push_back(eta_u.value(*R, g) * eta_up.value(*R, cg).conj());
    }
    if (terms.empty())
      throw VerifyError("I_intertwine_brute: empty intersection subgroup");
    Cyc acc(common_order(terms));
    for (const auto& r : terms) acc.add(1, r);
    const long long v = acc.as_integer();
    const auto sz = static_cast<long long>(terms.size());
    if (v % sz != 0 || v / sz < 0 || v / sz > 1)
      throw VerifyError("I_intertwine_brute: coset dimension not 0 or 1");
    total += static_cast<int>(v / sz);
  }
  return total;
}

long long j_mackey_dim(const Field& F, int ell, int omega_exp, std::uint64_t budget) {
  Ring R = ResidueRing::make(F, ell + 1);
  const int q = F->q(), qm1 = q - 1;
  omega_exp = ((omega_exp % qm1) + qm1) % qm1;
  GF gf(F->f());
  EtaHat eta(F, ell, Scalar::one(F), omega_exp, EtaHat::Domain::gl);

  std::vector<RootOfUnity> terms;
  std::vector<long long> coeffs;
  for (const Mat2& g : enumerate_gl(*R, budget)) {
    if (!in_Gamma(*R, g, ell) || R->val(g.m[1]) < ell) continue;
    RootOfUnity omega = RootOfUnity::one();
    if (omega_exp != 0)
      omega = RootOfUnity::make(static_cast<long long>(omega_exp) * gf.dlog(R->digit_of(g.m[0], 0)),
                                qm1);
    terms.push_back(eta.value(*R, g) * omega.conj());
    coeffs.push_back(R->val(g.m[1]) >= ell + 1 ? q - 1 : -1);
  }
  if (terms.empty()) throw VerifyError("j_mackey_dim: empty intersection subgroup");
  Cyc acc(common_order(terms));
  for (std::size_t i = 0; i < terms.size(); ++i) acc.add(coeffs[i], terms[i]);
  const long long v = acc.as_integer();
  const auto sz = static_cast<long long>(terms.size());
  if (v % sz != 0)
    throw VerifyError("j_mackey_dim: non-integral inner product");
  return v / sz;
}

bool J_is_mackey(const Field& F, int ell, int omega_exp, std::uint64_t budget) {
  const long long dim = j_mackey_dim(F, ell, omega_exp, budget);
  if (dim != 1)
    throw VerifyError("J_is_mackey: intertwining dimension is not 1");
  return true;
}

}  // namespace dyadic
