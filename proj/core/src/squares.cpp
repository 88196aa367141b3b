#include "dyadic/squares.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

int ceil2(int x) { return (x + 1) / 2; }

// effective level: square classes stabilize at 2e+1 in characteristic 0
int effective_level(const Field& F, int level) {
  if (level < 1) throw InvalidInput("square-class level must be >= 1");
  if (F->is_char2()) {
    if (level == kLevelFull)
      throw InfiniteSetError("the unit square-class set is infinite in characteristic 2");
    return level;
  }
  return std::min<long long>(level, 2LL * F->e() + 1);
}

std::string pack_window(const Scalar& u, int k) {
  std::string s(static_cast<std::size_t>(k), '\0');
  for (int j = 0; j < k; ++j) s[static_cast<std::size_t>(j)] = static_cast<char>(u.digit(j));
  return s;
}

// set of squares of units modulo P^k, cached per field/level
const std::unordered_set<std::string>& square_set(const Field& F, int k) {
  static std::map<std::pair<std::string, int>, std::unordered_set<std::string>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F->config_string(), k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // a^2 mod P^k only depends on a mod P^j
  int j = F->is_char2() ? ceil2(k) : std::max(k - F->e(), ceil2(k));
  j = std::max(j, 1);
  std::unordered_set<std::string> H;
  int q = F->q();
  std::vector<std::uint16_t> d(static_cast<std::size_t>(k), 0);
  // odometer over the first j digits, leading digit a unit
  while (true) {
    if (d[0] != 0) {
      Scalar a = Scalar::make(F, 0, d, k);
      H.insert(pack_window(a.square(), k));
    }
    int pos = j - 1;
    while (pos >= 0 && d[static_cast<std::size_t>(pos)] == q - 1) d[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++d[static_cast<std::size_t>(pos)];
  }
  return cache.emplace(std::move(key), std::move(H)).first->second;
}

bool window_is_square(const Scalar& u, int k_eff) {
  return square_set(u.field(), k_eff).count(pack_window(u, k_eff)) > 0;
}

Scalar lift_mask(const Field& F, std::uint16_t mask) {
  return Scalar::make(F, 0, {mask}, F->N());
}

void require_unit(const Scalar& u, const char* what) {
  if (!u.valid() || u.is_zero() || u.val() != 0)
    throw InvalidInput(std::string(what) + " requires a unit");
}

}  // namespace

std::vector<Scalar> ring_windows(const Field& F, int k) {
  if (k < 0) throw InvalidInput("window length must be >= 0");
  std::uint64_t total = ipow(F->q(), k);
  std::vector<Scalar> out;
  out.reserve(total);
  std::vector<std::uint16_t> d(static_cast<std::size_t>(k), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t m = n;
    for (int j = k - 1; j >= 0; --j) {
      d[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(m % F->q());
      m /= static_cast<std::uint64_t>(F->q());
    }
    out.push_back(Scalar::make(F, 0, d, k));
  }
  return out;
}

std::vector<Scalar> unit_windows(const Field& F, int k) {
  if (k < 1) throw InvalidInput("unit windows need k >= 1");
  std::vector<Scalar> out;
  out.reserve(ipow(F->q(), k) - ipow(F->q(), k - 1));
  for (auto& s : ring_windows(F, k))
    if (!s.is_zero() && s.val() == 0) out.push_back(std::move(s));
  return out;
}

std::uint64_t square_class_count(const Field& F, int level) {
  int k = effective_level(F, level);
  if (F->is_char2()) return ipow(F->q(), k / 2);
  if (k >= 2 * F->e() + 1) return 2 * ipow(F->q(), F->e());
  return ipow(F->q(), k / 2);
}

SquareClassSet square_class_reps(const Field& F, int level) {
  int k = effective_level(F, level);
  SquareClassSet S;
  S.field = F;
  S.level = level;
  Scalar one = Scalar::one(F);
  if (F->is_char2()) {
    if (k > F->N())
      throw InvalidInput("square-class level exceeds the field precision");
    // 1 + sum over odd positions j < k with free digits
    std::vector<int> pos;
    for (int j = 1; j < k; j += 2) pos.push_back(j);
    std::uint64_t total = ipow(F->q(), static_cast<int>(pos.size()));
    for (std::uint64_t n = 0; n < total; ++n) {
      Scalar r = one;
      std::uint64_t m = n;
      for (int j : pos) {
        auto mask = static_cast<std::uint16_t>(m % F->q());
        m /= static_cast<std::uint64_t>(F->q());
        if (mask) r = r + lift_mask(F, mask).shifted(j);
      }
      S.reps.push_back(r);
    }
  } else {
    int e = F->e();
    if (F->N() < 2 * e + 2)
      throw InvalidInput("square-class reps need precision N >= 2e+2");
    bool full = k >= 2 * e + 1;
    int m = full ? e : k / 2;
    Scalar four = Scalar::from_int(F, 4);
    std::uint64_t total = ipow(F->q(), m);
    int gammas = full ? 2 : 1;
    for (int g = 0; g < gammas; ++g) {
      for (std::uint64_t n = 0; n < total; ++n) {
        Scalar r = one;
        std::uint64_t mm = n;
        for (int i = 1; i <= m; ++i) {
          auto mask = static_cast<std::uint16_t>(mm % F->q());
          mm /= static_cast<std::uint64_t>(F->q());
          if (mask) r = r + lift_mask(F, mask).shifted(2 * i - 1);
        }
        if (g) r = r + four * lift_mask(F, F->aleph());
        S.reps.push_back(r);
      }
    }
  }
  std::sort(S.reps.begin(), S.reps.end(), [](const Scalar& a, const Scalar& b) {
    return a.digits() < b.digits();
  });
  return S;
}

SquareClassSet square_class_reps_lk(const Field& F, int ell, int k) {
  if (k < 1 || k >= ell) throw InvalidInput("need 1 <= k < ell");
  return square_class_reps(F, std::min(ell - k, k));
}

bool same_square_class(const Scalar& u, const Scalar& v, int level) {
  require_unit(u, "square-class comparison");
  require_unit(v, "square-class comparison");
  int k = effective_level(u.field(), level);
  if (u.ndigits() < k || v.ndigits() < k)
    throw InvalidInput("square-class comparison needs " + std::to_string(k) + " digits");
  return window_is_square(u * v.inverse(), k);
}

bool is_square_class_trivial(const Scalar& u, int level) {
  require_unit(u, "square test");
  int k = effective_level(u.field(), level);
  if (u.ndigits() < k)
    throw InvalidInput("square test needs " + std::to_string(k) + " digits");
  return window_is_square(u, k);
}

Scalar canonicalize(const Scalar& u, int level) {
  const Field& F = u.field();
  require_unit(u, "canonicalize");
  int k = effective_level(F, level);
  if (u.ndigits() < k)
    throw InvalidInput("canonicalize needs " + std::to_string(k) + " digits of the unit");
  SquareClassSet S = square_class_reps(F, level);
  const Scalar* hit = nullptr;
  for (const auto& r : S.reps) {
    if (window_is_square(u * r.inverse(), k)) {
      if (hit)
        throw VerifyError("square-class representatives fail to be a partition");
      hit = &r;
    }
  }
  if (!hit) throw VerifyError("no square-class representative matched");
  return *hit;
}

int square_class_index(const Scalar& u, int level) {
  const Field& F = u.field();
  require_unit(u, "square_class_index");
  int k = effective_level(F, level);
  if (u.ndigits() < k)
    throw InvalidInput("square_class_index needs " + std::to_string(k) + " digits");
  SquareClassSet S = square_class_reps(F, level);
  for (std::size_t i = 0; i < S.reps.size(); ++i)
    if (window_is_square(u * S.reps[i].inverse(), k)) return static_cast<int>(i);
  throw VerifyError("no square-class representative matched");
}

bool squaring_bound_check(const Field& F, const Scalar& a, int delta) {
  if (delta < 1) throw InvalidInput("delta must be >= 1");
  if (delta + 1 > F->N()) throw InvalidInput("squaring_bound_check needs N >= delta+1");
  require_unit(a, "squaring_bound_check");
  Scalar one = Scalar::one(F);
  if (!a.square().eq_mod(one, delta))
    throw InvalidInput("precondition failed: a^2 is not in 1 + P^delta");
  int j = F->is_char2() ? ceil2(delta) : std::max(delta - F->e(), ceil2(delta));
  return (a - one).is_zero_mod(j) || (a + one).is_zero_mod(j);
}

std::vector<std::uint16_t> rho_image(const Field& F, int delta) {
  if (delta < 1) throw InvalidInput("delta must be >= 1");
  if (F->N() < delta + 2) throw InvalidInput("rho_image needs N >= delta+2");
  std::vector<std::uint16_t> all;
  for (int m = 0; m < F->q(); ++m) all.push_back(static_cast<std::uint16_t>(m));
  bool below_2e = F->is_char2() || delta < 2 * F->e();
  if (below_2e) return delta % 2 == 0 ? all : std::vector<std::uint16_t>{0};
  if (delta == 2 * F->e()) return F->gf().artin_schreier_image(F->iota_residue());
  return all;  // delta >= 2e+1
}

std::vector<std::uint16_t> rho_image_oracle(const Field& F, int delta, bool pair_based) {
  if (delta < 1) throw InvalidInput("delta must be >= 1");
  if (F->N() < delta + 2) throw InvalidInput("rho_image_oracle needs N >= delta+2");
  Scalar one = Scalar::one(F);
  std::set<std::uint16_t> vals;
  auto units = unit_windows(F, delta + 1);
  if (pair_based) {
    for (const auto& a : units)
      for (const auto& d : units) {
        if (!(a * d).eq_mod(one, delta + 1)) continue;
        if (!a.eq_mod(d, delta)) continue;
        vals.insert((a - d).digit(delta));
      }
  } else {
    for (const auto& a : units) {
      if (!a.square().eq_mod(one, delta)) continue;
      vals.insert((a - a.inverse()).digit(delta));
    }
  }
  return {vals.begin(), vals.end()};
}

}  // namespace dyadic
