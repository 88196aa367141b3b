#include "dyadic/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

// Scalars and characters check field compatibility by pointer identity, so
// every factory funnels through this registry: equal configurations always
// hand back the same shared instance.
Field intern_field(Field built) {
  static std::mutex mu;
  static std::map<std::string, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  Field& slot = cache[built->config_string()];
  if (!slot) slot = std::move(built);
  return slot;
}

using u64 = std::uint64_t;
using W = std::vector<u64>;  // element of the truncated Witt ring, length f
using R = std::vector<W>;    // polynomial of degree < e over W

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

// Characteristic-0 backend: the valuation ring is represented as
// W[x]/(E(x)) with W = (Z/2^M)[y]/Qlift(y), Qlift the 0/1 lift of the
// residue-field modulus. Digit windows are converted to and from this
// representation around every arithmetic operation; each division by the
// uniformizer costs one 2-adic level per e digits, so M has headroom over
// ceil(N/e).
struct FieldSpec::Backend {
  int f = 1;
  int e = 1;
  int M = 0;
  u64 mask = 0;
  const GF* gf = nullptr;
  std::vector<u64> qlift;   // 0/1 coefficients of the residue modulus, size f
  std::vector<W> elow;      // Eisenstein coefficients c_0..c_{e-1} embedded in W
  R two_over_pi;            // the element 2/pi (valuation e-1)
  R iota;                   // unit with 2 = iota * pi^e
  std::vector<u64> trpow;   // Tr_{F/W}(pi^k) for k < e (plain integers mod 2^M)
  std::vector<u64> trw;     // Tr_{W/Z_2}(y^j) for j < f (mod 2^M)

  W wzero() const { return W(f, 0); }
  W wint(long long n) const { W w(f, 0); w[0] = static_cast<u64>(n) & mask; return w; }
  W wlift(std::uint16_t m) const {
    W w(f, 0);
    for (int j = 0; j < f; ++j) w[j] = (m >> j) & 1u;
    return w;
  }
  std::uint16_t wres(const W& w) const {
    std::uint16_t m = 0;
    for (int j = 0; j < f; ++j) m |= static_cast<std::uint16_t>((w[j] & 1u) << j);
    return m;
  }
  W wadd(const W& a, const W& b) const {
    W c(f);
    for (int j = 0; j < f; ++j) c[j] = (a[j] + b[j]) & mask;
    return c;
  }
  W wsub(const W& a, const W& b) const {
    W c(f);
    for (int j = 0; j < f; ++j) c[j] = (a[j] - b[j]) & mask;
    return c;
  }
  W wneg(const W& a) const {
    W c(f);
    for (int j = 0; j < f; ++j) c[j] = (0 - a[j]) & mask;
    return c;
  }
  W wscal(const W& a, u64 s) const {
    W c(f);
    for (int j = 0; j < f; ++j) c[j] = (a[j] * s) & mask;
    return c;
  }
  W wmul(const W& a, const W& b) const {
    std::vector<u64> c(2 * f - 1, 0);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) & mask;
    for (int k = 2 * f - 2; k >= f; --k) {
      u64 t = c[k];
      if (!t) continue;
      c[k] = 0;
      for (int j = 0; j < f; ++j)
        if (qlift[j]) c[k - f + j] = (c[k - f + j] - t) & mask;
    }
    c.resize(f);
    return c;
  }
  W winv(const W& a) const {
    std::uint16_t r = wres(a);
    if (r == 0) throw InvalidInput("inverse of a non-unit in the Witt ring");
    W z = wlift(gf->inv(r));
    int iters = ceil_log2(std::max(2, M)) + 2;
    for (int it = 0; it < iters; ++it) {
      W az = wmul(a, z);
      W two_minus = wsub(wint(2), az);
      z = wmul(z, two_minus);
    }
    return z;
  }

  R rzero() const { return R(e, wzero()); }
  R rone() const { R r = rzero(); r[0] = wint(1); return r; }
  R radd(const R& a, const R& b) const {
    R c(e);
    for (int k = 0; k < e; ++k) c[k] = wadd(a[k], b[k]);
    return c;
  }
  R rsub(const R& a, const R& b) const {
    R c(e);
    for (int k = 0; k < e; ++k) c[k] = wsub(a[k], b[k]);
    return c;
  }
  R rneg(const R& a) const {
    R c(e);
    for (int k = 0; k < e; ++k) c[k] = wneg(a[k]);
    return c;
  }
  R rmul(const R& a, const R& b) const {
    std::vector<W> c(2 * e - 1, wzero());
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) c[i + j] = wadd(c[i + j], wmul(a[i], b[j]));
    for (int k = 2 * e - 2; k >= e; --k) {
      W t = c[k];
      c[k] = wzero();
      for (int j = 0; j < e; ++j) c[k - e + j] = wsub(c[k - e + j], wmul(t, elow[j]));
    }
    c.resize(e);
    return c;
  }
  // multiply by the uniformizer, reducing the top coefficient through E
  R rmul_pi(const R& a) const {
    R c(e, wzero());
    W t = a[e - 1];
    for (int k = e - 1; k >= 1; --k) c[k] = a[k - 1];
    c[0] = wzero();
    for (int j = 0; j < e; ++j) c[j] = wsub(c[j], wmul(t, elow[j]));
    return c;
  }
  R rpow(R base, long long k) const {
    R acc = rone();
    while (k > 0) {
      if (k & 1) acc = rmul(acc, base);
      base = rmul(base, base);
      k >>= 1;
    }
    return acc;
  }
  R rinv(const R& a) const {
    std::uint16_t r = wres(a[0]);
    if (r == 0) throw InvalidInput("inverse of a non-unit");
    R z = rzero();
    z[0] = wlift(gf->inv(r));
    int iters = ceil_log2(std::max(2, e * M)) + 2;
    R two = rzero();
    two[0] = wint(2);
    for (int it = 0; it < iters; ++it) z = rmul(z, rsub(two, rmul(a, z)));
    return z;
  }

  R embed(const FieldSpec::Digits& d) const {
    R x = rzero();
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
      x = rmul_pi(x);
      x[0] = wadd(x[0], wlift(d[static_cast<std::size_t>(i)]));
    }
    return x;
  }

  FieldSpec::Digits extract(R x, int L) const {
    if (L > e * (M - 1))
      throw InvalidInput("digit window exceeds backend precision");
    FieldSpec::Digits out(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
      std::uint16_t m = wres(x[0]);
      out[static_cast<std::size_t>(i)] = m;
      for (int j = 0; j < f; ++j) x[0][j] = (x[0][j] - ((m >> j) & 1u)) & mask;
      // exact division by pi: drop one power, then fold in (x_0/2)*(2/pi)
      W half(f);
      for (int j = 0; j < f; ++j) half[j] = (x[0][j] >> 1) & mask;
      for (int k = 0; k + 1 < e; ++k) x[k] = x[k + 1];
      x[e - 1] = wzero();
      for (int k = 0; k < e; ++k) x[k] = wadd(x[k], wmul(half, two_over_pi[k]));
    }
    return out;
  }

  u64 trace_mod(const R& x) const {
    W tfw = wzero();
    for (int k = 0; k < e; ++k) tfw = wadd(tfw, wscal(x[k], trpow[k]));
    u64 t = 0;
    for (int j = 0; j < f; ++j) t = (t + tfw[j] * trw[j]) & mask;
    return t;
  }
};

FieldSpec::FieldSpec(int characteristic, int f, int N, std::string kind)
    : char_(characteristic), f_(f), q_(1 << f), N_(N), kind_(std::move(kind)), gf_(f) {
  if (f < 1 || f > 8) throw InvalidInput("residue degree must be between 1 and 8");
  if (N < 1 || N > 48) throw InvalidInput("precision must be between 1 and 48 digits");
  auto img = gf_.artin_schreier_image(1);
  for (std::uint16_t m = 0;; ++m) {
    if (!std::binary_search(img.begin(), img.end(), m)) {
      aleph_ = m;
      break;
    }
  }
}

FieldSpec::~FieldSpec() = default;

void FieldSpec::init_char0(const std::vector<long long>& low) {
  eis_low_ = low;
  e_ = static_cast<int>(low.size());
  if (e_ < 1) throw InvalidInput("Eisenstein polynomial must have positive degree");
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (low[i] % 2 != 0)
      throw InvalidInput("polynomial is not Eisenstein at 2: coefficient of x^" +
                         std::to_string(i) + " is odd");
  }
  if ((low[0] / 2) % 2 == 0)
    throw InvalidInput("polynomial is not Eisenstein at 2: constant term is divisible by 4");

  auto build = [&](int M) {
    auto b = std::make_unique<Backend>();
    b->f = f_;
    b->e = e_;
    b->M = M;
    b->mask = (M >= 64) ? ~0ull : ((1ull << M) - 1);
    b->gf = &gf_;
    b->qlift.assign(static_cast<std::size_t>(f_), 0);
    for (int j = 0; j < f_; ++j) b->qlift[static_cast<std::size_t>(j)] = (gf_.modulus() >> j) & 1u;
    b->elow.reserve(low.size());
    for (long long c : low) b->elow.push_back(b->wint(c));
    // 2 = -gamma^{-1}(pi^e + c_{e-1} pi^{e-1} + ... + c_1 pi), gamma = c_0/2,
    // so 2/pi = -gamma^{-1}(pi^{e-1} + c_{e-1} pi^{e-2} + ... + c_1).
    W gamma_inv = b->winv(b->wint(low[0] / 2));
    W neg_gi = b->wneg(gamma_inv);
    b->two_over_pi = b->rzero();
    b->two_over_pi[static_cast<std::size_t>(e_ - 1)] = neg_gi;
    for (int j = 1; j < e_; ++j)
      b->two_over_pi[static_cast<std::size_t>(j - 1)] =
          b->wadd(b->two_over_pi[static_cast<std::size_t>(j - 1)],
                  b->wmul(neg_gi, b->elow[static_cast<std::size_t>(j)]));
    // iota^{-1} = pi^e/2 = -(gamma + sum_{j>=1} (c_j/2) pi^j), all c_j even.
    R iota_inv = b->rzero();
    iota_inv[0] = b->wint(low[0] / 2);
    for (int j = 1; j < e_; ++j) iota_inv[static_cast<std::size_t>(j)] = b->wint(low[static_cast<std::size_t>(j)] / 2);
    iota_inv = b->rneg(iota_inv);
    b->iota = b->rinv(iota_inv);
    // Newton power sums for Tr_{F/W}(pi^k) and Tr_{W/Z2}(y^j)
    b->trpow.assign(static_cast<std::size_t>(e_), 0);
    b->trpow[0] = static_cast<u64>(e_) & b->mask;
    for (int k = 1; k < e_; ++k) {
      u64 s = (0 - static_cast<u64>(k) * static_cast<u64>(low[static_cast<std::size_t>(e_ - k)])) & b->mask;
      for (int i = 1; i < k; ++i)
        s = (s - static_cast<u64>(low[static_cast<std::size_t>(e_ - i)]) * b->trpow[static_cast<std::size_t>(k - i)]) & b->mask;
      b->trpow[static_cast<std::size_t>(k)] = s;
    }
    b->trw.assign(static_cast<std::size_t>(f_), 0);
    b->trw[0] = static_cast<u64>(f_) & b->mask;
    for (int k = 1; k < f_; ++k) {
      u64 s = (0 - static_cast<u64>(k) * b->qlift[static_cast<std::size_t>(f_ - k)]) & b->mask;
      for (int i = 1; i < k; ++i)
        s = (s - b->qlift[static_cast<std::size_t>(f_ - i)] * b->trw[static_cast<std::size_t>(k - i)]) & b->mask;
      b->trw[static_cast<std::size_t>(k)] = s;
    }
    return b;
  };

  int M0 = ceil_div(N_, e_) + 6;
  if (M0 > 62) throw InvalidInput("precision too large for the Witt backend");
  b_ = build(M0);
  iota_res_ = b_->wres(b_->iota[0]);

  // valuation of E'(pi): E'(x) = e x^{e-1} + sum_{j=1}^{e-1} j c_j x^{j-1}
  R deriv = b_->rzero();
  deriv[static_cast<std::size_t>(e_ - 1)] = b_->wint(e_);
  for (int j = 1; j < e_; ++j)
    deriv[static_cast<std::size_t>(j - 1)] =
        b_->wadd(deriv[static_cast<std::size_t>(j - 1)], b_->wint(static_cast<long long>(j) * low[static_cast<std::size_t>(j)]));
  int cap = e_ * (b_->M - 1);
  Digits dd = b_->extract(deriv, cap);
  diff_val_ = -1;
  for (int i = 0; i < cap; ++i)
    if (dd[static_cast<std::size_t>(i)] != 0) {
      diff_val_ = i;
      break;
    }
  if (diff_val_ < 0)
    throw InvalidInput("different exponent exceeds the supported precision");
  if (diff_val_ + 1 >= N_)
    throw InvalidInput("precision too small for this polynomial: need N > " +
                       std::to_string(diff_val_ + 1));

  int M1 = ceil_div(N_, e_) + ceil_div(diff_val_ + 1, e_) + 4;
  if (M1 > 62) throw InvalidInput("precision too large for the Witt backend");
  if (M1 > M0) b_ = build(M1);
}

Field FieldSpec::make_q2(int N) {
  auto F = std::shared_ptr<FieldSpec>(new FieldSpec(0, 1, N, "q2"));
  F->init_char0({-2});
  return intern_field(std::move(F));
}

Field FieldSpec::make_laurent(int f, int N) {
  auto F = std::shared_ptr<FieldSpec>(new FieldSpec(2, f, N, "laurent"));
  F->iota_res_ = 0;
  return intern_field(std::move(F));
}

Field FieldSpec::make_eisenstein(int f, std::vector<long long> low_coeffs, int N) {
  auto F = std::shared_ptr<FieldSpec>(new FieldSpec(0, f, N, "eisenstein"));
  F->init_char0(low_coeffs);
  return intern_field(std::move(F));
}

int FieldSpec::e() const {
  if (char_ == 2) throw InvalidInput("ramification index is infinite in characteristic 2");
  return e_;
}

int FieldSpec::diff_val() const {
  if (char_ == 2) throw InvalidInput("different exponent is not defined in characteristic 2");
  return diff_val_;
}

// --- digit-window operations -------------------------------------------------

FieldSpec::Digits FieldSpec::dig_add(const Digits& a, const Digits& b) const {
  std::size_t L = std::min(a.size(), b.size());
  Digits c(L);
  if (char_ == 2) {
    for (std::size_t i = 0; i < L; ++i) c[i] = gf_.add(a[i], b[i]);
    return c;
  }
  Digits ta(a.begin(), a.begin() + static_cast<long>(L));
  Digits tb(b.begin(), b.begin() + static_cast<long>(L));
  return b_->extract(b_->radd(b_->embed(ta), b_->embed(tb)), static_cast<int>(L));
}

FieldSpec::Digits FieldSpec::dig_neg(const Digits& a) const {
  if (char_ == 2) return a;
  return b_->extract(b_->rneg(b_->embed(a)), static_cast<int>(a.size()));
}

FieldSpec::Digits FieldSpec::dig_sub(const Digits& a, const Digits& b) const {
  if (char_ == 2) return dig_add(a, b);
  std::size_t L = std::min(a.size(), b.size());
  Digits ta(a.begin(), a.begin() + static_cast<long>(L));
  Digits tb(b.begin(), b.begin() + static_cast<long>(L));
  return b_->extract(b_->rsub(b_->embed(ta), b_->embed(tb)), static_cast<int>(L));
}

FieldSpec::Digits FieldSpec::dig_mul(const Digits& a, const Digits& b) const {
  std::size_t L = std::min(a.size(), b.size());
  Digits c(L, 0);
  if (char_ == 2) {
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; i + j < L; ++j)
        if (i < a.size() && j < b.size())
          c[i + j] = gf_.add(c[i + j], gf_.mul(a[i], b[j]));
    return c;
  }
  Digits ta(a.begin(), a.begin() + static_cast<long>(L));
  Digits tb(b.begin(), b.begin() + static_cast<long>(L));
  return b_->extract(b_->rmul(b_->embed(ta), b_->embed(tb)), static_cast<int>(L));
}

FieldSpec::Digits FieldSpec::dig_inv(const Digits& a, int L) const {
  if (a.empty() || a[0] == 0) throw InvalidInput("inverse of a non-unit digit window");
  if (char_ == 2) {
    Digits b(static_cast<std::size_t>(L), 0);
    std::uint16_t a0i = gf_.inv(a[0]);
    b[0] = a0i;
    for (int k = 1; k < L; ++k) {
      std::uint16_t s = 0;
      for (int i = 1; i <= k; ++i) {
        std::uint16_t ai = (static_cast<std::size_t>(i) < a.size()) ? a[static_cast<std::size_t>(i)] : 0;
        s = gf_.add(s, gf_.mul(ai, b[static_cast<std::size_t>(k - i)]));
      }
      b[static_cast<std::size_t>(k)] = gf_.mul(a0i, s);
    }
    return b;
  }
  return b_->extract(b_->rinv(b_->embed(a)), L);
}

FieldSpec::Digits FieldSpec::dig_from_int(long long n, int L) const {
  if (char_ == 2) {
    Digits d(static_cast<std::size_t>(L), 0);
    if (L > 0 && (n & 1)) d[0] = 1;
    return d;
  }
  R x = b_->rzero();
  x[0] = b_->wint(n);
  return b_->extract(x, L);
}

RootOfUnity FieldSpec::psi_value(const Digits& window, int v, int prec_len) const {
  // strip leading zeros so v is the true valuation of the window
  int z = 0;
  while (z < static_cast<int>(window.size()) && window[static_cast<std::size_t>(z)] == 0) ++z;
  if (z == static_cast<int>(window.size())) {
    if (v + prec_len >= 1) return RootOfUnity::one();
    throw InvalidInput("additive character undetermined: element only known in P^" +
                       std::to_string(v + prec_len));
  }
  int vv = v + z;
  if (v + prec_len < 1)
    throw InvalidInput("additive character undetermined: element only known in P^" +
                       std::to_string(v + prec_len));
  if (vv >= 1) return RootOfUnity::one();

  if (char_ == 2) {
    // psi(x) = (-1)^{Tr(coefficient of t^0)}
    std::uint16_t d0 = 0;
    if (-vv < static_cast<int>(window.size()) - z) d0 = window[static_cast<std::size_t>(z - vv)];
    return RootOfUnity::make(gf_.trace(d0), 2);
  }

  // characteristic 0: exp(2 pi i {Tr(pi^{-d-1} x)}_2); the value only depends
  // on x mod P, so the window may be zero-padded to the working length.
  int d = diff_val_;
  int s = ceil_div(d + 1 - vv, e_);
  if (s > b_->M) throw InvalidInput("additive character needs more backend precision");
  int want = 2 * d + 1 - vv;
  Digits w(window.begin() + z, window.end());
  if (static_cast<int>(w.size()) < want) w.resize(static_cast<std::size_t>(want), 0);
  R x = b_->embed(w);
  R zel = b_->rmul(b_->rpow(b_->iota, s), x);
  int t = e_ * s - (d + 1) + vv;
  for (int i = 0; i < t; ++i) zel = b_->rmul_pi(zel);
  u64 tr = b_->trace_mod(zel);
  u64 num = tr & ((s >= 64) ? ~0ull : ((1ull << s) - 1));
  return RootOfUnity::make(static_cast<long long>(num), 1ll << s);
}

// --- description and parsing -------------------------------------------------

std::string FieldSpec::residue_str(std::uint16_t mask) const {
  if (mask == 0) return "0";
  std::string s;
  for (int j = f_ - 1; j >= 0; --j) {
    if (!((mask >> j) & 1)) continue;
    if (!s.empty()) s += "+";
    if (j == 0) s += "1";
    else if (j == 1) s += "y";
    else s += "y^" + std::to_string(j);
  }
  return s;
}

namespace {

std::string poly_string(const std::vector<long long>& low) {
  // monic of degree low.size() with the given lower coefficients
  int e = static_cast<int>(low.size());
  std::ostringstream os;
  os << (e == 1 ? "x" : "x^" + std::to_string(e));
  for (int j = e - 1; j >= 0; --j) {
    long long c = low[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    os << (c > 0 ? "+" : "-");
    long long a = c > 0 ? c : -c;
    if (a != 1 || j == 0) os << a;
    if (j >= 1) {
      if (a != 1) os << "*";
      os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

// parse a monic integer polynomial in x, e.g. "x^2-2" or "x^3+2*x+2"
std::vector<long long> parse_poly(const std::string& s) {
  struct Term { long long coef; int deg; };
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip();
  bool first = true;
  while (i < s.size()) {
    long long sign = 1;
    skip();
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw InvalidInput("cannot parse polynomial: expected + or - in '" + s + "'");
    }
    first = false;
    skip();
    long long coef = 1;
    bool saw_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        coef = coef * 10 + (s[i++] - '0');
      saw_num = true;
    }
    skip();
    if (i < s.size() && s[i] == '*') { ++i; skip(); }
    int deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw InvalidInput("cannot parse polynomial exponent in '" + s + "'");
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          deg = deg * 10 + (s[i++] - '0');
      }
    } else if (!saw_num) {
      throw InvalidInput("cannot parse polynomial term in '" + s + "'");
    }
    if (deg > 32) throw InvalidInput("polynomial degree too large");
    terms.push_back({sign * coef, deg});
    skip();
  }
  if (terms.empty()) throw InvalidInput("empty polynomial");
  int e = 0;
  for (auto& t : terms) e = std::max(e, t.deg);
  if (e < 1) throw InvalidInput("polynomial must have positive degree");
  std::vector<long long> coeffs(static_cast<std::size_t>(e + 1), 0);
  for (auto& t : terms) coeffs[static_cast<std::size_t>(t.deg)] += t.coef;
  if (coeffs[static_cast<std::size_t>(e)] != 1)
    throw InvalidInput("polynomial must be monic");
  coeffs.pop_back();
  return coeffs;
}

}  // namespace

std::string FieldSpec::describe() const {
  std::ostringstream os;
  if (char_ == 2) {
    os << "F_" << q_ << "((t)), characteristic 2, q=" << q_ << ", N=" << N_;
  } else {
    if (e_ == 1 && f_ == 1) os << "Q_2";
    else os << "extension of Q_2 by " << poly_string(eis_low_) << " over the unramified ring of degree " << f_;
    os << ", q=" << q_ << ", e=" << e_ << ", d=" << diff_val_ << ", N=" << N_;
  }
  return os.str();
}

std::string FieldSpec::config_string() const {
  std::ostringstream os;
  if (char_ == 2) {
    os << "kind=laurent,f=" << f_ << ",N=" << N_;
  } else {
    os << "kind=eisenstein,f=" << f_ << ",eisenstein=" << poly_string(eis_low_) << ",N=" << N_;
  }
  return os.str();
}

Field FieldSpec::parse(const std::string& config) {
  // tokenize on commas and whitespace
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : config) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw InvalidInput("empty field config");

  std::string kind, eis;
  int f = -1, N = -1, e = -1;
  auto apply_preset = [&](const std::string& p) -> bool {
    if (p == "q2") { kind = "eisenstein"; f = 1; eis = "x-2"; }
    else if (p == "q2x2") { kind = "eisenstein"; f = 1; eis = "x^2-2"; }
    else if (p == "q4") { kind = "eisenstein"; f = 2; eis = "x-2"; }
    else if (p == "q4x2") { kind = "eisenstein"; f = 2; eis = "x^2-2"; }
    else if (p == "f2t") { kind = "laurent"; f = 1; }
    else if (p == "f4t") { kind = "laurent"; f = 2; }
    else if (p == "f8t") { kind = "laurent"; f = 3; }
    else return false;
    return true;
  };

  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (!apply_preset(tok)) throw InvalidInput("unknown field preset '" + tok + "'");
      continue;
    }
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "kind") kind = val;
    else if (key == "f") f = std::stoi(val);
    else if (key == "e") e = std::stoi(val);
    else if (key == "N") N = std::stoi(val);
    else if (key == "eisenstein") eis = val;
    else throw InvalidInput("unknown field config key '" + key + "'");
  }
  if (N < 0) N = 16;
  if (f < 0) f = 1;
  if (kind.empty()) throw InvalidInput("field config needs a kind or preset");

  if (kind == "laurent") return make_laurent(f, N);
  if (kind == "q2") return make_q2(N);
  if (kind == "eisenstein") {
    if (eis.empty()) {
      if (e == 1) eis = "x-2";
      else if (e == 2) eis = "x^2-2";
      else throw InvalidInput("eisenstein kind needs an explicit polynomial");
    }
    auto low = parse_poly(eis);
    if (e >= 0 && e != static_cast<int>(low.size()))
      throw InvalidInput("config key e disagrees with the polynomial degree");
    if (low.size() == 1 && low[0] == -2 && f == 1) return make_q2(N);
    return make_eisenstein(f, low, N);
  }
  throw InvalidInput("unknown field kind '" + kind + "'");
}

}  // namespace dyadic
