#include "dyadic/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace dyadic {

RootOfUnity RootOfUnity::make(long long num, long long den) {
  if (den <= 0) throw InvalidInput("root of unity with nonpositive order");
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long long l = std::lcm(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

RootOfUnity RootOfUnity::pow(long long k) const {
  long long m = (num % den) * (k % den) % den;
  return make(m, den);
}

RootOfUnity RootOfUnity::conj() const { return make(den - num, den); }

int RootOfUnity::sign_if_real() const {
  if (num == 0) return 1;
  if (2 * num == den) return -1;
  throw InvalidInput("root of unity is not real");
}

std::complex<double> RootOfUnity::approx() const {
  double t = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::str() const {
  if (num == 0) return "1";
  if (2 * num == den) return "-1";
  if (4 * num == den) return "i";
  if (4 * num == 3 * den) return "-i";
  return "zeta(" + std::to_string(den) + ")^" + std::to_string(num);
}

std::vector<long long> cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for all proper divisors d | n; all divisions exact.
  std::vector<long long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long long> q = cyclotomic_poly(d);
    // divide p by q (both monic up to sign; q is monic)
    int dp = static_cast<int>(p.size()) - 1;
    int dq = static_cast<int>(q.size()) - 1;
    std::vector<long long> quot(dp - dq + 1, 0);
    for (int i = dp - dq; i >= 0; --i) {
      long long c = p[i + dq];
      quot[i] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[i + j] -= c * q[j];
    }
    for (long long r : p)
      if (r != 0) throw Error("cyclotomic polynomial division not exact");
    p = std::move(quot);
  }
  return p;
}

namespace {

struct CycTables {
  int n = 0;
  int d = 0;                                    // deg Phi_n
  std::vector<long long> phi;                   // Phi_n, size d+1, monic
  std::vector<std::vector<long long>> rootred;  // x^j mod Phi_n for 0 <= j < n
};

const CycTables& cyc_tables(int n) {
  static std::mutex mu;
  static std::map<int, CycTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 4096) throw InvalidInput("cyclotomic order out of range [1,4096]");
  CycTables t;
  t.n = n;
  t.phi = cyclotomic_poly(n);
  t.d = static_cast<int>(t.phi.size()) - 1;
  t.rootred.assign(n, std::vector<long long>(t.d, 0));
  std::vector<long long> cur(t.d, 0);
  if (t.d > 0) cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    t.rootred[j] = cur;
    // multiply by x, reduce by Phi_n
    long long top = t.d > 0 ? cur[t.d - 1] : 0;
    for (int i = t.d - 1; i > 0; --i) cur[i] = cur[i - 1];
    if (t.d > 0) cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < t.d; ++i) cur[i] -= top * t.phi[i];
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

Cyc::Cyc(int n) : n_(n), c_(cyc_tables(n).d, 0) {}

Cyc Cyc::root(int n, long long j) {
  Cyc r(n);
  r.add_root(1, j);
  return r;
}

int Cyc::degree(int n) { return cyc_tables(n).d; }

void Cyc::add_root(long long coeff, long long j) {
  j %= n_;
  if (j < 0) j += n_;
  const auto& red = cyc_tables(n_).rootred[j];
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += coeff * red[i];
}

void Cyc::add(long long coeff, const RootOfUnity& r) {
  if (n_ % r.den != 0) throw InvalidInput("root order does not divide ambient cyclotomic order");
  add_root(coeff, r.num * (n_ / r.den));
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ != o.n_) throw InvalidInput("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (n_ != o.n_) throw InvalidInput("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (n_ != o.n_) throw InvalidInput("cyclotomic order mismatch");
  const auto& t = cyc_tables(n_);
  Cyc r(n_);
  // schoolbook product, reducing basis cross terms zeta^{i+j}
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      long long coeff = c_[i] * o.c_[j];
      const auto& red = t.rootred[(i + j) % n_];
      for (int k = 0; k < t.d; ++k) r.c_[k] += coeff * red[k];
    }
  }
  return r;
}

Cyc Cyc::conj() const {
  Cyc r(n_);
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) r.add_root(c_[j], static_cast<long long>(n_ - j) % n_);
  return r;
}

bool Cyc::is_zero() const {
  for (long long x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

long long Cyc::as_integer() const {
  if (!is_integer()) throw VerifyError("cyclotomic value is not a rational integer");
  return c_.empty() ? 0 : c_[0];
}

std::complex<double> Cyc::approx() const {
  std::complex<double> z{0.0, 0.0};
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double t = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_);
    z += static_cast<double>(c_[j]) * std::complex<double>{std::cos(t), std::sin(t)};
  }
  return z;
}

}  // namespace dyadic
