#include "dyadic/gf.hpp"

#include <algorithm>

namespace dyadic {

std::uint32_t polymul2(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

int polydeg2(std::uint32_t a) {
  int d = -1;
  while (a) {
    ++d;
    a >>= 1;
  }
  return d;
}

std::uint32_t polymod2(std::uint32_t a, std::uint32_t m) {
  int dm = polydeg2(m);
  int da = polydeg2(a);
  while (da >= dm) {
    a ^= m << (da - dm);
    da = polydeg2(a);
  }
  return a;
}

bool GF::irreducible(std::uint32_t poly) {
  int d = polydeg2(poly);
  if (d <= 0) return false;
  if ((poly & 1) == 0) return d == 1;  // divisible by y unless poly == y itself
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint32_t low = 0; low < (1u << k); ++low) {
      std::uint32_t div = (1u << k) | low;
      if (polymod2(poly, div) == 0) return false;
    }
  }
  return true;
}

std::uint32_t GF::least_irreducible(int deg) {
  if (deg < 1 || deg > 16) throw InvalidInput("residue degree out of range [1,16]");
  for (std::uint32_t low = 0; low < (1u << deg); ++low) {
    std::uint32_t cand = (1u << deg) | low;
    if (irreducible(cand)) return cand;
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

GF::GF(int f) : f_(f), q_(1 << f), mod_(least_irreducible(f)) {
  // Raw product before tables exist.
  auto raw_mul = [this](std::uint16_t a, std::uint16_t b) {
    return static_cast<std::uint16_t>(polymod2(polymul2(a, b), mod_));
  };

  // Generator: least element (as a mask) of multiplicative order q-1.
  gen_ = 0;
  for (std::uint16_t c = 1; c < q_; ++c) {
    std::uint16_t x = c;
    int ord = 1;
    while (x != 1) {
      x = raw_mul(x, c);
      ++ord;
    }
    if (ord == q_ - 1) {
      gen_ = c;
      break;
    }
  }

  exp_.assign(2 * (q_ - 1), 1);
  log_.assign(q_, -1);
  std::uint16_t x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    exp_[k + (q_ - 1)] = x;
    log_[x] = k;
    x = raw_mul(x, gen_);
  }

  trace_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    std::uint16_t t = 0;
    std::uint16_t p = static_cast<std::uint16_t>(a);
    for (int i = 0; i < f_; ++i) {
      t ^= p;
      p = raw_mul(p, p);
    }
    if (t & ~1u) throw Error("trace landed outside GF(2)");
    trace_[a] = static_cast<std::uint8_t>(t);
  }
}

std::uint16_t GF::mul(std::uint16_t a, std::uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint16_t GF::inv(std::uint16_t a) const {
  if (a == 0) throw InvalidInput("inverse of zero in residue field");
  return exp_[(q_ - 1) - log_[a]];
}

std::uint16_t GF::exp(long long k) const {
  long long m = k % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return exp_[m];
}

std::uint16_t GF::pow(std::uint16_t a, long long k) const {
  if (a == 0) {
    if (k <= 0) throw InvalidInput("0 raised to a nonpositive power");
    return 0;
  }
  long long m = (log_[a] * (k % (q_ - 1))) % (q_ - 1);
  if (m < 0) m += q_ - 1;
  return exp_[m];
}

int GF::dlog(std::uint16_t a) const {
  if (a == 0) throw InvalidInput("discrete log of zero");
  return log_[a];
}

bool GF::in_subfield(std::uint16_t a, int s) const {
  if (s <= 0 || f_ % s != 0) throw InvalidInput("not a subfield degree");
  std::uint16_t p = a;
  for (int i = 0; i < s; ++i) p = mul(p, p);
  return p == a;
}

std::vector<std::uint16_t> GF::artin_schreier_image(std::uint16_t c) const {
  std::vector<std::uint16_t> img;
  img.reserve(q_);
  for (int x = 0; x < q_; ++x) {
    std::uint16_t xx = static_cast<std::uint16_t>(x);
    img.push_back(add(mul(c, xx), mul(xx, xx)));
  }
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

}  // namespace dyadic
