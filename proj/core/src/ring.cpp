#include "dyadic/ring.hpp"

#include <map>
#include <mutex>
#include <string>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

std::uint64_t pow_u64(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

}  // namespace

ResidueRing::ResidueRing(Field F, int n) : F_(std::move(F)), n_(n), q_(F_->q()) {
  if (n < 1 || n > F_->N())
    throw InvalidInput("residue ring level must lie in [1, precision]");
  std::uint64_t c = pow_u64(static_cast<std::uint64_t>(q_), n);
  if (c > kMaxCard)
    throw ResourceError("residue ring R/P^" + std::to_string(n) + " over " +
                            F_->config_string() + " has " + std::to_string(c) +
                            " elements; table limit is " + std::to_string(kMaxCard),
                        c);
  card_ = static_cast<std::uint32_t>(c);

  auto encode = [&](const Scalar& s) {
    std::uint32_t r = 0;
    for (int j = 0; j < n_; ++j) r = r * q_ + s.digit(j);
    return static_cast<std::uint16_t>(r);
  };

  elems_.reserve(card_);
  for (std::uint32_t a = 0; a < card_; ++a) {
    FieldSpec::Digits d(static_cast<std::size_t>(n_));
    std::uint32_t t = a;
    for (int j = n_ - 1; j >= 0; --j) {
      d[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(t % q_);
      t /= q_;
    }
    elems_.push_back(Scalar::make(F_, 0, d, n_));
  }

  one_ = encode(Scalar::one(F_).truncated(n_));
  if (n_ >= 2) pi_ = encode(Scalar::uniformizer_pow(F_, 1).truncated(n_));

  add_.resize(static_cast<std::size_t>(card_) * card_);
  mul_.resize(static_cast<std::size_t>(card_) * card_);
  neg_.resize(card_);
  inv_.assign(card_, 0xFFFF);
  val_.resize(card_);
  for (std::uint32_t a = 0; a < card_; ++a) {
    const Scalar& sa = elems_[a];
    neg_[a] = encode(-sa);
    int v = sa.is_zero_mod(n_) ? n_ : sa.val();
    val_[a] = static_cast<std::uint8_t>(v);
    if (v == 0) inv_[a] = encode(sa.inverse().truncated(n_));
    for (std::uint32_t b = 0; b < card_; ++b) {
      add_[idx(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b))] =
          encode(sa + elems_[b]);
      mul_[idx(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b))] =
          encode(sa * elems_[b]);
    }
  }
}

Ring ResidueRing::make(const Field& F, int n) {
  static std::map<std::pair<std::string, int>, Ring> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F->config_string(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const ResidueRing>(F, n);
  cache.emplace(key, r);
  return r;
}

std::uint16_t ResidueRing::inv(std::uint16_t a) const {
  std::uint16_t r = inv_[a];
  if (r == 0xFFFF) throw InvalidInput("inverse of a non-unit in R/P^" + std::to_string(n_));
  return r;
}

std::uint16_t ResidueRing::pow(std::uint16_t a, long long k) const {
  if (k < 0) return pow(inv(a), -k);
  std::uint16_t r = one_, b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::uint16_t ResidueRing::digit_of(std::uint16_t a, int j) const {
  if (j < 0 || j >= n_) throw InvalidInput("digit index out of range");
  std::uint32_t t = a;
  for (int i = n_ - 1; i > j; --i) t /= q_;
  return static_cast<std::uint16_t>(t % q_);
}

std::uint16_t ResidueRing::from_digits(const std::vector<std::uint16_t>& d) const {
  if (static_cast<int>(d.size()) != n_) throw InvalidInput("digit vector length mismatch");
  std::uint32_t r = 0;
  for (int j = 0; j < n_; ++j) {
    if (d[static_cast<std::size_t>(j)] >= q_) throw InvalidInput("digit out of range");
    r = r * q_ + d[static_cast<std::size_t>(j)];
  }
  return static_cast<std::uint16_t>(r);
}

std::uint16_t ResidueRing::from_scalar(const Scalar& s) const {
  if (!s.is_zero_mod(0) && s.val() < 0)
    throw InvalidInput("cannot reduce a scalar of negative valuation into R/P^n");
  if (s.prec_end() < n_) throw InvalidInput("scalar window too short for R/P^n reduction");
  std::uint32_t r = 0;
  for (int j = 0; j < n_; ++j) r = r * q_ + s.digit(j);
  return static_cast<std::uint16_t>(r);
}

std::uint16_t ResidueRing::from_int(long long v) const {
  Scalar s = Scalar::from_int(F_, v);
  if (s.is_zero_mod(n_)) return 0;
  return from_scalar(s.truncated(n_));
}

std::uint16_t ResidueRing::lift_from(const ResidueRing& smaller, std::uint16_t a) const {
  if (smaller.n_ > n_ || smaller.q_ != q_) throw InvalidInput("invalid ring lift");
  std::uint32_t r = a;
  for (int j = smaller.n_; j < n_; ++j) r *= q_;
  return static_cast<std::uint16_t>(r);
}

std::uint16_t ResidueRing::project_to(const ResidueRing& smaller, std::uint16_t a) const {
  if (smaller.n_ > n_ || smaller.q_ != q_) throw InvalidInput("invalid ring projection");
  std::uint32_t r = a;
  for (int j = smaller.n_; j < n_; ++j) r /= q_;
  return static_cast<std::uint16_t>(r);
}

}  // namespace dyadic
