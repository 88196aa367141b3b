#include "dyadic/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

int clamp_prec(long long p) {
  return static_cast<int>(std::min<long long>(p, Scalar::kExactPrec));
}

}  // namespace

Scalar Scalar::zero(const Field& F) {
  Scalar s;
  s.F_ = F;
  s.pe_ = kExactPrec;
  return s;
}

Scalar Scalar::zero(const Field& F, int prec_end) {
  Scalar s;
  s.F_ = F;
  s.pe_ = prec_end;
  return s;
}

Scalar Scalar::make(const Field& F, int v, FieldSpec::Digits digits, int prec_end) {
  if (prec_end - v > F->N())
    digits.resize(static_cast<std::size_t>(F->N())), prec_end = v + F->N();
  if (static_cast<int>(digits.size()) > prec_end - v)
    digits.resize(static_cast<std::size_t>(std::max(0, prec_end - v)));
  std::size_t z = 0;
  while (z < digits.size() && digits[z] == 0) ++z;
  if (z == digits.size()) return zero(F, prec_end);
  Scalar s;
  s.F_ = F;
  s.v_ = v + static_cast<int>(z);
  s.pe_ = prec_end;
  s.d_.assign(digits.begin() + static_cast<long>(z), digits.end());
  s.d_.resize(static_cast<std::size_t>(prec_end - s.v_), 0);
  return s;
}

Scalar Scalar::unit(const Field& F, FieldSpec::Digits digits) {
  return make(F, 0, std::move(digits), F->N());
}

Scalar Scalar::from_int(const Field& F, long long n) {
  if (n == 0) return zero(F);
  if (F->is_char2()) {
    if ((n & 1) == 0) return zero(F);
    FieldSpec::Digits d(static_cast<std::size_t>(F->N()), 0);
    d[0] = 1;
    return make(F, 0, std::move(d), F->N());
  }
  int k = 0;
  while ((n & 1) == 0) n >>= 1, ++k;
  int v = k * F->e();
  return make(F, v, F->dig_from_int(n, F->N()), v + F->N());
}

Scalar Scalar::uniformizer_pow(const Field& F, int k) {
  FieldSpec::Digits d(static_cast<std::size_t>(F->N()), 0);
  d[0] = 1;
  return make(F, k, std::move(d), k + F->N());
}

int Scalar::val() const {
  if (d_.empty())
    throw InvalidInput("valuation of a window that is zero at the available precision");
  return v_;
}

std::uint16_t Scalar::digit(int j) const {
  if (j >= pe_) throw InvalidInput("digit at exponent " + std::to_string(j) +
                                   " is beyond the known precision P^" + std::to_string(pe_));
  if (d_.empty() || j < v_) return 0;
  return d_[static_cast<std::size_t>(j - v_)];
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (!F_ || F_ != o.F_) throw InvalidInput("adding scalars from different fields");
  int end = std::min(pe_, o.pe_);
  if (d_.empty() && o.d_.empty()) return zero(F_, end);
  if (d_.empty()) return o.truncated(end);
  if (o.d_.empty()) return truncated(end);
  int v = std::min(v_, o.v_);
  if (end <= v) return zero(F_, end);
  int L = end - v;
  FieldSpec::Digits wa(static_cast<std::size_t>(L), 0), wb(static_cast<std::size_t>(L), 0);
  for (int i = 0; i < L; ++i) {
    int j = v + i;
    if (j >= v_ && j - v_ < static_cast<int>(d_.size())) wa[static_cast<std::size_t>(i)] = d_[static_cast<std::size_t>(j - v_)];
    if (j >= o.v_ && j - o.v_ < static_cast<int>(o.d_.size())) wb[static_cast<std::size_t>(i)] = o.d_[static_cast<std::size_t>(j - o.v_)];
  }
  return make(F_, v, F_->dig_add(wa, wb), end);
}

Scalar Scalar::operator-() const {
  if (d_.empty()) return *this;
  Scalar s = *this;
  s.d_ = F_->dig_neg(d_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (!F_ || F_ != o.F_) throw InvalidInput("multiplying scalars from different fields");
  if (d_.empty() || o.d_.empty()) {
    long long end;
    if (d_.empty() && o.d_.empty()) end = static_cast<long long>(pe_) + o.pe_;
    else if (d_.empty()) end = static_cast<long long>(pe_) + o.v_;
    else end = static_cast<long long>(o.pe_) + v_;
    return zero(F_, clamp_prec(end));
  }
  int L = std::min(ndigits(), o.ndigits());
  return make(F_, v_ + o.v_, F_->dig_mul(d_, o.d_), v_ + o.v_ + L);
}

Scalar Scalar::inverse() const {
  if (d_.empty()) throw InvalidInput("inverse of a window that is zero at the available precision");
  int L = ndigits();
  return make(F_, -v_, F_->dig_inv(d_, L), -v_ + L);
}

Scalar Scalar::shifted(int k) const {
  Scalar s = *this;
  s.v_ += k;
  s.pe_ = clamp_prec(static_cast<long long>(s.pe_) + k);
  return s;
}

Scalar Scalar::truncated(int prec) const {
  if (prec >= pe_) return *this;
  if (d_.empty()) return zero(F_, prec);
  if (prec <= v_) return zero(F_, prec);
  FieldSpec::Digits d(d_.begin(), d_.begin() + static_cast<long>(prec - v_));
  Scalar s;
  s.F_ = F_;
  s.v_ = v_;
  s.pe_ = prec;
  s.d_ = std::move(d);
  return s;
}

bool Scalar::is_zero_mod(int k) const {
  if (pe_ < k) throw InvalidInput("congruence mod P^" + std::to_string(k) +
                                  " undetermined at precision P^" + std::to_string(pe_));
  if (d_.empty()) return true;
  for (int j = v_; j < k; ++j)
    if (j >= v_ && digit(j) != 0) return false;
  return true;
}

bool Scalar::eq_mod(const Scalar& o, int k) const {
  if (!F_ || F_ != o.F_) throw InvalidInput("comparing scalars from different fields");
  if (pe_ < k || o.pe_ < k)
    throw InvalidInput("congruence mod P^" + std::to_string(k) + " undetermined at available precision");
  int lo = std::min(d_.empty() ? k : v_, o.d_.empty() ? k : o.v_);
  for (int j = lo; j < k; ++j)
    if (digit(j) != o.digit(j)) return false;
  return true;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.F_ || a.F_ != b.F_) return false;
  return a.eq_mod(b, std::min(a.pe_, b.pe_));
}

std::string Scalar::str() const {
  if (d_.empty()) return pe_ >= kExactPrec ? "0" : "O(pi^" + std::to_string(pe_) + ")";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] == 0) continue;
    int exp = v_ + static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    std::string c = F_->residue_str(d_[i]);
    bool compound = c.find('+') != std::string::npos;
    if (exp == 0) {
      os << c;
    } else {
      if (c == "1") {
      } else if (compound) {
        os << "(" << c << ")*";
      } else {
        os << c << "*";
      }
      os << "pi^" << exp;
    }
  }
  if (pe_ < kExactPrec) os << " + O(pi^" << pe_ << ")";
  return os.str();
}

Psi::Psi(Field F, Scalar twist) : F_(std::move(F)), twist_(std::move(twist)) {
  if (!twist_->valid() || twist_->field() != F_)
    throw InvalidInput("character twist must live in the same field");
  if (twist_->is_zero() || twist_->val() != 0)
    throw InvalidInput("character twist must be a unit");
}

const Scalar& Psi::twist() const {
  if (!twist_) throw InvalidInput("character is untwisted");
  return *twist_;
}

RootOfUnity Psi::operator()(const Scalar& x) const {
  if (!x.valid() || x.field() != F_)
    throw InvalidInput("character argument from the wrong field");
  Scalar y = twist_ ? (*twist_ * x) : x;
  if (y.is_zero()) {
    if (y.prec_end() >= 1) return RootOfUnity::one();
    throw InvalidInput("additive character undetermined at the available precision");
  }
  return F_->psi_value(y.digits(), y.val(), y.ndigits());
}

}  // namespace dyadic
