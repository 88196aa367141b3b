#include "dyadic/gl2chars.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "dyadic/common.hpp"

namespace dyadic {

namespace {

long long mod_exp(long long e, int n) {
  long long r = e % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Gl2Table::Gl2Table(int f) : f_(f), gf_(f) {
  if (f < 1 || f > 8) throw InvalidInput("Gl2Table: f must be in [1, 8]");
  q_ = 1 << f;
  n_ = q_ * q_ - 1;

  for (int i = 0; i < q_ - 1; ++i)
    classes_.push_back({Gl2Class::Shape::central, i, 0});
  for (int i = 0; i < q_ - 1; ++i)
    for (int j = i + 1; j < q_ - 1; ++j)
      classes_.push_back({Gl2Class::Shape::split, i, j});
  for (int t = 1; t < n_; ++t)
    if (regular(t) && t <= t * q_ % n_) cusp_.push_back(t);
  for (int t : cusp_) classes_.push_back({Gl2Class::Shape::elliptic, t, 0});
  for (int i = 0; i < q_ - 1; ++i)
    classes_.push_back({Gl2Class::Shape::unipotent, i, 0});

  for (int s = 0; s < q_ - 1; ++s)
    for (int t = s + 1; t < q_ - 1; ++t)
      reps_.push_back({Gl2Rep::Family::principal, s, t});
  for (int s = 0; s < q_ - 1; ++s)
    reps_.push_back({Gl2Rep::Family::det_twist, s, 0});
  for (int s = 0; s < q_ - 1; ++s)
    reps_.push_back({Gl2Rep::Family::steinberg, s, 0});
  for (int t : cusp_) reps_.push_back({Gl2Rep::Family::cuspidal, 0, t});

  if (reps_.size() != classes_.size())
    throw VerifyError("Gl2Table: rep count differs from class count");
}

std::uint64_t Gl2Table::group_order() const {
  return std::uint64_t(n_) * (std::uint64_t(q_) * q_ - q_);
}

std::uint64_t Gl2Table::class_size(const Gl2Class& c) const {
  switch (c.shape) {
    case Gl2Class::Shape::central: return 1;
    case Gl2Class::Shape::split: return std::uint64_t(q_) * q_ + q_;
    case Gl2Class::Shape::elliptic: return std::uint64_t(q_) * q_ - q_;
    case Gl2Class::Shape::unipotent: return std::uint64_t(q_) * q_ - 1;
  }
  throw InvalidInput("Gl2Table: bad class shape");
}

long long Gl2Table::degree(const Gl2Rep& r) const {
  switch (r.family) {
    case Gl2Rep::Family::principal: return q_ + 1;
    case Gl2Rep::Family::det_twist: return 1;
    case Gl2Rep::Family::steinberg: return q_;
    case Gl2Rep::Family::cuspidal: return q_ - 1;
  }
  throw InvalidInput("Gl2Table: bad rep family");
}

bool Gl2Table::regular(long long t) const { return mod_exp(t, q_ + 1) != 0; }

Cyc Gl2Table::value(const Gl2Rep& r, const Gl2Class& c) const {
  Cyc out(n_);
  const long long Q = q_ + 1;  // h = g^{q+1} generates F_q^x
  switch (r.family) {
    case Gl2Rep::Family::principal: {
      const long long s = r.s, t = r.t;
      switch (c.shape) {
        case Gl2Class::Shape::central:
          out.add_root(q_ + 1, mod_exp(Q * c.i * (s + t), n_));
          break;
        case Gl2Class::Shape::split:
          out.add_root(1, mod_exp(Q * (s * c.i + t * c.j), n_));
          out.add_root(1, mod_exp(Q * (s * c.j + t * c.i), n_));
          break;
        case Gl2Class::Shape::elliptic:
          break;
        case Gl2Class::Shape::unipotent:
          out.add_root(1, mod_exp(Q * c.i * (s + t), n_));
          break;
      }
      break;
    }
    case Gl2Rep::Family::det_twist: {
      const long long s = r.s;
      switch (c.shape) {
        case Gl2Class::Shape::central:
          out.add_root(1, mod_exp(Q * s * 2 * c.i, n_));
          break;
        case Gl2Class::Shape::split:
          out.add_root(1, mod_exp(Q * s * (c.i + c.j), n_));
          break;
        case Gl2Class::Shape::elliptic:
          // det(x) = x^{q+1} = h^t for x = g^t
          out.add_root(1, mod_exp(Q * s * c.i, n_));
          break;
        case Gl2Class::Shape::unipotent:
          out.add_root(1, mod_exp(Q * s * 2 * c.i, n_));
          break;
      }
      break;
    }
    case Gl2Rep::Family::steinberg: {
      const long long s = r.s;
      switch (c.shape) {
        case Gl2Class::Shape::central:
          out.add_root(q_, mod_exp(Q * s * 2 * c.i, n_));
          break;
        case Gl2Class::Shape::split:
          out.add_root(1, mod_exp(Q * s * (c.i + c.j), n_));
          break;
        case Gl2Class::Shape::elliptic:
          out.add_root(-1, mod_exp(Q * s * c.i, n_));
          break;
        case Gl2Class::Shape::unipotent:
          break;
      }
      break;
    }
    case Gl2Rep::Family::cuspidal: {
      const long long t = r.t;
      if (!regular(t))
        throw InvalidInput("Gl2Table: cuspidal parameter must be regular");
      switch (c.shape) {
        case Gl2Class::Shape::central:
          out.add_root(q_ - 1, mod_exp(t * Q * c.i, n_));
          break;
        case Gl2Class::Shape::split:
          break;
        case Gl2Class::Shape::elliptic:
          out.add_root(-1, mod_exp(t * c.i, n_));
          out.add_root(-1, mod_exp(t * q_ * c.i, n_));
          break;
        case Gl2Class::Shape::unipotent:
          out.add_root(-1, mod_exp(t * Q * c.i, n_));
          break;
      }
      break;
    }
  }
  return out;
}

std::complex<double> Gl2Table::value_approx(const Gl2Rep& r, const Gl2Class& c) const {
  return value(r, c).approx();
}

RootOfUnity Gl2Table::unit_character(long long s, std::uint16_t mask) const {
  if (mask == 0 || mask >= (1u << f_))
    throw InvalidInput("unit_character: mask must be a nonzero residue");
  return RootOfUnity::make(s * gf_.dlog(mask), q_ - 1);
}

std::string Gl2Table::class_label(const Gl2Class& c) const {
  std::ostringstream os;
  switch (c.shape) {
    case Gl2Class::Shape::central: os << "z(" << c.i << ")"; break;
    case Gl2Class::Shape::split: os << "d(" << c.i << "," << c.j << ")"; break;
    case Gl2Class::Shape::elliptic: os << "ell(" << c.i << ")"; break;
    case Gl2Class::Shape::unipotent: os << "u(" << c.i << ")"; break;
  }
  return os.str();
}

std::string Gl2Table::rep_label(const Gl2Rep& r) const {
  std::ostringstream os;
  switch (r.family) {
    case Gl2Rep::Family::principal: os << "R(" << r.s << "," << r.t << ")"; break;
    case Gl2Rep::Family::det_twist: os << "det(" << r.s << ")"; break;
    case Gl2Rep::Family::steinberg: os << "St(" << r.s << ")"; break;
    case Gl2Rep::Family::cuspidal: os << "cusp(" << r.t << ")"; break;
  }
  return os.str();
}

std::uint64_t count_cuspidals(int q) {
  if (q < 2 || (q & (q - 1)) != 0 || q > 256)
    throw InvalidInput("count_cuspidals: q must be a power of 2 in [2, 256]");
  const int n = q * q - 1;
  std::uint64_t orbits = 0;
  for (int t = 1; t < n; ++t)
    if (t % (q + 1) != 0 && t <= t * q % n) ++orbits;
  const std::uint64_t closed = std::uint64_t(q) * (q - 1) / 2;
  if (orbits != closed)
    throw VerifyError("count_cuspidals: orbit enumeration disagrees with q(q-1)/2");
  return closed;
}

long long chi_ell(const ResidueRing& R, const Mat2& a, int ell) {
  if (ell < 1) throw InvalidInput("chi_ell: ell must be >= 1");
  if (R.n() < ell + 1)
    throw InvalidInput("chi_ell: ring modulus must be at least ell + 1");
  if (mat_det(R, a) != R.one() || !in_Bprime(R, a, ell))
    throw InvalidInput("chi_ell: matrix is not in B'_ell");
  const int q = R.field()->q();
  if (R.val(R.sub(a.m[0], R.one())) < 1) return 0;
  return R.val(a.m[1]) >= ell + 1 ? q - 1 : -1;
}

bool in_chi_kernel(const ResidueRing& R, const Mat2& g, int ell) {
  if (R.n() < ell + 1)
    throw InvalidInput("in_chi_kernel: ring modulus must be at least ell + 1");
  return mat_det(R, g) == R.one() && R.val(g.m[1]) >= ell + 1 &&
         R.val(R.sub(g.m[0], R.one())) >= 1 && R.val(R.sub(g.m[3], R.one())) >= 1;
}

Cyc psi_unit_sum(const Field& F, const Scalar& u) {
  if (!u.is_zero() && u.val() < 0)
    throw InvalidInput("psi_unit_sum: u must be integral");
  Psi psi(F);
  std::vector<RootOfUnity> terms;
  long long n = 1;
  for (std::uint16_t c = 1; c < (1u << F->f()); ++c) {
    Scalar x = Scalar::make(F, 0, {c}, 1);
    RootOfUnity r = psi(x * u);
    n = std::lcm(n, r.order());
    terms.push_back(r);
  }
  Cyc out(static_cast<int>(n));
  for (const auto& r : terms) out.add(1, r);
  return out;
}

long long inner_product_exact(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  if (a.empty() || a.size() != b.size())
    throw InvalidInput("inner_product_exact: need equal nonempty value lists");
  Cyc acc(a[0].order());
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i].conj();
  const long long s = acc.as_integer();
  const long long n = static_cast<long long>(a.size());
  if (s % n != 0 || s < 0)
    throw VerifyError("inner_product_exact: sum is not |H| times a nonnegative integer");
  return s / n;
}

long long inner_product_float(const std::vector<std::complex<double>>& a,
                              const std::vector<std::complex<double>>& b,
                              double tol) {
  if (a.empty() || a.size() != b.size())
    throw InvalidInput("inner_product_float: need equal nonempty value lists");
  // Kahan-compensated accumulation keeps the roundoff below the tolerance
  // even for the large exhaustive sums.
  double sr = 0, cr = 0, si = 0, ci = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::complex<double> term = a[i] * std::conj(b[i]);
    double y = term.real() - cr, t = sr + y;
    cr = (t - sr) - y;
    sr = t;
    y = term.imag() - ci;
    t = si + y;
    ci = (t - si) - y;
    si = t;
  }
  const double n = static_cast<double>(a.size());
  const double re = sr / n, im = si / n;
  const double rounded = std::round(re);
  if (std::abs(im) > tol || std::abs(re - rounded) > tol || rounded < 0)
    throw VerifyError("inner_product_float: mean is not a nonnegative integer within tolerance");
  return static_cast<long long>(rounded);
}

}  // namespace dyadic
