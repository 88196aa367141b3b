#include "dyadic/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "dyadic/common.hpp"
#include "dyadic/gl2chars.hpp"

namespace dyadic {

namespace {

void require_q2(const Field& F) {
  if (F->q() != 2)
    throw InvalidInput("the convolution algebra is modeled only over residue field F_2");
}

bool is_supported(const Field& F, int ell, const BruhatCell& gamma) {
  for (const BruhatCell& c : supported_cosets(F, ell))
    if (c.label() == gamma.label()) return true;
  return false;
}

// small generating set of B'_ell inside SL(2, R/P^{ell+1}) for q = 2:
// lower unipotents with power-of-pi entries, the upper unipotent of entry
// pi^ell, and diagonals from a verified generating set of the unit group
std::vector<Mat2> bprime_generators(const ResidueRing& R, int ell) {
  std::vector<std::uint16_t> unit_gens{R.from_int(3), R.from_int(-1)};
  for (int i = 1; i < R.n(); ++i)
    unit_gens.push_back(R.add(R.one(), R.pow(R.pi(), i)));
  std::set<std::uint16_t> closure{R.one()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint16_t x : std::vector<std::uint16_t>(closure.begin(), closure.end()))
      for (std::uint16_t g : unit_gens)
        if (closure.insert(R.mul(x, g)).second) grew = true;
  }
  std::size_t unit_count = 0;
  for (std::uint32_t x = 0; x < R.card(); ++x)
    if (R.val(static_cast<std::uint16_t>(x)) == 0) ++unit_count;
  if (closure.size() != unit_count)
    throw VerifyError("bprime_generators: diagonal generators miss some units");

  std::vector<Mat2> gens;
  for (int i = 0; i < R.n(); ++i) gens.push_back(mat_lower(R, R.pow(R.pi(), i)));
  gens.push_back(mat_upper(R, R.pow(R.pi(), ell)));
  for (std::uint16_t u : unit_gens) gens.push_back(mat_diag(R, u, R.inv(u)));
  return gens;
}

}  // namespace

long long theta_ell(const ResidueRing& R, const Mat2& b, int ell) {
  require_q2(R.field());
  return chi_ell(R, b, ell);  // q - 1 = 1 collapses the branch values to a sign
}

std::unordered_map<std::uint64_t, int> hecke_support_table(const Field& F, int ell,
                                                           const BruhatCell& gamma,
                                                           std::uint64_t budget) {
  require_q2(F);
  if (ell < 1) throw InvalidInput("hecke_support_table: ell must be >= 1");
  Ring R = ResidueRing::make(F, ell + 1);

  std::vector<std::pair<Mat2, long long>> gens;
  for (const Mat2& g : bprime_generators(*R, ell)) {
    if (!in_Bprime(*R, g, ell) || mat_det(*R, g) != R->one())
      throw VerifyError("hecke_support_table: generator outside B'");
    gens.emplace_back(g, theta_ell(*R, g, ell));
  }

  const Mat2 start = cell_representative(*R, gamma);
  std::unordered_map<std::uint64_t, int> table;
  table.reserve(1 << 12);
  table[start.key()] = 1;
  std::vector<Mat2> frontier{start};
  while (!frontier.empty()) {
    const Mat2 cur = frontier.back();
    frontier.pop_back();
    const int v = table.at(cur.key());
    for (const auto& [g, th] : gens) {
      for (const Mat2& nb : {mat_mul(*R, g, cur), mat_mul(*R, cur, g)}) {
        const long long nv = th * v;
        auto [it, fresh] = table.emplace(nb.key(), static_cast<int>(nv));
        if (fresh) {
          if (table.size() > budget)
            throw ResourceError("hecke_support_table: double coset exceeds the budget",
                                table.size());
          frontier.push_back(nb);
        } else if (it->second != nv) {
          throw VerifyError("hecke_support_table: the double coset of " + gamma.label() +
                            " does not support the inducing character");
        }
      }
    }
  }
  return table;
}

HeckeOperator hecke_action(const Field& F, int ell, const BruhatCell& gamma,
                           std::uint64_t budget) {
  require_q2(F);
  if (ell < 1) throw InvalidInput("hecke_action: ell must be >= 1");
  if (!is_supported(F, ell, gamma))
    throw InvalidInput("hecke_action: " + gamma.label() + " is not a supported coset");

  HeckeOperator op;
  op.ell = ell;
  op.gamma = gamma;
  op.basis = coset_reps_Bell(F, ell);
  const ResidueRing& R = *op.basis.ring;

  std::vector<Mat2> sigma;
  for (const Mat2& a : op.basis.sigma0) sigma.push_back(a);
  for (const Mat2& a : op.basis.sigmaw) sigma.push_back(a);

  const std::vector<Mat2> B = enumerate_Bprime(R, ell, budget);
  op.vol = B.size();
  const std::uint64_t q = F->q();
  if (op.vol != (q - 1) * ipow(q, 2 * ell + 2))
    throw VerifyError("hecke_action: |B'| disagrees with the closed form");
  std::vector<std::pair<Mat2, long long>> binv_theta;
  binv_theta.reserve(B.size());
  for (const Mat2& b : B) binv_theta.emplace_back(mat_inv(R, b), theta_ell(R, b, ell));

  const auto table = hecke_support_table(F, ell, gamma, budget);

  const std::size_t n = sigma.size();
  const std::size_t n0 = op.basis.sigma0.size();
  op.action.assign(n, std::vector<long long>(n, 0));
  std::vector<Mat2> sigma_inv;
  sigma_inv.reserve(n);
  for (const Mat2& a : sigma) sigma_inv.push_back(mat_inv(R, a));

  // the translation parameter of each basis element, reduced mod P^ell
  Ring shallow = ResidueRing::make(F, ell);
  std::vector<std::uint16_t> beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t deep = i < n0 ? sigma[i].m[1] : R.neg(sigma[i].m[0]);
    beta[i] = R.project_to(*shallow, deep);
  }

  // Every column must carry the same translation strip (the signs of the
  // entries depend on the chosen parameter lifts, their magnitude is always
  // the volume), and must stay inside its block.
  std::set<std::uint16_t> strip;  // the deltas, from column 0
  std::vector<std::size_t> hits_per_row(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::set<std::uint16_t> seen;
    for (std::size_t row = 0; row < n; ++row) {
      const Mat2 z = mat_mul(R, sigma[row], sigma_inv[col]);
      if (!table.count(z.key())) continue;  // integrand vanishes identically
      long long entry = 0;
      for (const auto& [bi, th] : binv_theta) entry += table.at(mat_mul(R, z, bi).key()) * th;
      if (std::abs(entry) != static_cast<long long>(op.vol))
        throw VerifyError("hecke_action: entry magnitude differs from the volume");
      if ((row < n0) != (col < n0))
        throw VerifyError("hecke_action: entry crosses the block decomposition");
      op.action[row][col] = entry;
      seen.insert(shallow->sub(beta[row], beta[col]));
      ++hits_per_row[row];
    }
    if (seen.empty())
      throw VerifyError("hecke_action: empty column " + std::to_string(col));
    if (col == 0)
      strip = seen;
    else if (seen != strip)
      throw VerifyError("hecke_action: column " + std::to_string(col) +
                        " is not a translation by the strip");
  }
  for (std::size_t row = 0; row < n; ++row)
    if (hits_per_row[row] != strip.size())
      throw VerifyError("hecke_action: row " + std::to_string(row) +
                        " is hit by the wrong number of translations");

  op.shifts.assign(strip.begin(), strip.end());
  op.monomial = op.shifts.size() == 1;
  if (op.monomial) {
    op.target.assign(n, n);
    op.scale.assign(n, 0);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        if (op.action[row][col] != 0) {
          op.target[col] = row;
          op.scale[col] = op.action[row][col];
        }
  }
  return op;
}

long long operator_order(const HeckeOperator& op) {
  if (!op.monomial)
    throw InvalidInput("operator_order: the action of " + op.gamma.label() +
                       " is not monomial");
  const std::size_t n = op.target.size();
  long long order = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    long long len = 0;
    std::size_t cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = op.target[cur];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

long long operator_order(const Field& F, int ell, const BruhatCell& gamma,
                         std::uint64_t budget) {
  return operator_order(hecke_action(F, ell, gamma, budget));
}

CommutativityReport commutativity_certificate(const Field& F, int ell,
                                              std::uint64_t budget) {
  require_q2(F);
  CommutativityReport rep;
  rep.ell = ell;

  Ring shallow = ResidueRing::make(F, ell);
  auto additive_order = [&shallow](std::uint16_t x) {
    long long m = 1;
    std::uint16_t acc = x;
    while (acc != shallow->zero()) {
      acc = shallow->add(acc, x);
      ++m;
    }
    return m;
  };

  std::vector<HeckeOperator> ops;
  for (const BruhatCell& c : supported_cosets(F, ell)) {
    ops.push_back(hecke_action(F, ell, c, budget));
    rep.op_labels.push_back(c.label());
    long long order = 1;
    for (std::uint16_t d : ops.back().shifts) order = std::lcm(order, additive_order(d));
    rep.op_orders.push_back(order);
  }
  rep.dim = ops.size();

  const std::size_t n = ops.empty() ? 0 : ops.front().size();
  auto mul = [n](const std::vector<std::vector<long long>>& A,
                 const std::vector<std::vector<long long>>& B) {
    std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const long long a = A[i][k];
        if (a == 0) continue;
        for (std::size_t j = 0; j < n; ++j) C[i][j] += a * B[k][j];
      }
    return C;
  };

  rep.max_offdiag = 0;
  for (std::size_t x = 0; x < ops.size(); ++x)
    for (std::size_t y = x + 1; y < ops.size(); ++y) {
      const auto AB = mul(ops[x].action, ops[y].action);
      const auto BA = mul(ops[y].action, ops[x].action);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) rep.max_offdiag = std::max(rep.max_offdiag, std::abs(AB[i][j] - BA[i][j]));
    }
  rep.commutators_diagonal = rep.max_offdiag == 0;
  rep.pass = rep.commutators_diagonal &&
             rep.dim == static_cast<std::size_t>(sigma_end_dim(F, ell));

  // additive group generated by every operator's translation strip; the
  // basis carries the regular action of R/P^ell, so for monomial operators
  // this is exactly the group their permutation parts generate
  std::set<std::uint16_t> group{shallow->zero()};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint16_t> cur(group.begin(), group.end());
    for (std::uint16_t x : cur)
      for (const HeckeOperator& op : ops)
        for (std::uint16_t d : op.shifts)
          if (group.insert(shallow->add(x, d)).second) grew = true;
  }
  rep.perm_group_order = group.size();
  rep.perm_group_cyclic = false;
  for (std::uint16_t x : group)
    if (static_cast<std::uint64_t>(additive_order(x)) == group.size())
      rep.perm_group_cyclic = true;
  return rep;
}

}  // namespace dyadic
