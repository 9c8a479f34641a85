#include "semidet/determinant.hpp"

#include <algorithm>
#include <bit>

#include "semidet/errors.hpp"

namespace semidet {

SymbolicMatrix cayley_matrix(const StructureConstants& sc) {
  const ElementSet& B = sc.basis();
  SymbolicMatrix m(B.size());
  m.row_labels = B;
  m.col_labels = B;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      for (ElementId r : B)
        if (auto c = sc(r, B[i], B[j]); c != 0)
          m.at(i, j) += Polynomial::variable(static_cast<VariableId>(r)) * Integer(c);
  return m;
}

SymbolicMatrix semigroup_cayley(const CayleyTable& S) {
  SymbolicMatrix m(S.size());
  for (ElementId a = 0; a < S.size(); ++a) {
    m.row_labels[a] = m.col_labels[a] = a;
    for (ElementId b = 0; b < S.size(); ++b)
      m.at(a, b) = Polynomial::variable(static_cast<VariableId>(S(a, b)));
  }
  return m;
}

SymbolicMatrix contracted_cayley(const CayleyTable& S) {
  if (!S.zero()) throw NoZeroElement("contracted determinant needs a zero element");
  ElementSet B;
  for (ElementId s = 0; s < S.size(); ++s)
    if (!S.is_zero(s)) B.push_back(s);
  SymbolicMatrix m(B.size());
  m.row_labels = m.col_labels = B;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j) {
      const ElementId p = S(B[i], B[j]);
      if (!S.is_zero(p)) m.at(i, j) = Polynomial::variable(static_cast<VariableId>(p));
    }
  return m;
}

Polynomial sym_det(const SymbolicMatrix& m, std::size_t max_dim) {
  const std::size_t n = m.dim;
  if (n > max_dim)
    throw DimensionCap("matrix dimension " + std::to_string(n) + " exceeds cap " +
                       std::to_string(max_dim));
  if (n == 0) return Polynomial::constant(1);
  // minor[mask]: determinant of rows 0..|mask|-1 restricted to the columns in mask,
  // expanded along its last row.
  std::vector<Polynomial> minor(std::size_t{1} << n);
  minor[0] = Polynomial::constant(1);
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Polynomial acc;
    std::size_t pos = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const Polynomial& rest = minor[mask & ~(std::size_t{1} << col)];
      const Polynomial& entry = m.at(row, col);
      if (!rest.is_zero() && !entry.is_zero()) {
        if ((row + pos) % 2 == 0)
          acc += entry * rest;
        else
          acc -= entry * rest;
      }
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

int permutation_sign(const ElementSet& from, const ElementSet& to) {
  if (from.size() != to.size()) throw Error("permutation_sign: size mismatch");
  std::vector<std::size_t> perm(to.size());
  for (std::size_t i = 0; i < to.size(); ++i) {
    auto it = std::find(from.begin(), from.end(), to[i]);
    if (it == from.end()) throw Error("permutation_sign: not a permutation");
    perm[i] = static_cast<std::size_t>(it - from.begin());
  }
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

std::vector<IdempotentBlock> idempotent_blocks(const OrderedSemigroup& os) {
  std::vector<IdempotentBlock> blocks;
  for (ElementId e : os.basis()) {
    if (!is_idempotent(os.table(), e)) continue;
    IdempotentBlock b{e, {}, {}};
    for (ElementId s : os.basis()) {
      if (os.star(s) == e) b.rows.push_back(s);
      if (os.plus(s) == e) b.cols.push_back(s);
    }
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const IdempotentBlock& a, const IdempotentBlock& b) {
    return a.rows.front() < b.rows.front();
  });
  return blocks;
}

std::size_t position(const ElementSet& set, ElementId s) {
  return static_cast<std::size_t>(std::find(set.begin(), set.end(), s) - set.begin());
}

}  // namespace

BlockDecomposition block_decompose(const OrderedSemigroup& os, const StructureConstants& star) {
  const SymbolicMatrix C = cayley_matrix(star);
  const ElementSet& B = os.basis();
  BlockDecomposition out;
  out.blocks = idempotent_blocks(os);
  for (const auto& b : out.blocks) {
    out.row_order.insert(out.row_order.end(), b.rows.begin(), b.rows.end());
    out.col_order.insert(out.col_order.end(), b.cols.begin(), b.cols.end());
  }
  out.sign = permutation_sign(B, out.row_order) * permutation_sign(B, out.col_order);

  const std::size_t n = B.size();
  std::vector<ElementId> row_block(os.table().size()), col_block(os.table().size());
  for (const auto& b : out.blocks) {
    for (ElementId r : b.rows) row_block[r] = b.idempotent;
    for (ElementId c : b.cols) col_block[c] = b.idempotent;
  }
  out.matrix_M = SymbolicMatrix(n);
  out.matrix_Mprime = SymbolicMatrix(n);
  for (auto* m : {&out.matrix_M, &out.matrix_Mprime}) {
    m->row_labels = out.row_order;
    m->col_labels = out.col_order;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ElementId r = out.row_order[i];
      const ElementId c = out.col_order[j];
      const Polynomial& entry = C.at(position(B, r), position(B, c));
      out.matrix_M.at(i, j) = entry;
      if (row_block[r] == col_block[c]) out.matrix_Mprime.at(i, j) = entry;
    }
  return out;
}

Polynomial theta_e(const OrderedSemigroup& os, const StructureConstants& star, ElementId e) {
  for (const auto& b : idempotent_blocks(os)) {
    if (b.idempotent != e) continue;
    if (b.rows.size() != b.cols.size()) return {};
    SymbolicMatrix sub(b.rows.size());
    sub.row_labels = b.rows;
    sub.col_labels = b.cols;
    for (std::size_t i = 0; i < b.rows.size(); ++i)
      for (std::size_t j = 0; j < b.cols.size(); ++j) {
        const FormalSum p = star.product(b.rows[i], b.cols[j]);
        for (auto [r, c] : p.terms())
          sub.at(i, j) += Polynomial::variable(static_cast<VariableId>(r)) * Integer(c);
      }
    return sym_det(sub);
  }
  throw Error("theta_e: " + os.table().label(e) + " is not a nonzero idempotent");
}

std::map<VariableId, Polynomial> mobius_substitution(const OrderedSemigroup& os,
                                                     const MobiusTable& mu) {
  std::map<VariableId, Polynomial> sigma;
  for (ElementId s : os.basis()) {
    Polynomial y;
    for (ElementId t : os.basis())
      if (os.leq(t, s))
        y += Polynomial::variable(static_cast<VariableId>(t)) * Integer(mu(t, s));
    sigma.emplace(static_cast<VariableId>(s), std::move(y));
  }
  return sigma;
}

Factorization factorize(const OrderedSemigroup& os, std::size_t max_dim) {
  const MobiusTable mu(os.poset());
  const StructureConstants star = star_structure_constants(os, mu);
  const BlockDecomposition blocks = block_decompose(os, star);
  const auto sigma = mobius_substitution(os, mu);

  Factorization out;
  out.contracted = os.contracted();
  out.sign = blocks.sign;
  Polynomial unsigned_product = Polynomial::constant(1);
  for (const auto& b : blocks.blocks) {
    Factor f{b.idempotent, theta_e(os, star, b.idempotent), {}};
    f.substituted = substitute(f.theta, sigma);
    unsigned_product = unsigned_product * f.substituted;
    out.factors.push_back(std::move(f));
  }
  out.product = unsigned_product * Integer(out.sign);
  out.direct = sym_det(os.contracted() ? contracted_cayley(os.table()) : semigroup_cayley(os.table()),
                       max_dim);
  out.det_M = sym_det(blocks.matrix_M, max_dim);
  out.det_Mprime = sym_det(blocks.matrix_Mprime, max_dim);
  if (out.direct == unsigned_product)
    out.ratio_sign = 1;
  else if (out.direct == -unsigned_product)
    out.ratio_sign = -1;
  out.equal = out.product == out.direct;
  return out;
}

Factorization factor_determinant(const CayleyTable& S, std::size_t max_dim) {
  const OrderedSemigroup os(S);
  const SmoothnessReport report = is_lll_smooth(os);
  if (!report.lll_smooth) throw NotLLLSmooth("semigroup is not lll-smooth");
  Factorization f = factorize(os, max_dim);
  if (!f.equal)
    throw FactorizationMismatch(
        f.ratio_sign ? "parity sign disagrees with the sign of direct/product"
                     : "product of block determinants differs from the direct determinant");
  return f;
}

BridgeCheck full_vs_contracted(const CayleyTable& S, std::size_t max_dim) {
  if (!S.zero()) throw NoZeroElement("full/contracted bridge needs a zero element");
  const auto x0 = static_cast<VariableId>(*S.zero());
  BridgeCheck out;
  out.full = sym_det(semigroup_cayley(S), max_dim);
  const Polynomial contracted = sym_det(contracted_cayley(S), max_dim);
  std::map<VariableId, Polynomial> sigma;
  for (ElementId s = 0; s < S.size(); ++s)
    if (!S.is_zero(s))
      sigma.emplace(static_cast<VariableId>(s),
                    Polynomial::variable(static_cast<VariableId>(s)) - Polynomial::variable(x0));
  out.bridged = Polynomial::variable(x0) * substitute(contracted, sigma);
  out.holds = out.full == out.bridged;
  return out;
}

std::vector<std::string> variable_names(const CayleyTable& S) { return S.labels(); }

}  // namespace semidet
