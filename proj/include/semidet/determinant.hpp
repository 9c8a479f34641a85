#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidet/mobius.hpp"
#include "semidet/polynomial.hpp"

namespace semidet {

/// Square matrix of polynomials with element labels on rows and columns.
struct SymbolicMatrix {
  std::size_t dim = 0;
  std::vector<Polynomial> entries;  ///< row-major
  ElementSet row_labels;
  ElementSet col_labels;

  explicit SymbolicMatrix(std::size_t d = 0)
      : dim(d), entries(d * d), row_labels(d), col_labels(d) {}

  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
};

/// Entry (b, b') = sum_{b''} c_{b'', b, b'} x_{b''}; variable ids are element ids.
SymbolicMatrix cayley_matrix(const StructureConstants& sc);

/// Entry (s, t) = x_{st} over all elements.
SymbolicMatrix semigroup_cayley(const CayleyTable& S);

/// Entry (s, t) = x_{st} if st != 0, else 0, over the nonzero elements. Throws NoZeroElement.
SymbolicMatrix contracted_cayley(const CayleyTable& S);

inline constexpr std::size_t kDefaultMaxDim = 10;

/// Exact determinant by Laplace expansion memoised over column subsets.
/// Throws DimensionCap when the matrix exceeds max_dim.
Polynomial sym_det(const SymbolicMatrix& m, std::size_t max_dim = kDefaultMaxDim);

/// Parity sign (+1 / -1) of the permutation taking `from` to `to` (same elements).
int permutation_sign(const ElementSet& from, const ElementSet& to);

struct IdempotentBlock {
  ElementId idempotent;
  ElementSet rows;  ///< tilde-L class of the idempotent
  ElementSet cols;  ///< tilde-R class of the idempotent
};

struct BlockDecomposition {
  SymbolicMatrix matrix_M;
  SymbolicMatrix matrix_Mprime;
  ElementSet row_order;
  ElementSet col_order;
  std::vector<IdempotentBlock> blocks;
  int sign = 1;  ///< parity(row_order) * parity(col_order) relative to basis order
};

/// Rearranges the *-Cayley matrix into tilde-class blocks. Blocks are ordered by
/// the smallest member of each tilde-L class, members by index.
BlockDecomposition block_decompose(const OrderedSemigroup& os, const StructureConstants& star);

/// Determinant of the tilde-L(e) x tilde-R(e) block of the *-Cayley matrix.
/// A non-square block yields the zero polynomial.
Polynomial theta_e(const OrderedSemigroup& os, const StructureConstants& star, ElementId e);

/// x_s -> sum_{t <<< s} mu(t, s) x_t over the basis.
std::map<VariableId, Polynomial> mobius_substitution(const OrderedSemigroup& os,
                                                     const MobiusTable& mu);

struct Factor {
  ElementId idempotent;
  Polynomial theta;       ///< in the x variables of the *-table
  Polynomial substituted; ///< after the Mobius substitution
};

struct Factorization {
  int sign = 1;  ///< from permutation parity
  std::optional<int> ratio_sign;  ///< direct / unsigned product, when it is +-1
  std::vector<Factor> factors;
  Polynomial product;  ///< sign * prod of substituted factors
  Polynomial direct;   ///< contracted determinant if S has a zero, else full
  Polynomial det_M;
  Polynomial det_Mprime;
  bool equal = false;  ///< product == direct
  bool contracted = false;
};

/// Factorization record without smoothness pre-check and without throwing on mismatch.
Factorization factorize(const OrderedSemigroup& os, std::size_t max_dim = kDefaultMaxDim);

/// Verifies smoothness first (NotLLLSmooth) and throws FactorizationMismatch
/// when the product differs from the direct determinant.
Factorization factor_determinant(const CayleyTable& S, std::size_t max_dim = kDefaultMaxDim);

struct BridgeCheck {
  bool holds = false;
  Polynomial full;      ///< theta_S(X)
  Polynomial bridged;   ///< x_0 * contracted(y_s = x_s - x_0)
};

/// theta_S(X) = x_0 * contracted_theta(Y), y_s = x_s - x_0. Throws NoZeroElement.
BridgeCheck full_vs_contracted(const CayleyTable& S, std::size_t max_dim = kDefaultMaxDim);

/// Variable names equal to the element labels, for rendering.
std::vector<std::string> variable_names(const CayleyTable& S);

}  // namespace semidet
