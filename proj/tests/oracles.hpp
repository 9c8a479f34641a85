// Independent reference implementations used only by the tests. Each one is
// written directly from the definitions and shares no code with the library
// beyond CayleyTable and Polynomial arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semidet/cayley_table.hpp"
#include "semidet/determinant.hpp"
#include "semidet/polynomial.hpp"

namespace oracle {

using semidet::CayleyTable;
using semidet::ElementId;
using semidet::Polynomial;
using Set = std::set<ElementId>;

inline std::string data_path(const std::string& name) {
  return std::string(SEMIDET_TEST_DATA) + "/" + name;
}

/// Sum over all permutations of sign * product of entries.
inline Polynomial naive_det(const semidet::SymbolicMatrix& m) {
  const std::size_t n = m.dim;
  if (n == 0) return Polynomial::constant(1);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Polynomial total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Polynomial term = Polynomial::constant(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m.at(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Counts associative tables by trying every one of the n^(n^2) tables.
inline std::uint64_t brute_force_count(std::size_t n) {
  const std::size_t cells = n * n;
  std::vector<std::size_t> t(cells, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a)
      for (std::size_t b = 0; b < n && assoc; ++b)
        for (std::size_t c = 0; c < n && assoc; ++c)
          assoc = t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
    count += assoc;
    std::size_t k = 0;
    while (k < cells && ++t[k] == n) t[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

inline bool idempotent(const CayleyTable& S, ElementId e) { return S(e, e) == e; }

inline Set closure(const CayleyTable& S, Set gens) {
  Set out = gens;
  bool grew = true;
  while (grew) {
    grew = false;
    for (ElementId a : Set(out))
      for (ElementId b : Set(out))
        if (out.insert(S(a, b)).second) grew = true;
  }
  return out;
}

/// Minimal ideal of a finite subsemigroup T: the x lying in TyT for every y in T.
inline Set kernel(const CayleyTable& S, const Set& T) {
  Set out;
  for (ElementId x : T) {
    bool in_all = true;
    for (ElementId y : T) {
      bool found = false;
      for (ElementId a : T)
        for (ElementId b : T) found = found || S(S(a, y), b) == x;
      if (!found) {
        in_all = false;
        break;
      }
    }
    if (in_all) out.insert(x);
  }
  return out;
}

struct StarPlus {
  std::vector<ElementId> star, plus;
};

inline std::optional<StarPlus> star_plus(const CayleyTable& S) {
  StarPlus sp;
  for (ElementId s = 0; s < S.size(); ++s) {
    Set right, left;
    for (ElementId e = 0; e < S.size(); ++e) {
      if (!idempotent(S, e)) continue;
      if (S(s, e) == s) right.insert(e);
      if (S(e, s) == s) left.insert(e);
    }
    if (right.empty() || left.empty()) return std::nullopt;
    const Set kr = kernel(S, closure(S, right));
    const Set kl = kernel(S, closure(S, left));
    if (kr.size() != 1 || kl.size() != 1) return std::nullopt;
    sp.star.push_back(*kr.begin());
    sp.plus.push_back(*kl.begin());
  }
  return sp;
}

/// << and its transitive closure, plus helpers for the pseudo condition.
struct Order {
  const CayleyTable* S;
  StarPlus sp;
  std::vector<std::vector<bool>> ll, lll;

  Order(const CayleyTable& table, StarPlus star_plus) : S(&table), sp(std::move(star_plus)) {
    const std::size_t n = S->size();
    ll.assign(n, std::vector<bool>(n));
    for (ElementId s = 0; s < n; ++s)
      for (ElementId t = 0; t < n; ++t) ll[s][t] = s == (*S)((*S)(sp.plus[s], t), sp.star[s]);
    lll = ll;
    for (ElementId k = 0; k < n; ++k)
      for (ElementId i = 0; i < n; ++i)
        for (ElementId j = 0; j < n; ++j)
          if (lll[i][k] && lll[k][j]) lll[i][j] = true;
  }

  bool antisymmetric() const {
    for (ElementId a = 0; a < S->size(); ++a)
      for (ElementId b = 0; b < S->size(); ++b)
        if (a != b && lll[a][b] && lll[b][a]) return false;
    return true;
  }

  ElementId phi(ElementId s, ElementId t) const { return sp.plus[(*S)(sp.star[s], t)]; }

  std::optional<ElementId> phi_limit(ElementId s, ElementId t) const {
    ElementId si = s, ti = t;
    ElementId prev = phi(si, ti);
    for (std::size_t i = 0; i <= S->size() * S->size(); ++i) {
      si = (*S)(s, prev);
      ti = (*S)(prev, t);
      const ElementId next = phi(si, ti);
      if (next == prev) return next;
      prev = next;
    }
    return std::nullopt;
  }

  /// Intermediate count on a shortest << path from a to b.
  std::size_t essential(ElementId a, ElementId b) const {
    const std::size_t n = S->size();
    std::vector<std::size_t> dist(n, n + 1);
    std::deque<ElementId> q{a};
    dist[a] = 0;
    while (!q.empty()) {
      const ElementId x = q.front();
      q.pop_front();
      for (ElementId y = 0; y < n; ++y)
        if (ll[x][y] && dist[y] > n) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    return dist[b] - 1;
  }

  /// Tries every sequence v_1..v_n of elements against the pseudo condition.
  bool pseudo_holds(ElementId u, ElementId s, ElementId t) const {
    const CayleyTable& T = *S;
    const ElementId st = T(s, t);
    const std::size_t len = essential(u, st);
    const auto phi0 = phi_limit(T(sp.plus[u], s), T(t, sp.star[u]));
    if (!phi0 || sp.plus[u] != *phi0) return false;
    const std::size_t n = T.size();
    std::vector<ElementId> v(len, 0);
    for (;;) {
      bool ok = true;
      ElementId prev = u;
      for (std::size_t i = 0; i < len && ok; ++i) {
        ok = ll[prev][v[i]] && sp.plus[v[i]] == *phi0;
        prev = v[i];
      }
      ok = ok && ll[prev][st] && (len == 0 || ll[v[len - 1]][t]);
      if (ok) {
        ElementId right = t;
        for (std::size_t i = len; i-- > 0;) right = T(right, sp.star[v[i]]);
        right = T(right, sp.star[u]);
        const auto phi1 = phi_limit(T(sp.plus[u], s), right);
        if (phi1 && *phi1 == *phi0) return true;
      }
      std::size_t k = 0;
      while (k < len && ++v[k] == n) v[k++] = 0;
      if (k == len) return false;
    }
  }

  bool pseudo_transitive() const {
    const CayleyTable& T = *S;
    for (ElementId u = 0; u < T.size(); ++u)
      for (ElementId s = 0; s < T.size(); ++s)
        for (ElementId t = 0; t < T.size(); ++t) {
          const ElementId st = T(s, t);
          if (lll[u][st] && !ll[u][st] && !pseudo_holds(u, s, t)) return false;
        }
    return true;
  }

  /// Basis elements (nonzero) below s.
  Set z_support(ElementId s) const {
    Set out;
    for (ElementId x = 0; x < S->size(); ++x)
      if (lll[x][s] && !S->is_zero(x)) out.insert(x);
    return out;
  }
};

}  // namespace oracle
