#include "semidet/semigroup.hpp"

#include <algorithm>
#include <map>

#include "semidet/errors.hpp"

namespace semidet {

namespace {

std::vector<ElementSet> group_by_key(std::size_t n, const std::vector<std::vector<bool>>& keys) {
  std::map<std::vector<bool>, ElementSet> buckets;
  for (ElementId s = 0; s < n; ++s) buckets[keys[s]].push_back(s);
  std::vector<ElementSet> classes;
  for (auto& [key, members] : buckets) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  return classes;
}

std::vector<bool> right_ideal(const CayleyTable& S, ElementId a) {
  std::vector<bool> in(S.size(), false);
  in[a] = true;
  for (ElementId s = 0; s < S.size(); ++s) in[S(a, s)] = true;
  return in;
}

std::vector<bool> left_ideal(const CayleyTable& S, ElementId a) {
  std::vector<bool> in(S.size(), false);
  in[a] = true;
  for (ElementId s = 0; s < S.size(); ++s) in[S(s, a)] = true;
  return in;
}

std::vector<bool> two_sided_ideal(const CayleyTable& S, ElementId a) {
  std::vector<bool> in = left_ideal(S, a);
  std::vector<bool> out = in;
  for (ElementId x = 0; x < S.size(); ++x)
    if (in[x])
      for (ElementId s = 0; s < S.size(); ++s) out[S(x, s)] = true;
  return out;
}

std::vector<bool> membership(std::size_t n, const ElementSet& set) {
  std::vector<bool> in(n, false);
  for (ElementId s : set) in[s] = true;
  return in;
}

std::string describe(const CayleyTable& S, const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + S.label(set[i]);
  return out + "}";
}

}  // namespace

std::string_view to_string(GreenKind kind) {
  switch (kind) {
    case GreenKind::R: return "R";
    case GreenKind::L: return "L";
    case GreenKind::H: return "H";
    case GreenKind::J: return "J";
    case GreenKind::TildeL: return "tildeL";
    case GreenKind::TildeR: return "tildeR";
    case GreenKind::TildeH: return "tildeH";
  }
  return "?";
}

std::optional<GreenKind> green_kind_from_string(std::string_view name) {
  for (GreenKind k : {GreenKind::R, GreenKind::L, GreenKind::H, GreenKind::J, GreenKind::TildeL,
                      GreenKind::TildeR, GreenKind::TildeH})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::size_t GreenPartition::class_of(ElementId s) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), s)) return i;
  throw Error("element not covered by partition");
}

bool is_idempotent(const CayleyTable& S, ElementId e) { return S(e, e) == e; }

ElementSet idempotents(const CayleyTable& S) {
  ElementSet out;
  for (ElementId e = 0; e < S.size(); ++e)
    if (is_idempotent(S, e)) out.push_back(e);
  return out;
}

ElementId omega_power(const CayleyTable& S, ElementId s) {
  // Powers of s are eventually periodic; exactly one power in the cycle is idempotent.
  ElementId p = s;
  for (std::size_t i = 0; i <= S.size(); ++i) {
    if (is_idempotent(S, p)) return p;
    p = S(p, s);
  }
  // Unreachable for a finite semigroup: some power within |S| steps is idempotent.
  throw Error("omega power not found");
}

GreenPartition green_partition(const CayleyTable& S, GreenKind kind) {
  const std::size_t n = S.size();
  std::vector<std::vector<bool>> keys(n);
  for (ElementId a = 0; a < n; ++a) {
    switch (kind) {
      case GreenKind::R: keys[a] = right_ideal(S, a); break;
      case GreenKind::L: keys[a] = left_ideal(S, a); break;
      case GreenKind::J: keys[a] = two_sided_ideal(S, a); break;
      case GreenKind::H: {
        keys[a] = right_ideal(S, a);
        auto l = left_ideal(S, a);
        keys[a].insert(keys[a].end(), l.begin(), l.end());
        break;
      }
      case GreenKind::TildeL: keys[a] = membership(n, phi_sets(S, a).right); break;
      case GreenKind::TildeR: keys[a] = membership(n, phi_sets(S, a).left); break;
      case GreenKind::TildeH: {
        auto p = phi_sets(S, a);
        keys[a] = membership(n, p.right);
        auto l = membership(n, p.left);
        keys[a].insert(keys[a].end(), l.begin(), l.end());
        break;
      }
    }
  }
  return GreenPartition{kind, group_by_key(n, keys)};
}

PhiSets phi_sets(const CayleyTable& S, ElementId s) {
  PhiSets out;
  for (ElementId e = 0; e < S.size(); ++e) {
    if (!is_idempotent(S, e)) continue;
    if (S(s, e) == s) out.right.push_back(e);
    if (S(e, s) == s) out.left.push_back(e);
  }
  return out;
}

ElementSet generated_subsemigroup(const CayleyTable& S, const ElementSet& gens) {
  std::vector<bool> in(S.size(), false);
  ElementSet members;
  for (ElementId g : gens)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (ElementId g : gens) {
      const ElementId a = S(members[i], g);
      if (!in[a]) {
        in[a] = true;
        members.push_back(a);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet kernel_of_generated(const CayleyTable& S, const ElementSet& gens) {
  if (gens.empty()) throw Error("kernel of an empty generating set");
  const ElementSet T = generated_subsemigroup(S, gens);
  // The minimal ideal is the intersection of all principal ideals T^1 a T^1.
  std::vector<bool> kernel(S.size(), false);
  for (ElementId x : T) kernel[x] = true;
  for (ElementId a : T) {
    std::vector<bool> ideal(S.size(), false);
    ideal[a] = true;
    for (ElementId x : T) {
      ideal[S(x, a)] = true;
      ideal[S(a, x)] = true;
      for (ElementId y : T) ideal[S(S(x, a), y)] = true;
    }
    for (ElementId x : T) kernel[x] = kernel[x] && ideal[x];
  }
  ElementSet out;
  for (ElementId x : T)
    if (kernel[x]) out.push_back(x);
  return out;
}

namespace {

// Returns the single kernel element or describes why there is none.
struct KernelPick {
  std::optional<ElementId> value;
  ElementSet kernel;
};

KernelPick single_kernel(const CayleyTable& S, const ElementSet& phi) {
  if (phi.empty()) return {};
  ElementSet k = kernel_of_generated(S, phi);
  if (k.size() == 1) return {k.front(), k};
  return {std::nullopt, k};
}

}  // namespace

StarPlus star_plus(const CayleyTable& S) {
  StarPlus sp;
  sp.star.resize(S.size());
  sp.plus.resize(S.size());
  for (ElementId s = 0; s < S.size(); ++s) {
    const PhiSets phi = phi_sets(S, s);
    if (phi.right.empty() || phi.left.empty())
      throw EmptyPhiSet(s, "element " + S.label(s) + " has no idempotent " +
                               (phi.right.empty() ? "right" : "left") + " identity");
    for (bool right : {true, false}) {
      const ElementSet& gens = right ? phi.right : phi.left;
      KernelPick k = single_kernel(S, gens);
      if (!k.value)
        throw NotSingletonRich(s, k.kernel,
                               "kernel of <phi" + std::string(right ? "*" : "+") + "(" +
                                   S.label(s) + ")> is " + describe(S, k.kernel));
      (right ? sp.star : sp.plus)[s] = *k.value;
    }
  }
  return sp;
}

std::optional<StarPlus> try_star_plus(const CayleyTable& S) {
  StarPlus sp;
  sp.star.resize(S.size());
  sp.plus.resize(S.size());
  for (ElementId s = 0; s < S.size(); ++s) {
    const PhiSets phi = phi_sets(S, s);
    KernelPick r = single_kernel(S, phi.right);
    if (!r.value) return std::nullopt;
    KernelPick l = single_kernel(S, phi.left);
    if (!l.value) return std::nullopt;
    sp.star[s] = *r.value;
    sp.plus[s] = *l.value;
  }
  return sp;
}

EcomResult is_ecom(const CayleyTable& S) {
  const ElementSet E = idempotents(S);
  for (ElementId e : E)
    for (ElementId f : E)
      if (S(e, f) != S(f, e)) return {false, std::pair{e, f}};
  return {};
}

UnitalResult algebra_has_identity(const CayleyTable& S) {
  const std::size_t n = S.size();
  if (auto one = S.identity()) {
    UnitalResult out{true, std::vector<Rational>(n, Rational(0))};
    out.coefficients[*one] = 1;
    return out;
  }
  // Unknowns lambda_s. For each t and target r:
  //   sum_s lambda_s [s t = r] = [t = r]   and   sum_s lambda_s [t s = r] = [t = r].
  std::vector<std::vector<Rational>> rows;
  rows.reserve(2 * n * n);
  for (ElementId t = 0; t < n; ++t)
    for (ElementId r = 0; r < n; ++r)
      for (bool left : {true, false}) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (ElementId s = 0; s < n; ++s)
          if ((left ? S(s, t) : S(t, s)) == r) row[s] += 1;
        row[n] = (t == r) ? 1 : 0;
        rows.push_back(std::move(row));
      }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][n] != 0) return {};

  UnitalResult out;
  out.unital = true;
  out.coefficients.assign(n, Rational(0));
  for (std::size_t r = 0; r < rank; ++r) out.coefficients[pivot_col[r]] = rows[r][n];
  return out;
}

bool natural_leq(const CayleyTable& S, ElementId e, ElementId f) {
  return S(e, f) == e && S(f, e) == e;
}

std::vector<IdempotentPair> minimal_noncommuting_pairs(const CayleyTable& S) {
  const ElementSet E = idempotents(S);
  std::vector<IdempotentPair> out;
  for (ElementId e : E)
    for (ElementId f : E) {
      if (S(e, f) == S(f, e)) continue;
      bool minimal = true;
      for (ElementId e2 : E) {
        if (!natural_leq(S, e2, e)) continue;
        for (ElementId f2 : E) {
          if (!natural_leq(S, f2, f) || (e2 == e && f2 == f)) continue;
          if (S(e2, f2) != S(f2, e2)) {
            minimal = false;
            break;
          }
        }
        if (!minimal) break;
      }
      if (minimal) out.emplace_back(e, f);
    }
  return out;
}

}  // namespace semidet
