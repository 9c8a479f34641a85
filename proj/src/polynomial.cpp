#include "semidet/polynomial.hpp"

#include <algorithm>

namespace semidet {

Monomial Monomial::variable(VariableId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (auto [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(VariableId v) const noexcept {
  for (auto [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool GradedLexFirst::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i >= fb.size();
}

Polynomial Polynomial::constant(const Integer& c) { return term(Monomial{}, c); }

Polynomial Polynomial::variable(VariableId v) { return term(Monomial::variable(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Integer& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  return r += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  return r -= o;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Integer& c) const {
  Polynomial r;
  if (c == 0) return r;
  r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<VariableId, Polynomial>& sigma) {
  std::map<std::pair<VariableId, std::uint32_t>, Polynomial> powers;
  auto power = [&](VariableId v, std::uint32_t e) -> const Polynomial& {
    auto key = std::pair{v, e};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto s = sigma.find(v);
    Polynomial value = s == sigma.end() ? Polynomial::term(Monomial::variable(v, e), 1)
                                        : s->second.pow(e);
    return powers.emplace(key, std::move(value)).first->second;
  };

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(c);
    for (auto [v, e] : m.factors()) {
      t = t * power(v, e);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

std::string canonical_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  auto name = [&](VariableId v) {
    return v < names.size() ? names[v] : "x" + std::to_string(v);
  };
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string body;
    for (auto [v, e] : m.factors()) {
      if (!body.empty()) body += "*";
      body += name(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      out += mag.str();
    else if (mag == 1)
      out += body;
    else
      out += mag.str() + "*" + body;
  }
  return out;
}

}  // namespace semidet
