#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace semidet {

using VariableId = std::uint32_t;
using Integer = boost::multiprecision::cpp_int;

/// Product of variables with positive exponents, sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VariableId v, std::uint32_t exponent = 1);

  const std::vector<std::pair<VariableId, std::uint32_t>>& factors() const noexcept {
    return factors_;
  }
  std::uint32_t degree() const noexcept;
  std::uint32_t exponent(VariableId v) const noexcept;

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VariableId, std::uint32_t>> factors_;
};

/// Graded lexicographic order, largest first: higher total degree, then the
/// larger exponent of the lowest-indexed variable where they differ.
struct GradedLexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GradedLexFirst>;

  Polynomial() = default;
  static Polynomial constant(const Integer& c);
  static Polynomial variable(VariableId v);
  static Polynomial term(const Monomial& m, const Integer& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coeff(const Monomial& m) const;

  /// Largest total degree; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Integer& c) const;
  Polynomial pow(std::uint32_t k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

/// Simultaneous substitution; variables absent from sigma are left unchanged.
Polynomial substitute(const Polynomial& p, const std::map<VariableId, Polynomial>& sigma);

/// Deterministic text rendering, e.g. "x_e^2 - x_g^2". Variables without a
/// name render as "x<id>".
std::string canonical_string(const Polynomial& p, const std::vector<std::string>& names = {});

}  // namespace semidet
