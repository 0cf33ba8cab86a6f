#pragma once

#include "formalpde/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace formalpde {

// Sparse multivariate polynomial over the rationals in χ_1, χ_2, ...
// Exponent vectors are stored with trailing zeros trimmed, so a polynomial
// carries no fixed variable count. The map order is lexicographic, which is
// a monomial order, so the last term is the leading term.
class Polynomial {
 public:
  using Exponent = std::vector<unsigned>;
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index);  // 0-based: variable(0) is χ_1
  static Polynomial monomial(Exponent e, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  std::size_t variable_count() const;
  unsigned total_degree() const;
  const Exponent& leading_exponent() const;
  const Rational& leading_coefficient() const;

  // Positive rational c such that p / c has coprime integer coefficients.
  Rational content() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  // "χ_1^2 - 3/2*χ_2" style; `name` replaces χ.
  std::string to_string(const std::string& name = "χ") const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

// Quotient a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);
// Throws std::logic_error when the division is not exact.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor (monic in the lex leading term). Exact Euclid for
// univariate inputs; for multivariate inputs only trivial common factors
// (one divides the other) are detected and 1 is returned otherwise.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace formalpde
