#include "formalpde/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace formalpde {

namespace {

void trim(Polynomial::Exponent& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Polynomial::Exponent add_exponents(const Polynomial::Exponent& a, const Polynomial::Exponent& b) {
  Polynomial::Exponent r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool divides(const Polynomial::Exponent& d, const Polynomial::Exponent& e) {
  if (d.size() > e.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Polynomial::Exponent sub_exponents(const Polynomial::Exponent& e, const Polynomial::Exponent& d) {
  Polynomial::Exponent r = e;
  for (std::size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  trim(r);
  return r;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!formalpde::is_zero(c)) terms_.emplace(Exponent{}, c);
}

Polynomial Polynomial::variable(std::size_t index) {
  Exponent e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponent e, const Rational& c) {
  trim(e);
  Polynomial p;
  if (!formalpde::is_zero(c)) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t Polynomial::variable_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

const Polynomial::Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  return abs(r);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluation point too short");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (formalpde::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (formalpde::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (formalpde::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [e, x] : terms_) x *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

std::string Polynomial::to_string(const std::string& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest term first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = e.empty() ? false : mag == 1;
    if (!unit) {
      out << mag.get_str();
      if (!e.empty()) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << name << "_" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q, r = a;
  const auto& lb = b.leading_exponent();
  const auto& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const auto& lr = r.leading_exponent();
    if (!divides(lb, lr)) return std::nullopt;
    Polynomial t = Polynomial::monomial(sub_exponents(lr, lb), r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *q;
}

namespace {

Polynomial make_monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_coefficient();
  p *= Rational(1) / lc;
  return p;
}

Polynomial univariate_remainder(Polynomial a, const Polynomial& b) {
  const unsigned db = b.total_degree();
  const Rational& cb = b.leading_coefficient();
  while (!a.is_zero() && a.total_degree() >= db) {
    unsigned d = a.total_degree() - db;
    Polynomial t = Polynomial::monomial(d == 0 ? Polynomial::Exponent{} : Polynomial::Exponent{d},
                                        a.leading_coefficient() / cb);
    a -= t * b;
  }
  return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.variable_count() <= 1 && b.variable_count() <= 1) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
      Polynomial r = univariate_remainder(x, y);
      x = std::move(y);
      y = std::move(r);
    }
    return make_monic(x);
  }
  if (try_divide(a, b)) return make_monic(b);
  if (try_divide(b, a)) return make_monic(a);
  return Polynomial(1);
}

}  // namespace formalpde
