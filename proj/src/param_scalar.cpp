#include "formalpde/param_scalar.hpp"

#include <atomic>
#include <stdexcept>

namespace formalpde {

namespace {
std::atomic<bool> g_full_gcd{false};
}

void ParamScalar::set_full_gcd(bool on) { g_full_gcd = on; }
bool ParamScalar::full_gcd() { return g_full_gcd; }

ParamScalar::ParamScalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void ParamScalar::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.constant_value();
    den_ = Polynomial(1);
    return;
  }
  if (auto q = try_divide(num_, den_)) {
    num_ = std::move(*q);
    den_ = Polynomial(1);
    return;
  }
  if (g_full_gcd) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational ParamScalar::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw std::domain_error("evaluation point is a pole");
  return num_.evaluate(point) / d;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ParamScalar(a.num_ + b.num_, a.den_);
  return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar();
  return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return ParamScalar();
  return ParamScalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamScalar::to_string(const std::string& name) const {
  if (den_.is_constant()) return num_.to_string(name);
  auto wrap = [&](const Polynomial& p) {
    std::string s = p.to_string(name);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace formalpde
