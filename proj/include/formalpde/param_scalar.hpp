#pragma once

#include "formalpde/polynomial.hpp"

#include <string>

namespace formalpde {

// Element of Q(χ_1, ..., χ_s) stored as numerator / denominator.
// Normal form: the denominator's leading coefficient is 1 and an exact
// quotient num/den is always detected. Cancellation of nontrivial common
// factors happens only when full gcd reduction is switched on.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(long c) : ParamScalar(Rational(c)) {}     // NOLINT(google-explicit-constructor)
  ParamScalar(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamScalar(Polynomial num, Polynomial den);

  static void set_full_gcd(bool on);
  static bool full_gcd();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational evaluate(const std::vector<Rational>& point) const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  friend bool operator==(const ParamScalar& a, const ParamScalar& b);

  std::string to_string(const std::string& name = "χ") const;

 private:
  void normalize();
  Polynomial num_, den_;
};

inline bool is_zero(const ParamScalar& x) { return x.is_zero(); }
inline bool is_one(const ParamScalar& x) { return x == ParamScalar(1); }
inline std::string to_string(const ParamScalar& x) { return x.to_string(); }

}  // namespace formalpde
