#include "formalpde/matrix.hpp"

#include <numeric>

namespace formalpde {

namespace {

struct FractionFree {
  Matrix<Polynomial> a;
  std::vector<std::size_t> perm;
  std::vector<std::size_t> pivots;
  Polynomial last_pivot{1};
};

// Fraction-free Gauss-Jordan: every intermediate entry is a minor of the
// input, so each division below is exact.
FractionFree fraction_free(Matrix<Polynomial> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  FractionFree ff;
  ff.perm.resize(rows);
  std::iota(ff.perm.begin(), ff.perm.end(), 0);
  Polynomial prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    std::swap(ff.perm[p], ff.perm[r]);
    const Polynomial piv = a(r, c);
    const bool same = piv == prev;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Polynomial aic = a(i, c);
      if (aic.is_zero() && same) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        Polynomial& x = a(i, j);
        const Polynomial& y = a(r, j);
        if (x.is_zero() && (y.is_zero() || aic.is_zero())) continue;
        Polynomial v = piv * x;
        if (!aic.is_zero() && !y.is_zero()) v -= aic * y;
        x = same ? std::move(v) : divide_exact(v, prev);
      }
    }
    prev = piv;
    ff.pivots.push_back(c);
    ++r;
  }
  ff.last_pivot = prev;
  ff.a = std::move(a);
  return ff;
}

}  // namespace

Matrix<Polynomial> clear_denominators(const Matrix<ParamScalar>& m) {
  Matrix<Polynomial> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Polynomial> dens;
    Polynomial common(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).denominator();
      if (m(i, j).is_zero() || d.is_constant()) continue;
      bool seen = false;
      for (const auto& e : dens)
        if (e == d) seen = true;
      if (seen) continue;
      dens.push_back(d);
      common *= d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) continue;
      out(i, j) = divide_exact(x.numerator() * common, x.denominator());
    }
    // Make row content 1 so that entries stay small.
    Rational c = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (out(i, j).is_zero()) continue;
      c = out(i, j).content();
      break;
    }
    if (sgn(c) != 0) {
      Integer g = 0, l = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (out(i, j).is_zero()) continue;
        Rational cj = out(i, j).content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cj.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cj.get_den_mpz_t());
      }
      Rational scale(l, g);
      scale.canonicalize();
      if (scale != 1)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= scale;
    }
  }
  return out;
}

RrefResult<ParamScalar> rref(const Matrix<ParamScalar>& m) {
  FractionFree ff = fraction_free(clear_denominators(m));
  RrefResult<ParamScalar> out;
  out.matrix = Matrix<ParamScalar>(m.rows(), m.cols());
  out.pivots = ff.pivots;
  const Polynomial& d = ff.last_pivot;
  for (std::size_t i = 0; i < ff.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = ff.a(i, j);
      if (!x.is_zero()) out.matrix(i, j) = ParamScalar(x, d);
    }
  return out;
}

RankCertificate certified_rank(const Matrix<ParamScalar>& m) {
  FractionFree ff = fraction_free(clear_denominators(m));
  RankCertificate cert;
  cert.rank = ff.pivots.size();
  cert.cols = ff.pivots;
  cert.rows.assign(ff.perm.begin(), ff.perm.begin() + static_cast<std::ptrdiff_t>(cert.rank));
  cert.minor = cert.rank ? ff.last_pivot : Polynomial();
  return cert;
}

std::size_t rank_at(const Matrix<ParamScalar>& m, const std::vector<Rational>& point) {
  Matrix<Rational> e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) e(i, j) = m(i, j).evaluate(point);
  return rank(e);
}

Polynomial determinant(const Matrix<Polynomial>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  Matrix<Polynomial> a = m;
  Polynomial prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Polynomial();
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = Polynomial();
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace formalpde
