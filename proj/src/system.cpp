#include "formalpde/system.hpp"

#include <algorithm>

namespace formalpde {

LinearSystem change_coordinates(const LinearSystem& sys, const CoordinateChange& a) {
  const unsigned n = sys.n();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("coordinate change has wrong size");
  if (rank(a) != n) throw std::invalid_argument("singular coordinate change");

  // d_i as a linear form in the new derivations, stored as a polynomial.
  std::vector<Polynomial> forms(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (!is_zero(a(i, j))) forms[i] += Polynomial::variable(j) * a(i, j);

  std::map<std::pair<unsigned, unsigned>, Polynomial> powers;
  auto power = [&](unsigned i, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial p(1);
    for (unsigned k = 0; k < e; ++k) p *= forms[i];
    return powers.emplace(key, std::move(p)).first->second;
  };

  std::vector<Equation> out;
  for (const auto& eq : sys.equations()) {
    JetTerms<Rational> terms;
    for (const auto& [jet, c] : eq.terms()) {
      Polynomial op(c);
      for (unsigned i = 0; i < n; ++i)
        if (jet.index[i] > 0) op *= power(i, jet.index[i]);
      for (const auto& [e, coef] : op.terms()) {
        std::vector<unsigned> mu(n, 0);
        std::copy(e.begin(), e.end(), mu.begin());
        Jet target{jet.unknown, MultiIndex(mu)};
        auto [it, inserted] = terms.emplace(target, coef);
        if (!inserted) it->second += coef;
      }
    }
    Equation e(std::move(terms));
    if (!e.empty()) out.push_back(std::move(e));
  }
  return LinearSystem(n, sys.m(), std::move(out), sys.order());
}

std::vector<Jet> companion_unknowns(const LinearSystem& sys) {
  std::vector<Jet> out;
  const unsigned q = sys.order();
  if (q <= 1) {
    for (unsigned k = 0; k < sys.m(); ++k) out.push_back({k, MultiIndex(sys.n())});
    return out;
  }
  for (unsigned t = 0; t < q; ++t)
    for (unsigned k = 0; k < sys.m(); ++k) {
      auto idx = enumerate(sys.n(), t);
      std::reverse(idx.begin(), idx.end());
      for (auto& mu : idx) out.push_back({k, mu});
    }
  return out;
}

LinearSystem first_order_companion(const LinearSystem& sys) {
  const unsigned q = sys.order(), n = sys.n();
  if (q <= 1) return sys;
  const auto zs = companion_unknowns(sys);
  std::map<std::pair<unsigned, std::vector<unsigned>>, unsigned> znum;
  for (unsigned z = 0; z < zs.size(); ++z) znum[{zs[z].unknown, zs[z].index.entries()}] = z;
  const auto z_of = [&](const Jet& j) { return znum.at({j.unknown, j.index.entries()}); };
  const MultiIndex zero(n);
  const auto zjet = [&](unsigned z, std::optional<std::size_t> dir) {
    return Jet{z, dir ? zero.raised(*dir) : zero};
  };
  const unsigned m2 = static_cast<unsigned>(zs.size());

  std::vector<Equation> out;
  auto push = [&](JetTerms<Rational> t) {
    Equation e(std::move(t));
    if (!e.empty()) out.push_back(std::move(e));
  };

  // z(μ)_i = z(μ + 1_i) while μ + 1_i stays below order q.
  for (unsigned z = 0; z < m2; ++z) {
    if (zs[z].order() + 1 >= q) continue;
    for (std::size_t i = 0; i < n; ++i) {
      JetTerms<Rational> t;
      t.emplace(zjet(z, i), 1);
      t.emplace(zjet(z_of(zs[z].raised(i)), std::nullopt), -1);
      push(std::move(t));
    }
  }

  // Order-q jets have several first-order names z(ν)_i; the canonical one
  // uses the largest i. Equate all others with it.
  auto canonical = [&](const Jet& j) {
    std::size_t i = n;
    while (j.index[i - 1] == 0) --i;
    --i;
    return zjet(z_of({j.unknown, *j.index.lowered(i)}), i);
  };
  for (unsigned k = 0; k < sys.m(); ++k)
    for (const auto& lambda : enumerate(n, q)) {
      Jet top{k, lambda};
      Jet c = canonical(top);
      for (std::size_t i = n; i-- > 0;) {
        auto nu = lambda.lowered(i);
        if (!nu) continue;
        Jet other = zjet(z_of({k, *nu}), i);
        if (other == c) continue;
        JetTerms<Rational> t;
        t.emplace(c, 1);
        t.emplace(other, -1);
        push(std::move(t));
      }
    }

  for (const auto& eq : sys.equations()) {
    JetTerms<Rational> t;
    for (const auto& [jet, c] : eq.terms()) {
      Jet target = jet.order() == q ? canonical(jet) : zjet(z_of(jet), std::nullopt);
      auto [it, inserted] = t.emplace(target, c);
      if (!inserted) it->second += c;
    }
    push(std::move(t));
  }
  return LinearSystem(n, m2, std::move(out), 1);
}

}  // namespace formalpde
