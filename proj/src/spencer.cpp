#include "formalpde/spencer.hpp"

#include <algorithm>
#include <random>

namespace formalpde {

std::vector<std::vector<unsigned>> exterior_basis(unsigned n, unsigned s) {
  std::vector<std::vector<unsigned>> out;
  if (s > n) return out;
  std::vector<unsigned> cur(s);
  for (unsigned i = 0; i < s; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int k = static_cast<int>(s) - 1;
    while (k >= 0 && cur[k] == n - s + static_cast<unsigned>(k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (unsigned j = static_cast<unsigned>(k) + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

JanetTableau janet_tableau(const LinearSystem& sys, unsigned t, const CoordinateChange& frame) {
  if (t == 0) throw std::invalid_argument("class undefined for order-0 jet");
  const bool identity = frame == CoordinateChange::identity(sys.n());
  const LinearSystem local = identity ? sys : change_coordinates(sys, frame);
  const auto& s = local.symbol_space(t);
  JanetTableau tab;
  tab.order = t;
  tab.frame = frame;
  tab.beta.assign(sys.n(), 0);
  tab.alpha.assign(sys.n(), 0);
  for (auto p : s.pivots) ++tab.beta[class_of(s.index[p].index) - 1];
  for (unsigned i = 1; i <= sys.n(); ++i)
    tab.alpha[i - 1] = sys.m() * class_count(sys.n(), t, i) - tab.beta[i - 1];
  return tab;
}

JanetTableau janet_tableau(const LinearSystem& sys, unsigned t) {
  return janet_tableau(sys, t, CoordinateChange::identity(sys.n()));
}

std::vector<CoordinateChange> random_frames(unsigned n, unsigned count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CoordinateChange> out;
  while (out.size() < count) {
    CoordinateChange a(n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng() % 7) - 3;
    // det = ±1 iff the fraction-free determinant is ±1.
    Matrix<Polynomial> p(n, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) p(i, j) = Polynomial(a(i, j));
    Polynomial d = determinant(p);
    if (!d.is_constant() || abs(d.constant_value()) != 1) continue;
    out.push_back(std::move(a));
  }
  return out;
}

namespace {
std::size_t weighted_characters(const JanetTableau& tab) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < tab.alpha.size(); ++i) s += (i + 1) * tab.alpha[i];
  return s;
}

// Larger (β_n, β_{n-1}, ..., β_1) is better.
bool better(const JanetTableau& a, const JanetTableau& b) {
  for (std::size_t i = a.beta.size(); i-- > 0;)
    if (a.beta[i] != b.beta[i]) return a.beta[i] > b.beta[i];
  return false;
}
}  // namespace

InvolutionResult is_involutive_symbol(const LinearSystem& sys, unsigned t, const InvolutionOptions& opts,
                                      const CoordinateChange* frame) {
  const unsigned n = sys.n();
  InvolutionResult res;
  res.next_symbol_dimension = symbol_dimension(sys, t + 1);
  const CoordinateChange given = frame ? *frame : CoordinateChange::identity(n);

  res.tableau = janet_tableau(sys, t, given);
  if (weighted_characters(res.tableau) == res.next_symbol_dimension) {
    res.cartan_passed = true;
    res.witness_trial = 0;
  } else {
    // Coordinate permutations and shears first (readable frames), then random unimodular ones.
    std::vector<CoordinateChange> frames;
    if (n <= 4) {
      std::vector<unsigned> perm(n);
      for (unsigned i = 0; i < n; ++i) perm[i] = i;
      while (std::next_permutation(perm.begin(), perm.end())) {
        CoordinateChange a(n, n);
        for (unsigned i = 0; i < n; ++i) a(i, perm[i]) = 1;
        frames.push_back(std::move(a));
      }
    }
    // Elementary shears d_i -> d_i ∓ d_j.
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        if (i == j) continue;
        for (long sign : {-1L, 1L}) {
          CoordinateChange a = CoordinateChange::identity(n);
          a(i, j) = sign;
          frames.push_back(std::move(a));
        }
      }
    auto randoms = random_frames(n, opts.frames, opts.seed);
    frames.insert(frames.end(), randoms.begin(), randoms.end());
    std::optional<JanetTableau> best;
    for (std::size_t k = 0; k < frames.size(); ++k) {
      auto tab = janet_tableau(sys, t, frames[k]);
      if (weighted_characters(tab) != res.next_symbol_dimension) continue;
      if (!best || better(tab, *best)) {
        best = tab;
        res.witness_trial = static_cast<int>(k + 1);
      }
    }
    if (best) {
      res.cartan_passed = true;
      res.tableau = *best;
    }
  }

  res.certificate = check_acyclic(sys, n, t, opts.window.value_or(default_window(t, n)));
  res.involutive = res.certificate.acyclic;
  if (res.cartan_passed && !res.involutive)
    throw std::logic_error("Cartan test passed on a symbol with nonzero δ-cohomology");
  return res;
}

}  // namespace formalpde
