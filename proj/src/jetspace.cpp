#include "formalpde/jetspace.hpp"

#include <numeric>
#include <stdexcept>

namespace formalpde {

unsigned MultiIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

MultiIndex MultiIndex::raised(std::size_t i) const {
  MultiIndex r = *this;
  ++r.e_.at(i);
  return r;
}

std::optional<MultiIndex> MultiIndex::lowered(std::size_t i) const {
  if (e_.at(i) == 0) return std::nullopt;
  MultiIndex r = *this;
  --r.e_[i];
  return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

std::string MultiIndex::label(unsigned first_variable) const {
  if (order() == 0) return "0";
  const bool digits = first_variable + e_.size() - 1 <= 9;
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i)
    for (unsigned k = 0; k < e_[i]; ++k) {
      if (!digits && !s.empty()) s += ",";
      s += std::to_string(first_variable + i);
    }
  return s;
}

unsigned class_of(const MultiIndex& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] != 0) return static_cast<unsigned>(i + 1);
  throw std::invalid_argument("class undefined for order-0 jet");
}

std::uint64_t binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::uint64_t monomial_count(unsigned n, unsigned q) {
  if (n == 0) return q == 0 ? 1 : 0;
  return binomial(q + n - 1, n - 1);
}

std::uint64_t class_count(unsigned n, unsigned q, unsigned i) {
  if (i < 1 || i > n) throw std::invalid_argument("class index out of range");
  if (q == 0) return 0;
  // Fix μ_i >= 1 and free entries i..n: multi-indices of length q-1 in n-i+1 variables.
  return monomial_count(n - i + 1, q - 1);
}

namespace {
void enumerate_into(unsigned n, unsigned q, std::size_t pos, std::vector<unsigned>& cur,
                    std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = q;
    out.emplace_back(cur);
    return;
  }
  for (unsigned v = 0; v <= q; ++v) {
    cur[pos] = v;
    enumerate_into(n, q - v, pos + 1, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> enumerate(unsigned n, unsigned q, JetOrdering) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (q == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  enumerate_into(n, q, 0, cur, out);
  return out;
}

bool RankGreater::operator()(const Jet& a, const Jet& b) const {
  unsigned oa = a.order(), ob = b.order();
  if (oa != ob) return oa > ob;
  if (a.index != b.index) return JetOrdering::precedes(a.index, b.index);
  return a.unknown < b.unknown;
}

JetIndex::JetIndex(unsigned n, unsigned m, unsigned lo, unsigned hi) : n_(n), m_(m), lo_(lo), hi_(hi) {
  for (unsigned t = hi + 1; t-- > lo;) {
    for (const auto& mu : enumerate(n, t))
      for (unsigned k = 0; k < m; ++k) {
        lookup_.emplace(std::make_pair(k, mu.entries()), jets_.size());
        jets_.push_back({k, mu});
      }
    if (t == 0) break;
  }
}

std::optional<std::size_t> JetIndex::find(const Jet& j) const {
  auto it = lookup_.find({j.unknown, j.index.entries()});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t JetIndex::at(const Jet& j) const {
  auto r = find(j);
  if (!r) throw std::out_of_range("jet outside the index range");
  return *r;
}

std::string jet_name(const Jet& j, unsigned m, unsigned first_variable) {
  std::string base = m == 1 ? std::string("y") : "y" + std::to_string(j.unknown + 1);
  if (j.order() == 0) return base;
  return base + "_{" + j.index.label(first_variable) + "}";
}

}  // namespace formalpde
