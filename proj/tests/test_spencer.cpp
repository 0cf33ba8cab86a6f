#include "formalpde/completion.hpp"
#include "formalpde/parser.hpp"

#include <doctest.h>

using namespace formalpde;

namespace {

LinearSystem load(const char* text) { return parse(text).system; }

const char* kCorpus[] = {
    "vars=1; eq: y[1,1]",
    "vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]",
    "vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]",
    "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]",
    "vars=2; eq: y[2,2,2]; eq: y[1,2,2]; eq: y[1,1,2]; eq: y[1,1,1]; eq: y[2,2]; eq: y[1,2]",
    "vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]",
    "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]",
    "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]; eq: y[1,3]; eq: y[1,2]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3,3]; eq: y[2,2] - y[1,1]",
    "vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]",
    "vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]",
    "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]",
    "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]",
    "vars=3; eq: y[1,3]; eq: y[2,3]",
};

const char* kExample7 = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]";
const char* kThird = "vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]";

}  // namespace

TEST_CASE("exterior basis") {
  auto b = exterior_basis(4, 2);
  CHECK(b.size() == 6);
  CHECK(b.front() == std::vector<unsigned>{0, 1});
  CHECK(b.back() == std::vector<unsigned>{2, 3});
  CHECK(exterior_basis(3, 0).size() == 1);
}

TEST_CASE("symbol dimensions") {
  auto ex7 = load(kExample7);
  CHECK(symbol_dimension(ex7, 2) == 6);
  CHECK(symbol_dimension(ex7, 3) == 4);
  CHECK(symbol_dimension(ex7, 4) == 1);
  CHECK(symbol_dimension(ex7, 5) == 0);
  auto g = symbol(ex7, 3);
  CHECK(g.dimension() == 4);
  CHECK(g.ambient() == 20);
  auto third = complete(load(kThird)).final_system;
  CHECK(symbol_dimension(third, 3) == 6);
}

TEST_CASE("property: δ∘δ = 0 on all composable pairs across the corpus") {
  for (const char* text : kCorpus) {
    auto sys = complete(load(text)).final_system;
    const unsigned n = sys.n();
    for (unsigned t = 2; t <= sys.order() + 3; ++t)
      for (unsigned s = 0; s + 1 < n; ++s) {
        auto d1 = delta_matrix(sys, s, t);
        auto d2 = delta_matrix(sys, s + 1, t - 1);
        REQUIRE(d2.cols() == d1.rows());
        CHECK((d2 * d1).is_zero());
      }
  }
}

TEST_CASE("property: Euler characteristic of every δ-sequence") {
  for (const char* text : kCorpus) {
    auto sys = complete(load(text)).final_system;
    for (unsigned top = 1; top <= sys.order() + 3; ++top) {
      long chi_dims = 0, chi_h = 0;
      for (const auto& r : delta_sequence(sys, top)) {
        const long sign = r.s % 2 ? -1 : 1;
        chi_dims += sign * static_cast<long>(r.domain);
        chi_h += sign * static_cast<long>(r.cohomology);
      }
      CHECK(chi_dims == chi_h);
    }
  }
}

TEST_CASE("δ at top exterior degree is rejected") {
  auto sys = load(kExample7);
  CHECK_THROWS_WITH(delta_matrix(sys, 4, 3), "top exterior degree");
  CHECK_THROWS(cohomology(sys, 5, 3));
}

TEST_CASE("example 7: g_4 is 2,3-acyclic but not involutive") {
  auto sys = load(kExample7);
  std::vector<std::size_t> h;
  for (unsigned s = 1; s <= 4; ++s) h.push_back(cohomology(sys, s, 4).cohomology);
  CHECK(h == std::vector<std::size_t>{0, 0, 0, 1});
  auto seq = delta_sequence(sys, 5);
  REQUIRE(seq.size() == 5);
  CHECK(seq[1].domain == 4);
  CHECK(seq[2].domain == 24);
  CHECK(seq[3].domain == 24);
  CHECK(seq[4].domain == 4);
  for (const auto& r : seq) CHECK(r.cohomology == 0);
  CHECK(cohomology(sys, 2, 3).cohomology == 0);
  auto check = check_acyclic(sys, 3, 4, 4);
  CHECK(check.acyclic);
  CHECK(check.exact);
  CHECK_FALSE(is_involutive_symbol(sys, 4).involutive);
  CHECK(is_involutive_symbol(sys, 5).involutive);
}

TEST_CASE("third curve: H^2 at g_3 does not vanish") {
  auto sys = complete(load(kThird)).final_system;
  auto r = cohomology(sys, 2, 3);
  CHECK(r.domain == 18);
  CHECK(r.cocycles >= 13);
  CHECK(r.coboundaries == 12);
  CHECK(r.cohomology > 0);
  for (const auto& e : delta_sequence(sys, 6)) CHECK(e.cohomology == 0);
}

TEST_CASE("janet tableau and characters") {
  auto tw = complete(load("vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]")).final_system;
  auto tab = janet_tableau(tw, 2);
  CHECK(tab.alpha == std::vector<std::size_t>{3, 0, 0});
  CHECK(tab.beta == std::vector<std::size_t>{0, 2, 1});
  auto res = is_involutive_symbol(tw, 2);
  CHECK(res.involutive);
  CHECK(res.cartan_passed);
  CHECK(res.next_symbol_dimension == 3);

  auto ex8 = load("vars=3; eq: y[1,3]; eq: y[2,3]");
  CoordinateChange a = CoordinateChange::identity(3);
  a(0, 2) = -1;
  CHECK(janet_tableau(ex8, 2, a).alpha == std::vector<std::size_t>{3, 1, 0});
  CHECK(is_involutive_symbol(ex8, 2, {}, &a).witness_trial == 0);
}

TEST_CASE("random frames are unimodular and reproducible") {
  auto a = random_frames(3, 25, 9);
  auto b = random_frames(3, 25, 9);
  REQUIRE(a.size() == 25);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k] == b[k]);
    Matrix<Polynomial> p(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) p(i, j) = Polynomial(a[k](i, j));
    const Rational det = determinant(p).constant_value();
    CHECK((det == 1 || det == -1));
  }
  CHECK_FALSE(random_frames(3, 5, 1) == random_frames(3, 5, 2));
}

TEST_CASE("property: Cartan test and δ-cohomology agree on the corpus") {
  for (const char* text : kCorpus) {
    auto sys = complete(load(text)).final_system;
    for (unsigned t = sys.order(); t <= sys.order() + 2; ++t) {
      InvolutionResult res;
      REQUIRE_NOTHROW(res = is_involutive_symbol(sys, t));
      auto coh = check_acyclic(sys, sys.n(), t, default_window(t, sys.n()));
      CHECK(res.involutive == coh.acyclic);
      CHECK(res.cartan_passed == coh.acyclic);
    }
  }
}
