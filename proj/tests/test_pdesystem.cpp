#include "formalpde/completion.hpp"
#include "formalpde/parser.hpp"

#include <doctest.h>

using namespace formalpde;

namespace {

LinearSystem load(const char* text) { return parse(text).system; }

std::vector<std::string> names(const std::vector<Jet>& js, unsigned m = 1) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(jet_name(j, m));
  return out;
}

std::vector<std::size_t> slice_dims(const LinearSystem& s, unsigned lo, unsigned hi) {
  std::vector<std::size_t> out;
  for (unsigned t = lo; t <= hi; ++t) out.push_back(slice(s, t).dimension);
  return out;
}

const char* kExample7 = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]";

}  // namespace

TEST_CASE("equation prolongation and top part") {
  auto sys = load("vars=3; eq: y[3,3,3] - y[1,1]");
  const auto& e = sys.equations().at(0);
  CHECK(e.order() == 3);
  CHECK_FALSE(e.is_homogeneous());
  CHECK(jet_name(e.leading_jet(), 1) == "y_{333}");
  CHECK(render_expression(e.prolonged(0), 1) == "y_{1333} - y_{111}");
  CHECK(render_expression(e.top_part(), 1) == "y_{333}");
}

TEST_CASE("system construction errors") {
  Equation bad({{Jet{1, MultiIndex({1})}, Rational(1)}});
  CHECK_THROWS_AS(LinearSystem(1, 1, {bad}), std::invalid_argument);
  Equation wrong_n({{Jet{0, MultiIndex({1, 0})}, Rational(1)}});
  CHECK_THROWS_AS(LinearSystem(1, 1, {wrong_n}), std::invalid_argument);
  CHECK_THROWS_AS(load("vars=1; eq: y[1,1]").with_order(1), std::invalid_argument);
}

TEST_CASE("example 7 jet-space slices") {
  auto sys = load(kExample7);
  CHECK(slice_dims(sys, 0, 6) == std::vector<std::size_t>{1, 5, 11, 15, 16, 16, 16});
  std::vector<std::string> third;
  for (const auto& j : slice(sys, 3).parametric)
    if (j.order() == 3) third.push_back(jet_name(j, 1));
  std::sort(third.begin(), third.end());
  CHECK(third == std::vector<std::string>{"y_{111}", "y_{113}", "y_{122}", "y_{123}"});
}

TEST_CASE("example 7: symbol g_3 from the 16 hand-listed prolonged equations") {
  // The sixteen order-3 symbol equations written out directly.
  const char* text =
      "vars=4;"
      "eq: y[4,4,4]; eq: y[3,4,4]; eq: y[3,3,4]; eq: y[3,3,3];"
      "eq: y[2,4,4]; eq: y[2,3,4] - y[1,1,3]; eq: y[2,3,3]; eq: y[2,2,4]; eq: y[2,2,3]; eq: y[2,2,2] - y[1,1,3];"
      "eq: y[1,4,4]; eq: y[1,3,4] - y[1,2,2]; eq: y[1,3,3]; eq: y[1,2,4] - y[1,1,1]; eq: y[1,1,4]; eq: y[1,1,2]";
  auto listed = load(text);
  Matrix<Rational> m(0, 0);
  JetIndex idx(4, 1, 3, 3);
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : listed.equations()) rows.push_back(equation_row(idx, e));
  Matrix<Rational> a(rows.size(), idx.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) a(i, j) = rows[i][j];
  CHECK(rank(a) == 16);
  CHECK(idx.size() - rank(a) == symbol_dimension(load(kExample7), 3));
}

TEST_CASE("abstract examples: parametric jets") {
  auto a2 = load("vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]");
  CHECK(names(slice(a2, 3).parametric) == std::vector<std::string>{"y", "y_{1}", "y_{2}", "y_{11}"});
  auto a2p = load("vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]");
  CHECK(names(slice(a2p, 3).parametric) ==
        std::vector<std::string>{"y", "y_{1}", "y_{2}", "y_{11}", "y_{22}", "y_{111}"});
  auto a3 = load("vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]");
  CHECK(slice(a3, 4).dimension == 8);
}

TEST_CASE("projection finds the crossed-derivative equations") {
  auto tw = load("vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]");
  CHECK_FALSE(projection_surjective(tw, 2));
  auto proj = projected_system(tw, 1);
  CHECK(proj.order() == 3);
  CHECK(proj.equation_space(3).rank() > tw.equation_space(3).rank());
  auto p = prolong(tw, 1);
  CHECK(p.order() == 4);
  CHECK(p.equation_space(4).rank() == tw.equation_space(4).rank());
}

TEST_CASE("coordinate change matches the hand computation") {
  auto ex2 = load("vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]");
  CoordinateChange a = CoordinateChange::identity(3);
  a(0, 1) = -1;  // d_1 -> d_1 - d_2
  auto moved = change_coordinates(ex2, a);
  std::vector<std::string> eqs;
  for (const auto& e : rows_up_to_order(moved.equation_space(2), 2)) eqs.push_back(render_expression(e, 1));
  std::sort(eqs.begin(), eqs.end());
  CHECK(eqs == std::vector<std::string>{"y_{13}", "y_{22} - y_{12}", "y_{23}", "y_{33}"});
  CHECK_THROWS_WITH(change_coordinates(ex2, Matrix<Rational>(3, 3)), "singular coordinate change");
}

TEST_CASE("property: slice dimensions are invariant under 20 random frames") {
  const char* systems[] = {
      "vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]",
      "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]",
      "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]",
      "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]",
      "vars=3; eq: y[1,3]; eq: y[2,3]",
      kExample7,
  };
  for (const char* text : systems) {
    auto sys = load(text);
    const unsigned top = sys.n() == 4 ? 4 : 5;
    auto base = slice_dims(sys, 0, top);
    for (const auto& frame : random_frames(sys.n(), 20, 3)) CHECK(slice_dims(change_coordinates(sys, frame), 0, top) == base);
  }
}

TEST_CASE("first-order companion has the same sections") {
  for (const char* text : {"vars=3; eq: y[1,1]; eq: y[1,3] - y[2]; eq: y[1,2]; eq: y[2,2]",
                           "vars=3; eq: y[1,3]; eq: y[2,3]"}) {
    auto sys = load(text);
    auto comp = first_order_companion(sys);
    CHECK(comp.order() == 1);
    CHECK(comp.m() == 4);
    auto zs = companion_unknowns(sys);
    CHECK(names(zs) == std::vector<std::string>{"y", "y_{1}", "y_{2}", "y_{3}"});
    for (unsigned t = 1; t <= 4; ++t) CHECK(slice(comp, t).dimension == slice(sys, t + 1).dimension);
  }
}

TEST_CASE("prolonging twice equals prolonging once by the sum") {
  for (const char* text : {"vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]", "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]",
                           "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]"}) {
    auto sys = load(text);
    auto twice = prolong(prolong(sys, 1), 1);
    auto once = prolong(sys, 2);
    CHECK(twice.order() == once.order());
    CHECK(slice_dims(twice, 0, once.order() + 1) == slice_dims(once, 0, once.order() + 1));
    CHECK(slice(once, once.order()).dimension == slice(sys, once.order()).dimension);
  }
}
