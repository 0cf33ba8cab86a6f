#include "formalpde/parser.hpp"
#include "formalpde/purity.hpp"

#include <doctest.h>

#include <algorithm>

using namespace formalpde;

namespace {

LinearSystem load(const char* text) { return complete(parse(text).system).final_system; }

std::vector<std::string> equations(const ParamSystem& sys, unsigned first_variable) {
  std::vector<std::string> out;
  for (const auto& e : sys.equations()) out.push_back(render_expression(e, sys.m(), first_variable));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names(const std::vector<Jet>& js, unsigned first_variable) {
  std::vector<std::string> out;
  for (const auto& j : js) out.push_back(jet_name(j, 1, first_variable));
  return out;
}

const char* kExample2 = "vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]";
const char* kExample3 = "vars=3; eq: y[1,1]; eq: y[1,3] - y[2]";
const char* kExample4 = "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]";
const char* kTwisted = "vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]";
const char* kThird = "vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]";
const char* kExample7 = "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]";
const char* kExample8 = "vars=3; eq: y[1,3]; eq: y[2,3]";

}  // namespace

TEST_CASE("example 4 localizes to a three-dimensional system") {
  auto sys = load(kExample4);
  auto loc = localize(sys, 2);
  CHECK(loc.parameters == 1);
  CHECK(equations(loc.system, 2) ==
        std::vector<std::string>{"y_{22} - (χ_1)*y_{2}", "y_{23} - (χ_1)*y_{3}", "y_{33}"});
  auto inv = localized_inverse(loc);
  CHECK(inv.dimension() == 3);
  CHECK(names(inv.parametric, 2) == std::vector<std::string>{"y", "y_{2}", "y_{3}"});
  auto rep = is_pure(parse(kExample4).system);
  CHECK(rep.pure);
  CHECK(rep.codimension == 2);
  CHECK(rep.alpha == 3u);
}

TEST_CASE("localization map") {
  LocalizedSystem loc;
  loc.original_n = 3;
  loc.parameters = 1;
  auto [factor, jet] = loc.map(Jet{0, MultiIndex({2, 0, 1})});
  CHECK(factor.to_string() == "χ_1^2");
  CHECK(jet.index.entries() == std::vector<unsigned>{0, 1});
}

TEST_CASE("example 2: ȳ_3 is torsion") {
  auto rep = is_pure(parse(kExample2).system);
  CHECK(rep.codimension == 2);
  CHECK_FALSE(rep.pure);
  REQUIRE(rep.torsion.size() == 1);
  CHECK(render(rep.torsion[0], 1) == "ȳ_{3} (z4)");
  CHECK(rep.torsion[0].companion_unknown == 4u);
}

TEST_CASE("example 3 is 2-pure, also through its first-order companion") {
  auto rep = is_pure(parse(kExample3).system);
  CHECK(rep.pure);
  CHECK(rep.codimension == 2);
  CHECK(rep.localized_dimension == 2u);
  auto comp = first_order_companion(load(kExample3));
  auto crep = is_pure(comp);
  CHECK(crep.pure);
  CHECK(crep.codimension == 2);
  CHECK(crep.torsion.empty());
}

TEST_CASE("example 8: not pure, localized dimension 1") {
  auto rep = is_pure(parse(kExample8).system);
  CHECK(rep.codimension == 1);
  CHECK_FALSE(rep.pure);
  CHECK(rep.localized_dimension == 1u);
  REQUIRE(rep.torsion.size() == 1);
  CHECK(render(rep.torsion[0], 1) == "ȳ_{3} (z4)");
}

TEST_CASE("third curve localized at r = 2") {
  auto sys = load(kThird);
  auto loc = localize(sys, 2);
  auto inv = localized_inverse(loc);
  CHECK(names(inv.parametric, 2) ==
        std::vector<std::string>{"y", "y_{2}", "y_{3}", "y_{23}", "y_{33}", "y_{233}"});
  auto gens = top_generators(loc.system, 1);
  REQUIRE(gens.size() == 1);
  RenderOptions ro;
  ro.first_variable = 2;
  const auto text = render(gens[0], 1, ro);
  CHECK(text.rfind("E ≡ a^{233} + (χ_1)*a^{2223} + ", 0) == 0);
  CHECK(gens[0].truncated);
  CHECK(text.size() > 9);
  CHECK(text.substr(text.size() - 10) == " + ... = 0");
}

TEST_CASE("localized dimension equals the smallest nonzero character") {
  for (const char* text : {kExample3, kExample4, kTwisted, kThird, kExample8}) {
    auto rep = is_pure(parse(text).system);
    REQUIRE(rep.localized_dimension.has_value());
    REQUIRE(rep.alpha.has_value());
    CHECK(*rep.localized_dimension == *rep.alpha);
  }
}

TEST_CASE("localizing at r = n changes nothing") {
  for (const char* text : {kExample2, kExample4, kExample8, kExample7})
    CHECK(torsion_generators(load(text), parse(text).system.n()).empty());
  auto rep = is_pure(parse(kExample7).system);
  CHECK(rep.pure);
  CHECK(rep.codimension == 4);
  CHECK(rep.localized_dimension == 16u);
}

TEST_CASE("localization errors") {
  CHECK_THROWS_WITH(localize(parse(kExample3).system, 2), "localization needs a completed system");
  CHECK_THROWS_WITH(localized_dimension(localize(load(kExample8), 2)), "wrong codimension for localization");
}

TEST_CASE("no equations: codimension 0 and pure") {
  auto rep = is_pure(parse("vars=3;").system);
  CHECK(rep.codimension == 0);
  CHECK(rep.pure);
  CHECK(rep.torsion.empty());
}
