#include "formalpde/inverse.hpp"
#include "formalpde/parser.hpp"

#include <doctest.h>

using namespace formalpde;

namespace {

LinearSystem load(const char* text) { return complete(parse(text).system).final_system; }

std::vector<std::string> rendered(const std::vector<ModularEquation>& gens, const std::string& name = "E") {
  std::vector<std::string> out;
  RenderOptions ro;
  ro.name = name;
  for (const auto& g : gens) out.push_back(render(g, 1, ro));
  return out;
}

const char* kFinite[] = {
    "vars=1; eq: y[1,1]",
    "vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]",
    "vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]",
    "vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]",
    "vars=2; eq: y[2,2,2]; eq: y[1,2,2]; eq: y[1,1,2]; eq: y[1,1,1]; eq: y[2,2]; eq: y[1,2]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]; eq: y[1,3]; eq: y[1,2]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]",
    "vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3,3]; eq: y[2,2] - y[1,1]",
    "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]",
    "vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]",
    "vars=2; unknowns=2; eq: y1[1] - y2[]; eq: y1[2]; eq: y2[1,1]; eq: y2[2]",
};

}  // namespace

TEST_CASE("example 1: two generators and a two-dimensional socle") {
  auto sys = load("vars=2; eq: y[2,2,2]; eq: y[1,2,2]; eq: y[1,1,2]; eq: y[1,1,1]; eq: y[2,2]; eq: y[1,2]");
  auto inv = finite_inverse_system(sys);
  CHECK(inv.dimension() == 4);
  std::vector<std::string> par;
  for (const auto& j : inv.parametric) par.push_back(jet_name(j, 1));
  CHECK(par == std::vector<std::string>{"y", "y_{1}", "y_{2}", "y_{11}"});
  CHECK(rendered(top_generators(sys)) == std::vector<std::string>{"E ≡ a^{2} = 0", "E ≡ a^{11} = 0"});
  CHECK(socle(inv).size() == 2);
}

TEST_CASE("example 5: single generators and d_1 E'") {
  auto r = load("vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]; eq: y[1,3]; eq: y[1,2]");
  auto r1 = load("vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]");
  auto r2 = load("vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3,3]; eq: y[2,2] - y[1,1]");
  CHECK(finite_inverse_system(r).dimension() == 5);
  CHECK(finite_inverse_system(r1).dimension() == 8);
  CHECK(finite_inverse_system(r2).dimension() == 12);
  CHECK(rendered(top_generators(r)) == std::vector<std::string>{"E ≡ a^{11} + a^{22} + a^{33} = 0"});
  auto e1 = top_generators(r1);
  CHECK(rendered(e1, "E'") == std::vector<std::string>{"E' ≡ a^{111} + a^{122} + a^{133} = 0"});
  CHECK(rendered(top_generators(r2), "E''") == std::vector<std::string>{"E'' ≡ a^{1113} + a^{1223} + a^{1333} = 0"});
  ModularEquation d;
  d.section = spencer_apply(0, e1.at(0).section);
  CHECK(render(d, 1) == "E ≡ a^{11} + a^{22} + a^{33} = 0");
  CHECK(satisfies(r1, d.section));
}

TEST_CASE("zero first derivatives: the socle is the whole module") {
  auto sys = load("vars=3; eq: y[1]; eq: y[2]; eq: y[3]");
  auto inv = finite_inverse_system(sys);
  CHECK(inv.dimension() == 1);
  CHECK(socle(inv).size() == 1);
  CHECK(rendered(top_generators(sys)) == std::vector<std::string>{"E ≡ a^{0} = 0"});
}

TEST_CASE("infinite inverse systems are rejected") {
  CHECK_THROWS_WITH(finite_inverse_system(load("vars=3; eq: y[1,3]; eq: y[2,3]")), "apply relative localization first");
}

TEST_CASE("property: sections, Spencer operator and generators on finite corpus systems") {
  for (const char* text : kFinite) {
    auto sys = load(text);
    auto inv = finite_inverse_system(sys);
    const unsigned top = inv.top_order + 1;
    auto basis = section_basis(sys, top);
    REQUIRE(basis.size() == inv.dimension());
    for (const auto& f : basis) {
      CHECK(satisfies(sys, f));
      for (std::size_t i = 0; i < sys.n(); ++i) {
        auto di = spencer_apply(i, f);
        CHECK(satisfies(sys, di));
        for (std::size_t j = 0; j < sys.n(); ++j) CHECK(spencer_apply(j, di) == spencer_apply(i, spencer_apply(j, f)));
      }
    }
    auto gens = top_generator_indices(inv);
    CHECK(generated_dimension(inv, gens) == inv.dimension());
    CHECK(socle(inv).size() == gens.size());
    for (const auto& d : inv.derivations) CHECK(d.rows() == inv.dimension());
  }
}

TEST_CASE("wide variable labels are comma separated") {
  const std::string text = "vars=10; eq: y[10,10]; eq: y[1]; eq: y[2]; eq: y[3]; eq: y[4]; eq: y[5]; eq: y[6]; "
                           "eq: y[7]; eq: y[8]; eq: y[9]";
  auto sys = complete(parse(text).system).final_system;
  CHECK(rendered(top_generators(sys)) == std::vector<std::string>{"E ≡ a^{10} = 0"});
}
