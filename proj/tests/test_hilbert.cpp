#include "formalpde/completion.hpp"
#include "formalpde/hilbert.hpp"
#include "formalpde/parser.hpp"

#include <doctest.h>

using namespace formalpde;

namespace {

std::vector<std::int64_t> counted(const char* text, unsigned T) {
  return hilbert_function(complete(parse(text).system).final_system, T).coefficients;
}

using V = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("principal class series: degrees all 2 give (1+x)^n") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto s = principal_class_series(std::vector<unsigned>(n, 2), n, n + 3);
    for (unsigned t = 0; t <= n + 3; ++t) CHECK(s.coefficients[t] == static_cast<std::int64_t>(binomial(n, t)));
    CHECK(s.sum() == (std::int64_t{1} << n));
  }
}

TEST_CASE("principal class series examples") {
  CHECK(principal_class_series({3, 2}, 3, 6).coefficients == V{1, 3, 5, 6, 6, 6, 6});
  auto r2 = principal_class_series({2, 3, 2}, 3, 6);
  CHECK(r2.coefficients == V{1, 3, 4, 3, 1, 0, 0});
  CHECK(r2.sum() == 12);
  CHECK(principal_class_series({}, 2, 3).coefficients == V{1, 2, 3, 4});
  CHECK_THROWS_WITH(principal_class_series({2, 2, 2}, 2, 4), "rank exceeds variable count");
  CHECK_THROWS(principal_class_series({0}, 2, 4));
}

TEST_CASE("counted Hilbert functions match the independent oracle") {
  // Frozen from tests/oracle/hilbert_oracle.py (standard monomials of a grevlex basis).
  CHECK(counted("vars=1; eq: y[1,1]", 8) == V{1, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(counted("vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]", 8) == V{1, 2, 1, 0, 0, 0, 0, 0, 0});
  CHECK(counted("vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]", 8) == V{1, 2, 2, 1, 0, 0, 0, 0, 0});
  CHECK(counted("vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]", 8) == V{1, 3, 3, 1, 0, 0, 0, 0, 0});
  CHECK(counted("vars=3; eq: y[3,3]; eq: y[2,3]; eq: y[1,3]; eq: y[1,2]", 8) == V{1, 3, 2, 2, 2, 2, 2, 2, 2});
  CHECK(counted("vars=3; eq: y[1,1]; eq: y[1,3] - y[2]", 8) == V{1, 3, 2, 2, 2, 2, 2, 2, 2});
  CHECK(counted("vars=3; eq: y[3,3]; eq: y[2,3] - y[1,3]; eq: y[2,2] - y[1,2]", 8) == V{1, 3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(counted("vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]; eq: y[1,3]; eq: y[1,2]", 8) ==
        V{1, 3, 1, 0, 0, 0, 0, 0, 0});
  CHECK(counted("vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]", 8) == V{1, 3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(counted("vars=3; eq: y[3,3,3] - y[1,1]; eq: y[2,2] - y[1,3]", 8) == V{1, 3, 5, 6, 6, 6, 6, 6, 6});
  CHECK(counted("vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2] - y[1]; eq: y[3,3]; eq: y[2,4] - y[1,1] - y[3]", 8) ==
        V{1, 4, 6, 4, 1, 0, 0, 0, 0});
  CHECK(counted("vars=3; eq: y[1,3]; eq: y[2,3]", 8) == V{1, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("property: regular sequences follow the principal class series") {
  struct Case {
    const char* text;
    std::vector<unsigned> degrees;
  };
  const Case cases[] = {
      {"vars=1; eq: y[1,1]", {2}},
      {"vars=2; eq: y[2,2]; eq: y[1,2] - y[1,1]", {2, 2}},
      {"vars=2; eq: y[2,2,2]; eq: y[1,2] - y[1,1]", {3, 2}},
      {"vars=3; eq: y[3,3]; eq: y[2,3] - y[1,1]; eq: y[2,2]", {2, 2, 2}},
      {"vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3]; eq: y[2,2] - y[1,1]", {2, 2, 2}},
      {"vars=3; eq: y[3,3] - y[1,1]; eq: y[2,3,3]; eq: y[2,2] - y[1,1]", {2, 3, 2}},
      {"vars=4; eq: y[4,4]; eq: y[3,4] - y[2,2]; eq: y[3,3]; eq: y[2,4] - y[1,1]", {2, 2, 2, 2}},
  };
  for (const auto& c : cases) {
    auto sys = complete(parse(c.text).system).final_system;
    unsigned stable = 0;
    while (symbol_dimension(sys, stable) != 0) ++stable;
    const unsigned T = stable + 3;
    auto cmp = compare(hilbert_function(sys, T), principal_class_series(c.degrees, sys.n(), T));
    CHECK(cmp.agree);
  }
}

TEST_CASE("comparison reports the first mismatch") {
  auto tw = complete(parse("vars=3; eq: y[3,3,3] - y[1]; eq: y[3,3] - y[2]").system).final_system;
  auto cmp = compare(hilbert_function(tw, 6), principal_class_series({3, 2}, 3, 6));
  CHECK_FALSE(cmp.agree);
  CHECK(cmp.first_mismatch == 2u);
  CHECK_THROWS(compare(PowerSeries{{1, 2}}, PowerSeries{{1}}));
}
