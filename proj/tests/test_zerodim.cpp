#include <doctest.h>

#include "ratpoints/error.hpp"
#include "ratpoints/parse.hpp"
#include "systems.hpp"

using namespace ratpoints;

namespace {
MultiPoly R(const char* s) { return parse_polynomial_raw(s); }
}  // namespace

TEST_SUITE("zerodim") {

TEST_CASE("circle meets diagonal") {
  auto sols = rational_solutions({{R("x^2+y^2-2"), R("x-y")}, {Var::x, Var::y}});
  CHECK(sols == std::vector<Solution>{{-1, -1}, {1, 1}});
}

TEST_CASE("irrational coordinates give no rational solutions") {
  CHECK(rational_solutions({{R("x^2-2"), R("y-x")}, {Var::x, Var::y}}).empty());
}

TEST_CASE("a curve is not zero-dimensional") {
  try {
    rational_solutions({{R("x^2+y^2-2"), R("x z - z - 1")}, {Var::x, Var::y, Var::z}});
    FAIL("expected NotZeroDimensional");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotZeroDimensional);
  }
}

TEST_CASE("undeclared variables are rejected") {
  CHECK_THROWS_AS(rational_solutions({{R("x - z")}, {Var::x}}), Error);
}

TEST_CASE("extraneous resultant roots are pruned") {
  // the eliminant has x-roots 0 and 2, but y² = 2 over x = 2
  auto sols = rational_solutions({{R("y^2 - x"), R("y^2 - 3x + x^2")}, {Var::x, Var::y}});
  CHECK(sols == std::vector<Solution>{{0, 0}});
}

TEST_CASE("three variables") {
  auto sols = rational_solutions({{R("x - 1"), R("x y - 2"), R("z^2 - y - 2")}, {Var::x, Var::y, Var::z}});
  CHECK(sols == std::vector<Solution>{{1, 2, -2}, {1, 2, 2}});
}

TEST_CASE("random systems agree with exhaustive scan") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 12; ++t) {
    auto g = systems::random_system(rng, t % 3 == 2 ? 3 : 2);
    INFO(g.description);
    auto got = rational_solutions(g.system);
    CHECK(got == systems::scan(g.system, 18));
  }
}

}
