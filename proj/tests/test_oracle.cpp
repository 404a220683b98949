#include <doctest.h>

#include "brute.hpp"
#include "ratpoints/error.hpp"
#include "ratpoints/oracle.hpp"
#include "ratpoints/parse.hpp"

using namespace ratpoints;

namespace {
PolySystem sys(const char* s) { return single_equation_system(parse_polynomial(s)); }
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("bounded search") {
  BoundedSearchOracle b2(2);
  auto yes = b2.decide(sys("x^2+y^2-2"));
  CHECK(yes.verdict == Verdict::Yes);
  REQUIRE(yes.witness);
  CHECK(*yes.witness == Solution{1, 1});
  CHECK(BoundedSearchOracle(5).decide(sys("x^2+y^2-3")).verdict == Verdict::Unknown);
  // fractional witness
  auto c = BoundedSearchOracle(5).decide(sys("x^2+y^2-1"));
  REQUIRE(c.witness);
  CHECK(*c.witness == Solution{0, 1});
  // three variables
  PolySystem s{{parse_polynomial_raw("x^2 + y^2 - 2"), parse_polynomial_raw("x z - z - 1")}, {Var::x, Var::y, Var::z}};
  auto w = BoundedSearchOracle(3).decide(s);
  REQUIRE(w.verdict == Verdict::Yes);
  CHECK(*w.witness == Solution{-1, 1, Rational(-1, 2)});
}

TEST_CASE("bounded search is monotone in the bound") {
  for (const char* f : {"x^2+y^2-5", "3x^2 - y^2 - 2", "y^2 - x^3 + 2", "4x^2 + 9y^2 - 2"}) {
    bool seen = false;
    for (std::uint64_t b = 1; b <= 8; ++b) {
      bool yes = BoundedSearchOracle(b).decide(sys(f)).verdict == Verdict::Yes;
      if (seen) CHECK(yes);
      seen = seen || yes;
      CHECK(yes == !brute::points(parse_polynomial(f), static_cast<long>(b)).empty());
    }
  }
}

TEST_CASE("system keys") {
  PolySystem s{{parse_polynomial_raw("x z - z - 1"), parse_polynomial_raw("2x^2+2y^2-4")}, {Var::x, Var::y, Var::z}};
  CHECK(system_key(s) == "x^2 + y^2 - 2;xz - z - 1");
}

TEST_CASE("corpus loading") {
  auto one = load_corpus("# comment\nx^2+y^2-2|yes|(1,1),(-1,1)|circle\n");
  CHECK(one.size() == 1);
  CHECK(one.entries.begin()->first == "x^2 + y^2 - 2");
  CHECK(one.entries.begin()->second.known_points.size() == 2);
  try {
    load_corpus("x^2+y^2-2|yes|(1,2)|bad\n");
    FAIL("expected WitnessMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WitnessMismatch);
  }
  try {
    load_corpus("x^2+y^2-2|yes||\n2y^2+2x^2-4|no||\n");
    FAIL("expected DuplicateKey");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateKey);
  }
  try {
    load_corpus("\nx^2+y^2-2|maybe||\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_corpus("x^^2|yes||\n"), ParseError);
  CHECK_THROWS_AS(load_corpus("x^2+y^2-2|yes|(1/0,1)|\n"), ParseError);
}

TEST_CASE("table oracle") {
  TableOracle t(load_corpus("x^2+y^2-3|no||\nx^2+y^2-2|yes|(1,1)|\n"));
  CHECK(t.decide(sys("x^2+y^2-3")).verdict == Verdict::No);
  auto y = t.decide(sys("2x^2+2y^2-4"));
  CHECK(y.verdict == Verdict::Yes);
  CHECK(*y.witness == Solution{1, 1});
  CHECK(t.decide(sys("x^2+y^2-5")).verdict == Verdict::Unknown);
}

TEST_CASE("conic decisions") {
  CHECK(conic_solvable(1, 1, 2));
  CHECK_FALSE(conic_solvable(1, 1, 3));
  CHECK(conic_solvable(2, 3, 5));
  CHECK(conic_solvable(1, 1, 25));
  CHECK_FALSE(conic_solvable(1, 1, 21));
  ConicOracle c;
  CHECK(c.decide(sys("x^2+y^2-3")).verdict == Verdict::No);
  auto yes = c.decide(sys("x^2+y^2-5"));
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(*yes.witness == Solution{1, 2});
  CHECK(c.decide(sys("x^2-y^2-3")).verdict == Verdict::Unknown);
  CHECK(c.decide(sys("x^3+y^2-3")).verdict == Verdict::Unknown);
}

TEST_CASE("conic decision matches Legendre on a small cube") {
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b)
      for (long c = 1; c <= 8; ++c) {
        INFO(a << " " << b << " " << c);
        CHECK(conic_solvable(a, b, c) == brute::legendre_solvable(a, b, c));
      }
}

TEST_CASE("query log and oracle specs") {
  QueryLog log;
  auto o = make_oracle("search:3");
  query(*o, sys("x^2+y^2-2"), log, 0);
  query(*o, sys("x^2+y^2-3"), log, 1);
  REQUIRE(log.size() == 2);
  CHECK(log[0].verdict == Verdict::Yes);
  CHECK(log[1].verdict == Verdict::Unknown);
  CHECK(log[1].round == 1);
  CHECK(log[0].key == "x^2 + y^2 - 2");
  CHECK(make_oracle("conic")->describe() == "conic");
  CHECK_THROWS_AS(make_oracle("search:"), Error);
  CHECK_THROWS_AS(make_oracle("magic"), Error);
  CHECK(make_oracle(std::string("table:") + RATPOINTS_CORPUS)->decide(sys("x^2+y^2-3")).verdict == Verdict::No);
}

}
