#include <doctest.h>

#include "brute.hpp"
#include "ratpoints/curve.hpp"
#include "ratpoints/error.hpp"
#include "ratpoints/parse.hpp"

using namespace ratpoints;

namespace {
PlaneCurve curve(const char* s, std::optional<unsigned> g = std::nullopt) { return PlaneCurve(parse_polynomial(s), g); }
}  // namespace

TEST_SUITE("curve") {

TEST_CASE("genus of smooth curves follows (d-1)(d-2)/2") {
  CHECK(genus(curve("x^2 + y^2 - 2")) == 0);
  CHECK(genus(curve("y^2 - x^3 - 1")) == 1);
  CHECK(genus(curve("x^3 + y^3 - 1")) == 1);
  CHECK(genus(curve("x^4 + y^4 - 17")) == 3);
  CHECK(genus(curve("x^5 + y^5 - 3")) == 6);
  CHECK(genus(curve("x^5 + x*y^4 + y^5 + 1")) == 6);
}

TEST_CASE("singular closures need an override") {
  CHECK_FALSE(is_smooth_projective(curve("y^2 - x^3")));           // cusp at origin
  CHECK_FALSE(is_smooth_projective(curve("y^2 - x^2 - x^3")));     // node at origin
  CHECK_FALSE(is_smooth_projective(curve("y^2 - x^6 - 1")));       // singular at infinity
  CHECK_FALSE(is_smooth_projective(curve("x^2 y^2 - x^2 - y^2")));  // singular points at infinity
  // nodes at the irrational points (±√2, 0)
  CHECK_FALSE(is_smooth_projective(curve("x^4 - 4x^2 + 4 - y^2 - y^4")));
  try {
    genus(curve("y^2 - x^3"));
    FAIL("expected GenusUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GenusUnavailable);
  }
  CHECK(genus(curve("y^2 - x^6 - 1", 2)) == 2);
}

TEST_CASE("trichotomy") {
  CHECK(classify(0).description() == "empty or infinite");
  CHECK(classify(1).description() == "empty, non-empty finite, or infinite");
  CHECK(classify(3).description() == "empty, or non-empty finite");
  CHECK(classify(0).allows(Possibility::Infinite));
  CHECK_FALSE(classify(0).allows(Possibility::NonemptyFinite));
  CHECK_FALSE(classify(2).allows(Possibility::Infinite));
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(curve("x y - x"), Error);       // x is a factor
  CHECK_THROWS_AS(curve("x^2 - 2"), Error);       // splits into two lines
  CHECK_THROWS_AS(curve("x + z"), Error);
  CHECK_NOTHROW(curve("x - 3"));
}

TEST_CASE("fibers") {
  auto c = curve("x^2 + y^2 - 2");
  CHECK(fiber_solutions(c, 1) == std::vector<Rational>{-1, 1});
  CHECK(fiber_solutions(c, 0).empty());
  CHECK(fiber_solutions(curve("x^4 + y^4 - 17"), 2) == std::vector<Rational>{-1, 1});
  try {
    fiber_solutions(curve("x - 3"), 3);
    FAIL("expected VerticalComponent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VerticalComponent);
  }
}

TEST_CASE("enumerate_points agrees with brute force") {
  for (const char* f : {"x^2 + y^2 - 2", "x^2 + y^2 - 1", "y^2 - x^3 - 1", "x^4 + y^4 - 17", "y^2 + y - x^3 + x",
                        "3x^2 - 2y^2 + x y - 1"}) {
    auto c = curve(f);
    auto got = enumerate_points(c, 12);
    CHECK(brute::sorted_lex(got) == brute::points(c.f(), 12));
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(height_order(got[i - 1], got[i]));
  }
}

}
