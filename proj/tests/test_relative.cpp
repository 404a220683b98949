#include <doctest.h>

#include "brute.hpp"
#include "ratpoints/error.hpp"
#include "ratpoints/parse.hpp"
#include "ratpoints/relative.hpp"
#include "ratpoints/report.hpp"

using namespace ratpoints;

namespace {

const TableOracle& corpus_oracle() {
  static TableOracle t(load_corpus_file(RATPOINTS_CORPUS), "table");
  return t;
}

PlaneCurve curve(const char* s, std::optional<unsigned> g = std::nullopt) { return PlaneCurve(parse_polynomial(s), g); }

std::vector<AffinePoint> full_set(const SolutionReport& r) {
  REQUIRE(std::holds_alternative<FullSet>(r.outcome));
  return brute::sorted_lex(std::get<FullSet>(r.outcome).points);
}

}  // namespace

TEST_SUITE("relative") {

TEST_CASE("limits validation") {
  RunLimits l;
  CHECK_NOTHROW(l.validate());
  l.max_rounds = 0;
  CHECK_THROWS_AS(l.validate(), Error);
}

TEST_CASE("genus 2: y^2 = x^6 + 1") {
  auto r = solve_all_high_genus(curve("y^2 - x^6 - 1", 2), corpus_oracle(), {});
  CHECK(r.genus == 2);
  CHECK(full_set(r) == std::vector<AffinePoint>{{0, -1}, {0, 1}});
  CHECK(r.log.size() == 2);
  CHECK(r.excision_chain.size() == 1);
  CHECK(r.log.back().verdict == Verdict::No);
}

TEST_CASE("genus 3: x^4 + y^4 = 17") {
  auto c = curve("x^4 + y^4 - 17");
  auto r = solve_all_high_genus(c, corpus_oracle(), {});
  CHECK(r.genus == 3);
  auto pts = full_set(r);
  CHECK(pts.size() == 8);
  for (const auto& p : pts) CHECK(c.contains(p));
  CHECK(pts == brute::points(c.f(), 4));
  CHECK(r.log.size() == 3);
}

TEST_CASE("original no gives the empty set after one query") {
  TableOracle t(load_corpus("x^6 - y^2 + 1|no||\n"));
  auto r = solve_all_high_genus(curve("y^2 - x^6 - 1", 2), t, {});
  CHECK(full_set(r).empty());
  CHECK(r.log.size() == 1);
  CHECK(r.excision_chain.empty());
}

TEST_CASE("unknown verdict aborts") {
  BoundedSearchOracle s(3);
  auto r = solve_all_high_genus(curve("y^2 - x^6 - 1", 2), s, {});
  REQUIRE(std::holds_alternative<Aborted>(r.outcome));
  CHECK_FALSE(r.definite());
  auto partial = brute::sorted_lex(std::get<Aborted>(r.outcome).partial_points);
  CHECK(partial == std::vector<AffinePoint>{{0, -1}, {0, 1}});
}

TEST_CASE("genus 1 finiteness") {
  auto fin = decide_finiteness_genus1(curve("y^2 - x^3 - 1"), corpus_oracle(), {});
  REQUIRE(std::holds_alternative<FinitenessVerdict>(fin.outcome));
  CHECK(std::get<FinitenessVerdict>(fin.outcome).verdict == Finiteness::Finite);
  CHECK(fin.torsion.size() == 5);
  CHECK(fin.log.size() == 2);

  auto inf = decide_finiteness_genus1(curve("y^2 - x^3 + 2"), corpus_oracle(), {});
  REQUIRE(std::holds_alternative<FinitenessVerdict>(inf.outcome));
  CHECK(std::get<FinitenessVerdict>(inf.outcome).verdict == Finiteness::Infinite);
  CHECK(inf.torsion.empty());
  CHECK(inf.log.size() == 2);

  TableOracle none(load_corpus("x^3 - y^2 + 1|no||\n"));
  auto empty = decide_finiteness_genus1(curve("y^2 - x^3 - 1"), none, {});
  REQUIRE(std::holds_alternative<FinitenessVerdict>(empty.outcome));
  CHECK(std::get<FinitenessVerdict>(empty.outcome).verdict == Finiteness::Finite);
  CHECK(empty.log.size() == 1);
}

TEST_CASE("dispatch") {
  ConicOracle conic;
  auto g0 = dispatch(curve("x^2 + y^2 - 5"), conic, {});
  REQUIRE(std::holds_alternative<Genus0Result>(g0.outcome));
  CHECK(std::get<Genus0Result>(g0.outcome).exists);
  REQUIRE(std::get<Genus0Result>(g0.outcome).parametrization);
  auto no = dispatch(curve("x^2 + y^2 - 3"), conic, {});
  CHECK_FALSE(std::get<Genus0Result>(no.outcome).exists);
  try {
    dispatch(curve("y - x^2"), conic, {});
    FAIL("expected UnsupportedShape");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedShape);
  }
  CHECK(std::holds_alternative<FullSet>(dispatch(curve("x^4 + y^4 - 17"), corpus_oracle(), {}).outcome));
}

TEST_CASE("structured output is deterministic") {
  auto a = to_json(solve_all_high_genus(curve("x^4 + y^4 - 17"), corpus_oracle(), {})).dump();
  auto b = to_json(solve_all_high_genus(curve("x^4 + y^4 - 17"), corpus_oracle(), {})).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j.contains("outcome"));
  CHECK(outcome_kind(FullSet{}) == "full_set");
}

}
