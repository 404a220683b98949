#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "ratpoints/error.hpp"
#include "ratpoints/excise.hpp"
#include "ratpoints/parse.hpp"

using namespace ratpoints;

namespace {

PlaneCurve curve(const char* s, std::optional<unsigned> g = std::nullopt) { return PlaneCurve(parse_polynomial(s), g); }

ProjectionCenter C3(long a, long b, long c) { return {{Integer(a), Integer(b), Integer(c)}}; }

Matrix3 mul(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Checks the pullback correspondence between h-points and curve points
// off the excised fibers, both sides up to `bound`.
void check_correspondence(const ExcisionRecord& r, long bound) {
  std::set<AffinePoint, PointLess> excised_hits;
  std::set<Rational> xs(r.source.excised_x.begin(), r.source.excised_x.end());
  std::set<AffinePoint, PointLess> images;
  for (const auto& p : brute::points(r.source.f, bound)) {
    if (xs.count(p.x)) continue;
    const Rational gx = r.source.g.evaluate({p.x, p.y, Rational(0)});
    AffinePoint img = project_point(r, {p.x, p.y, 1 / gx});
    CHECK(r.h.evaluate({img.x, img.y, Rational(0)}) == 0);
    CHECK(images.insert(img).second);  // injective
    Pullback back = pullback_point(r, img);
    REQUIRE(std::holds_alternative<AffinePoint>(back));
    CHECK(std::get<AffinePoint>(back) == p);
  }
  for (const auto& q : brute::points(r.h, bound)) {
    Pullback back = pullback_point(r, q);
    if (std::holds_alternative<AtInfinity>(back)) continue;
    const AffinePoint& p = std::get<AffinePoint>(back);
    CHECK(r.source.f.evaluate({p.x, p.y, Rational(0)}) == 0);
    CHECK(xs.count(p.x) == 0);
    CHECK(project_point(r, {p.x, p.y, 1 / r.source.g.evaluate({p.x, p.y, Rational(0)})}) == q);
  }
}

}  // namespace

TEST_SUITE("excise") {

TEST_CASE("excision systems") {
  auto s = build_excision_system(curve("x^2+y^2-2"), {1});
  CHECK(s.g == parse_polynomial_raw("x - 1"));
  CHECK(s.auxiliary() == parse_polynomial_raw("x z - z - 1"));
  auto id = build_excision_system(curve("x^2+y^2-2"), {});
  CHECK(id.auxiliary() == parse_polynomial_raw("z - 1"));
  auto hg = build_excision_system(curve("y^2-x^6-1", 2), {0});
  CHECK(hg.auxiliary() == parse_polynomial_raw("x z - 1"));
  auto frac = build_excision_system(curve("x^2+y^2-1"), {Rational(3, 5), Rational(-4, 5)});
  CHECK(frac.g == parse_polynomial_raw("5x - 3") * parse_polynomial_raw("5x + 4"));
  try {
    build_excision_system(curve("x^2+y^2-2"), {1, 1});
    FAIL("expected DuplicateExcisionValue");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateExcisionValue);
  }
}

TEST_CASE("space points are in bijection with the remaining curve points") {
  for (long B : {5, 20}) {
    auto s = build_excision_system(curve("x^2+y^2-1"), {0, Rational(3, 5)});
    std::vector<AffinePoint> expect;
    for (const auto& p : brute::points(s.f, B))
      if (p.x != 0 && p.x != Rational(3, 5)) expect.push_back(p);
    auto got = space_points(s, B);
    REQUIRE(got.size() == expect.size());
    std::vector<AffinePoint> xy;
    for (const auto& p : got) {
      CHECK(s.contains(p));
      xy.push_back({p[0], p[1]});
    }
    CHECK(brute::sorted_lex(xy) == expect);
  }
}

TEST_CASE("center transforms are unimodular and send the center to e3") {
  for (const auto& c : candidate_centers(3)) {
    auto [fwd, bwd] = center_transform(c);
    CHECK(mul(fwd, bwd) == Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
    for (int i = 0; i < 3; ++i) {
      Integer v = fwd[i][0] * c.c[0] + fwd[i][1] * c.c[1] + fwd[i][2] * c.c[2];
      CHECK(v == (i == 2 ? 1 : 0));
    }
  }
}

TEST_CASE("candidate centers") {
  auto cs = candidate_centers(2);
  REQUIRE(!cs.empty());
  CHECK(cs.front() == C3(0, 0, 1));
  std::set<std::array<Integer, 3>> seen;
  for (const auto& c : cs) CHECK(seen.insert(c.c).second);
  // 98 primitive vectors in [-2, 2]^3, up to sign
  CHECK(cs.size() == 49);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    auto h = [](const ProjectionCenter& p) { return std::max({Integer(abs(p.c[0])), Integer(abs(p.c[1])), Integer(abs(p.c[2]))}); };
    CHECK(h(cs[i - 1]) <= h(cs[i]));
  }
}

TEST_CASE("centers on the closure are skipped") {
  auto s = build_excision_system(curve("y^2-x^6-1", 2), {0});
  CHECK(center_on_closure(s, C3(0, 0, 1)));  // the excised point escapes there
  CHECK(center_on_closure(s, C3(0, 1, 0)));  // asymptotic direction of the curve
  CHECK_FALSE(center_on_closure(s, C3(0, 1, -1)));
  auto r = find_projection_center(s, 3, 10);
  CHECK_FALSE(center_on_closure(s, r.center));
}

TEST_CASE("identity excision with the vertical center returns f") {
  auto s = build_excision_system(curve("x^2+y^2-2"), {});
  CHECK(eliminate(s, C3(0, 0, 1)) == s.f);
  auto r = find_projection_center(s, 3, 10);
  CHECK(r.h == s.f);
  CHECK(r.certificate.certified());
}

TEST_CASE("identity excision with other centers preserves the point set") {
  auto s = build_excision_system(curve("x^2+y^2-2"), {});
  for (auto c : {C3(0, 1, 1), C3(1, 0, 1), C3(1, 1, 1)}) {
    ExcisionRecord r = project(s, c);
    certify(r, 10);
    if (!r.certificate.certified()) continue;
    check_correspondence(r, 10);
  }
}

TEST_CASE("conic with x = 1 excised") {
  auto s = build_excision_system(curve("x^2+y^2-2"), {1});
  auto r = find_projection_center(s, 3, 10);
  CHECK(r.certificate.certified());
  CHECK(r.certificate.check_height == 10);
  check_correspondence(r, 10);
  // the image of (-1, 1) pulls back to itself
  AffinePoint img = project_point(r, {-1, 1, Rational(-1, 2)});
  CHECK(std::get<AffinePoint>(pullback_point(r, img)) == AffinePoint{-1, 1});
  // points off h are rejected
  AffinePoint off{Rational(1, 7), Rational(5, 3)};
  REQUIRE(r.h.evaluate({off.x, off.y, Rational(0)}) != 0);
  try {
    pullback_point(r, off);
    FAIL("expected NotOnCurve");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotOnCurve);
  }
}

TEST_CASE("degree bound for axis centers") {
  auto s = build_excision_system(curve("x^2+y^2-2"), {1});
  for (auto c : {C3(0, 1, 0), C3(1, 0, 0), C3(0, 1, 1), C3(0, 1, -1)}) {
    if (center_on_closure(s, c)) continue;
    CHECK(eliminate(s, c).degree() <= 2 * (1 + 1));
  }
}

}
