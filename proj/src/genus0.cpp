#include "ratpoints/genus0.hpp"

#include <set>

#include "ratpoints/error.hpp"
#include "ratpoints/oracle.hpp"

namespace ratpoints {

Conic::Conic(Integer a_, Integer b_, Integer c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a < 1 || b < 1 || c < 1) throw Error(Errc::InvalidArgument, "conic coefficients must be positive");
}

MultiPoly Conic::equation() const {
  const MultiPoly x = MultiPoly::variable(Var::x);
  const MultiPoly y = MultiPoly::variable(Var::y);
  return x * x * a + y * y * b - MultiPoly(c);
}

bool Conic::contains(const AffinePoint& p) const { return a * p.x * p.x + b * p.y * p.y == c; }

std::optional<AffinePoint> find_conic_point(const Conic& q) {
  auto w = conic_witness(q.a, q.b, q.c);
  if (!w) return std::nullopt;
  Rational x((*w)[0], (*w)[2]);
  Rational y((*w)[1], (*w)[2]);
  x.canonicalize();
  y.canonicalize();
  return AffinePoint{x, y};
}

AffinePoint sweep_point(const SweepParametrization& p, const Rational& t) {
  const auto& [x0, y0] = p.base;
  const Conic& q = p.conic;
  Rational sum = -2 * q.b * t * (y0 - t * x0) / (q.a + q.b * t * t);
  Rational x1 = sum - x0;
  return {x1, y0 + t * (x1 - x0)};
}

Integer slope_budget(const AffinePoint& base, std::uint64_t bound) {
  Integer d = lcm(base.x.get_den(), base.y.get_den());
  Integer a0 = abs(base.x.get_num()) * (d / base.x.get_den());
  Integer b0 = abs(base.y.get_num()) * (d / base.y.get_den());
  Integer B = bound;
  return B * B * (d + std::max(a0, b0));
}

std::vector<AffinePoint> sweep_enumerate(const Conic& q, const AffinePoint& base, std::uint64_t bound) {
  if (!q.contains(base)) throw Error(Errc::BaseNotOnConic, to_string(base) + " is not on the conic");
  std::set<AffinePoint, PointLess> found;
  auto keep = [&](const AffinePoint& p) {
    if (height(p) <= bound) found.insert(p);
  };
  keep(base);
  keep({base.x, -base.y});
  const SweepParametrization param{q, base};
  Integer budget = slope_budget(base, bound);
  if (!budget.fits_ulong_p()) throw Error(Errc::InvalidArgument, "slope budget too large");
  for_each_rational(budget.get_ui(), [&](const Rational& t) { keep(sweep_point(param, t)); });
  std::vector<AffinePoint> out(found.begin(), found.end());
  sort_by_height(out);
  return out;
}

}  // namespace ratpoints
