#include "ratpoints/curve.hpp"

#include <algorithm>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

Integer height(const AffinePoint& p) {
  Integer hx = height(p.x);
  Integer hy = height(p.y);
  return hx > hy ? hx : hy;
}

bool height_order(const AffinePoint& a, const AffinePoint& b) {
  Integer ha = height(a);
  Integer hb = height(b);
  if (ha != hb) return ha < hb;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const AffinePoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

void sort_by_height(std::vector<AffinePoint>& points) { std::sort(points.begin(), points.end(), height_order); }

PlaneCurve::PlaneCurve(const MultiPoly& f, std::optional<unsigned> genus_override)
    : f_(f.canonical()), genus_override_(genus_override) {
  if (f_.is_constant()) throw Error(Errc::InvalidArgument, "curve equation must be nonconstant");
  if (f_.involves(Var::z)) throw Error(Errc::InvalidArgument, "curve equation must involve only x and y");
  for (Var v : {Var::x, Var::y}) {
    bool all_divisible = true;
    for (const auto& [m, c] : f_.terms()) all_divisible = all_divisible && m[v] > 0;
    if (all_divisible) throw Error(Errc::NotIrreducible, std::string("equation has the monomial factor ") + var_name(v));
  }
  if (f_.variable_count() == 1 && f_.degree() > 1)
    throw Error(Errc::NotIrreducible, "univariate equation of degree > 1 splits over C");
}

bool PlaneCurve::contains(const AffinePoint& p) const { return f_.evaluate({p.x, p.y, Rational(0)}) == 0; }

namespace {

enum class Consistency { Inconsistent, Consistent, Degenerate };

struct Elimination {
  Consistency state = Consistency::Degenerate;
  UPoly eliminant;  // gcd of the eliminants, in the remaining variable
};

Elimination eliminate_system(const std::vector<MultiPoly>& polys, Var v, Var keep) {
  std::vector<MultiPoly> elims;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].involves(v)) {
      elims.push_back(polys[i]);
      continue;
    }
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (polys[j].involves(v)) elims.push_back(resultant(polys[i], polys[j], v));
    }
  }
  Elimination out;
  UPoly g;
  bool any = false;
  for (const auto& e : elims) {
    if (e.is_zero()) continue;
    any = true;
    g = gcd(g, UPoly::from_integers(e.univariate_coefficients(keep)));
  }
  if (!any) return out;
  out.state = g.degree() >= 1 ? Consistency::Consistent : Consistency::Inconsistent;
  out.eliminant = g;
  return out;
}

// True if the specialized system has a common root in the free variable.
bool common_root_after(const std::vector<MultiPoly>& polys, Var v, const Rational& value, Var free) {
  UPoly g;
  for (const auto& p : polys) {
    MultiPoly s = p.specialize(v, value);
    g = gcd(g, UPoly::from_integers(s.univariate_coefficients(free)));
  }
  return g.is_zero() || g.degree() >= 1;
}

// Removes the rational roots of `p`; returns true if one of them carries a
// genuine common zero of the system.
bool strip_rational_candidates(const std::vector<MultiPoly>& polys, UPoly& p, Var var, Var free) {
  UPoly sqf = squarefree_part(p).primitive();
  auto coeffs = sqf.integer_coeffs();
  std::vector<Integer> high(coeffs.rbegin(), coeffs.rend());
  for (const auto& r : rational_roots(high)) {
    if (common_root_after(polys, var, r, free)) return true;
    sqf = exact_quotient(sqf, UPoly(std::vector<Rational>{-r, Rational(1)}));
  }
  p = sqf;
  return false;
}

bool affine_singular(const MultiPoly& f) {
  std::vector<MultiPoly> base;
  for (const auto& p : {f, f.diff(Var::x), f.diff(Var::y)}) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return false;
    base.push_back(p);
  }
  const MultiPoly X = MultiPoly::variable(Var::x);
  const MultiPoly Y = MultiPoly::variable(Var::y);
  int degenerate = 0;
  const long shears[] = {0, 1, -1, 2, -2};
  for (long lambda : shears) {
    std::vector<MultiPoly> polys;
    for (const auto& p : base) polys.push_back(p.substitute({X + Y * Integer(lambda), Y, MultiPoly::variable(Var::z)}));
    Elimination by_x = eliminate_system(polys, Var::y, Var::x);
    Elimination by_y = eliminate_system(polys, Var::x, Var::y);
    if (by_x.state == Consistency::Inconsistent || by_y.state == Consistency::Inconsistent) return false;
    if (by_x.state == Consistency::Degenerate && by_y.state == Consistency::Degenerate) {
      ++degenerate;
      continue;
    }
    if (by_x.state == Consistency::Consistent) {
      if (strip_rational_candidates(polys, by_x.eliminant, Var::x, Var::y)) return true;
      if (by_x.eliminant.degree() < 1) return false;
    }
    if (by_y.state == Consistency::Consistent) {
      if (strip_rational_candidates(polys, by_y.eliminant, Var::y, Var::x)) return true;
      if (by_y.eliminant.degree() < 1) return false;
    }
  }
  if (degenerate == static_cast<int>(std::size(shears)))
    throw Error(Errc::Inconclusive, "singularity elimination degenerates in every chart");
  // Irrational candidates survived every shear; a spurious coincidence of
  // pairwise eliminants would not.
  return true;
}

bool singular_at_infinity(const MultiPoly& f) {
  HomogeneousPoly F = homogenize(f, 3);
  // chart x = 1, restricted to w = 0; variables become (y, w) -> (x, y) slots
  auto at_infinity = [&](const HomogeneousPoly& h) {
    return h.specialize(0, 1).specialize(Var::y, 0);
  };
  UPoly g;
  for (const auto& h : {F, F.diff(1), F.diff(2)}) {
    g = gcd(g, UPoly::from_integers(at_infinity(h).univariate_coefficients(Var::x)));
  }
  if (g.is_zero() || g.degree() >= 1) return true;
  const std::array<Integer, 3> point{0, 1, 0};
  for (const auto& h : {F, F.diff(0), F.diff(1), F.diff(2)}) {
    if (h.evaluate(point) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_smooth_projective(const PlaneCurve& c) {
  if (singular_at_infinity(c.f())) return false;
  return !affine_singular(c.f());
}

unsigned genus(const PlaneCurve& c) {
  if (c.genus_override()) return *c.genus_override();
  bool smooth = false;
  try {
    smooth = is_smooth_projective(c);
  } catch (const Error& e) {
    if (e.code() != Errc::Inconclusive) throw;
    throw Error(Errc::GenusUnavailable, "smoothness check inconclusive for " + c.f().to_string() + "; supply a genus override");
  }
  if (!smooth)
    throw Error(Errc::GenusUnavailable, "projective closure of " + c.f().to_string() + " is singular; supply a genus override");
  const auto d = static_cast<unsigned>(c.degree());
  return (d - 1) * (d - 2) / 2;
}

bool Trichotomy::allows(Possibility p) const {
  return std::find(possibilities.begin(), possibilities.end(), p) != possibilities.end();
}

std::string to_string(Possibility p) {
  switch (p) {
    case Possibility::Empty: return "empty";
    case Possibility::NonemptyFinite: return "non-empty finite";
    case Possibility::Infinite: return "infinite";
  }
  return "?";
}

std::string Trichotomy::description() const {
  if (possibilities.size() == 2 && allows(Possibility::Infinite)) return "empty or infinite";
  if (possibilities.size() == 2) return "empty, or non-empty finite";
  return "empty, non-empty finite, or infinite";
}

Trichotomy classify(unsigned genus) {
  if (genus == 0) return {{Possibility::Empty, Possibility::Infinite}};
  if (genus == 1) return {{Possibility::Empty, Possibility::NonemptyFinite, Possibility::Infinite}};
  return {{Possibility::Empty, Possibility::NonemptyFinite}};
}

std::optional<std::vector<Rational>> fiber_roots(const MultiPoly& f, const Rational& p,
                                                 std::optional<std::uint64_t> bound) {
  MultiPoly g = f.specialize(Var::x, p);
  if (g.is_zero()) return std::nullopt;
  auto low = g.univariate_coefficients(Var::y);
  std::vector<Integer> high(low.rbegin(), low.rend());
  if (bound) return rational_roots_bounded(high, *bound);
  return rational_roots(high);
}

std::vector<Rational> fiber_solutions(const PlaneCurve& c, const Rational& p) {
  auto roots = fiber_roots(c.f(), p);
  if (!roots) throw Error(Errc::VerticalComponent, "f(" + to_string(p) + ", y) vanishes identically");
  return *roots;
}

std::vector<AffinePoint> enumerate_points(const MultiPoly& f, std::uint64_t bound) {
  std::vector<AffinePoint> out;
  for_each_rational(bound, [&](const Rational& x) {
    auto roots = fiber_roots(f, x, bound);
    if (!roots) {
      for (const auto& y : enumerate_rationals(bound)) out.push_back({x, y});
      return;
    }
    for (const auto& y : *roots) out.push_back({x, y});
  });
  sort_by_height(out);
  return out;
}

std::vector<AffinePoint> enumerate_points(const PlaneCurve& c, std::uint64_t bound) {
  return enumerate_points(c.f(), bound);
}

}  // namespace ratpoints
