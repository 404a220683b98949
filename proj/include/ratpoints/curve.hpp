#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratpoints/poly.hpp"

namespace ratpoints {

struct AffinePoint {
  Rational x;
  Rational y;

  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

Integer height(const AffinePoint& p);
/// Report order: height, then x, then y.
bool height_order(const AffinePoint& a, const AffinePoint& b);
/// Plain lexicographic order on (x, y), for sets.
struct PointLess {
  bool operator()(const AffinePoint& a, const AffinePoint& b) const {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};
std::string to_string(const AffinePoint& p);
void sort_by_height(std::vector<AffinePoint>& points);

/// The equation f(x, y) = 0, with f canonical, nonconstant, in x and y only,
/// and asserted irreducible over C.
class PlaneCurve {
 public:
  explicit PlaneCurve(const MultiPoly& f, std::optional<unsigned> genus_override = std::nullopt);

  const MultiPoly& f() const { return f_; }
  const std::optional<unsigned>& genus_override() const { return genus_override_; }
  int degree() const { return f_.degree(); }
  bool contains(const AffinePoint& p) const;

 private:
  MultiPoly f_;
  std::optional<unsigned> genus_override_;
};

/// True iff the projective closure has no singular point over C. Throws
/// Inconclusive when elimination degenerates in every chart tried.
bool is_smooth_projective(const PlaneCurve& c);

/// Genus from the override, or (d-1)(d-2)/2 for smooth closures. Throws
/// GenusUnavailable otherwise.
unsigned genus(const PlaneCurve& c);

enum class Possibility { Empty, NonemptyFinite, Infinite };

struct Trichotomy {
  std::vector<Possibility> possibilities;

  bool allows(Possibility p) const;
  std::string description() const;
  friend bool operator==(const Trichotomy&, const Trichotomy&) = default;
};

std::string to_string(Possibility p);
Trichotomy classify(unsigned genus);

/// All rational y with f(p, y) = 0. Throws VerticalComponent if f(p, y) == 0.
std::vector<Rational> fiber_solutions(const PlaneCurve& c, const Rational& p);

/// Points with max(height(x), height(y)) <= bound, sorted by height order.
std::vector<AffinePoint> enumerate_points(const PlaneCurve& c, std::uint64_t bound);

/// Same as above for any polynomial in x, y (no curve invariants required).
std::vector<AffinePoint> enumerate_points(const MultiPoly& f, std::uint64_t bound);

/// y-roots of f(p, y); nullopt when f(p, y) vanishes identically. With a
/// bound, only roots of height <= bound.
std::optional<std::vector<Rational>> fiber_roots(const MultiPoly& f, const Rational& p,
                                                 std::optional<std::uint64_t> bound = std::nullopt);

}  // namespace ratpoints
