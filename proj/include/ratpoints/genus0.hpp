#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ratpoints/curve.hpp"

namespace ratpoints {

/// a·x² + b·y² = c with a, b, c >= 1.
struct Conic {
  Integer a, b, c;

  Conic(Integer a_, Integer b_, Integer c_);
  MultiPoly equation() const;  // a·x² + b·y² - c
  bool contains(const AffinePoint& p) const;
};

/// (X/Z, Y/Z) for the (|Z|, |X|, |Y|)-least nonnegative integer solution.
std::optional<AffinePoint> find_conic_point(const Conic& q);

struct SweepParametrization {
  Conic conic;
  AffinePoint base;
};

/// Second intersection of the conic with the line through the base of slope t.
AffinePoint sweep_point(const SweepParametrization& p, const Rational& t);

/// Slopes of height up to this value reach every point of height <= bound.
Integer slope_budget(const AffinePoint& base, std::uint64_t bound);

/// Points of height <= bound, in height order. Throws BaseNotOnConic.
std::vector<AffinePoint> sweep_enumerate(const Conic& q, const AffinePoint& base, std::uint64_t bound);

}  // namespace ratpoints
