#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratpoints/curve.hpp"

namespace ratpoints {

/// y² = x³ + A·x + B.
struct WeierstrassCurve {
  Integer A, B;

  Integer disc() const { return -16 * (4 * A * A * A + 27 * B * B); }
  bool contains(const Rational& x, const Rational& y) const { return y * y == x * x * x + A * x + B; }
  /// The defining polynomial in x, y (canonical).
  MultiPoly equation() const;
  std::string to_string() const;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

struct ECPoint {
  bool infinity = true;
  Rational x, y;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }
  ECPoint negated() const { return infinity ? *this : affine(x, -y); }
  std::string to_string() const;
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

/// num/den over Z in x, y; den != 0.
struct RationalFunction {
  MultiPoly num;
  MultiPoly den = 1;

  static RationalFunction constant(const Rational& c);
  static RationalFunction of(const MultiPoly& p) { return {p, 1}; }
  std::optional<Rational> evaluate(const AffinePoint& p) const;
  std::string to_string() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
};

struct RationalMap {
  RationalFunction x, y;
  std::vector<std::string> exceptional;  // where the map is undefined

  /// nullopt on the exceptional locus.
  std::optional<AffinePoint> apply(const AffinePoint& p) const;
};

struct BirationalMapPair {
  RationalMap forward;   // source cubic -> Weierstrass model
  RationalMap backward;  // Weierstrass model -> source cubic
};

struct WeierstrassModel {
  WeierstrassCurve curve;
  BirationalMapPair maps;
  bool passthrough = false;  // input was already Weierstrass-shaped
};

/// Throws SingularCubic, Unsupported (degree != 3), NotOnCurve.
WeierstrassModel cubic_to_weierstrass(const PlaneCurve& c, const AffinePoint& p);

ECPoint ec_add(const WeierstrassCurve& w, const ECPoint& P, const ECPoint& Q);
ECPoint ec_multiply(const WeierstrassCurve& w, const ECPoint& P, unsigned n);

/// Least n <= 12 with n·P = O; nullopt means infinite order.
std::optional<unsigned> order_of_point(const WeierstrassCurve& w, const ECPoint& P);

/// Affine rational torsion points, sorted by (x, y).
std::vector<ECPoint> nagell_lutz_torsion(const WeierstrassCurve& w);

}  // namespace ratpoints
