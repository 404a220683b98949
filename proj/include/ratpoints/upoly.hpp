#pragma once

#include <vector>

#include "ratpoints/arith.hpp"

namespace ratpoints {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> low_first);

  static UPoly from_integers_high_first(std::span<const Integer> coeffs);
  static UPoly from_integers(std::span<const Integer> low_first);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& at) const;
  int sign_at(const Rational& at) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer multiple with coprime coefficients and positive leading coefficient.
  UPoly primitive() const;
  /// Positive rational multiple with coprime integer coefficients (sign kept).
  UPoly normalized() const;
  std::vector<Integer> integer_coeffs() const;  // of primitive(), low first

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const UPoly& num, const UPoly& den, UPoly& quot, UPoly& rem);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
/// Exact quotient; throws InvalidArgument if den does not divide num.
UPoly exact_quotient(const UPoly& num, const UPoly& den);

/// Isolating intervals (lo, hi] for the real roots of a squarefree polynomial,
/// one root per interval, sorted ascending.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& squarefree);

/// Rational with the smallest denominator in the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace ratpoints
