#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratpoints/arith.hpp"

namespace ratpoints {

enum class Var : unsigned { x = 0, y = 1, z = 2 };

constexpr std::array<Var, 3> kAllVars{Var::x, Var::y, Var::z};

char var_name(Var v);

/// Exponent triple (ex, ey, ez).
struct Monomial {
  std::array<unsigned, 3> e{0, 0, 0};

  unsigned total() const { return e[0] + e[1] + e[2]; }
  unsigned operator[](Var v) const { return e[static_cast<unsigned>(v)]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y > z; `true` when a comes before b in
/// descending order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in x, y, z with integer coefficients. Arithmetic does not
/// normalize; call canonical() for the content-free, positive-leading form
/// used as the curve representative and as the oracle lookup key.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexDescending>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: constants convert implicitly
  MultiPoly(const Integer& c);  // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Integer& coeff, const Monomial& m);
  /// Builds sum c_i * v^i from coefficients lowest degree first.
  static MultiPoly univariate(Var v, std::span<const Integer> low_first);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer constant_term() const { return coefficient(Monomial{}); }
  Integer coefficient(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree(Var v) const;
  bool involves(Var v) const { return degree(v) > 0; }
  unsigned variable_count() const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }

  Integer content() const;
  /// Divides by the content, keeping the sign.
  MultiPoly primitive() const;
  /// Content 1 and positive leading coefficient (zero stays zero).
  MultiPoly canonical() const;
  bool is_canonical() const { return *this == canonical(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Integer& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(unsigned k) const;
  /// Exact division by a nonzero integer; throws InvalidArgument if inexact.
  MultiPoly divide_exact(const Integer& c) const;

  Rational evaluate(const std::array<Rational, 3>& at) const;
  Integer evaluate(const std::array<Integer, 3>& at) const;
  /// Substitutes v = value and multiplies by den(value)^deg_v so the result
  /// stays integral.
  MultiPoly specialize(Var v, const Rational& value) const;
  /// Simultaneous substitution x -> images[0], y -> images[1], z -> images[2].
  MultiPoly substitute(const std::array<MultiPoly, 3>& images) const;
  /// Exchanges the roles of two variables.
  MultiPoly swap(Var a, Var b) const;

  /// Formal derivative, not normalized.
  MultiPoly diff(Var v) const;

  /// Coefficients as polynomials in the other variables, index = power of v.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  /// For a polynomial involving only v: integer coefficients lowest first.
  std::vector<Integer> univariate_coefficients(Var v) const;

  /// Canonical text: descending grlex, no '*', e.g. "x^2 + y^2 - 2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Integer& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Partial assignment; unassigned variables stay symbolic.
using Assignment = std::array<std::optional<Rational>, 3>;

/// Full assignment of every variable that occurs yields a Rational; otherwise
/// the substituted polynomial with denominators cleared.
std::variant<MultiPoly, Rational> evaluate(const MultiPoly& f, const Assignment& at);

/// Formal partial derivative in canonical form.
MultiPoly partial_derivative(const MultiPoly& f, Var v);

/// Sylvester resultant with respect to v; rows of f come first. Throws
/// DegreeZero if either input has degree 0 in v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v);

/// Resultant with the usual conventions for degree-0 inputs
/// (Res(f, c) = c^deg f). Throws DegreeZero only when both have degree 0.
MultiPoly resultant_extended(const MultiPoly& f, const MultiPoly& g, Var v);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

/// Sylvester resultant of two univariate integer polynomials given with formal
/// degrees (leading coefficients may vanish). Coefficients lowest first.
Integer univariate_resultant(std::span<const Integer> f, std::span<const Integer> g);

/// Homogeneous polynomial in 3 (x, y, w) or 4 (x, y, z, w) variables.
class HomogeneousPoly {
 public:
  using Exponents = std::array<unsigned, 4>;

  HomogeneousPoly(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}

  unsigned nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  void add(const Exponents& e, const Integer& c);

  Integer evaluate(std::span<const Integer> at) const;
  HomogeneousPoly diff(unsigned index) const;
  /// Sets coordinate `index` to `value`; remaining coordinates map to x, y, z
  /// in order.
  MultiPoly specialize(unsigned index, const Integer& value) const;
  /// Sets the homogenizing variable (last) to 1.
  MultiPoly dehomogenize() const;
  std::string to_string() const;

 private:
  unsigned nvars_;
  unsigned degree_;
  std::map<Exponents, Integer> terms_;
};

/// nvars = 3: f(x, y) -> F(x, y, w). nvars = 4: f(x, y, z) -> F(x, y, z, w).
HomogeneousPoly homogenize(const MultiPoly& f, unsigned nvars);

/// gcd of univariate polynomials in v, returned primitive with positive
/// leading coefficient.
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Var v);

}  // namespace ratpoints
