#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ratpoints {

using Integer = mpz_class;
using Rational = mpq_class;

/// max(|p|, q) for p/q in lowest terms; height(0) = 1.
Integer height(const Rational& q);

std::string to_string(const Integer& n);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Calls `visit` on every rational of height <= bound, ordered by height and
/// then by value. Each rational is visited once.
void for_each_rational(std::uint64_t bound, const std::function<void(const Rational&)>& visit);

std::vector<Rational> enumerate_rationals(std::uint64_t bound);

/// Exact rational roots of an integer polynomial, coefficients highest degree
/// first. Result is sorted ascending and duplicate-free. Throws ZeroPolynomial.
std::vector<Rational> rational_roots(std::span<const Integer> coeffs);

/// Rational roots of height <= bound only. Cheaper than rational_roots for
/// polynomials with huge coefficients since no real-root isolation is done.
std::vector<Rational> rational_roots_bounded(std::span<const Integer> coeffs, std::uint64_t bound);

/// Prime factorization of |n| as (prime, exponent) pairs, primes ascending.
/// |n| <= 1 yields an empty list.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// All positive d with d*d dividing n (n != 0), ascending.
std::vector<Integer> square_divisor_roots(const Integer& n);

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace ratpoints
