#pragma once
// Independent brute-force references. These deliberately avoid the library's
// search, root finding and elimination code; they only use exact evaluation.

#include <algorithm>
#include <numeric>
#include <vector>

#include "ratpoints/curve.hpp"

namespace brute {

using ratpoints::AffinePoint;
using ratpoints::Integer;
using ratpoints::MultiPoly;
using ratpoints::Rational;

/// All p/q with gcd 1, q >= 1, max(|p|, q) <= bound.
inline std::vector<Rational> rationals(long bound) {
  std::vector<Rational> out;
  for (long q = 1; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
    }
  return out;
}

inline Integer height(const Rational& r) {
  Integer n = abs(r.get_num());
  return std::max(n, Integer(r.get_den()));
}

/// Points of f = 0 with both coordinates of height <= bound.
inline std::vector<AffinePoint> points(const MultiPoly& f, long bound) {
  const auto vals = rationals(bound);
  std::vector<AffinePoint> out;
  for (const auto& x : vals)
    for (const auto& y : vals)
      if (f.evaluate({x, y, Rational(0)}) == 0) out.push_back({x, y});
  std::sort(out.begin(), out.end(), ratpoints::PointLess{});
  return out;
}

inline std::vector<AffinePoint> sorted_lex(std::vector<AffinePoint> v) {
  std::sort(v.begin(), v.end(), ratpoints::PointLess{});
  return v;
}

/// Legendre's criterion for a·X² + b·Y² = c·Z² (a, b, c >= 1), with its own
/// normalization by trial division.
inline long squarefree(long n) {
  long out = 1;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e % 2) out *= p;
  }
  return out * n;
}

inline bool is_qr_mod_prime(long n, long p) {
  n %= p;
  if (n < 0) n += p;
  for (long t = 0; t < p; ++t)
    if ((t * t) % p == n) return true;
  return false;
}

inline bool is_qr_mod(long n, long m) {
  for (long p = 2; p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (p != 2 && !is_qr_mod_prime(n, p)) return false;
  }
  return true;
}

inline bool legendre_solvable(long a, long b, long c) {
  // a X² + b Y² - c Z² = 0
  long A = a, B = b, C = -c;
  for (bool changed = true; changed;) {
    changed = false;
    A = (A < 0 ? -1 : 1) * squarefree(std::abs(A));
    B = (B < 0 ? -1 : 1) * squarefree(std::abs(B));
    C = (C < 0 ? -1 : 1) * squarefree(std::abs(C));
    long g = std::gcd(std::gcd(std::abs(A), std::abs(B)), std::abs(C));
    A /= g, B /= g, C /= g;
    if (long d = std::gcd(std::abs(A), std::abs(B)); d > 1) {
      A /= d, B /= d, C *= d, changed = true;
    } else if (long d2 = std::gcd(std::abs(A), std::abs(C)); d2 > 1) {
      A /= d2, C /= d2, B *= d2, changed = true;
    } else if (long d3 = std::gcd(std::abs(B), std::abs(C)); d3 > 1) {
      B /= d3, C /= d3, A *= d3, changed = true;
    }
  }
  return is_qr_mod(-B * C, std::abs(A)) && is_qr_mod(-A * C, std::abs(B)) && is_qr_mod(-A * B, std::abs(C));
}

}  // namespace brute
