#pragma once
// Random zero-dimensional systems whose rational solutions all have height
// <= 18, plus a pruned exhaustive scan to check them against.

#include <random>

#include "brute.hpp"
#include "ratpoints/zerodim.hpp"

namespace systems {

using namespace ratpoints;

inline MultiPoly linear_factor(Var v, const Rational& r) {
  return MultiPoly::variable(v) * Integer(r.get_den()) - MultiPoly(Integer(r.get_num()));
}

// Product of 1-2 linear factors with roots of height <= 3, sometimes times
// an irreducible quadratic; total degree <= 3.
inline MultiPoly factor_poly(std::mt19937& rng, Var v) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3), coin(0, 2);
  const int k = 1 + static_cast<int>(coin(rng) % 2);
  MultiPoly out = 1;
  for (int i = 0; i < k; ++i) out = out * linear_factor(v, Rational(num(rng), den(rng)));
  if (k == 1 && coin(rng) == 0) {
    MultiPoly t = MultiPoly::variable(v);
    out = out * (t * t - MultiPoly(2 + 3 * coin(rng)));
  }
  return out;
}

struct Generated {
  PolySystem system;
  std::string description;
};

/// nvars in {2, 3}. The first equation is univariate in x.
inline Generated random_system(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<long> shear(-1, 1), mult(-2, 2);
  const MultiPoly x = MultiPoly::variable(Var::x), y = MultiPoly::variable(Var::y), z = MultiPoly::variable(Var::z);
  MultiPoly f1 = factor_poly(rng, Var::x);
  MultiPoly f2 = factor_poly(rng, Var::y).substitute({x, y + x * Integer(shear(rng)), z});
  Generated g;
  if (nvars == 2) {
    g.system = {{f1, f2 + f1 * Integer(mult(rng))}, {Var::x, Var::y}};
  } else {
    MultiPoly f3 = factor_poly(rng, Var::z).substitute({x, y, z + y * Integer(shear(rng))});
    g.system = {{f1, f2 + f1 * Integer(mult(rng)), f3 + f2 * Integer(mult(rng))}, {Var::x, Var::y, Var::z}};
  }
  for (const auto& e : g.system.equations) g.description += "{" + e.to_string() + "} ";
  return g;
}

/// Every tuple of height <= bound satisfying all equations; prunes a prefix
/// as soon as an equation in the fixed variables alone fails.
inline std::vector<Solution> scan(const PolySystem& s, long bound) {
  const auto vals = brute::rationals(bound);
  std::vector<Solution> out;
  Solution cur;
  std::array<Rational, 3> at{0, 0, 0};
  const std::size_t n = s.variables.size();
  auto fixed_only = [&](const MultiPoly& p, std::size_t k) {
    for (std::size_t i = k; i < n; ++i)
      if (p.involves(s.variables[i])) return false;
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    for (const auto& e : s.equations) {
      if (fixed_only(e, k) && e.evaluate(at) != 0) return;
    }
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& v : vals) {
      at[static_cast<unsigned>(s.variables[k])] = v;
      cur.push_back(v);
      rec(k + 1);
      cur.pop_back();
    }
    at[static_cast<unsigned>(s.variables[k])] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace systems
