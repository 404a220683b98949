#include "ratpoints/zerodim.hpp"

#include <algorithm>
#include <numeric>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

namespace {

struct Degenerate {};

// Solutions over `vars` (elimination order: last variable first).
std::vector<Solution> solve(std::vector<MultiPoly> eqs, const std::vector<Var>& vars) {
  std::erase_if(eqs, [](const MultiPoly& p) { return p.is_zero(); });
  for (const auto& p : eqs) {
    if (p.is_constant()) return {};
  }
  if (vars.empty()) return {Solution{}};
  if (eqs.empty()) throw Degenerate{};

  const Var e = vars.back();
  const std::vector<Var> rest(vars.begin(), vars.end() - 1);

  std::vector<Solution> partial;
  if (rest.empty()) {
    partial.push_back({});
  } else {
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (!eqs[i].involves(e)) {
        reduced.push_back(eqs[i]);
        continue;
      }
      for (std::size_t j = i + 1; j < eqs.size(); ++j) {
        if (eqs[j].involves(e)) reduced.push_back(resultant(eqs[i], eqs[j], e).primitive());
      }
    }
    partial = solve(std::move(reduced), rest);
  }

  std::vector<Solution> out;
  for (const auto& sol : partial) {
    UPoly g;
    for (const auto& p : eqs) {
      MultiPoly q = p;
      for (std::size_t i = 0; i < rest.size(); ++i) q = q.specialize(rest[i], sol[i]);
      g = gcd(g, UPoly::from_integers(q.univariate_coefficients(e)));
    }
    if (g.is_zero()) throw Degenerate{};
    if (g.degree() < 1) continue;
    auto coeffs = g.integer_coeffs();
    std::vector<Integer> high(coeffs.rbegin(), coeffs.rend());
    for (const auto& r : rational_roots(high)) {
      Solution full = sol;
      full.push_back(r);
      out.push_back(std::move(full));
    }
  }
  return out;
}

bool satisfies(const PolySystem& s, const Solution& sol) {
  std::array<Rational, 3> at{0, 0, 0};
  for (std::size_t i = 0; i < s.variables.size(); ++i) at[static_cast<unsigned>(s.variables[i])] = sol[i];
  return std::all_of(s.equations.begin(), s.equations.end(),
                     [&](const MultiPoly& p) { return p.evaluate(at) == 0; });
}

}  // namespace

std::vector<Solution> rational_solutions(const PolySystem& s) {
  if (s.equations.empty()) throw Error(Errc::InvalidArgument, "system has no equations");
  for (const auto& p : s.equations) {
    for (Var v : kAllVars) {
      if (p.involves(v) && std::find(s.variables.begin(), s.variables.end(), v) == s.variables.end())
        throw Error(Errc::InvalidArgument, std::string("undeclared variable ") + var_name(v) + " in " + p.to_string());
    }
  }
  const std::size_t n = s.variables.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Var> order;
    for (auto i : perm) order.push_back(s.variables[i]);
    std::vector<Solution> found;
    try {
      found = solve(s.equations, order);
    } catch (const Degenerate&) {
      continue;
    }
    std::vector<Solution> out;
    for (const auto& f : found) {
      Solution sol(n);
      for (std::size_t k = 0; k < n; ++k) sol[perm[k]] = f[k];
      if (satisfies(s, sol)) out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(Errc::NotZeroDimensional, "every elimination order degenerates");
}

}  // namespace ratpoints
