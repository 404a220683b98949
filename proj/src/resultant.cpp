#include <vector>

#include "ratpoints/error.hpp"
#include "ratpoints/poly.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer univariate_resultant(std::span<const Integer> f, std::span<const Integer> g) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g[n - k];
  return determinant(std::move(s));
}

namespace {

// Polynomial through (0, values[0]), (1, values[1]), ...; coefficients lowest first.
std::vector<Integer> interpolate(std::vector<Integer> values) {
  const std::size_t count = values.size();
  // forward differences: values[k] becomes Delta^k y_0
  for (std::size_t k = 1; k < count; ++k)
    for (std::size_t i = count - 1; i >= k; --i) values[i] -= values[i - 1];
  UPoly acc;
  Integer factorial = 1;
  std::vector<Rational> newton(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    newton[k] = Rational(values[k], factorial);
    newton[k].canonicalize();
  }
  for (std::size_t k = count; k-- > 0;) {
    acc = acc * UPoly({Rational(-static_cast<long>(k)), Rational(1)}) + UPoly({newton[k]});
  }
  std::vector<Integer> out(count, 0);
  for (std::size_t i = 0; i < acc.coeffs().size(); ++i) {
    if (acc[i].get_den() != 1) throw Error(Errc::InvalidArgument, "non-integral interpolation result");
    out[i] = acc[i].get_num();
  }
  return out;
}

std::vector<Integer> specialize_all(const std::vector<MultiPoly>& coeffs, const std::array<Integer, 3>& at) {
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.evaluate(at));
  return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
  const int m = f.degree(v);
  const int n = g.degree(v);
  if (m < 1 || n < 1) throw Error(Errc::DegreeZero, std::string("input has degree 0 in ") + var_name(v));
  const auto fc = f.coefficients_in(v);
  const auto gc = g.coefficients_in(v);

  std::vector<Var> rest;
  std::vector<int> bound;
  for (Var r : kAllVars) {
    if (r == v || (!f.involves(r) && !g.involves(r))) continue;
    rest.push_back(r);
    bound.push_back(n * std::max(0, f.degree(r)) + m * std::max(0, g.degree(r)));
  }

  std::array<Integer, 3> at{0, 0, 0};
  auto res_at = [&]() { return univariate_resultant(specialize_all(fc, at), specialize_all(gc, at)); };

  if (rest.empty()) return MultiPoly(res_at());

  if (rest.size() == 1) {
    std::vector<Integer> values;
    for (int i = 0; i <= bound[0]; ++i) {
      at[static_cast<unsigned>(rest[0])] = i;
      values.push_back(res_at());
    }
    return MultiPoly::univariate(rest[0], interpolate(std::move(values)));
  }

  const auto r1 = static_cast<unsigned>(rest[0]);
  const auto r2 = static_cast<unsigned>(rest[1]);
  // rows[i][k]: coefficient of r2^k at r1 = i
  std::vector<std::vector<Integer>> rows;
  for (int i = 0; i <= bound[0]; ++i) {
    at[r1] = i;
    std::vector<Integer> values;
    for (int j = 0; j <= bound[1]; ++j) {
      at[r2] = j;
      values.push_back(res_at());
    }
    rows.push_back(interpolate(std::move(values)));
  }
  MultiPoly out;
  for (int k = 0; k <= bound[1]; ++k) {
    std::vector<Integer> column;
    for (const auto& row : rows) column.push_back(row[static_cast<std::size_t>(k)]);
    std::vector<Integer> poly = interpolate(std::move(column));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      Monomial mono;
      mono.e[r1] = static_cast<unsigned>(i);
      mono.e[r2] = static_cast<unsigned>(k);
      out += MultiPoly::monomial(poly[i], mono);
    }
  }
  return out;
}

MultiPoly resultant_extended(const MultiPoly& f, const MultiPoly& g, Var v) {
  if (f.is_zero() || g.is_zero()) return {};
  const int m = f.degree(v);
  const int n = g.degree(v);
  if (m == 0 && n == 0) throw Error(Errc::DegreeZero, std::string("both inputs have degree 0 in ") + var_name(v));
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));
  return resultant(f, g, v);
}

}  // namespace ratpoints
