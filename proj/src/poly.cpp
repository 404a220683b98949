#include "ratpoints/poly.hpp"

#include <ostream>
#include <sstream>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

char var_name(Var v) { return "xyz"[static_cast<unsigned>(v)]; }

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.e > b.e;
}

MultiPoly::MultiPoly(long c) : MultiPoly(Integer(c)) {}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m;
  m.e[static_cast<unsigned>(v)] = 1;
  return monomial(1, m);
}

MultiPoly MultiPoly::monomial(const Integer& coeff, const Monomial& m) {
  MultiPoly p;
  p.add_term(m, coeff);
  return p;
}

MultiPoly MultiPoly::univariate(Var v, std::span<const Integer> low_first) {
  MultiPoly p;
  for (std::size_t i = 0; i < low_first.size(); ++i) {
    Monomial m;
    m.e[static_cast<unsigned>(v)] = static_cast<unsigned>(i);
    p.add_term(m, low_first[i]);
  }
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

int MultiPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return static_cast<int>(d);
}

unsigned MultiPoly::variable_count() const {
  unsigned n = 0;
  for (Var v : kAllVars) n += involves(v) ? 1 : 0;
  return n;
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  return divide_exact(content());
}

MultiPoly MultiPoly::canonical() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading_coefficient() < 0) g = -g;
  return divide_exact(g);
}

MultiPoly MultiPoly::divide_exact(const Integer& c) const {
  if (c == 0) throw Error(Errc::InvalidArgument, "division by zero");
  MultiPoly out;
  for (const auto& [m, coeff] : terms_) {
    if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t()))
      throw Error(Errc::InvalidArgument, "inexact division of polynomial by integer");
    Integer q;
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), c.get_mpz_t());
    out.terms_.emplace_hint(out.terms_.end(), m, q);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (unsigned i = 0; i < 3; ++i) m.e[i] = ma.e[i] + mb.e[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

template <typename T>
std::array<std::vector<T>, 3> power_tables(const std::array<T, 3>& at, const MultiPoly& p) {
  std::array<std::vector<T>, 3> pw;
  for (Var v : kAllVars) {
    auto i = static_cast<unsigned>(v);
    int d = std::max(0, p.degree(v));
    pw[i].resize(static_cast<std::size_t>(d) + 1);
    pw[i][0] = 1;
    for (int k = 1; k <= d; ++k) pw[i][static_cast<std::size_t>(k)] = pw[i][static_cast<std::size_t>(k - 1)] * at[i];
  }
  return pw;
}

}  // namespace

Rational MultiPoly::evaluate(const std::array<Rational, 3>& at) const {
  auto pw = power_tables(at, *this);
  Rational acc = 0;
  for (const auto& [m, c] : terms_) acc += c * pw[0][m.e[0]] * pw[1][m.e[1]] * pw[2][m.e[2]];
  return acc;
}

Integer MultiPoly::evaluate(const std::array<Integer, 3>& at) const {
  auto pw = power_tables(at, *this);
  Integer acc = 0;
  for (const auto& [m, c] : terms_) acc += c * pw[0][m.e[0]] * pw[1][m.e[1]] * pw[2][m.e[2]];
  return acc;
}

MultiPoly MultiPoly::specialize(Var v, const Rational& value) const {
  const auto i = static_cast<unsigned>(v);
  const int d = std::max(0, degree(v));
  std::vector<Integer> num_pw(static_cast<std::size_t>(d) + 1), den_pw(static_cast<std::size_t>(d) + 1);
  num_pw[0] = den_pw[0] = 1;
  for (int k = 1; k <= d; ++k) {
    num_pw[static_cast<std::size_t>(k)] = num_pw[static_cast<std::size_t>(k - 1)] * value.get_num();
    den_pw[static_cast<std::size_t>(k)] = den_pw[static_cast<std::size_t>(k - 1)] * value.get_den();
  }
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned k = m.e[i];
    rest.e[i] = 0;
    out.add_term(rest, c * num_pw[k] * den_pw[static_cast<std::size_t>(d) - k]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::array<MultiPoly, 3>& images) const {
  std::array<std::vector<MultiPoly>, 3> pw;
  for (Var v : kAllVars) {
    auto i = static_cast<unsigned>(v);
    int d = std::max(0, degree(v));
    pw[i].resize(static_cast<std::size_t>(d) + 1);
    pw[i][0] = MultiPoly(1);
    for (int k = 1; k <= d; ++k) pw[i][static_cast<std::size_t>(k)] = pw[i][static_cast<std::size_t>(k - 1)] * images[i];
  }
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    out += pw[0][m.e[0]] * pw[1][m.e[1]] * pw[2][m.e[2]] * c;
  }
  return out;
}

MultiPoly MultiPoly::swap(Var a, Var b) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    std::swap(s.e[static_cast<unsigned>(a)], s.e[static_cast<unsigned>(b)]);
    out.add_term(s, c);
  }
  return out;
}

MultiPoly MultiPoly::diff(Var v) const {
  const auto i = static_cast<unsigned>(v);
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.e[i] == 0) continue;
    Monomial d = m;
    --d.e[i];
    out.add_term(d, c * static_cast<unsigned long>(m.e[i]));
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const auto i = static_cast<unsigned>(v);
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, degree(v)) + 1));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.e[i] = 0;
    out[m.e[i]].add_term(rest, c);
  }
  return out;
}

std::vector<Integer> MultiPoly::univariate_coefficients(Var v) const {
  const auto i = static_cast<unsigned>(v);
  std::vector<Integer> out(static_cast<std::size_t>(std::max(0, degree(v)) + 1));
  for (const auto& [m, c] : terms_) {
    if (m.total() != m.e[i]) throw Error(Errc::InvalidArgument, "polynomial is not univariate in " + std::string(1, var_name(v)));
    out[m.e[i]] = c;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.total() == 0 || mag != 1) os << mag.get_str();
    for (Var v : kAllVars) {
      unsigned k = m[v];
      if (k == 0) continue;
      os << var_name(v);
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::variant<MultiPoly, Rational> evaluate(const MultiPoly& f, const Assignment& at) {
  bool full = true;
  for (Var v : kAllVars) {
    if (f.involves(v) && !at[static_cast<unsigned>(v)]) full = false;
  }
  if (full) {
    std::array<Rational, 3> point;
    for (unsigned i = 0; i < 3; ++i) point[i] = at[i].value_or(Rational(0));
    return f.evaluate(point);
  }
  MultiPoly out = f;
  for (Var v : kAllVars) {
    if (const auto& value = at[static_cast<unsigned>(v)]) out = out.specialize(v, *value);
  }
  return out;
}

MultiPoly partial_derivative(const MultiPoly& f, Var v) { return f.diff(v).canonical(); }

void HomogeneousPoly::add(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer HomogeneousPoly::evaluate(std::span<const Integer> at) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer t = c;
    for (unsigned i = 0; i < nvars_; ++i) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), at[i].get_mpz_t(), e[i]);
      t *= p;
    }
    acc += t;
  }
  return acc;
}

HomogeneousPoly HomogeneousPoly::diff(unsigned index) const {
  HomogeneousPoly out(nvars_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add(d, c * static_cast<unsigned long>(e[index]));
  }
  return out;
}

MultiPoly HomogeneousPoly::specialize(unsigned index, const Integer& value) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Monomial m;
    unsigned slot = 0;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (i == index) continue;
      m.e[slot++] = e[i];
    }
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), e[index]);
    out += MultiPoly::monomial(c * p, m);
  }
  return out;
}

MultiPoly HomogeneousPoly::dehomogenize() const { return specialize(nvars_ - 1, 1); }

std::string HomogeneousPoly::to_string() const {
  static constexpr const char* kNames3[] = {"x", "y", "w"};
  static constexpr const char* kNames4[] = {"x", "y", "z", "w"};
  if (terms_.empty()) return "0";
  // print in descending lexicographic order of exponents
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (unsigned i = 0; i < nvars_; ++i) constant = constant && e[i] == 0;
    if (constant || mag != 1) os << mag.get_str();
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << (nvars_ == 3 ? kNames3[i] : kNames4[i]);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

HomogeneousPoly homogenize(const MultiPoly& f, unsigned nvars) {
  if (nvars != 3 && nvars != 4) throw Error(Errc::InvalidArgument, "homogenize supports 3 or 4 variables");
  if (nvars == 3 && f.involves(Var::z)) throw Error(Errc::InvalidArgument, "plane homogenization needs f in x, y");
  const unsigned d = static_cast<unsigned>(std::max(0, f.degree()));
  HomogeneousPoly out(nvars, d);
  for (const auto& [m, c] : f.terms()) {
    HomogeneousPoly::Exponents e{0, 0, 0, 0};
    e[0] = m.e[0];
    e[1] = m.e[1];
    if (nvars == 4) e[2] = m.e[2];
    e[nvars - 1] = d - m.total();
    out.add(e, c);
  }
  return out;
}

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b, Var v) {
  auto ca = a.univariate_coefficients(v);
  auto cb = b.univariate_coefficients(v);
  UPoly g = gcd(UPoly::from_integers(ca), UPoly::from_integers(cb));
  if (g.is_zero()) return {};
  return MultiPoly::univariate(v, g.integer_coeffs());
}

}  // namespace ratpoints
