#include "ratpoints/elliptic.hpp"

#include <algorithm>
#include <map>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

MultiPoly WeierstrassCurve::equation() const {
  const MultiPoly x = MultiPoly::variable(Var::x);
  const MultiPoly y = MultiPoly::variable(Var::y);
  return (y * y - x * x * x - x * A - MultiPoly(B)).canonical();
}

std::string WeierstrassCurve::to_string() const {
  std::string out = "y^2 = x^3";
  auto term = [&](const Integer& c, const std::string& mono) {
    if (c == 0) return;
    out += c < 0 ? " - " : " + ";
    Integer m = abs(c);
    out += (m == 1 && !mono.empty()) ? mono : ratpoints::to_string(m) + mono;
  };
  term(A, "x");
  term(B, "");
  return out;
}

std::string ECPoint::to_string() const {
  return infinity ? "O" : "(" + ratpoints::to_string(x) + "," + ratpoints::to_string(y) + ")";
}

// ---------------------------------------------------------------------------
// rational functions

namespace {

RationalFunction tidy(RationalFunction f) {
  if (f.den.is_zero()) throw Error(Errc::InvalidArgument, "rational function with zero denominator");
  if (f.num.is_zero()) return {MultiPoly(), MultiPoly(1)};
  Integer g = gcd(f.num.content(), f.den.content());
  if (g > 1) {
    f.num = f.num.divide_exact(g);
    f.den = f.den.divide_exact(g);
  }
  if (f.den.leading_coefficient() < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  return f;
}

}  // namespace

RationalFunction RationalFunction::constant(const Rational& c) {
  return {MultiPoly(Integer(c.get_num())), MultiPoly(Integer(c.get_den()))};
}

std::optional<Rational> RationalFunction::evaluate(const AffinePoint& p) const {
  std::array<Rational, 3> at{p.x, p.y, Rational(0)};
  Rational d = den.evaluate(at);
  if (d == 0) return std::nullopt;
  return num.evaluate(at) / d;
}

std::string RationalFunction::to_string() const {
  if (den == MultiPoly(1)) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return tidy({a.num + b.num, a.den});
  return tidy({a.num * b.den + b.num * a.den, a.den * b.den});
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return tidy({a.num - b.num, a.den});
  return tidy({a.num * b.den - b.num * a.den, a.den * b.den});
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return tidy({a.num * b.num, a.den * b.den});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero function");
  return tidy({a.num * b.den, a.den * b.num});
}

std::optional<AffinePoint> RationalMap::apply(const AffinePoint& p) const {
  auto u = x.evaluate(p);
  auto v = y.evaluate(p);
  if (!u || !v) return std::nullopt;
  return AffinePoint{*u, *v};
}

namespace {

using RF = RationalFunction;

RF C(const Rational& r) { return RF::constant(r); }

// p(t) for a univariate p over Q, homogenized to keep one denominator.
RF upoly_at(const UPoly& p, const RF& t) {
  if (p.is_zero()) return C(0);
  const auto k = static_cast<unsigned>(p.degree());
  Integer L = 1;
  for (const auto& c : p.coeffs()) L = lcm(L, c.get_den());
  MultiPoly num;
  for (unsigned i = 0; i <= k; ++i) {
    Rational c = p[i] * L;
    if (c == 0) continue;
    num += t.num.pow(i) * t.den.pow(k - i) * c.get_num();
  }
  return tidy({num, t.den.pow(k) * L});
}

// F(X, Y) for integer F, homogenized in each argument.
RF poly_at(const MultiPoly& F, const RF& X, const RF& Y) {
  const auto dx = static_cast<unsigned>(F.degree(Var::x));
  const auto dy = static_cast<unsigned>(F.degree(Var::y));
  MultiPoly num;
  for (const auto& [m, c] : F.terms()) {
    num += X.num.pow(m[Var::x]) * X.den.pow(dx - m[Var::x]) * Y.num.pow(m[Var::y]) * Y.den.pow(dy - m[Var::y]) * c;
  }
  return tidy({num, X.den.pow(dx) * Y.den.pow(dy)});
}

RF compose(const RF& f, const RF& X, const RF& Y) { return poly_at(f.num, X, Y) / poly_at(f.den, X, Y); }

Rational rational_sqrt(const Rational& r, bool& ok) {
  ok = r >= 0 && is_square(r.get_num()) && is_square(r.get_den());
  if (!ok) return 0;
  return Rational(isqrt(r.get_num()), isqrt(r.get_den()));
}

// Homogeneous part of degree k.
MultiPoly homogeneous_part(const MultiPoly& f, unsigned k) {
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    if (m.total() == k) out += MultiPoly::monomial(c, m);
  }
  return out;
}

// λ·f(x0 + X, y0 + Y) over Z with λ > 0.
MultiPoly shifted(const MultiPoly& f, const Rational& x0, const Rational& y0) {
  const auto d = static_cast<unsigned>(f.degree());
  const MultiPoly X = MultiPoly::variable(Var::x);
  const MultiPoly Y = MultiPoly::variable(Var::y);
  const MultiPoly bx = X * Integer(x0.get_den()) + MultiPoly(Integer(x0.get_num()));
  const MultiPoly by = Y * Integer(y0.get_den()) + MultiPoly(Integer(y0.get_num()));
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    const unsigned i = m[Var::x], j = m[Var::y];
    Integer scale = c;
    for (unsigned k = i; k < d; ++k) scale *= x0.get_den();
    for (unsigned k = j; k < d; ++k) scale *= y0.get_den();
    out += bx.pow(i) * by.pow(j) * scale;
  }
  return out;
}

// c(t) = F(1, t) for a form F of degree k.
UPoly dehomogenize_form(const MultiPoly& F) {
  std::vector<Rational> c;
  for (const auto& [m, coeff] : F.terms()) {
    const unsigned j = m[Var::y];
    if (c.size() <= j) c.resize(j + 1, Rational(0));
    c[j] += coeff;
  }
  return UPoly(c);
}

UPoly shift_upoly(const UPoly& p, const Rational& t1) {
  UPoly out;
  const UPoly lin(std::vector<Rational>{t1, Rational(1)});
  for (int i = p.degree(); i >= 0; --i) out = out * lin + UPoly(std::vector<Rational>{p[i]});
  return out;
}

Rational coeff_or_zero(const UPoly& p, int i) { return i <= p.degree() ? p[static_cast<std::size_t>(i)] : Rational(0); }

int valuation(const Rational& r, const Integer& p) {
  int v = 0;
  Integer n = r.get_num(), d = r.get_den();
  while (n % p == 0) n /= p, ++v;
  while (d % p == 0) d /= p, --v;
  return v;
}

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

struct GeneralModel {
  Rational a1, a2, a3, a4, a6;
  RationalMap to;    // (x, y) -> (X, Y)
  RationalMap from;  // (X, Y) -> (x, y)
};

GeneralModel from_weierstrass_shape(MultiPoly f) {
  auto co = [&](unsigned i, unsigned j) { return f.coefficient(Monomial{{i, j, 0}}); };
  if (co(0, 2) < 0) f = -f;
  const Integer a = co(0, 2);
  const Integer b = -co(3, 0);
  const Integer ab = a * b, aab = a * a * b;
  GeneralModel g;
  g.a1 = co(1, 1);
  g.a3 = co(0, 1) * ab;
  g.a2 = -co(2, 0) * a;
  g.a4 = -co(1, 0) * a * ab;
  g.a6 = -co(0, 0) * a * a * a * b * b;
  const RF x = RF::of(MultiPoly::variable(Var::x));
  const RF y = RF::of(MultiPoly::variable(Var::y));
  g.to = {x * C(ab), y * C(aab), {}};
  g.from = {x / C(ab), y / C(aab), {}};
  return g;
}

bool weierstrass_shaped(const MultiPoly& f) {
  for (const auto& [m, c] : f.terms()) {
    if (m[Var::y] >= 2 && m[Var::x] > 0) return false;
    if (m[Var::y] >= 3) return false;
    if (m[Var::y] == 1 && m[Var::x] > 1) return false;
  }
  return f.coefficient(Monomial{{0, 2, 0}}) != 0 && f.coefficient(Monomial{{3, 0, 0}}) != 0;
}

GeneralModel from_cubic(const MultiPoly& f, const AffinePoint& p) {
  const Rational& x0 = p.x;
  const Rational& y0 = p.y;
  const MultiPoly G = shifted(f, x0, y0);
  const MultiPoly G1 = homogeneous_part(G, 1), G2 = homogeneous_part(G, 2), G3 = homogeneous_part(G, 3);
  const UPoly c1 = dehomogenize_form(G1), c2 = dehomogenize_form(G2), c3 = dehomogenize_form(G3);
  const UPoly D = c2 * c2 - UPoly(std::vector<Rational>{4}) * c1 * c3;

  const MultiPoly X = MultiPoly::variable(Var::x);
  const MultiPoly Y = MultiPoly::variable(Var::y);
  const Integer m = x0.get_den(), mp = y0.get_den();
  const MultiPoly P = (X * m - MultiPoly(Integer(x0.get_num()))) * mp;
  const MultiPoly Q = (Y * mp - MultiPoly(Integer(y0.get_num()))) * m;
  const Integer sc = m * mp;

  const RF t{Q, P};
  const RF W = tidy({G3.substitute({P, Q, 0}) * Integer(2) + G2.substitute({P, Q, 0}) * sc, P * P * sc});

  const Integer g10 = G.coefficient(Monomial{{1, 0, 0}});
  const Integer g01 = G.coefficient(Monomial{{0, 1, 0}});
  if (g10 == 0 && g01 == 0) throw Error(Errc::SingularCubic, "base point is singular");
  const bool vertical = g01 == 0;
  Rational t1 = 0;
  RF s, Wt;
  UPoly Ds;
  if (!vertical) {
    t1 = Rational(-g10, g01);
    t1.canonicalize();
    s = t - C(t1);
    Wt = W;
    Ds = shift_upoly(D, t1);
  } else {
    s = RF{P, Q};
    Wt = W * s * s;
    std::vector<Rational> rev(5, Rational(0));
    for (int i = 0; i <= D.degree(); ++i) rev[4 - i] = D[i];
    Ds = UPoly(rev);
  }
  const Rational e0 = coeff_or_zero(Ds, 0), e1 = coeff_or_zero(Ds, 1), e2 = coeff_or_zero(Ds, 2),
                 e3 = coeff_or_zero(Ds, 3), e4 = coeff_or_zero(Ds, 4);
  bool ok = false;
  const Rational q = rational_sqrt(e0, ok);
  if (!ok) throw Error(Errc::InvalidArgument, "tangent quartic has no rational point");

  GeneralModel g;
  const RF Xv = RF::of(X), Yv = RF::of(Y);
  RF s_back, Wt_back;
  if (q != 0) {
    const Rational a = e4, b = e3, c = e2, d = e1;
    g.to.x = (C(2 * q) * (Wt + C(q)) + C(d) * s) / (s * s);
    g.to.y = (C(4 * q * q) * (Wt + C(q)) + C(2 * q) * (C(d) * s + C(c) * s * s) - C(d * d / (2 * q)) * s * s) / (s * s * s);
    g.a1 = d / q;
    g.a2 = c - d * d / (4 * q * q);
    g.a3 = 2 * q * b;
    g.a4 = -4 * q * q * a;
    g.a6 = g.a2 * g.a4;
    s_back = (C(2 * q) * (Xv + C(c)) - C(d * d / (2 * q))) / Yv;
    Wt_back = C(-q) + s_back * (s_back * Xv - C(d)) / C(2 * q);
  } else {
    if (e1 == 0) throw Error(Errc::SingularCubic, "tangent quartic has a repeated root");
    g.to.x = C(e1) / s;
    g.to.y = C(e1) * Wt / (s * s);
    g.a1 = 0;
    g.a2 = e2;
    g.a3 = 0;
    g.a4 = e1 * e3;
    g.a6 = e1 * e1 * e4;
    s_back = C(e1) / Xv;
    Wt_back = C(e1) * Yv / (Xv * Xv);
  }
  RF t_back, W_back;
  if (!vertical) {
    t_back = s_back + C(t1);
    W_back = Wt_back;
  } else {
    t_back = C(1) / s_back;
    W_back = Wt_back / (s_back * s_back);
  }
  const RF X0 = (W_back - upoly_at(c2, t_back)) / (C(2) * upoly_at(c3, t_back));
  g.from.x = C(x0) + X0;
  g.from.y = C(y0) + t_back * X0;
  g.to.exceptional = {"x = " + to_string(x0), "lines through the base point meeting the cubic only there"};
  g.from.exceptional = {"points where the chord parameter or its denominator vanishes"};
  return g;
}

}  // namespace

WeierstrassModel cubic_to_weierstrass(const PlaneCurve& c, const AffinePoint& p) {
  if (c.degree() != 3) throw Error(Errc::Unsupported, "only plane cubics are reduced to Weierstrass form");
  if (!c.contains(p)) throw Error(Errc::NotOnCurve, to_string(p) + " is not on " + c.f().to_string());
  bool smooth = false;
  try {
    smooth = is_smooth_projective(c);
  } catch (const Error& e) {
    if (e.code() != Errc::Inconclusive) throw;
  }
  if (!smooth) throw Error(Errc::SingularCubic, c.f().to_string() + " is singular");

  WeierstrassModel model;
  model.passthrough = weierstrass_shaped(c.f());
  GeneralModel g = model.passthrough ? from_weierstrass_shape(c.f()) : from_cubic(c.f(), p);

  const Rational b2 = g.a1 * g.a1 + 4 * g.a2;
  const Rational b4 = 2 * g.a4 + g.a1 * g.a3;
  const Rational b6 = g.a3 * g.a3 + 4 * g.a6;
  const Rational c4 = b2 * b2 - 24 * b4;
  const Rational c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  const Rational A0 = -27 * c4, B0 = -54 * c6;
  if (4 * A0 * A0 * A0 + 27 * B0 * B0 == 0) throw Error(Errc::SingularCubic, "model has zero discriminant");

  // λ with λ⁴A0, λ⁶B0 integral and minimal
  std::map<Integer, bool> primes;
  for (const Rational& r : {A0, B0}) {
    if (r == 0) continue;
    for (const auto& [pr, e] : factorize(r.get_num())) primes[pr] = true;
    for (const auto& [pr, e] : factorize(r.get_den())) primes[pr] = true;
  }
  Rational lambda = 1;
  for (const auto& [pr, unused] : primes) {
    int k = -1000000;
    if (A0 != 0) k = std::max(k, ceil_div(-valuation(A0, pr), 4));
    if (B0 != 0) k = std::max(k, ceil_div(-valuation(B0, pr), 6));
    Rational f = 1;
    for (int i = 0; i < std::abs(k); ++i) f *= pr;
    lambda *= k >= 0 ? f : 1 / f;
  }
  const Rational l2 = lambda * lambda, l3 = l2 * lambda;
  const Rational A1 = A0 * l2 * l2, B1 = B0 * l3 * l3;
  model.curve = {A1.get_num(), B1.get_num()};

  // (X, Y) -> (u, v) = (λ²(36X + 3b2), 108λ³(2Y + a1X + a3))
  const RF u = C(36 * l2) * g.to.x + C(3 * b2 * l2);
  const RF v = C(108 * l3) * (C(2) * g.to.y + C(g.a1) * g.to.x + C(g.a3));
  model.maps.forward = {u, v, g.to.exceptional};

  const RF U = RF::of(MultiPoly::variable(Var::x));
  const RF V = RF::of(MultiPoly::variable(Var::y));
  const RF Xb = (U / C(l2) - C(3 * b2)) / C(36);
  const RF Yb = (V / C(108 * l3) - C(g.a1) * Xb - C(g.a3)) / C(2);
  model.maps.backward = {compose(g.from.x, Xb, Yb), compose(g.from.y, Xb, Yb), g.from.exceptional};
  return model;
}

// ---------------------------------------------------------------------------
// group law

ECPoint ec_add(const WeierstrassCurve& w, const ECPoint& P, const ECPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rational lambda;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return ECPoint::at_infinity();
    lambda = (3 * P.x * P.x + w.A) / (2 * P.y);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  Rational x3 = lambda * lambda - P.x - Q.x;
  Rational y3 = lambda * (P.x - x3) - P.y;
  return ECPoint::affine(x3, y3);
}

ECPoint ec_multiply(const WeierstrassCurve& w, const ECPoint& P, unsigned n) {
  ECPoint acc = ECPoint::at_infinity();
  for (unsigned i = 0; i < n; ++i) acc = ec_add(w, acc, P);
  return acc;
}

std::optional<unsigned> order_of_point(const WeierstrassCurve& w, const ECPoint& P) {
  ECPoint acc = P;
  for (unsigned n = 1; n <= 12; ++n) {
    if (acc.infinity) return n;
    acc = ec_add(w, acc, P);
  }
  return std::nullopt;
}

std::vector<ECPoint> nagell_lutz_torsion(const WeierstrassCurve& w) {
  const Integer D = 4 * w.A * w.A * w.A + 27 * w.B * w.B;
  if (D == 0) throw Error(Errc::SingularCubic, "curve " + w.to_string() + " is singular");
  std::vector<ECPoint> candidates;
  auto add_roots = [&](const Integer& y2, const std::vector<Integer>& ys) {
    std::vector<Integer> cubic{1, 0, w.A, w.B - y2};
    for (const auto& x : rational_roots(cubic)) {
      if (x.get_den() != 1) continue;
      for (const auto& y : ys) candidates.push_back(ECPoint::affine(x, Rational(y)));
    }
  };
  add_roots(0, {0});
  for (const auto& y : square_divisor_roots(abs(D))) add_roots(y * y, {y, -y});
  std::vector<ECPoint> out;
  for (const auto& P : candidates) {
    if (order_of_point(w, P)) out.push_back(P);
  }
  std::sort(out.begin(), out.end(), [](const ECPoint& a, const ECPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

}  // namespace ratpoints
