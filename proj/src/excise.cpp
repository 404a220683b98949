#include "ratpoints/excise.hpp"

#include <algorithm>
#include <set>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

namespace {

const MultiPoly kX = MultiPoly::variable(Var::x);
const MultiPoly kY = MultiPoly::variable(Var::y);
const MultiPoly kZ = MultiPoly::variable(Var::z);

// a·s + b·t = gcd(s, t) >= 0
Integer extended_gcd(const Integer& s, const Integer& t, Integer& a, Integer& b) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  return g;
}

Matrix3 multiply(const Matrix3& m, const Matrix3& n) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Integer acc = 0;
      for (int k = 0; k < 3; ++k) acc += m[i][k] * n[k][j];
      out[i][j] = acc;
    }
  return out;
}

Matrix3 unimodular_inverse(const Matrix3& m) {
  Matrix3 adj{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  Integer det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
  if (det != 1 && det != -1) throw Error(Errc::InvalidArgument, "matrix is not unimodular");
  for (auto& row : adj)
    for (auto& e : row) e *= det;
  return adj;
}

SpacePoint apply(const Matrix3& m, const SpacePoint& p) {
  SpacePoint out;
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
  return out;
}

std::array<MultiPoly, 3> linear_images(const Matrix3& v) {
  std::array<MultiPoly, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = kX * v[i][0] + kY * v[i][1] + kZ * v[i][2];
  return out;
}

MultiPoly from_upoly(Var v, const UPoly& p) {
  std::vector<Integer> coeffs;
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw Error(Errc::InvalidArgument, "non-integral quotient");
    coeffs.push_back(c.get_num());
  }
  return MultiPoly::univariate(v, coeffs);
}

// Content of h as a polynomial in `other`, i.e. the gcd of its coefficients,
// which are univariate in `v`. Primitive, positive leading coefficient.
UPoly univariate_content(const MultiPoly& h, Var v, Var other) {
  UPoly g;
  for (const auto& coeff : h.coefficients_in(other)) {
    g = gcd(g, UPoly::from_integers(coeff.univariate_coefficients(v)));
  }
  return g.is_zero() ? g : g.primitive();
}

MultiPoly divide_by_univariate(const MultiPoly& h, Var v, Var other, const UPoly& d) {
  MultiPoly out;
  MultiPoly power = 1;
  const MultiPoly o = MultiPoly::variable(other);
  for (const auto& coeff : h.coefficients_in(other)) {
    UPoly q = exact_quotient(UPoly::from_integers(coeff.univariate_coefficients(v)), d);
    out += from_upoly(v, q) * power;
    power = power * o;
  }
  return out;
}

// Drops univariate content factors unless they vanish on enough sampled images.
MultiPoly prune_contents(MultiPoly h, const std::vector<AffinePoint>& images) {
  for (auto [v, other] : {std::pair{Var::x, Var::y}, std::pair{Var::y, Var::x}}) {
    UPoly content = univariate_content(h, v, other);
    if (content.is_zero() || content.degree() < 1) continue;
    std::set<AffinePoint, PointLess> hits;
    for (const auto& q : images) {
      if (content(v == Var::x ? q.x : q.y) == 0) hits.insert(q);
    }
    if (static_cast<int>(hits.size()) >= content.degree() + 1) continue;
    h = divide_by_univariate(h, v, other, content);
  }
  return h.canonical();
}

// Generic squarefreeness in one variable, tested on a few specializations.
bool looks_squarefree(const MultiPoly& h) {
  Var v = h.involves(Var::y) ? Var::y : Var::x;
  Var other = v == Var::y ? Var::x : Var::y;
  if (!h.involves(other)) {
    UPoly p = UPoly::from_integers(h.univariate_coefficients(v));
    return gcd(p, p.derivative()).degree() == 0;
  }
  const int full = h.degree(v);
  for (long t : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, 7L, 11L}) {
    UPoly p = UPoly::from_integers(h.specialize(other, Rational(t)).univariate_coefficients(v));
    if (p.degree() != full) continue;
    if (gcd(p, p.derivative()).degree() == 0) return true;
  }
  return false;
}

Integer homogeneous_top_value(const MultiPoly& f, const Integer& a, const Integer& b) {
  const int d = f.degree();
  Integer acc = 0;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(m.total()) != d) continue;
    Integer t = c;
    for (unsigned i = 0; i < m[Var::x]; ++i) t *= a;
    for (unsigned i = 0; i < m[Var::y]; ++i) t *= b;
    acc += t;
  }
  return acc;
}

}  // namespace

MultiPoly SpaceSystem::auxiliary() const { return g * kZ - MultiPoly(1); }

bool SpaceSystem::contains(const SpacePoint& p) const {
  return f.evaluate(p) == 0 && auxiliary().evaluate(p) == 0;
}

std::vector<SpacePoint> space_points(const SpaceSystem& s, std::uint64_t bound) {
  std::vector<SpacePoint> out;
  for (const auto& p : enumerate_points(s.f, bound)) {
    Rational gx = s.g.evaluate({p.x, p.y, Rational(0)});
    if (gx == 0) continue;
    out.push_back({p.x, p.y, 1 / gx});
  }
  return out;
}

std::string ProjectionCenter::to_string() const {
  return "(" + ratpoints::to_string(c[0]) + ":" + ratpoints::to_string(c[1]) + ":" + ratpoints::to_string(c[2]) + ":0)";
}

Matrix4 ExcisionRecord::coordinate_change() const {
  Matrix4 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = forward[i][j];
  for (int i = 0; i < 3; ++i) {
    out[i][3] = 0;
    out[3][i] = 0;
  }
  out[3][3] = 1;
  return out;
}

SpaceSystem build_excision_system(const PlaneCurve& c, const std::vector<Rational>& xs) {
  SpaceSystem s{c.f(), MultiPoly(1), xs};
  std::set<Rational> seen;
  for (const auto& p : xs) {
    if (!seen.insert(p).second) throw Error(Errc::DuplicateExcisionValue, "x = " + to_string(p) + " listed twice");
    if (!fiber_roots(c.f(), p)) throw Error(Errc::VerticalComponent, "f(" + to_string(p) + ", y) vanishes identically");
    s.g = s.g * (kX * Integer(p.get_den()) - MultiPoly(Integer(p.get_num())));
  }
  return s;
}

std::pair<Matrix3, Matrix3> center_transform(const ProjectionCenter& center) {
  const auto& c = center.c;
  // Step 1: unimodular M on (x, y) with M·(c0, c1) = (0, d).
  Matrix3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Integer d = c[1];
  if (c[0] != 0) {
    Integer p, q;
    d = extended_gcd(c[0], c[1], p, q);
    m = {{{c[1] / d, -c[0] / d, 0}, {p, q, 0}, {0, 0, 1}}};
  }
  // Step 2: V with V·e3 = (0, d, c2), keeping the first coordinate.
  Integer alpha, beta;
  Integer g = extended_gcd(d, c[2], alpha, beta);
  if (g != 1) throw Error(Errc::InvalidArgument, "center coordinates are not coprime");
  Matrix3 v{{{1, 0, 0}, {0, beta, d}, {0, -alpha, c[2]}}};
  Matrix3 backward = multiply(unimodular_inverse(m), v);
  return {unimodular_inverse(backward), backward};
}

bool center_on_closure(const SpaceSystem& s, const ProjectionCenter& center) {
  const auto& c = center.c;
  const int k = s.g.degree();
  if (c[2] == 0 && homogeneous_top_value(s.f, c[0], c[1]) == 0) return true;
  if (k >= 1 && c[0] == 0 && c[1] == 0) return true;
  if (k >= 1 && c[0] == 0) {
    auto coeffs = s.f.coefficients_in(Var::y);
    const MultiPoly& lc = coeffs.back();
    for (const auto& p : s.excised_x) {
      if (lc.evaluate({p, Rational(0), Rational(0)}) == 0) return true;
    }
  }
  return false;
}

ExcisionRecord project(const SpaceSystem& s, const ProjectionCenter& center) {
  ExcisionRecord r;
  r.source = s;
  r.center = center;
  std::tie(r.forward, r.backward) = center_transform(center);
  auto images = linear_images(r.backward);
  r.A = s.f.substitute(images);
  r.B = s.auxiliary().substitute(images);
  MultiPoly h = resultant_extended(r.A, r.B, Var::z);
  if (h.is_zero()) throw Error(Errc::DegenerateElimination, "resultant vanishes identically for center " + center.to_string());
  if (h.is_constant()) throw Error(Errc::DegenerateElimination, "eliminant is constant for center " + center.to_string());
  std::vector<AffinePoint> samples;
  for (const auto& p : space_points(s, 6)) samples.push_back(project_point(r, p));
  r.h = prune_contents(h.primitive(), samples);
  if (r.h.is_constant()) throw Error(Errc::DegenerateElimination, "eliminant reduced to a constant for center " + center.to_string());
  r.certificate.degree_of_h = static_cast<unsigned>(r.h.degree());
  return r;
}

MultiPoly eliminate(const SpaceSystem& s, const ProjectionCenter& center) { return project(s, center).h; }

AffinePoint project_point(const ExcisionRecord& r, const SpacePoint& p) {
  SpacePoint q = apply(r.forward, p);
  return {q[0], q[1]};
}

Pullback pullback_point(const ExcisionRecord& r, const AffinePoint& q) {
  if (r.h.evaluate({q.x, q.y, Rational(0)}) != 0)
    throw Error(Errc::NotOnCurve, to_string(q) + " is not on the eliminant");
  auto on_line = [&](const MultiPoly& p) { return p.specialize(Var::x, q.x).specialize(Var::y, q.y); };
  MultiPoly a = on_line(r.A);
  MultiPoly b = on_line(r.B);
  UPoly g = gcd(UPoly::from_integers(a.univariate_coefficients(Var::z)),
                UPoly::from_integers(b.univariate_coefficients(Var::z)));
  if (g.is_zero()) throw Error(Errc::CertificateViolation, "the line over " + to_string(q) + " lies on the space curve");
  std::vector<AffinePoint> found;
  if (g.degree() >= 1) {
    auto coeffs = g.integer_coeffs();
    std::vector<Integer> high(coeffs.rbegin(), coeffs.rend());
    for (const auto& s : rational_roots(high)) {
      SpacePoint p = apply(r.backward, {q.x, q.y, s});
      if (!r.source.contains(p)) throw Error(Errc::CertificateViolation, "preimage fails the space system");
      found.push_back({p[0], p[1]});
    }
  }
  if (found.size() >= 2) throw Error(Errc::CertificateViolation, to_string(q) + " has several rational preimages");
  if (found.size() == 1) return found.front();
  auto leading_vanishes = [&](const MultiPoly& p) {
    return p.coefficients_in(Var::z).back().evaluate({q.x, q.y, Rational(0)}) == 0;
  };
  if (leading_vanishes(r.A) && leading_vanishes(r.B)) return AtInfinity{};
  throw Error(Errc::NoRationalPreimage, to_string(q) + " has no rational preimage");
}

void certify(ExcisionRecord& r, std::uint64_t check_height) {
  EmpiricalCertificate& cert = r.certificate;
  cert.check_height = check_height;
  cert.degree_of_h = static_cast<unsigned>(r.h.degree());
  cert.injective_on_checked = true;
  std::set<AffinePoint, PointLess> images;
  auto pts = space_points(r.source, check_height);
  cert.space_points_checked = pts.size();
  for (const auto& p : pts) {
    AffinePoint img = project_point(r, p);
    if (!images.insert(img).second) {
      cert.injective_on_checked = false;
      break;
    }
    try {
      Pullback back = pullback_point(r, img);
      auto* pt = std::get_if<AffinePoint>(&back);
      if (!pt || pt->x != p[0] || pt->y != p[1]) cert.injective_on_checked = false;
    } catch (const Error&) {
      cert.injective_on_checked = false;
    }
    if (!cert.injective_on_checked) break;
  }
  cert.no_extra_rationals_up_to_height = cert.injective_on_checked;
  if (!cert.injective_on_checked) return;
  auto hpts = enumerate_points(r.h, check_height);
  cert.h_points_checked = hpts.size();
  for (const auto& q : hpts) {
    try {
      pullback_point(r, q);
    } catch (const Error&) {
      cert.no_extra_rationals_up_to_height = false;
      return;
    }
  }
}

std::vector<ProjectionCenter> candidate_centers(std::uint64_t search_height) {
  std::vector<ProjectionCenter> out;
  const long H = static_cast<long>(search_height);
  for (long c0 = 0; c0 <= H; ++c0)
    for (long c1 = -H; c1 <= H; ++c1)
      for (long c2 = -H; c2 <= H; ++c2) {
        std::array<long, 3> c{c0, c1, c2};
        auto first = std::find_if(c.begin(), c.end(), [](long t) { return t != 0; });
        if (first == c.end() || *first < 0) continue;
        Integer g = gcd(gcd(Integer(c0), Integer(c1)), Integer(c2));
        if (g != 1) continue;
        out.push_back({{Integer(c0), Integer(c1), Integer(c2)}});
      }
  auto key = [](const ProjectionCenter& p) {
    Integer h = 0;
    int nonzero = 0;
    for (const auto& t : p.c) {
      h = std::max<Integer>(h, abs(t));
      nonzero += t != 0;
    }
    return std::tuple(h, p.c[0] != 0, nonzero, p.c[0], p.c[1], p.c[2]);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

ExcisionRecord find_projection_center(const SpaceSystem& s, std::uint64_t search_height,
                                      std::uint64_t check_height) {
  unsigned tried = 0;
  for (const auto& center : candidate_centers(search_height)) {
    if (center_on_closure(s, center)) continue;
    ++tried;
    ExcisionRecord r;
    try {
      r = project(s, center);
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateElimination) throw;
      continue;
    }
    if (!looks_squarefree(r.h)) continue;
    certify(r, check_height);
    if (r.certificate.certified()) {
      r.centers_tried = tried;
      return r;
    }
  }
  throw Error(Errc::BudgetExhausted, "no projection center of height <= " + std::to_string(search_height) + " certifies");
}

}  // namespace ratpoints
