#include "ratpoints/upoly.hpp"

#include "ratpoints/error.hpp"

namespace ratpoints {

UPoly::UPoly(std::vector<Rational> low_first) : c_(std::move(low_first)) { trim(); }

UPoly UPoly::from_integers_high_first(std::span<const Integer> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) c.emplace_back(*it);
  return UPoly(std::move(c));
}

UPoly UPoly::from_integers(std::span<const Integer> low_first) {
  std::vector<Rational> c(low_first.begin(), low_first.end());
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

int UPoly::sign_at(const Rational& at) const { return sgn((*this)(at)); }

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> d = c_;
  Rational lc = c_.back();
  for (auto& x : d) x /= lc;
  return UPoly(std::move(d));
}

UPoly UPoly::normalized() const {
  if (is_zero()) return *this;
  Integer den = 1;
  for (const auto& x : c_) den = lcm(den, x.get_den());
  Integer g = 0;
  for (const auto& x : c_) {
    Integer v = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  std::vector<Rational> d;
  for (const auto& x : c_) d.emplace_back(x.get_num() * (den / x.get_den()) / g);
  return UPoly(std::move(d));
}

UPoly UPoly::primitive() const {
  UPoly p = normalized();
  if (!p.is_zero() && p.leading() < 0) p = UPoly() - p;
  return p;
}

std::vector<Integer> UPoly::integer_coeffs() const {
  std::vector<Integer> out;
  for (const auto& x : primitive().c_) out.push_back(x.get_num());
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& num, const UPoly& den, UPoly& quot, UPoly& rem) {
  if (den.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = num.c_;
  std::vector<Rational> q;
  const int dd = den.degree();
  if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
  for (int i = num.degree(); i >= dd; --i) {
    const Rational& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational f = top / den.leading();
    q[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= f * den.c_[static_cast<std::size_t>(j)];
  }
  quot = UPoly(std::move(q));
  rem = UPoly(std::move(r));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.normalized();
  UPoly y = b.normalized();
  while (!y.is_zero()) {
    UPoly q, r;
    UPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = r.normalized();
  }
  return x.monic();
}

UPoly exact_quotient(const UPoly& num, const UPoly& den) {
  UPoly q, r;
  UPoly::divmod(num, den, q, r);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  return q;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() < 1) return p;
  UPoly g = gcd(p, p.derivative());
  return exact_quotient(p, g);
}

}  // namespace ratpoints
