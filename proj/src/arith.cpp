#include "ratpoints/arith.hpp"

#include <algorithm>
#include <numeric>

#include "ratpoints/error.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

Integer height(const Rational& q) {
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  if (num == 0) return 1;
  return num > den ? num : den;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s, std::size_t offset) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError(offset + i, "expected digits");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw ParseError(offset + j, "unexpected character");
    }
    std::string digits(s);
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  Integer num = parse_int(text.substr(0, slash), 0);
  Integer den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void for_each_rational(std::uint64_t bound, const std::function<void(const Rational&)>& visit) {
  if (bound == 0) return;
  visit(Rational(-1));
  visit(Rational(0));
  visit(Rational(1));
  using Frac = std::pair<std::int64_t, std::int64_t>;
  std::vector<Frac> level;
  for (std::uint64_t h64 = 2; h64 <= bound; ++h64) {
    const auto h = static_cast<std::int64_t>(h64);
    level.clear();
    // denominator h, |numerator| < h
    for (std::int64_t p = 1; p < h; ++p) {
      if (std::gcd(p, h) != 1) continue;
      level.emplace_back(p, h);
      level.emplace_back(-p, h);
    }
    // |numerator| h, denominator <= h
    for (std::int64_t q = 1; q <= h; ++q) {
      if (std::gcd(h, q) != 1) continue;
      level.emplace_back(h, q);
      level.emplace_back(-h, q);
    }
    std::sort(level.begin(), level.end(), [](const Frac& a, const Frac& b) {
      return static_cast<__int128>(a.first) * b.second < static_cast<__int128>(b.first) * a.second;
    });
    for (const auto& [p, q] : level) {
      Rational r{Integer(static_cast<long>(p)), Integer(static_cast<long>(q))};
      visit(r);
    }
  }
}

std::vector<Rational> enumerate_rationals(std::uint64_t bound) {
  std::vector<Rational> out;
  for_each_rational(bound, [&](const Rational& r) { out.push_back(r); });
  return out;
}

namespace {

// Strips leading zeros (high end). Returns coefficients high first.
std::vector<Integer> strip_high(std::span<const Integer> coeffs) {
  std::size_t i = 0;
  while (i < coeffs.size() && coeffs[i] == 0) ++i;
  if (i == coeffs.size()) throw Error(Errc::ZeroPolynomial, "all coefficients are zero");
  return {coeffs.begin() + static_cast<std::ptrdiff_t>(i), coeffs.end()};
}

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p) {
    seq_.push_back(p.normalized());
    if (p.degree() < 1) return;
    seq_.push_back(p.derivative().normalized());
    while (true) {
      UPoly q, r;
      UPoly::divmod(seq_[seq_.size() - 2], seq_.back(), q, r);
      if (r.is_zero()) break;
      seq_.push_back((UPoly() - r).normalized());
    }
  }

  int variations(const Rational& at) const {
    int count = 0;
    int last = 0;
    for (const auto& p : seq_) {
      int s = p.sign_at(at);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // roots in (lo, hi]
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<UPoly> seq_;
};

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UPoly& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() < 1) return out;
  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational ratio = abs(p[static_cast<std::size_t>(i)] / p.leading());
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  SturmSequence sturm(p);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = sturm.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(mid, hi);
    stack.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (fl + 1 < hi) return Rational(fl + 1);
  Rational a = lo - fl;
  Rational b = hi - fl;
  Rational inner;
  if (a == 0) {
    Rational inv = 1 / b;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    inner = Rational(f + 1);
  } else {
    inner = simplest_between(1 / b, 1 / a);
  }
  Rational result = fl + 1 / inner;
  result.canonicalize();
  return result;
}

std::vector<Rational> rational_roots(std::span<const Integer> coeffs) {
  std::vector<Integer> high = strip_high(coeffs);
  std::vector<Rational> roots;
  while (high.size() > 1 && high.back() == 0) {
    high.pop_back();
    if (roots.empty()) roots.emplace_back(0);
  }
  if (high.size() <= 1) return roots;

  UPoly p = squarefree_part(UPoly::from_integers_high_first(high)).primitive();
  const Integer lead = abs(p.integer_coeffs().back());
  const Rational resolution(1, lead * lead);
  SturmSequence sturm(p);
  for (auto [lo, hi] : isolate_real_roots(p)) {
    if (p.sign_at(hi) == 0) {
      roots.push_back(hi);
      continue;
    }
    bool found = false;
    while (hi - lo >= resolution) {
      Rational mid = (lo + hi) / 2;
      if (p.sign_at(mid) == 0) {
        roots.push_back(mid);
        found = true;
        break;
      }
      if (sturm.count(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (found) continue;
    // At most one rational with denominator dividing `lead` fits in the
    // interval, and it would be the simplest one.
    Rational candidate = simplest_between(lo, hi);
    if (lead % candidate.get_den() == 0 && p.sign_at(candidate) == 0) roots.push_back(candidate);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Rational> rational_roots_bounded(std::span<const Integer> coeffs, std::uint64_t bound) {
  std::vector<Integer> high = strip_high(coeffs);
  std::vector<Rational> roots;
  while (high.size() > 1 && high.back() == 0) {
    high.pop_back();
    if (roots.empty()) roots.emplace_back(0);
  }
  if (high.size() <= 1 || bound == 0) return roots;
  const Integer& lead = high.front();
  const Integer& trail = high.back();
  const std::size_t n = high.size() - 1;
  auto vanishes = [&](const Integer& p, const Integer& q) {
    Integer acc = lead;
    Integer qpow = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      qpow *= q;
      acc = acc * p + high[i] * qpow;
    }
    return acc == 0;
  };
  Integer q_big, p_big;
  for (std::uint64_t q = 1; q <= bound; ++q) {
    q_big = static_cast<unsigned long>(q);
    if (!mpz_divisible_p(lead.get_mpz_t(), q_big.get_mpz_t())) continue;
    for (std::uint64_t p = 1; p <= bound; ++p) {
      if (std::gcd(p, q) != 1) continue;
      p_big = static_cast<unsigned long>(p);
      if (!mpz_divisible_p(trail.get_mpz_t(), p_big.get_mpz_t())) continue;
      if (vanishes(p_big, q_big)) roots.emplace_back(p_big, q_big);
      Integer neg = -p_big;
      if (vanishes(neg, q_big)) roots.emplace_back(neg, q_big);
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  return roots;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace ratpoints
