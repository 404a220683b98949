#include "ratpoints/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ratpoints/error.hpp"
#include "ratpoints/parse.hpp"
#include "ratpoints/upoly.hpp"

namespace ratpoints {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::string system_key(const PolySystem& s) {
  std::vector<std::string> parts;
  for (const auto& p : s.equations) parts.push_back(p.canonical().to_string());
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ";" : "") + parts[i];
  return out;
}

PolySystem single_equation_system(const MultiPoly& f) {
  PolySystem s{{f}, {}};
  for (Var v : kAllVars) {
    if (f.involves(v)) s.variables.push_back(v);
  }
  return s;
}

namespace {

bool satisfies(const PolySystem& s, const Solution& sol) {
  if (sol.size() != s.variables.size()) return false;
  std::array<Rational, 3> at{0, 0, 0};
  for (std::size_t i = 0; i < sol.size(); ++i) at[static_cast<unsigned>(s.variables[i])] = sol[i];
  return std::all_of(s.equations.begin(), s.equations.end(), [&](const MultiPoly& p) { return p.evaluate(at) == 0; });
}

// Search order on single values: height, then |v|, then + before -.
auto value_key(const Rational& v) { return std::tuple(height(v), abs(v), v < 0); }

bool search_less(const Solution& a, const Solution& b) {
  Integer ha = 0, hb = 0;
  for (const auto& v : a) ha = std::max(ha, height(v));
  for (const auto& v : b) hb = std::max(hb, height(v));
  if (ha != hb) return ha < hb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ka = value_key(a[i]);
    auto kb = value_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

void search(const PolySystem& s, std::vector<MultiPoly> eqs, std::size_t depth, Solution& prefix,
            const std::vector<Rational>& values, std::uint64_t bound, std::optional<Solution>& best) {
  std::erase_if(eqs, [](const MultiPoly& p) { return p.is_zero(); });
  for (const auto& p : eqs) {
    if (p.is_constant()) return;
  }
  const std::size_t n = s.variables.size();
  if (depth + 1 == n) {
    const Var last = s.variables.back();
    UPoly g;
    for (const auto& p : eqs) g = gcd(g, UPoly::from_integers(p.univariate_coefficients(last)));
    std::vector<Rational> roots;
    if (g.is_zero()) {
      roots = values;
    } else if (g.degree() >= 1) {
      auto c = g.integer_coeffs();
      std::vector<Integer> high(c.rbegin(), c.rend());
      roots = rational_roots_bounded(high, bound);
    }
    for (const auto& r : roots) {
      prefix.push_back(r);
      if (!best || search_less(prefix, *best)) best = prefix;
      prefix.pop_back();
    }
    return;
  }
  const Var v = s.variables[depth];
  for (const auto& value : values) {
    std::vector<MultiPoly> next;
    for (const auto& p : eqs) next.push_back(p.specialize(v, value));
    prefix.push_back(value);
    search(s, std::move(next), depth + 1, prefix, values, bound, best);
    prefix.pop_back();
  }
}

std::string point_string(const Solution& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + to_string(p[i]);
  return out + ")";
}

}  // namespace

OracleAnswer BoundedSearchOracle::decide(const PolySystem& s) const {
  OracleAnswer ans;
  ans.provenance = describe();
  if (s.variables.empty()) {
    if (satisfies(s, {})) {
      ans.verdict = Verdict::Yes;
      ans.witness = Solution{};
    }
    return ans;
  }
  std::optional<Solution> best;
  Solution prefix;
  search(s, s.equations, 0, prefix, enumerate_rationals(bound_), bound_, best);
  if (best && satisfies(s, *best)) {
    ans.verdict = Verdict::Yes;
    ans.witness = best;
  }
  return ans;
}

namespace {

std::string trim(const std::string& t) {
  auto b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

[[noreturn]] void corpus_error(std::size_t line, std::size_t col, const std::string& what) {
  throw ParseError(col, "corpus line " + std::to_string(line) + ": " + what);
}

std::vector<Solution> parse_points(const std::string& field, std::size_t line, std::size_t offset) {
  std::vector<Solution> out;
  std::size_t i = 0;
  while (i < field.size()) {
    if (field[i] == ' ' || field[i] == ',') {
      ++i;
      continue;
    }
    if (field[i] != '(') corpus_error(line, offset + i, "expected '('");
    auto close = field.find(')', i);
    if (close == std::string::npos) corpus_error(line, offset + i, "unterminated point");
    Solution p;
    std::stringstream inner(field.substr(i + 1, close - i - 1));
    std::string coord;
    while (std::getline(inner, coord, ',')) {
      try {
        p.push_back(parse_rational(trim(coord)));
      } catch (const Error&) {
        corpus_error(line, offset + i, "bad rational '" + coord + "'");
      }
    }
    if (p.empty() || p.size() > 3) corpus_error(line, offset + i, "points need 1 to 3 coordinates");
    out.push_back(std::move(p));
    i = close + 1;
  }
  return out;
}

// Coordinates are assigned to x, y, z in order.
bool point_satisfies(const std::vector<MultiPoly>& polys, const Solution& p) {
  std::array<Rational, 3> at{0, 0, 0};
  for (std::size_t i = 0; i < p.size(); ++i) at[i] = p[i];
  for (std::size_t i = p.size(); i < 3; ++i) {
    for (const auto& f : polys)
      if (f.involves(kAllVars[i])) return false;
  }
  return std::all_of(polys.begin(), polys.end(), [&](const MultiPoly& f) { return f.evaluate(at) == 0; });
}

}  // namespace

OracleCorpus load_corpus(const std::string& text) {
  OracleCorpus corpus;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::vector<std::size_t> offsets;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
      auto bar = line.find('|', start);
      if (bar == std::string::npos) break;
      fields.push_back(line.substr(start, bar - start));
      offsets.push_back(start);
      start = bar + 1;
    }
    fields.push_back(line.substr(start));
    offsets.push_back(start);
    if (fields.size() < 2) corpus_error(line_no, 0, "expected 'key|yes/no|points|note'");

    std::vector<MultiPoly> polys;
    std::stringstream keys(fields[0]);
    std::string piece;
    while (std::getline(keys, piece, ';')) {
      try {
        polys.push_back(parse_polynomial(piece));
      } catch (const ParseError& e) {
        corpus_error(line_no, e.position(), e.what());
      }
    }
    if (polys.empty()) corpus_error(line_no, 0, "empty key");
    std::string key = system_key(PolySystem{polys, {}});

    CorpusEntry entry;
    std::string answer = trim(fields[1]);
    if (answer == "yes") entry.answer = true;
    else if (answer != "no") corpus_error(line_no, offsets[1], "answer must be yes or no");
    if (fields.size() > 2) entry.known_points = parse_points(fields[2], line_no, offsets[2]);
    if (fields.size() > 3) entry.note = trim(fields[3]);

    for (const auto& p : entry.known_points) {
      if (!point_satisfies(polys, p))
        throw Error(Errc::WitnessMismatch, "corpus line " + std::to_string(line_no) + ": " + point_string(p) + " fails " + key);
    }
    if (!entry.answer && !entry.known_points.empty())
      throw Error(Errc::WitnessMismatch, "corpus line " + std::to_string(line_no) + ": answer no with listed points");
    if (!corpus.entries.emplace(key, std::move(entry)).second)
      throw Error(Errc::DuplicateKey, "corpus line " + std::to_string(line_no) + ": duplicate key " + key);
  }
  return corpus;
}

OracleCorpus load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read corpus " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_corpus(buf.str());
}

std::string serialize_entry(const std::string& key, const CorpusEntry& e) {
  std::string out = key + "|" + (e.answer ? "yes" : "no") + "|";
  for (std::size_t i = 0; i < e.known_points.size(); ++i) out += (i ? "," : "") + point_string(e.known_points[i]);
  return out + "|" + e.note;
}

OracleAnswer TableOracle::decide(const PolySystem& s) const {
  OracleAnswer ans;
  ans.provenance = origin_;
  auto it = corpus_.entries.find(system_key(s));
  if (it == corpus_.entries.end()) return ans;
  ans.verdict = it->second.answer ? Verdict::Yes : Verdict::No;
  if (ans.verdict == Verdict::Yes && !it->second.known_points.empty()) {
    const Solution& p = it->second.known_points.front();
    Solution w;
    for (Var v : s.variables) {
      auto idx = static_cast<std::size_t>(v);
      w.push_back(idx < p.size() ? p[idx] : Rational(0));
    }
    if (satisfies(s, w)) ans.witness = w;
  }
  return ans;
}

std::optional<std::array<Integer, 3>> conic_coefficients(const MultiPoly& f) {
  MultiPoly g = f.canonical();
  if (g.size() != 3) return std::nullopt;
  Integer a = g.coefficient(Monomial{{2, 0, 0}});
  Integer b = g.coefficient(Monomial{{0, 2, 0}});
  Integer c = -g.coefficient(Monomial{});
  if (a > 0 && b > 0 && c > 0) return std::array<Integer, 3>{a, b, c};
  return std::nullopt;
}

OracleAnswer ConicOracle::decide(const PolySystem& s) const {
  OracleAnswer ans;
  ans.provenance = describe();
  if (s.equations.size() != 1) return ans;
  auto abc = conic_coefficients(s.equations.front());
  if (!abc) return ans;
  auto w = conic_witness((*abc)[0], (*abc)[1], (*abc)[2]);
  if (!w) {
    ans.verdict = Verdict::No;
    return ans;
  }
  ans.verdict = Verdict::Yes;
  Rational x((*w)[0], (*w)[2]);
  Rational y((*w)[1], (*w)[2]);
  x.canonicalize();
  y.canonicalize();
  Solution sol;
  for (Var v : s.variables) sol.push_back(v == Var::x ? x : v == Var::y ? y : Rational(0));
  if (satisfies(s, sol)) ans.witness = sol;
  return ans;
}

namespace {

Integer squarefree_kernel(const Integer& n) {
  Integer out = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) out *= p;
  }
  return out;
}

}  // namespace

bool conic_solvable(const Integer& a0, const Integer& b0, const Integer& c0) {
  if (a0 < 1 || b0 < 1 || c0 < 1) throw Error(Errc::InvalidArgument, "conic coefficients must be positive");
  // a·X² + b·Y² = c·Z² with a, b, c squarefree and pairwise coprime
  Integer a = a0, b = b0, c = c0;
  for (bool changed = true; changed;) {
    changed = false;
    a = squarefree_kernel(a);
    b = squarefree_kernel(b);
    c = squarefree_kernel(c);
    Integer g = gcd(gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if (Integer d = gcd(a, b); d > 1) {
      a /= d, b /= d, c *= d, changed = true;
    } else if (Integer d2 = gcd(a, c); d2 > 1) {
      a /= d2, c /= d2, b *= d2, changed = true;
    } else if (Integer d3 = gcd(b, c); d3 > 1) {
      b /= d3, c /= d3, a *= d3, changed = true;
    }
  }
  const Integer max_x = isqrt(b * c);
  const Integer max_z = isqrt(a * b);
  for (Integer z = 1; z <= max_z; ++z) {
    const Integer cz = c * z * z;
    for (Integer x = 0; x <= max_x && a * x * x <= cz; ++x) {
      Integer r = cz - a * x * x;
      if (r % b != 0) continue;
      if (is_square(r / b)) return true;  // |Y| <= √(ac) follows from the equation
    }
  }
  return false;
}

std::optional<std::array<Integer, 3>> conic_witness(const Integer& a, const Integer& b, const Integer& c) {
  if (!conic_solvable(a, b, c)) return std::nullopt;
  for (Integer z = 1;; ++z) {
    const Integer cz = c * z * z;
    for (Integer x = 0; a * x * x <= cz; ++x) {
      Integer r = cz - a * x * x;
      if (r % b != 0 || !is_square(r / b)) continue;
      return std::array<Integer, 3>{x, isqrt(r / b), z};
    }
  }
}

OracleAnswer query(const ExistenceOracle& oracle, const PolySystem& s, QueryLog& log, unsigned round) {
  OracleAnswer ans = oracle.decide(s);
  if (ans.verdict == Verdict::Yes && ans.witness && !satisfies(s, *ans.witness)) {
    ans.verdict = Verdict::Unknown;
    ans.witness.reset();
    ans.provenance += " (witness rejected)";
  }
  log.push_back({system_key(s), ans.verdict, round, ans.provenance, ans.witness});
  return ans;
}

std::unique_ptr<ExistenceOracle> make_oracle(const std::string& desc) {
  if (desc == "conic") return std::make_unique<ConicOracle>();
  if (desc.rfind("search:", 0) == 0) {
    const std::string num = desc.substr(7);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 9)
      throw Error(Errc::InvalidArgument, "bad search bound in '" + desc + "'");
    auto b = std::stoull(num);
    if (b < 1) throw Error(Errc::InvalidArgument, "search bound must be >= 1");
    return std::make_unique<BoundedSearchOracle>(b);
  }
  if (desc.rfind("table:", 0) == 0) {
    const std::string path = desc.substr(6);
    return std::make_unique<TableOracle>(load_corpus_file(path), desc);
  }
  throw Error(Errc::InvalidArgument, "unknown oracle '" + desc + "'");
}

}  // namespace ratpoints
