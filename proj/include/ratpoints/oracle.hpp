#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ratpoints/zerodim.hpp"

namespace ratpoints {

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct OracleAnswer {
  Verdict verdict = Verdict::Unknown;
  std::optional<Solution> witness;  // values for the system's variables, in order
  std::string provenance;
};

/// Sorted canonical polynomial strings joined by ';'.
std::string system_key(const PolySystem& s);
/// The system {f} in the variables f actually uses (x, y, z order).
PolySystem single_equation_system(const MultiPoly& f);

class ExistenceOracle {
 public:
  virtual ~ExistenceOracle() = default;
  virtual OracleAnswer decide(const PolySystem& s) const = 0;
  virtual std::string describe() const = 0;
};

/// Semi-decision: scans tuples of height <= bound; never answers No.
class BoundedSearchOracle final : public ExistenceOracle {
 public:
  explicit BoundedSearchOracle(std::uint64_t bound) : bound_(bound) {}
  OracleAnswer decide(const PolySystem& s) const override;
  std::string describe() const override { return "search:" + std::to_string(bound_); }

 private:
  std::uint64_t bound_;
};

struct CorpusEntry {
  bool answer = false;
  std::vector<Solution> known_points;
  std::string note;
};

struct OracleCorpus {
  std::map<std::string, CorpusEntry> entries;
  std::size_t size() const { return entries.size(); }
};

/// Throws ParseError (message carries the line number), WitnessMismatch,
/// DuplicateKey.
OracleCorpus load_corpus(const std::string& text);
OracleCorpus load_corpus_file(const std::string& path);
std::string serialize_entry(const std::string& key, const CorpusEntry& e);

class TableOracle final : public ExistenceOracle {
 public:
  explicit TableOracle(OracleCorpus corpus, std::string origin = "table")
      : corpus_(std::move(corpus)), origin_(std::move(origin)) {}
  OracleAnswer decide(const PolySystem& s) const override;
  std::string describe() const override { return origin_; }
  const OracleCorpus& corpus() const { return corpus_; }

 private:
  OracleCorpus corpus_;
  std::string origin_;
};

/// Exact on single equations a·x² + b·y² - c with a, b, c > 0.
class ConicOracle final : public ExistenceOracle {
 public:
  OracleAnswer decide(const PolySystem& s) const override;
  std::string describe() const override { return "conic"; }
};

/// Matches f against a·x² + b·y² - c with a, b, c positive.
std::optional<std::array<Integer, 3>> conic_coefficients(const MultiPoly& f);

/// Whether a·x² + b·y² = c has a rational solution (a, b, c >= 1).
bool conic_solvable(const Integer& a, const Integer& b, const Integer& c);

/// The integer solution (X, Y, Z) of a·X² + b·Y² = c·Z², Z >= 1, X, Y >= 0,
/// minimizing (Z, X, Y); nullopt when the conic has no rational point.
std::optional<std::array<Integer, 3>> conic_witness(const Integer& a, const Integer& b, const Integer& c);

struct QueryRecord {
  std::string key;
  Verdict verdict = Verdict::Unknown;
  unsigned round = 0;
  std::string provenance;
  std::optional<Solution> witness;
};
using QueryLog = std::vector<QueryRecord>;

/// decide() plus a log entry. A Yes witness that fails the system is demoted
/// to Unknown.
OracleAnswer query(const ExistenceOracle& oracle, const PolySystem& s, QueryLog& log, unsigned round);

/// Parses "search:B", "table:PATH" or "conic". Throws InvalidArgument.
std::unique_ptr<ExistenceOracle> make_oracle(const std::string& desc);

}  // namespace ratpoints
