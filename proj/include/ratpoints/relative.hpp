#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratpoints/elliptic.hpp"
#include "ratpoints/excise.hpp"
#include "ratpoints/genus0.hpp"
#include "ratpoints/oracle.hpp"

namespace ratpoints {

struct RunLimits {
  unsigned max_rounds = 8;
  std::uint64_t max_search_height = 30;
  unsigned max_degree = 64;
  std::uint64_t center_search_height = 3;
  std::uint64_t check_height = 10;

  void validate() const;  // throws InvalidArgument unless all >= 1
};

struct FullSet {
  std::vector<AffinePoint> points;
};

enum class Finiteness { Finite, Infinite };
std::string to_string(Finiteness f);

struct FinitenessVerdict {
  Finiteness verdict = Finiteness::Finite;
};

struct Genus0Result {
  bool exists = false;
  std::optional<SweepParametrization> parametrization;
};

struct Aborted {
  std::string reason;
  std::vector<AffinePoint> partial_points;
};

using Outcome = std::variant<FullSet, FinitenessVerdict, Genus0Result, Aborted>;

struct SolutionReport {
  PlaneCurve original_curve;
  unsigned genus = 0;
  Outcome outcome;
  std::vector<ExcisionRecord> excision_chain;
  QueryLog log;
  std::optional<WeierstrassCurve> model;  // genus 1 only
  std::vector<ECPoint> torsion;           // genus 1 only
  std::vector<std::string> notes;

  bool definite() const { return !std::holds_alternative<Aborted>(outcome); }
};

/// Oracle loop for genus >= 2: query, find a fiber, excise it, repeat.
SolutionReport solve_all_high_genus(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits);

/// Finite/Infinite decision for genus 1 via torsion excision on a Weierstrass
/// model. Throws SingularCubic.
SolutionReport decide_finiteness_genus1(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits);

/// Throws UnsupportedShape for genus-0 inputs that are not a·x² + b·y² = c.
SolutionReport dispatch(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits);

}  // namespace ratpoints
