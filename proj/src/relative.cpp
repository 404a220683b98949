#include "ratpoints/relative.hpp"

#include <set>

#include "ratpoints/error.hpp"

namespace ratpoints {

void RunLimits::validate() const {
  if (max_rounds < 1 || max_search_height < 1 || max_degree < 1 || center_search_height < 1 || check_height < 1)
    throw Error(Errc::InvalidArgument, "run limits must all be >= 1");
}

std::string to_string(Finiteness f) { return f == Finiteness::Finite ? "finite" : "infinite"; }

namespace {

// Points of height <= the first bound at which any exist.
std::vector<AffinePoint> first_points(const MultiPoly& f, std::uint64_t max_height) {
  for (std::uint64_t b = 1; b <= max_height; ++b) {
    auto pts = enumerate_points(f, b);
    if (!pts.empty()) return pts;
  }
  return {};
}

// x-values of minimal height among the given points, ascending.
std::vector<Rational> lowest_x_class(const std::vector<AffinePoint>& pts) {
  Integer best = -1;
  for (const auto& p : pts) {
    Integer h = height(p.x);
    if (best < 0 || h < best) best = h;
  }
  std::set<Rational> xs;
  for (const auto& p : pts) {
    if (height(p.x) == best) xs.insert(p.x);
  }
  return {xs.begin(), xs.end()};
}

// Maps a point on the last eliminant back to the original curve; nullopt
// when it lands on an excised point at infinity.
std::optional<AffinePoint> to_original(const std::vector<ExcisionRecord>& chain, AffinePoint q) {
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    Pullback back = pullback_point(*it, q);
    if (std::holds_alternative<AtInfinity>(back)) return std::nullopt;
    q = std::get<AffinePoint>(back);
  }
  return q;
}

std::vector<AffinePoint> sorted(std::set<AffinePoint, PointLess> pts) {
  std::vector<AffinePoint> out(pts.begin(), pts.end());
  sort_by_height(out);
  return out;
}

}  // namespace

SolutionReport solve_all_high_genus(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits) {
  limits.validate();
  SolutionReport report{c, genus(c), Aborted{}, {}, {}, {}, {}, {}};
  if (report.genus < 2) throw Error(Errc::InvalidArgument, "solve_all_high_genus needs genus >= 2");
  std::set<AffinePoint, PointLess> found;
  MultiPoly current = c.f();
  auto abort = [&](const std::string& why) {
    report.outcome = Aborted{why, sorted(found)};
    return report;
  };
  for (unsigned round = 0;; ++round) {
    if (round >= limits.max_rounds) return abort("round limit " + std::to_string(limits.max_rounds) + " reached");
    OracleAnswer ans = query(oracle, single_equation_system(current), report.log, round);
    if (ans.verdict == Verdict::No) {
      report.outcome = FullSet{sorted(found)};
      return report;
    }
    if (ans.verdict == Verdict::Unknown) return abort("oracle answered unknown in round " + std::to_string(round));

    auto pts = first_points(current, limits.max_search_height);
    if (pts.empty())
      return abort("oracle answered yes but no point of height <= " + std::to_string(limits.max_search_height) + " exists");
    std::vector<Rational> xs = lowest_x_class(pts);
    try {
      for (const auto& x : xs) {
        auto ys = fiber_roots(current, x);
        if (!ys) return abort("vertical component at x = " + to_string(x));
        for (const auto& y : *ys) {
          auto orig = to_original(report.excision_chain, {x, y});
          if (!orig) continue;
          if (!c.contains(*orig)) return abort("pulled-back point " + to_string(*orig) + " is off the curve");
          found.insert(*orig);
        }
      }
      SpaceSystem s = build_excision_system(PlaneCurve(current), xs);
      ExcisionRecord rec = find_projection_center(s, limits.center_search_height, limits.check_height);
      if (rec.h.degree() > static_cast<int>(limits.max_degree))
        return abort("eliminant degree " + std::to_string(rec.h.degree()) + " exceeds " + std::to_string(limits.max_degree));
      current = rec.h;
      report.excision_chain.push_back(std::move(rec));
    } catch (const Error& e) {
      return abort(e.what());
    }
  }
}

SolutionReport decide_finiteness_genus1(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits) {
  limits.validate();
  SolutionReport report{c, genus(c), Aborted{}, {}, {}, {}, {}, {}};
  if (report.genus != 1) throw Error(Errc::InvalidArgument, "decide_finiteness_genus1 needs genus 1");
  auto abort = [&](const std::string& why) {
    report.outcome = Aborted{why, {}};
    return report;
  };
  OracleAnswer ans = query(oracle, single_equation_system(c.f()), report.log, 0);
  if (ans.verdict == Verdict::No) {
    report.outcome = FinitenessVerdict{Finiteness::Finite};
    report.notes.push_back("no rational points");
    return report;
  }
  if (ans.verdict == Verdict::Unknown) return abort("oracle answered unknown on the input curve");

  auto pts = first_points(c.f(), limits.max_search_height);
  if (pts.empty())
    return abort("oracle answered yes but no point of height <= " + std::to_string(limits.max_search_height) + " exists");
  const AffinePoint base = pts.front();
  WeierstrassModel model = cubic_to_weierstrass(c, base);
  report.model = model.curve;
  report.torsion = nagell_lutz_torsion(model.curve);
  report.notes.push_back("base point " + to_string(base) + "; working on the model " + model.curve.to_string());

  std::set<Rational> xs;
  for (const auto& t : report.torsion) xs.insert(t.x);
  try {
    SpaceSystem s = build_excision_system(PlaneCurve(model.curve.equation()), {xs.begin(), xs.end()});
    report.excision_chain.push_back(find_projection_center(s, limits.center_search_height, limits.check_height));
  } catch (const Error& e) {
    return abort(e.what());
  }
  const ExcisionRecord& rec = report.excision_chain.back();
  if (rec.h.degree() > static_cast<int>(limits.max_degree))
    return abort("eliminant degree " + std::to_string(rec.h.degree()) + " exceeds " + std::to_string(limits.max_degree));
  ans = query(oracle, single_equation_system(rec.h), report.log, 1);
  if (ans.verdict == Verdict::Unknown) return abort("oracle answered unknown on the torsion-excised curve");
  report.outcome = FinitenessVerdict{ans.verdict == Verdict::Yes ? Finiteness::Infinite : Finiteness::Finite};
  return report;
}

SolutionReport dispatch(const PlaneCurve& c, const ExistenceOracle& oracle, const RunLimits& limits) {
  const unsigned g = genus(c);
  if (g == 0) {
    auto abc = conic_coefficients(c.f());
    if (!abc) throw Error(Errc::UnsupportedShape, "genus-0 input must have the shape a*x^2 + b*y^2 - c with a, b, c > 0");
    Conic q((*abc)[0], (*abc)[1], (*abc)[2]);
    Genus0Result r;
    if (auto base = find_conic_point(q)) {
      r.exists = true;
      r.parametrization = SweepParametrization{q, *base};
    }
    return {c, g, r, {}, {}, {}, {}, {"decided by the Holzer-bounded conic search"}};
  }
  if (g == 1) return decide_finiteness_genus1(c, oracle, limits);
  return solve_all_high_genus(c, oracle, limits);
}

}  // namespace ratpoints
