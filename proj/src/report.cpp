#include "ratpoints/report.hpp"

#include <sstream>

namespace ratpoints {

namespace {

std::string join_points(const std::vector<AffinePoint>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? " " : "") + to_string(pts[i]);
  return out.empty() ? "(none)" : out;
}

std::string witness_string(const Solution& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + to_string(w[i]);
  return out + ")";
}

std::vector<AffinePoint> outcome_points(const Outcome& o) {
  if (auto* f = std::get_if<FullSet>(&o)) return f->points;
  if (auto* a = std::get_if<Aborted>(&o)) return a->partial_points;
  return {};
}

}  // namespace

std::string outcome_kind(const Outcome& o) {
  switch (o.index()) {
    case 0: return "full_set";
    case 1: return "finiteness";
    case 2: return "genus0";
    default: return "aborted";
  }
}

Json to_json(const std::vector<AffinePoint>& points) {
  std::vector<AffinePoint> pts = points;
  sort_by_height(pts);
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

Json to_json(const ExcisionRecord& r) {
  Json xs = Json::array();
  for (const auto& x : r.source.excised_x) xs.push_back(to_string(x));
  const auto& c = r.certificate;
  return Json{
      {"center", r.center.to_string()},
      {"excised_x", xs},
      {"g", r.source.g.to_string()},
      {"h", r.h.to_string()},
      {"degree_of_h", r.h.degree()},
      {"centers_tried", r.centers_tried},
      {"certificate",
       {{"check_height", c.check_height},
        {"injective_on_checked", c.injective_on_checked},
        {"no_extra_rationals_up_to_height", c.no_extra_rationals_up_to_height},
        {"space_points_checked", c.space_points_checked},
        {"h_points_checked", c.h_points_checked}}},
  };
}

Json to_json(const QueryLog& log) {
  Json out = Json::array();
  for (const auto& q : log) {
    out.push_back({{"round", q.round},
                   {"key", q.key},
                   {"verdict", to_string(q.verdict)},
                   {"provenance", q.provenance},
                   {"witness", q.witness ? Json(witness_string(*q.witness)) : Json()}});
  }
  return out;
}

Json to_json(const SolutionReport& r) {
  const Trichotomy t = classify(r.genus);
  Json possibilities = Json::array();
  for (auto p : t.possibilities) possibilities.push_back(to_string(p));

  Json outcome{{"kind", outcome_kind(r.outcome)}};
  if (auto* f = std::get_if<FinitenessVerdict>(&r.outcome)) outcome["verdict"] = to_string(f->verdict);
  if (auto* g = std::get_if<Genus0Result>(&r.outcome)) {
    outcome["exists"] = g->exists;
    if (g->parametrization) {
      const auto& q = g->parametrization->conic;
      outcome["conic"] = {to_string(q.a), to_string(q.b), to_string(q.c)};
      outcome["base_point"] = to_string(g->parametrization->base);
    }
  }
  if (auto* a = std::get_if<Aborted>(&r.outcome)) outcome["reason"] = a->reason;

  Json chain = Json::array();
  for (const auto& e : r.excision_chain) chain.push_back(to_json(e));
  Json torsion = Json::array();
  for (const auto& p : r.torsion) torsion.push_back(p.to_string());

  Json out{
      {"input", {{"equation", r.original_curve.f().to_string()},
                 {"genus_override", r.original_curve.genus_override() ? Json(*r.original_curve.genus_override()) : Json()}}},
      {"genus", r.genus},
      {"trichotomy", t.description()},
      {"possibilities", possibilities},
      {"outcome", outcome},
      {"points", to_json(outcome_points(r.outcome))},
      {"excision_chain", chain},
      {"query_log", to_json(r.log)},
      {"notes", r.notes},
  };
  if (r.model) {
    out["model"] = {{"A", to_string(r.model->A)}, {"B", to_string(r.model->B)}};
    out["torsion"] = torsion;
  }
  return out;
}

std::string render_text(const ExcisionRecord& r) {
  std::ostringstream os;
  const auto& c = r.certificate;
  os << "center " << r.center.to_string() << " (" << r.centers_tried << " tried), excised x:";
  for (const auto& x : r.source.excised_x) os << " " << to_string(x);
  os << "\n  h = " << r.h.to_string() << "\n  degree " << r.h.degree() << ", certificate at height " << c.check_height
     << ": injective=" << (c.injective_on_checked ? "yes" : "no")
     << " no-extra-rationals=" << (c.no_extra_rationals_up_to_height ? "yes" : "no") << " (" << c.space_points_checked
     << " space points, " << c.h_points_checked << " h points)\n";
  return os.str();
}

std::string render_text(const SolutionReport& r) {
  std::ostringstream os;
  os << "curve: " << r.original_curve.f().to_string() << " = 0\n";
  os << "genus: " << r.genus << " (" << classify(r.genus).description() << ")\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (r.model) {
    os << "model: " << r.model->to_string() << "\ntorsion:";
    for (const auto& p : r.torsion) os << " " << p.to_string();
    os << "\n";
  }
  for (std::size_t i = 0; i < r.excision_chain.size(); ++i) os << "excision " << i << ": " << render_text(r.excision_chain[i]);
  for (const auto& q : r.log) {
    os << "query " << q.round << ": " << to_string(q.verdict) << " [" << q.provenance << "] ";
    if (q.key.size() <= 72) os << q.key;
    else os << q.key.substr(0, 60) << "... (" << q.key.size() << " chars)";
    os << "\n";
  }
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, FullSet>) {
          os << "outcome: full set, " << o.points.size() << " point(s): " << join_points(o.points) << "\n";
        } else if constexpr (std::is_same_v<T, FinitenessVerdict>) {
          os << "outcome: " << to_string(o.verdict) << "\n";
        } else if constexpr (std::is_same_v<T, Genus0Result>) {
          os << "outcome: " << (o.exists ? "infinitely many points" : "no rational points");
          if (o.parametrization) os << ", sweeping lines from " << to_string(o.parametrization->base);
          os << "\n";
        } else {
          os << "outcome: aborted (" << o.reason << "); partial points: " << join_points(o.partial_points) << "\n";
        }
      },
      r.outcome);
  return os.str();
}

}  // namespace ratpoints
