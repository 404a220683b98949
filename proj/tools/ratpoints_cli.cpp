// ratpoints: command-line front end.
//
// Exit status: 0 definite result, 2 aborted or unknown, 1 error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ratpoints/error.hpp"
#include "ratpoints/parse.hpp"
#include "ratpoints/report.hpp"

using namespace ratpoints;

namespace {

struct Config {
  std::string curve;
  std::string oracle;
  std::optional<unsigned> genus;
  std::uint64_t height_bound = 0;  // 0: command default
  RunLimits limits;
  std::vector<std::string> at;
  std::string format = "text";
};

bool structured(const Config& cfg) { return cfg.format == "structured"; }

void emit(const Config& cfg, const Json& doc, const std::string& text) {
  if (structured(cfg)) std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

Json input_echo(const Config& cfg, const PlaneCurve& c) {
  return {{"equation", c.f().to_string()}, {"raw", cfg.curve}, {"genus_override", cfg.genus ? Json(*cfg.genus) : Json()}};
}

int cmd_classify(const Config& cfg) {
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  const unsigned g = genus(c);
  const Trichotomy t = classify(g);
  Json poss = Json::array();
  for (auto p : t.possibilities) poss.push_back(to_string(p));
  emit(cfg, {{"command", "classify"}, {"input", input_echo(cfg, c)}, {"degree", c.degree()}, {"genus", g},
             {"trichotomy", t.description()}, {"possibilities", poss}},
       "curve: " + c.f().to_string() + " = 0\ndegree: " + std::to_string(c.degree()) + "\ngenus: " + std::to_string(g) +
           "\npossibilities: " + t.description() + "\n");
  return 0;
}

std::string point_lines(const std::vector<AffinePoint>& pts) {
  std::string out;
  for (const auto& p : pts) out += "  " + to_string(p) + "\n";
  return out;
}

int cmd_points(const Config& cfg) {
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  const std::uint64_t B = cfg.height_bound ? cfg.height_bound : 10;
  auto pts = enumerate_points(c, B);
  emit(cfg, {{"command", "points"}, {"input", input_echo(cfg, c)}, {"height_bound", B}, {"count", pts.size()}, {"points", to_json(pts)}},
       std::to_string(pts.size()) + " point(s) of height <= " + std::to_string(B) + " on " + c.f().to_string() + " = 0\n" +
           point_lines(pts));
  return 0;
}

int cmd_conic(const Config& cfg) {
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  auto abc = conic_coefficients(c.f());
  if (!abc) throw Error(Errc::UnsupportedShape, "expected a*x^2 + b*y^2 - c with a, b, c > 0");
  Conic q((*abc)[0], (*abc)[1], (*abc)[2]);
  const std::uint64_t B = cfg.height_bound ? cfg.height_bound : 10;
  auto base = find_conic_point(q);
  Json doc{{"command", "conic"}, {"input", input_echo(cfg, c)}, {"conic", {to_string(q.a), to_string(q.b), to_string(q.c)}},
           {"solvable", base.has_value()}, {"height_bound", B}};
  std::string text = "conic " + q.equation().to_string() + " = 0: ";
  if (!base) {
    doc["points"] = Json::array();
    emit(cfg, doc, text + "no rational points\n");
    return 0;
  }
  auto pts = sweep_enumerate(q, *base, B);
  doc["base_point"] = to_string(*base);
  doc["slope_budget"] = to_string(slope_budget(*base, B));
  doc["points"] = to_json(pts);
  emit(cfg, doc, text + "base point " + to_string(*base) + "\n" + std::to_string(pts.size()) + " point(s) of height <= " +
                     std::to_string(B) + " by sweeping lines:\n" + point_lines(pts));
  return 0;
}

int cmd_torsion(const Config& cfg) {
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  std::optional<AffinePoint> base;
  for (std::uint64_t b = 1; b <= cfg.limits.max_search_height && !base; ++b) {
    auto pts = enumerate_points(c, b);
    if (!pts.empty()) base = pts.front();
  }
  if (!base) throw Error(Errc::InvalidArgument, "no rational point of height <= " + std::to_string(cfg.limits.max_search_height) + " to build a model from");
  WeierstrassModel m = cubic_to_weierstrass(c, *base);
  auto tors = nagell_lutz_torsion(m.curve);
  Json t = Json::array();
  std::string text = "base point " + to_string(*base) + "\nmodel: " + m.curve.to_string() + "\ntorsion (" +
                     std::to_string(tors.size() + 1) + " points with O):";
  for (const auto& p : tors) {
    t.push_back({{"point", p.to_string()}, {"order", *order_of_point(m.curve, p)}});
    text += " " + p.to_string();
  }
  emit(cfg, {{"command", "torsion"}, {"input", input_echo(cfg, c)}, {"base_point", to_string(*base)},
             {"model", {{"A", to_string(m.curve.A)}, {"B", to_string(m.curve.B)}}}, {"passthrough", m.passthrough},
             {"forward", {m.maps.forward.x.to_string(), m.maps.forward.y.to_string()}},
             {"torsion", t}},
       text + "\n");
  return 0;
}

int cmd_excise(const Config& cfg) {
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  std::vector<Rational> xs;
  for (const auto& s : cfg.at) xs.push_back(parse_rational(s));
  SpaceSystem s = build_excision_system(c, xs);
  ExcisionRecord r = find_projection_center(s, cfg.limits.center_search_height, cfg.limits.check_height);
  emit(cfg, {{"command", "excise"}, {"input", input_echo(cfg, c)}, {"record", to_json(r)}}, render_text(r));
  return 0;
}

int cmd_run(const Config& cfg, bool finiteness) {
  if (cfg.oracle.empty()) throw Error(Errc::InvalidArgument, "--oracle is required");
  PlaneCurve c(parse_polynomial(cfg.curve), cfg.genus);
  auto oracle = make_oracle(cfg.oracle);
  RunLimits limits = cfg.limits;
  if (cfg.height_bound) limits.max_search_height = cfg.height_bound;
  SolutionReport r = finiteness ? decide_finiteness_genus1(c, *oracle, limits) : dispatch(c, *oracle, limits);
  Json doc = to_json(r);
  doc["command"] = finiteness ? "decide-finiteness" : "solve";
  doc["oracle"] = oracle->describe();
  doc["input"]["raw"] = cfg.curve;
  emit(cfg, doc, render_text(r));
  return r.definite() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on plane curves, relative to an existence oracle"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("curve", cfg.curve, "polynomial f(x, y), e.g. 'x^4+y^4-17'")->required();
    sub->add_option("--genus", cfg.genus, "genus override for singular models");
    sub->add_option("--format", cfg.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--height-bound", cfg.height_bound, "height bound for enumeration / point search");
    sub->add_option("--max-search-height", cfg.limits.max_search_height, "point search height for model building");
    sub->add_option("--center-height", cfg.limits.center_search_height, "projection center search height");
    sub->add_option("--check-height", cfg.limits.check_height, "certificate height");
  };
  auto with_oracle = [&](CLI::App* sub) {
    sub->add_option("--oracle", cfg.oracle, "search:<B> | table:<PATH> | conic");
    sub->add_option("--max-rounds", cfg.limits.max_rounds, "oracle rounds");
    sub->add_option("--max-degree", cfg.limits.max_degree, "eliminant degree cap");
  };

  auto* classify_cmd = app.add_subcommand("classify", "genus and possible shapes of the solution set");
  auto* points_cmd = app.add_subcommand("points", "rational points up to a height bound");
  auto* conic_cmd = app.add_subcommand("conic", "decide a*x^2+b*y^2=c and sweep out its points");
  auto* torsion_cmd = app.add_subcommand("torsion", "Weierstrass model and rational torsion of a cubic");
  auto* excise_cmd = app.add_subcommand("excise", "remove x-fibers and project to a new plane curve");
  auto* solve_cmd = app.add_subcommand("solve", "oracle-relative solution by genus");
  auto* finite_cmd = app.add_subcommand("decide-finiteness", "genus-1 finiteness relative to the oracle");
  for (auto* sub : {classify_cmd, points_cmd, conic_cmd, torsion_cmd, excise_cmd, solve_cmd, finite_cmd}) common(sub);
  for (auto* sub : {solve_cmd, finite_cmd}) with_oracle(sub);
  excise_cmd->add_option("--at", cfg.at, "x-values to excise (comma separated)")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) return cmd_classify(cfg);
    if (*points_cmd) return cmd_points(cfg);
    if (*conic_cmd) return cmd_conic(cfg);
    if (*torsion_cmd) return cmd_torsion(cfg);
    if (*excise_cmd) return cmd_excise(cfg);
    if (*solve_cmd) return cmd_run(cfg, false);
    if (*finite_cmd) return cmd_run(cfg, true);
  } catch (const Error& e) {
    if (structured(cfg)) std::cout << Json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
