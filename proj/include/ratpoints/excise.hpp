#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ratpoints/curve.hpp"

namespace ratpoints {

using SpacePoint = std::array<Rational, 3>;  // (x, y, z)

/// {f(x,y) = 0, g(x)·z - 1 = 0} with g = ∏(b_i·x - a_i) for p_i = a_i/b_i.
struct SpaceSystem {
  MultiPoly f;
  MultiPoly g;  // in x only; g = 1 for the identity excision
  std::vector<Rational> excised_x;

  MultiPoly auxiliary() const;  // g·z - 1
  bool contains(const SpacePoint& p) const;
};

/// Rational points of the space curve whose (x, y)-height is <= bound, in
/// the height order of their (x, y) projections.
std::vector<SpacePoint> space_points(const SpaceSystem& s, std::uint64_t bound);

/// (c0 : c1 : c2 : 0) on the plane at infinity w = 0; integers, coprime, first
/// nonzero coordinate positive.
struct ProjectionCenter {
  std::array<Integer, 3> c;

  std::string to_string() const;
  friend bool operator==(const ProjectionCenter&, const ProjectionCenter&) = default;
};

struct EmpiricalCertificate {
  std::uint64_t check_height = 0;
  bool injective_on_checked = false;
  bool no_extra_rationals_up_to_height = false;
  unsigned degree_of_h = 0;
  std::size_t space_points_checked = 0;
  std::size_t h_points_checked = 0;

  bool certified() const { return injective_on_checked && no_extra_rationals_up_to_height; }
};

using Matrix3 = std::array<std::array<Integer, 3>, 3>;
using Matrix4 = std::array<std::array<Integer, 4>, 4>;

struct ExcisionRecord {
  SpaceSystem source;
  ProjectionCenter center;
  Matrix3 forward;   // (u, v, s) = forward · (x, y, z); w is untouched
  Matrix3 backward;  // inverse of forward, also integral (det = 1)
  MultiPoly A;       // f in (u, v, s), held in the x, y, z slots
  MultiPoly B;       // g·z - 1 in (u, v, s)
  MultiPoly h;       // eliminant in (u, v), held in the x, y slots
  EmpiricalCertificate certificate;
  unsigned centers_tried = 0;

  /// The 4x4 change on (x, y, z, w); fixes w = 0 and sends the center to (0:0:1:0).
  Matrix4 coordinate_change() const;
};

struct AtInfinity {
  friend bool operator==(AtInfinity, AtInfinity) { return true; }
};
using Pullback = std::variant<AffinePoint, AtInfinity>;

/// Throws DuplicateExcisionValue, VerticalComponent if f(p_i, y) == 0.
SpaceSystem build_excision_system(const PlaneCurve& c, const std::vector<Rational>& xs);

/// Unimodular change sending the center to (0:0:1); returns {forward, backward}.
std::pair<Matrix3, Matrix3> center_transform(const ProjectionCenter& center);

/// True when the center is rejected as (possibly) lying on the closure.
bool center_on_closure(const SpaceSystem& s, const ProjectionCenter& center);

/// Record with A, B and h filled in; certificate left empty. Throws
/// DegenerateElimination when the resultant vanishes identically.
ExcisionRecord project(const SpaceSystem& s, const ProjectionCenter& center);

/// The eliminant h of project(s, center).
MultiPoly eliminate(const SpaceSystem& s, const ProjectionCenter& center);

/// Fills r.certificate at the given height.
void certify(ExcisionRecord& r, std::uint64_t check_height);

/// Candidate centers of height <= search_height in search order.
std::vector<ProjectionCenter> candidate_centers(std::uint64_t search_height);

/// First candidate that passes the certificate. Throws BudgetExhausted.
ExcisionRecord find_projection_center(const SpaceSystem& s, std::uint64_t search_height,
                                      std::uint64_t check_height);

AffinePoint project_point(const ExcisionRecord& r, const SpacePoint& p);

/// Throws NotOnCurve if h(q) != 0, CertificateViolation on >= 2 rational
/// preimages, NoRationalPreimage when none exists and q is not explained by H.
Pullback pullback_point(const ExcisionRecord& r, const AffinePoint& q);

}  // namespace ratpoints
