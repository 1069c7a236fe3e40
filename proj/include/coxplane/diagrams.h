#pragma once

#include "coxplane/clusters.h"
#include "coxplane/geometry.h"
#include "coxplane/plane.h"

#include <array>
#include <compare>
#include <vector>

namespace coxplane {

/// A ring vertex (ring index and angular position) or the origin.
struct Endpoint {
  int ring = -1;  // -1: origin
  int pos = 0;

  bool at_origin() const { return ring < 0; }
  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

/// A segment between two endpoints; `label` is the orbit index of the point
/// sitting at the origin endpoint, or -1. Canonical form: an origin endpoint
/// comes first, otherwise a < b.
struct LabeledSegment {
  Endpoint a;
  Endpoint b;
  int label = -1;

  bool operator==(const LabeledSegment&) const = default;
  auto operator<=>(const LabeledSegment&) const = default;
};

LabeledSegment make_segment(Endpoint a, Endpoint b, int label);

/// Diagram of the parabolic subgroup {1, t} in the projected configuration
/// (positions in units of pi/h). Sorted, without duplicates.
std::vector<LabeledSegment> reflection_segments(int t, const ProjectedConfiguration& cfg, const OrbitPoints& o);

/// Regular (h+2)-gons built from the h-gons of the projection. Positions are
/// in units of pi/(h+2), taken mod 2(h+2). Axis positions are line positions,
/// taken mod h+2.
struct ExpandedConfiguration {
  int h = 0;
  std::vector<Ring> rings;                  // same radii; parity in the new units
  std::vector<std::vector<int>> old_to_new;  // [ring][old pos] -> new pos, -1 off the ring
  std::vector<std::array<int, 2>> inserted;  // new positions of the two inserted vertices per ring
  std::vector<std::array<int, 2>> distinguished;  // old positions of the subdivided edge midpoints
  std::vector<int> origin_labels;
  std::vector<int> c_plus_perm;
  std::vector<int> c_minus_perm;
  int axis_plus = 0;   // L'+
  int axis_minus = 0;  // L'-

  int modulus() const { return 2 * (h + 2); }
  const std::vector<int>& c_eps_perm(int eps) const { return eps > 0 ? c_plus_perm : c_minus_perm; }
  int axis(int eps) const { return eps > 0 ? axis_plus : axis_minus; }
  /// Rendering angle of a position, in a frame where L'- lies along +x.
  double angle(int pos) const;
  Vec2 coords(Endpoint e) const;
  Endpoint transport(const PlanarPoint& old) const;
  LabeledSegment transport(const LabeledSegment& old) const;
};

/// Inserts a vertex on each distinguished edge and regularizes; axes are left
/// for compute_axes. Throws DistinguishedEdgeCountError unless every ring has
/// exactly two distinguished edges.
ExpandedConfiguration expand_configuration(const ProjectedConfiguration& cfg);

struct RootDiagram {
  int ap = -1;  // almost positive root index
  std::vector<LabeledSegment> segments;

  bool operator==(const RootDiagram& o) const { return segments == o.segments; }
};

RootDiagram negative_simple_diagram(int s, const ProjectedConfiguration& cfg, const OrbitPoints& o,
                                    const ExpandedConfiguration& ex);

/// Reflection p -> 2a - p of the ring vertices; origin endpoints stay put and
/// labels are kept.
LabeledSegment reflect_segment(const LabeledSegment& seg, int axis, const ExpandedConfiguration& ex);

/// Axis positions (mod h+2) whose reflection preserves every given diagram
/// as a set of unlabeled segments.
std::vector<int> symmetry_axes(const std::vector<RootDiagram>& diagrams, const ExpandedConfiguration& ex);

/// Finds L'+ (preserving the -alpha_i, s_i in S-) and L'- (preserving the
/// -alpha_i, s_i in S+), requiring tau+ tau- to rotate counterclockwise by
/// one step and each axis to pass through the vertices inserted on the edges
/// perpendicular to the matching old line. Throws AxisNotFound or AxisNotUnique.
void compute_axes(ExpandedConfiguration& ex, const Bipartition& bip, const std::vector<RootDiagram>& negative_simples);

/// Gray zone boundaries in quarter units (pi / (2(h+2))), mod 2(h+2):
/// directions perpendicular to L'+ and L'-.
struct GrayZone {
  int perp_plus = 0;
  int perp_minus = 0;
  int quarter_modulus = 0;  // 4(h+2), a full turn

  /// Side of the gray zone a direction lies on: 1 or 2, or 0 strictly inside
  /// the zone. Boundary directions belong to the adjacent side.
  int side(int quarter_dir) const;
  /// Width of each wedge in quarter units.
  int width() const;
};

GrayZone gray_zone(const ExpandedConfiguration& ex);

/// Direction of a ring endpoint from the origin, in quarter units.
inline int quarter_direction(const Endpoint& e, const ExpandedConfiguration& ex) {
  return (2 * e.pos) % (2 * ex.modulus());
}

RootDiagram tau_on_diagram(int eps, const RootDiagram& diag, const ExpandedConfiguration& ex);

struct DiagramSet {
  ExpandedConfiguration expanded;
  std::vector<RootDiagram> by_ap;
};

/// Diagrams for all almost positive roots, propagated from the negative
/// simple roots along the tau action. Throws InconsistentPropagation when a
/// root is reached with two different diagrams.
DiagramSet all_root_diagrams(const CoxeterSystem& sys, const PlaneSetup& setup, const CompatibilityOracle& oracle);

/// Checks tau^2 = id and (tau+ tau-)^(h+2) = id on every diagram, injectivity
/// and the absence of origin-origin segments. Returns failure messages.
std::vector<std::string> diagram_invariant_failures(const DiagramSet& ds, const CompatibilityOracle& oracle);

}  // namespace coxplane
