#pragma once

#include "coxplane/coxeter.h"
#include "coxplane/geometry.h"
#include "coxplane/parabolic.h"

#include <string>
#include <vector>

namespace coxplane {

/// Two-coloring S = S+ u S- of the diagram with c = c- c+.
struct Bipartition {
  std::vector<int> s_plus;
  std::vector<int> s_minus;
  std::vector<int> side;  // side[s] = +1 or -1
  GroupElement c_plus;
  GroupElement c_minus;
  GroupElement c;

  const GroupElement& c_eps(int eps) const { return eps > 0 ? c_plus : c_minus; }
};

/// Canonical choice puts simple index 0 in S+; `swapped` exchanges the parts.
Bipartition bipartition(const CoxeterSystem& sys, bool swapped = false);

/// Orthonormal frame (u, v) of the Coxeter plane. c rotates (u, v)
/// coordinates counterclockwise by 2 pi / h, and L- lies along u.
struct PlaneBasis {
  Vector u;
  Vector v;
  double l_plus_angle = 0;   // in [0, pi)
  double l_minus_angle = 0;  // in [0, pi)

  Vec2 project(const Vector& x) const { return {u.dot(x), v.dot(x)}; }
};

/// Requires rank >= 2.
PlaneBasis coxeter_plane(const CoxeterSystem& sys, const Bipartition& bip);

/// Location of a projected orbit point. Positions are in units of pi/h, taken
/// mod 2h; vertices of one ring all share the parity of `pos`.
struct PlanarPoint {
  int ring = -1;  // -1 for the origin
  int pos = 0;

  bool at_origin() const { return ring < 0; }
  bool operator==(const PlanarPoint&) const = default;
  auto operator<=>(const PlanarPoint&) const = default;
};

struct Ring {
  double radius = 0;
  int parity = 0;  // 0: vertices on L- ; 1: vertices at odd multiples of pi/h
};

struct ProjectedConfiguration {
  int h = 0;
  std::vector<Ring> rings;               // decreasing radius
  std::vector<PlanarPoint> point_of;     // orbit index -> location
  std::vector<std::vector<int>> ring_members;  // ring -> orbit indices by angular index k
  std::vector<int> origin_labels;        // orbit indices at the origin, sorted
  std::vector<Vec2> projected;           // raw projections, per orbit index
  // Action of c+, c-, c on orbit indices.
  std::vector<int> c_plus_perm;
  std::vector<int> c_minus_perm;
  std::vector<int> c_perm;

  std::size_t ring_count() const { return rings.size(); }
  const std::vector<int>& c_eps_perm(int eps) const { return eps > 0 ? c_plus_perm : c_minus_perm; }
  /// Angular index k in Z_h, advanced by 1 under c.
  int angular_index(int orbit_index) const;
  /// Snapped planar coordinates of an orbit point.
  Vec2 snapped(int orbit_index) const;
};

ProjectedConfiguration project_orbit(const CoxeterSystem& sys, const Bipartition& bip, const PlaneBasis& pb,
                                     const OrbitPoints& o);

struct HyperplaneOrbit {
  std::vector<int> reflections;  // positive root indices
  std::vector<int> simples;      // simple indices among them
};

struct OrbitCheckReport {
  std::vector<HyperplaneOrbit> orbits;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Everything needed to draw diagrams for one system: bipartition, plane,
/// smallest orbit and its projection.
struct PlaneSetup {
  Bipartition bip;
  PlaneBasis basis;
  OrbitPoints orbit;
  ProjectedConfiguration config;
};

PlaneSetup setup_plane(const CoxeterSystem& sys, bool swapped = false);

/// Orbits of the reflecting hyperplanes under <c+, c->, checked against the
/// size/simple-hyperplane dichotomy and its w0 clauses.
OrbitCheckReport hyperplane_orbit_check(const CoxeterSystem& sys, const Bipartition& bip);

}  // namespace coxplane
