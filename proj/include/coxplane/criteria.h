#pragma once

#include "coxplane/clusters.h"
#include "coxplane/diagrams.h"
#include "coxplane/noncrossing.h"
#include "coxplane/report.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxplane {

enum class SegmentRelation { Disjoint, TouchAtEndpoint, Cross, Coincide, OverlapCollinear };

const char* to_string(SegmentRelation r);

/// Relation of two segments plus, for Cross, the crossing point.
struct SegmentContact {
  SegmentRelation kind = SegmentRelation::Disjoint;
  Vec2 point{};
  bool t_junction = false;  // an endpoint of one lies inside the other
};

/// Origin endpoints share geometry whatever their labels. A vertex of one
/// segment lying inside the other (T-junction) counts as TouchAtEndpoint.
SegmentContact segment_contact(const LabeledSegment& s, const LabeledSegment& t, const ExpandedConfiguration& ex,
                               double tol);

inline SegmentRelation segment_relation(const LabeledSegment& s, const LabeledSegment& t,
                                        const ExpandedConfiguration& ex, double tol) {
  return segment_contact(s, t, ex, tol).kind;
}

/// Rings of the expanded configuration, indexed outermost first. The origin
/// is treated as one extra ring of radius 0 at index ring_count().
struct RingContext {
  std::vector<double> radii;  // strictly decreasing

  int ring_count() const { return static_cast<int>(radii.size()); }
  int outermost() const { return 0; }
  int innermost() const { return ring_count() - 1; }
  int level(const Endpoint& e) const { return e.at_origin() ? ring_count() : e.ring; }
  /// The larger of the two rings holding the endpoints.
  int outer_ring(const LabeledSegment& s) const { return std::min(level(s.a), level(s.b)); }
  /// Radius of the next smaller ring, 0 inside the innermost one.
  double inner_radius(int ring) const { return ring + 1 < ring_count() ? radii[static_cast<std::size_t>(ring + 1)] : 0.0; }
};

RingContext ring_context(const ExpandedConfiguration& ex);

/// How segments "share a point" when propagating activity inward.
enum class SharingRule { Endpoint, AnyIntersection };

const char* to_string(SharingRule r);

/// Least fixpoint: a segment is active if its outer ring is the outermost one,
/// or if it shares a point with an active segment whose outer ring is the next
/// larger ring.
std::vector<bool> active_segments(const std::vector<LabeledSegment>& segs, const RingContext& ctx,
                                  const ExpandedConfiguration& ex, SharingRule rule, double tol);

enum class Criterion { CL1, CL2, CL3, CL4, CL5, NCA, NCD };

const char* to_string(Criterion c);
/// Accepts cl1..cl5, ncA, ncD (case-insensitive); throws UsageError otherwise.
Criterion parse_criterion(std::string_view s);
bool is_compatibility_criterion(Criterion c);

/// Exactness the literature claims for a type, if it claims anything.
std::optional<bool> claimed_exactness(const CoxeterType& type, Criterion c);

/// Everything the compatibility criteria look at for one system. Keeps a
/// pointer to `sys`, which must outlive it.
struct CompatContext {
  CompatContext(const CoxeterSystem& sys, bool swapped = false, SharingRule sharing = SharingRule::Endpoint);

  const CoxeterSystem* sys;
  PlaneSetup setup;
  CompatibilityOracle oracle;
  DiagramSet diagrams;
  RingContext rings;
  GrayZone gray;
  SharingRule sharing;
  double tol;

  const ExpandedConfiguration& ex() const { return diagrams.expanded; }
  const RootDiagram& diagram(int ap) const { return diagrams.by_ap[static_cast<std::size_t>(ap)]; }
};

/// Two segments through the origin lie on a common line.
bool origin_segments_collinear(const LabeledSegment& s, const LabeledSegment& t, const ExpandedConfiguration& ex);
/// The union of two segments sharing an origin point crosses the gray zone.
bool union_crosses_gray_zone(const LabeledSegment& s, const LabeledSegment& t, const CompatContext& ctx);

bool cl1(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);
bool cl2(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);
bool cl3(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);
bool cl4(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);
bool cl5(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);

bool compatible_by(Criterion c, const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx);

/// Every unordered pair of distinct almost positive roots, criterion against
/// the oracle.
ExactnessReport verify_compat(const CompatContext& ctx, Criterion c);

/// Enumerates parabolics (throws BudgetExceeded past `budget`) and the
/// interval, then runs the noncrossing criterion on every parabolic.
ExactnessReport verify_nc_criterion(const CoxeterSystem& sys, const PlaneSetup& setup, Criterion c,
                                    std::size_t budget);

/// Whether the report lists the pair (a, b) of almost positive roots, in either order.
bool has_pair(const ExactnessReport& rep, int a, int b);

}  // namespace coxplane
