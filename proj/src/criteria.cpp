#include "coxplane/criteria.h"

#include "coxplane/errors.h"
#include "coxplane/parabolic.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace coxplane {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool same_point(const Endpoint& a, const Endpoint& b) {
  return a.at_origin() ? b.at_origin() : a == b;
}

bool same_unlabeled(const LabeledSegment& s, const LabeledSegment& t) {
  return (same_point(s.a, t.a) && same_point(s.b, t.b)) || (same_point(s.a, t.b) && same_point(s.b, t.a));
}

bool shares_endpoint(const LabeledSegment& s, const LabeledSegment& t) {
  return same_point(s.a, t.a) || same_point(s.a, t.b) || same_point(s.b, t.a) || same_point(s.b, t.b);
}

// Crossing is the only relation that counts against cl1/cl2 besides
// collinear overlap; cl1 also rejects coinciding segments.
bool crossing_free(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx, bool allow_coincide) {
  for (const auto& s : c1.segments)
    for (const auto& t : c2.segments) {
      const SegmentRelation r = segment_relation(s, t, ctx.ex(), ctx.tol);
      if (r == SegmentRelation::Cross || r == SegmentRelation::OverlapCollinear) return false;
      if (r == SegmentRelation::Coincide && !allow_coincide) return false;
    }
  return true;
}

bool same_origin_point(const LabeledSegment& s, const LabeledSegment& t) {
  return s.a.at_origin() && t.a.at_origin() && s.label == t.label;
}

struct ActivePair {
  std::vector<const LabeledSegment*> first;
  std::vector<const LabeledSegment*> second;
};

ActivePair active_split(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  std::vector<LabeledSegment> all = c1.segments;
  all.insert(all.end(), c2.segments.begin(), c2.segments.end());
  const auto active = active_segments(all, ctx.rings, ctx.ex(), ctx.sharing, ctx.tol);
  ActivePair out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!active[i]) continue;
    if (i < c1.segments.size())
      out.first.push_back(&c1.segments[i]);
    else
      out.second.push_back(&c2.segments[i - c1.segments.size()]);
  }
  return out;
}

bool annulus_rule(const ActivePair& act, const CompatContext& ctx) {
  for (const LabeledSegment* s : act.first)
    for (const LabeledSegment* t : act.second) {
      const SegmentContact c = segment_contact(*s, *t, ctx.ex(), ctx.tol);
      if (c.kind != SegmentRelation::Cross) continue;
      const int ring = std::min(ctx.rings.outer_ring(*s), ctx.rings.outer_ring(*t));
      const double outer = ctx.rings.radii[static_cast<std::size_t>(ring)];
      const double inner = ctx.rings.inner_radius(ring);
      const double r = c.point.norm();
      if (std::abs(r - outer) <= ctx.tol || (inner > 0 && std::abs(r - inner) <= ctx.tol))
        throw InternalError("segments cross on a ring");
      if (r < outer && r > inner) return false;
      // Inside the innermost ring the annulus is the whole disk.
      if (inner == 0 && r <= ctx.tol) return false;
    }
  return true;
}

}  // namespace

const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::Disjoint: return "Disjoint";
    case SegmentRelation::TouchAtEndpoint: return "TouchAtEndpoint";
    case SegmentRelation::Cross: return "Cross";
    case SegmentRelation::Coincide: return "Coincide";
    case SegmentRelation::OverlapCollinear: return "OverlapCollinear";
  }
  return "?";
}

SegmentContact segment_contact(const LabeledSegment& s, const LabeledSegment& t, const ExpandedConfiguration& ex,
                               double tol) {
  SegmentContact out;
  if (same_unlabeled(s, t)) {
    out.kind = SegmentRelation::Coincide;
    return out;
  }
  const Vec2 a0 = ex.coords(s.a), a1 = ex.coords(s.b);
  const Vec2 b0 = ex.coords(t.a), b1 = ex.coords(t.b);
  const auto pts = segment_intersection(a0, a1, b0, b1, tol);
  if (pts.empty()) return out;
  if (pts.size() == 2) {
    out.kind = SegmentRelation::OverlapCollinear;
    return out;
  }
  const Vec2 p = pts.front();
  const bool end_s = dist(p, a0) <= tol || dist(p, a1) <= tol;
  const bool end_t = dist(p, b0) <= tol || dist(p, b1) <= tol;
  if (end_s || end_t) {
    out.kind = SegmentRelation::TouchAtEndpoint;
    out.t_junction = end_s != end_t;
    return out;
  }
  out.kind = SegmentRelation::Cross;
  out.point = p;
  return out;
}

RingContext ring_context(const ExpandedConfiguration& ex) {
  RingContext ctx;
  for (const Ring& r : ex.rings) ctx.radii.push_back(r.radius);
  for (std::size_t i = 1; i < ctx.radii.size(); ++i)
    if (!(ctx.radii[i] < ctx.radii[i - 1])) throw InternalError("ring radii are not strictly decreasing");
  return ctx;
}

const char* to_string(SharingRule r) { return r == SharingRule::Endpoint ? "endpoint" : "any-intersection"; }

std::vector<bool> active_segments(const std::vector<LabeledSegment>& segs, const RingContext& ctx,
                                  const ExpandedConfiguration& ex, SharingRule rule, double tol) {
  const std::size_t n = segs.size();
  std::vector<bool> active(n, false);
  std::vector<int> outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    outer[i] = ctx.outer_ring(segs[i]);
    active[i] = outer[i] == ctx.outermost();
  }
  auto shares = [&](const LabeledSegment& s, const LabeledSegment& t) {
    if (rule == SharingRule::Endpoint) return shares_endpoint(s, t);
    return segment_relation(s, t, ex, tol) != SegmentRelation::Disjoint;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j] && outer[j] == outer[i] - 1 && shares(segs[i], segs[j])) {
          active[i] = true;
          changed = true;
          break;
        }
    }
  }
  return active;
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::CL1: return "cl1";
    case Criterion::CL2: return "cl2";
    case Criterion::CL3: return "cl3";
    case Criterion::CL4: return "cl4";
    case Criterion::CL5: return "cl5";
    case Criterion::NCA: return "ncA";
    case Criterion::NCD: return "ncD";
  }
  return "?";
}

Criterion parse_criterion(std::string_view s) {
  std::string low;
  for (char ch : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (Criterion c : {Criterion::CL1, Criterion::CL2, Criterion::CL3, Criterion::CL4, Criterion::CL5, Criterion::NCA,
                      Criterion::NCD}) {
    std::string name = to_string(c);
    for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == low) return c;
  }
  throw UsageError("unknown criterion '" + std::string(s) + "' (expected cl1..cl5, ncA, ncD)");
}

bool is_compatibility_criterion(Criterion c) { return c != Criterion::NCA && c != Criterion::NCD; }

std::optional<bool> claimed_exactness(const CoxeterType& type, Criterion c) {
  const Family f = type.family;
  const bool abi = f == Family::A || f == Family::B || f == Family::I;
  const bool h3 = f == Family::H && type.rank == 3;
  const bool h4 = f == Family::H && type.rank == 4;
  const bool f4 = f == Family::F;
  const bool e6 = f == Family::E && type.rank == 6;
  switch (c) {
    case Criterion::CL1:
      if (abi) return true;
      break;
    case Criterion::CL2:
      if (abi || h3) return true;
      break;
    case Criterion::CL3:
      if (abi || h3 || f == Family::D) return true;
      break;
    case Criterion::CL4:
      if (f4 || h4 || e6) return true;
      break;
    case Criterion::CL5:
      if (e6) return true;
      if (f == Family::E) return false;
      break;
    case Criterion::NCA:
      if (abi) return true;
      if (f4) return false;
      break;
    case Criterion::NCD:
      if (abi || h3 || f == Family::D) return true;
      if (f4) return false;
      break;
  }
  return std::nullopt;
}

CompatContext::CompatContext(const CoxeterSystem& s, bool swapped, SharingRule rule)
    : sys(&s),
      setup(setup_plane(s, swapped)),
      oracle(s, setup.bip),
      diagrams(all_root_diagrams(s, setup, oracle)),
      rings(ring_context(diagrams.expanded)),
      gray(gray_zone(diagrams.expanded)),
      sharing(rule),
      tol(1e3 * s.eps) {}

bool origin_segments_collinear(const LabeledSegment& s, const LabeledSegment& t, const ExpandedConfiguration& ex) {
  return mod(s.b.pos - t.b.pos, ex.h + 2) == 0;
}

bool union_crosses_gray_zone(const LabeledSegment& s, const LabeledSegment& t, const CompatContext& ctx) {
  const int a = ctx.gray.side(quarter_direction(s.b, ctx.ex()));
  const int b = ctx.gray.side(quarter_direction(t.b, ctx.ex()));
  return a != 0 && b != 0 && a != b;
}

bool cl1(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  return crossing_free(c1, c2, ctx, false);
}

bool cl2(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  return crossing_free(c1, c2, ctx, true);
}

bool cl3(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  if (!cl2(c1, c2, ctx)) return false;
  for (const auto& s : c1.segments)
    for (const auto& t : c2.segments)
      if (same_origin_point(s, t) && !origin_segments_collinear(s, t, ctx.ex()) && union_crosses_gray_zone(s, t, ctx))
        return false;
  return true;
}

bool cl4(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  return annulus_rule(active_split(c1, c2, ctx), ctx);
}

bool cl5(const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  const ActivePair act = active_split(c1, c2, ctx);
  if (!annulus_rule(act, ctx)) return false;
  const int inner = ctx.rings.innermost();
  for (const LabeledSegment* s : act.first)
    for (const LabeledSegment* t : act.second)
      if (same_origin_point(*s, *t) && s->b.ring == inner && t->b.ring == inner &&
          !origin_segments_collinear(*s, *t, ctx.ex()) && union_crosses_gray_zone(*s, *t, ctx))
        return false;
  return true;
}

bool compatible_by(Criterion c, const RootDiagram& c1, const RootDiagram& c2, const CompatContext& ctx) {
  switch (c) {
    case Criterion::CL1: return cl1(c1, c2, ctx);
    case Criterion::CL2: return cl2(c1, c2, ctx);
    case Criterion::CL3: return cl3(c1, c2, ctx);
    case Criterion::CL4: return cl4(c1, c2, ctx);
    case Criterion::CL5: return cl5(c1, c2, ctx);
    default: break;
  }
  throw UsageError(std::string(to_string(c)) + " is not a compatibility criterion");
}

ExactnessReport verify_compat(const CompatContext& ctx, Criterion c) {
  ExactnessReport rep;
  rep.type_label = ctx.sys->type.label();
  rep.criterion = to_string(c);
  if (c == Criterion::CL4 || c == Criterion::CL5)
    rep.notes.push_back(std::string("active segments propagate by ") + to_string(ctx.sharing) + " sharing");
  const int n = ctx.oracle.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ++rep.total;
      const bool geometric = compatible_by(c, ctx.diagram(a), ctx.diagram(b), ctx);
      const bool algebraic = ctx.oracle.compatible(a, b);
      if (geometric == algebraic) continue;
      Mismatch m;
      m.first = root_name(*ctx.sys, ctx.oracle.root(a));
      m.second = root_name(*ctx.sys, ctx.oracle.root(b));
      m.ids = {a, b};
      m.geometric = geometric;
      m.algebraic = algebraic;
      rep.mismatches.push_back(std::move(m));
    }
  return rep;
}

ExactnessReport verify_nc_criterion(const CoxeterSystem& sys, const PlaneSetup& setup, Criterion c,
                                    std::size_t budget) {
  if (is_compatibility_criterion(c)) throw UsageError(std::string(to_string(c)) + " is not a noncrossing criterion");
  const auto parabolics = enumerate_parabolics(sys, budget);
  const NCInterval interval = enumerate_interval(sys, setup.bip);
  return verify_nc(sys, setup, c == Criterion::NCA ? NCCriterion::A : NCCriterion::D, parabolics, interval);
}

bool has_pair(const ExactnessReport& rep, int a, int b) {
  return std::any_of(rep.mismatches.begin(), rep.mismatches.end(), [&](const Mismatch& m) {
    return m.ids.size() == 2 && ((m.ids[0] == a && m.ids[1] == b) || (m.ids[0] == b && m.ids[1] == a));
  });
}

}  // namespace coxplane
