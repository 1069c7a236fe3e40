#include "coxplane/diagrams.h"

#include "coxplane/errors.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <set>

namespace coxplane {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void normalize(std::vector<LabeledSegment>& segs) {
  std::sort(segs.begin(), segs.end());
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
}

std::vector<LabeledSegment> unlabeled(const std::vector<LabeledSegment>& segs) {
  std::vector<LabeledSegment> out;
  for (const auto& s : segs) out.push_back(make_segment(s.a, s.b, -1));
  normalize(out);
  return out;
}

}  // namespace

LabeledSegment make_segment(Endpoint a, Endpoint b, int label) {
  if (b.at_origin() || (!a.at_origin() && b < a)) std::swap(a, b);
  return LabeledSegment{a, b, label};
}

std::vector<LabeledSegment> reflection_segments(int t, const ProjectedConfiguration& cfg, const OrbitPoints& o) {
  std::vector<LabeledSegment> segs;
  const auto& row = o.reflection_action[static_cast<std::size_t>(t)];
  Vec2 dir{};
  bool have_dir = false;
  for (int x = 0; x < static_cast<int>(row.size()); ++x) {
    const int y = row[static_cast<std::size_t>(x)];
    if (y <= x) continue;  // fixed points, and each pair once
    const PlanarPoint px = cfg.point_of[static_cast<std::size_t>(x)];
    const PlanarPoint py = cfg.point_of[static_cast<std::size_t>(y)];
    if (px.at_origin() && py.at_origin()) throw DegenerateSegment("reflection-related points both project to the origin");
    const int label = px.at_origin() ? x : py.at_origin() ? y : -1;
    segs.push_back(make_segment({px.ring, px.pos}, {py.ring, py.pos}, label));

    Vec2 d = cfg.snapped(y) - cfg.snapped(x);
    d = (1 / d.norm()) * d;
    if (!have_dir) {
      dir = d;
      have_dir = true;
    } else if (std::abs(cross(dir, d)) > 1e-6) {
      throw InternalError("segments of one reflection are not parallel");
    }
  }
  normalize(segs);
  return segs;
}

double ExpandedConfiguration::angle(int pos) const {
  return (pos - axis_minus) * std::numbers::pi / (h + 2);
}

Vec2 ExpandedConfiguration::coords(Endpoint e) const {
  if (e.at_origin()) return {0, 0};
  const double r = rings[static_cast<std::size_t>(e.ring)].radius;
  const double a = angle(e.pos);
  return {r * std::cos(a), r * std::sin(a)};
}

Endpoint ExpandedConfiguration::transport(const PlanarPoint& old) const {
  if (old.at_origin()) return {};
  const int p = old_to_new[static_cast<std::size_t>(old.ring)][static_cast<std::size_t>(old.pos)];
  if (p < 0) throw InternalError("transport of a point that is not a ring vertex");
  return {old.ring, p};
}

LabeledSegment ExpandedConfiguration::transport(const LabeledSegment& old) const {
  auto tr = [&](const Endpoint& e) { return transport(PlanarPoint{e.ring, e.pos}); };
  return make_segment(tr(old.a), tr(old.b), old.label);
}

ExpandedConfiguration expand_configuration(const ProjectedConfiguration& cfg) {
  ExpandedConfiguration ex;
  const int h = cfg.h;
  ex.h = h;
  ex.origin_labels = cfg.origin_labels;
  ex.c_plus_perm = cfg.c_plus_perm;
  ex.c_minus_perm = cfg.c_minus_perm;
  ex.axis_plus = 0;
  ex.axis_minus = h + 1;

  // Axis positions of the h-gons (units pi/h) and where they go (units pi/(h+2)):
  // L- through 0 and h, L+ through h-1 and 2h-1.
  const std::array<std::pair<int, int>, 4> axis_map{{{0, 0}, {h - 1, h + 1}, {h, h + 2}, {2 * h - 1, 2 * h + 3}}};
  const int old_mod = 2 * h, new_mod = 2 * (h + 2);

  for (const Ring& ring : cfg.rings) {
    std::vector<std::pair<int, int>> mids;  // (old midpoint, new position)
    for (auto [old_pos, new_pos] : axis_map)
      if (mod(old_pos, 2) != ring.parity) mids.emplace_back(old_pos, new_pos);
    if (mids.size() != 2) throw DistinguishedEdgeCountError("a ring does not have exactly two distinguished edges");

    const auto [m1, a1] = mids[0];
    const auto [m2, a2] = mids[1];
    std::vector<int> map(static_cast<std::size_t>(old_mod), -1);
    for (int p = ring.parity; p < old_mod; p += 2) {
      const int d1 = mod(p - m1, old_mod);
      const int d2 = mod(p - m2, old_mod);
      map[static_cast<std::size_t>(p)] = d1 < mod(m2 - m1, old_mod) ? mod(a1 + d1 + 1, new_mod) : mod(a2 + d2 + 1, new_mod);
    }
    ex.rings.push_back(Ring{ring.radius, mod(a1, 2)});
    ex.old_to_new.push_back(std::move(map));
    ex.inserted.push_back({a1, a2});
    ex.distinguished.push_back({m1, m2});
  }
  return ex;
}

RootDiagram negative_simple_diagram(int s, const ProjectedConfiguration& cfg, const OrbitPoints& o,
                                    const ExpandedConfiguration& ex) {
  RootDiagram d;
  d.ap = s;
  for (const auto& seg : reflection_segments(s, cfg, o)) d.segments.push_back(ex.transport(seg));
  normalize(d.segments);
  return d;
}

LabeledSegment reflect_segment(const LabeledSegment& seg, int axis, const ExpandedConfiguration& ex) {
  auto refl = [&](const Endpoint& e) {
    if (e.at_origin()) return e;
    return Endpoint{e.ring, mod(2 * axis - e.pos, ex.modulus())};
  };
  return make_segment(refl(seg.a), refl(seg.b), seg.label);
}

std::vector<int> symmetry_axes(const std::vector<RootDiagram>& diagrams, const ExpandedConfiguration& ex) {
  std::vector<int> out;
  for (int a = 0; a < ex.h + 2; ++a) {
    bool ok = true;
    for (const auto& d : diagrams) {
      const auto before = unlabeled(d.segments);
      std::vector<LabeledSegment> after;
      for (const auto& s : before) after.push_back(reflect_segment(s, a, ex));
      normalize(after);
      if (after != before) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

void compute_axes(ExpandedConfiguration& ex, const Bipartition& bip, const std::vector<RootDiagram>& negative_simples) {
  auto pick = [&](const std::vector<int>& part) {
    std::vector<RootDiagram> ds;
    for (int s : part) ds.push_back(negative_simples[static_cast<std::size_t>(s)]);
    return symmetry_axes(ds, ex);
  };
  const auto plus = pick(bip.s_minus);
  const auto minus = pick(bip.s_plus);
  if (plus.empty() || minus.empty()) throw AxisNotFound("no symmetry axis preserves the negative simple diagrams");
  std::vector<std::pair<int, int>> pairs;
  for (int a : plus)
    for (int b : minus)
      if (mod(a - b, ex.h + 2) == 1) pairs.emplace_back(a, b);
  if (pairs.empty()) throw AxisNotFound("no pair of axes at angle pi/(h+2)");
  // Centrally symmetric configurations admit the perpendicular pair as well.
  // The subdividing vertex of an edge perpendicular to L- lies on L'+, and
  // that of an edge perpendicular to L+ lies on L'-.
  std::erase_if(pairs, [&](const std::pair<int, int>& ab) {
    for (std::size_t r = 0; r < ex.rings.size(); ++r)
      for (int k = 0; k < 2; ++k) {
        const int m = ex.distinguished[r][static_cast<std::size_t>(k)];
        const int v = ex.inserted[r][static_cast<std::size_t>(k)];
        const int axis = m % ex.h == 0 ? ab.first : ab.second;
        if (mod(v - axis, ex.h + 2) != 0) return true;
      }
    return false;
  });
  if (pairs.empty()) throw AxisNotFound("symmetry axes do not pass through the subdividing vertices");
  if (pairs.size() > 1) throw AxisNotUnique("several candidate pairs for L'+ and L'-");
  ex.axis_plus = pairs.front().first;
  ex.axis_minus = pairs.front().second;
}

int GrayZone::side(int q) const {
  // Gray wedges are the open arcs (perp_minus, perp_plus) and the opposite one
  // when perp_plus - perp_minus is the short way round.
  const int half = quarter_modulus / 2;
  const int lo = mod(perp_plus - width(), quarter_modulus);
  const int off = mod(q - lo, quarter_modulus);
  if ((off > 0 && off < width()) || (off > half && off < half + width())) return 0;
  return off >= width() && off <= half ? 1 : 2;
}

int GrayZone::width() const {
  const int half = quarter_modulus / 2;
  const int d = mod(perp_plus - perp_minus, half);
  return std::min(d, half - d);
}

GrayZone gray_zone(const ExpandedConfiguration& ex) {
  GrayZone g;
  const int h2 = ex.h + 2;
  g.quarter_modulus = 4 * h2;
  g.perp_plus = mod(2 * ex.axis_plus + h2, 2 * h2);
  g.perp_minus = mod(2 * ex.axis_minus + h2, 2 * h2);
  return g;
}

RootDiagram tau_on_diagram(int eps, const RootDiagram& diag, const ExpandedConfiguration& ex) {
  RootDiagram out;
  const int a = ex.axis(eps);
  const int h2 = ex.h + 2;
  const auto& perm = ex.c_eps_perm(eps);
  for (const auto& seg : diag.segments) {
    if (seg.a.at_origin()) {
      const bool perpendicular = h2 % 2 == 0 && mod(seg.b.pos - a - h2 / 2, h2) == 0;
      if (perpendicular) {
        out.segments.push_back(seg);
      } else {
        LabeledSegment r = reflect_segment(seg, a, ex);
        r.label = perm[static_cast<std::size_t>(seg.label)];
        out.segments.push_back(r);
      }
    } else {
      out.segments.push_back(reflect_segment(seg, a, ex));
    }
  }
  normalize(out.segments);
  return out;
}

DiagramSet all_root_diagrams(const CoxeterSystem& sys, const PlaneSetup& setup, const CompatibilityOracle& oracle) {
  DiagramSet ds;
  ds.expanded = expand_configuration(setup.config);
  std::vector<RootDiagram> neg;
  for (int s = 0; s < sys.rank; ++s) neg.push_back(negative_simple_diagram(s, setup.config, setup.orbit, ds.expanded));
  compute_axes(ds.expanded, setup.bip, neg);

  ds.by_ap.assign(static_cast<std::size_t>(oracle.size()), RootDiagram{});
  std::vector<bool> have(static_cast<std::size_t>(oracle.size()), false);
  std::deque<int> queue;
  for (int s = 0; s < sys.rank; ++s) {
    ds.by_ap[static_cast<std::size_t>(s)] = neg[static_cast<std::size_t>(s)];
    have[static_cast<std::size_t>(s)] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const int beta = queue.front();
    queue.pop_front();
    for (int eps : {1, -1}) {
      const int gamma = oracle.tau(eps, beta);
      RootDiagram d = tau_on_diagram(eps, ds.by_ap[static_cast<std::size_t>(beta)], ds.expanded);
      d.ap = gamma;
      if (have[static_cast<std::size_t>(gamma)]) {
        if (!(ds.by_ap[static_cast<std::size_t>(gamma)] == d))
          throw InconsistentPropagation("root " + root_name(sys, oracle.root(gamma)) + " of " + sys.type.label() +
                                        " is reached with two different diagrams");
        continue;
      }
      ds.by_ap[static_cast<std::size_t>(gamma)] = std::move(d);
      have[static_cast<std::size_t>(gamma)] = true;
      queue.push_back(gamma);
    }
  }
  for (bool b : have)
    if (!b) throw InternalError("some almost positive root was not reached from the negative simple roots");
  return ds;
}

std::vector<std::string> diagram_invariant_failures(const DiagramSet& ds, const CompatibilityOracle& oracle) {
  std::vector<std::string> out;
  const auto& ex = ds.expanded;
  std::set<std::vector<LabeledSegment>> distinct;
  for (const RootDiagram& d : ds.by_ap) {
    const std::string name = "diagram " + std::to_string(d.ap);
    if (d.segments.empty()) out.push_back(name + " is empty");
    for (const auto& s : d.segments)
      if (s.a.at_origin() && s.b.at_origin()) out.push_back(name + " has a segment with both endpoints at the origin");
    for (int eps : {1, -1})
      if (!(tau_on_diagram(eps, tau_on_diagram(eps, d, ex), ex) == d)) out.push_back(name + ": tau is not an involution");
    RootDiagram r = d;
    for (int k = 0; k < ex.h + 2; ++k) r = tau_on_diagram(1, tau_on_diagram(-1, r, ex), ex);
    if (!(r == d)) out.push_back(name + ": (tau+ tau-)^(h+2) is not the identity");
    for (int eps : {1, -1})
      if (!(tau_on_diagram(eps, d, ex) == ds.by_ap[static_cast<std::size_t>(oracle.tau(eps, d.ap))]))
        out.push_back(name + ": diagram map does not commute with tau");
    if (!distinct.insert(d.segments).second) out.push_back(name + " coincides with the diagram of another root");
  }
  return out;
}

}  // namespace coxplane
