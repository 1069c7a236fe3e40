#include "coxplane/criteria.h"
#include "coxplane/errors.h"

#include <doctest.h>

#include <map>
#include <memory>

using namespace coxplane;

namespace {

// Contexts are costly for the big types; build each one once.
const CompatContext& context(const std::string& type, bool swapped = false) {
  static std::map<std::pair<std::string, bool>, std::unique_ptr<CoxeterSystem>> systems;
  static std::map<std::pair<std::string, bool>, std::unique_ptr<CompatContext>> contexts;
  const auto key = std::make_pair(type, swapped);
  auto it = contexts.find(key);
  if (it == contexts.end()) {
    systems[key] = std::make_unique<CoxeterSystem>(build_coxeter_system(type));
    it = contexts.emplace(key, std::make_unique<CompatContext>(*systems[key], swapped)).first;
  }
  return *it->second;
}

// ap index of the positive simple root alpha_s.
int positive_simple(const CompatContext& ctx, int s) { return ctx.oracle.ap_of(s); }

int ring_step(const ExpandedConfiguration& ex, int r, int k) { return ex.rings[static_cast<std::size_t>(r)].parity + 2 * k; }

}  // namespace

TEST_CASE("segment relations") {
  const CompatContext& ctx = context("D4");
  const ExpandedConfiguration& ex = ctx.ex();
  const double tol = ctx.tol;
  auto v = [&](int k) { return Endpoint{0, ring_step(ex, 0, k)}; };

  SUBCASE("interleaved chords cross") {
    const auto s = make_segment(v(0), v(2), -1), t = make_segment(v(1), v(3), -1);
    CHECK(segment_relation(s, t, ex, tol) == SegmentRelation::Cross);
    CHECK(segment_relation(t, s, ex, tol) == SegmentRelation::Cross);
  }
  SUBCASE("nested chords are disjoint, chords with a common vertex touch") {
    CHECK(segment_relation(make_segment(v(0), v(3), -1), make_segment(v(1), v(2), -1), ex, tol) ==
          SegmentRelation::Disjoint);
    CHECK(segment_relation(make_segment(v(0), v(3), -1), make_segment(v(3), v(5), -1), ex, tol) ==
          SegmentRelation::TouchAtEndpoint);
  }
  SUBCASE("two origin segments touch at the origin whatever their labels") {
    const int l0 = ex.origin_labels[0], l1 = ex.origin_labels[1];
    CHECK(segment_relation(make_segment({}, v(0), l0), make_segment({}, v(2), l1), ex, tol) ==
          SegmentRelation::TouchAtEndpoint);
    CHECK(segment_relation(make_segment({}, v(0), l0), make_segment({}, v(2), l0), ex, tol) ==
          SegmentRelation::TouchAtEndpoint);
  }
  SUBCASE("same unlabeled segment coincides") {
    const int l0 = ex.origin_labels[0], l1 = ex.origin_labels[1];
    CHECK(segment_relation(make_segment({}, v(1), l0), make_segment({}, v(1), l1), ex, tol) == SegmentRelation::Coincide);
    CHECK(segment_relation(make_segment(v(1), v(4), -1), make_segment(v(4), v(1), -1), ex, tol) ==
          SegmentRelation::Coincide);
  }
  SUBCASE("collinear overlap") {
    // A diameter and a half-diameter on it.
    const int half = (ex.h + 2) / 2;
    CHECK(segment_relation(make_segment(v(0), v(half), -1), make_segment({}, v(0), ex.origin_labels[0]), ex, tol) ==
          SegmentRelation::OverlapCollinear);
  }
  SUBCASE("relations do not change under rotation") {
    const int n = ex.h + 2;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            const auto s = make_segment(v(a), v(b), -1), t = make_segment(v(c), v(d), -1);
            const auto s2 = make_segment(v((a + 1) % n), v((b + 1) % n), -1);
            const auto t2 = make_segment(v((c + 1) % n), v((d + 1) % n), -1);
            CHECK(segment_relation(s, t, ex, tol) == segment_relation(s2, t2, ex, tol));
            CHECK(segment_relation(s, t, ex, tol) == segment_relation(t, s, ex, tol));
          }
  }
}

TEST_CASE("criterion names") {
  CHECK(parse_criterion("cl3") == Criterion::CL3);
  CHECK(parse_criterion("ncA") == Criterion::NCA);
  CHECK(parse_criterion("NCD") == Criterion::NCD);
  CHECK_THROWS_AS(parse_criterion("cl6"), UsageError);
  CHECK(std::string(to_string(Criterion::CL5)) == "cl5");
}

TEST_CASE("A-type examples") {
  const CompatContext& a3 = context("A3");
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) CHECK(cl1(a3.diagram(s), a3.diagram(t), a3));
  const CompatContext& a2 = context("A2");
  CHECK(!cl1(a2.diagram(positive_simple(a2, 0)), a2.diagram(positive_simple(a2, 1)), a2));
  CHECK(!a2.oracle.compatible(positive_simple(a2, 0), positive_simple(a2, 1)));
}

TEST_CASE("H3: coinciding origin segments of -a1 and -a3") {
  const CompatContext& h3 = context("H3");
  CHECK(!cl1(h3.diagram(0), h3.diagram(2), h3));
  CHECK(cl2(h3.diagram(0), h3.diagram(2), h3));
  CHECK(h3.oracle.compatible(0, 2));
  // The 3 * 17 pairs with a negative simple root.
  int checked = 0;
  for (int s = 0; s < 3; ++s)
    for (int b = 0; b < h3.oracle.size(); ++b) {
      if (b == s) continue;
      CHECK(cl2(h3.diagram(s), h3.diagram(b), h3) == h3.oracle.compatible(s, b));
      ++checked;
    }
  CHECK(checked == 51);
}

TEST_CASE("cl1 implies cl2 implies nothing weaker than itself") {
  for (const char* t : {"H3", "D4", "E6"}) {
    CAPTURE(t);
    const CompatContext& ctx = context(t);
    for (int a = 0; a < ctx.oracle.size(); ++a)
      for (int b = a + 1; b < ctx.oracle.size(); ++b) {
        const bool c1 = cl1(ctx.diagram(a), ctx.diagram(b), ctx);
        const bool c2 = cl2(ctx.diagram(a), ctx.diagram(b), ctx);
        const bool c3 = cl3(ctx.diagram(a), ctx.diagram(b), ctx);
        if (c1) CHECK(c2);
        if (c3) CHECK(c2);
      }
  }
}

TEST_CASE("active segments") {
  SUBCASE("single ring: everything is active") {
    const CompatContext& ctx = context("D5");
    std::vector<LabeledSegment> all;
    for (int a = 0; a < ctx.oracle.size(); ++a)
      for (const auto& s : ctx.diagram(a).segments) all.push_back(s);
    const auto act = active_segments(all, ctx.rings, ctx.ex(), SharingRule::Endpoint, ctx.tol);
    CHECK(std::all_of(act.begin(), act.end(), [](bool b) { return b; }));
  }
  SUBCASE("F4: an allowed crossing between inactive segments and a forbidden active one") {
    const CompatContext& ctx = context("F4");
    bool compatible_inactive_crossing = false, incompatible_active_crossing = false;
    for (int a = 0; a < ctx.oracle.size(); ++a)
      for (int b = a + 1; b < ctx.oracle.size(); ++b) {
        const auto& c1 = ctx.diagram(a).segments;
        const auto& c2 = ctx.diagram(b).segments;
        std::vector<LabeledSegment> all = c1;
        all.insert(all.end(), c2.begin(), c2.end());
        const auto act = active_segments(all, ctx.rings, ctx.ex(), ctx.sharing, ctx.tol);
        for (std::size_t i = 0; i < c1.size(); ++i)
          for (std::size_t j = 0; j < c2.size(); ++j) {
            if (segment_relation(c1[i], c2[j], ctx.ex(), ctx.tol) != SegmentRelation::Cross) continue;
            const bool both = act[i] && act[c1.size() + j];
            if (!act[i] && !act[c1.size() + j] && ctx.oracle.compatible(a, b)) compatible_inactive_crossing = true;
            if (both && !ctx.oracle.compatible(a, b)) incompatible_active_crossing = true;
          }
      }
    CHECK(compatible_inactive_crossing);
    CHECK(incompatible_active_crossing);
  }
  SUBCASE("least fixpoint is reached from the outermost ring inward") {
    const CompatContext& ctx = context("E7");
    const auto& segs = ctx.diagram(ctx.oracle.size() - 1).segments;
    const auto act = active_segments(segs, ctx.rings, ctx.ex(), SharingRule::Endpoint, ctx.tol);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (ctx.rings.outer_ring(segs[i]) == 0) CHECK(act[i]);
      if (!act[i]) continue;
      const int r = ctx.rings.outer_ring(segs[i]);
      if (r == 0) continue;
      bool supported = false;
      for (std::size_t j = 0; j < segs.size(); ++j)
        if (act[j] && ctx.rings.outer_ring(segs[j]) == r - 1 &&
            (segs[i].a == segs[j].a || segs[i].a == segs[j].b || segs[i].b == segs[j].a || segs[i].b == segs[j].b))
          supported = true;
      CHECK(supported);
    }
  }
}

TEST_CASE("verdicts commute with tau where the criterion is exact") {
  const std::vector<std::pair<const char*, Criterion>> cases = {
      {"A4", Criterion::CL1}, {"H3", Criterion::CL2}, {"D4", Criterion::CL3}, {"F4", Criterion::CL4}, {"E6", Criterion::CL5}};
  for (const auto& [t, c] : cases) {
    CAPTURE(t);
    const CompatContext& ctx = context(t);
    for (int a = 0; a < ctx.oracle.size(); ++a)
      for (int b = a + 1; b < ctx.oracle.size(); ++b)
        for (int eps : {1, -1}) {
          const bool before = compatible_by(c, ctx.diagram(a), ctx.diagram(b), ctx);
          const RootDiagram ta = tau_on_diagram(eps, ctx.diagram(a), ctx.ex());
          const RootDiagram tb = tau_on_diagram(eps, ctx.diagram(b), ctx.ex());
          CHECK(before == compatible_by(c, ta, tb, ctx));
        }
  }
}

TEST_CASE("verdicts do not depend on which part is S+") {
  for (const char* t : {"A4", "B3", "D4", "H3", "F4", "E6"}) {
    CAPTURE(t);
    const CompatContext& p = context(t, false);
    const CompatContext& q = context(t, true);
    for (Criterion c : {Criterion::CL1, Criterion::CL2, Criterion::CL3, Criterion::CL4, Criterion::CL5}) {
      CAPTURE(to_string(c));
      for (int a = 0; a < p.oracle.size(); ++a)
        for (int b = a + 1; b < p.oracle.size(); ++b)
          CHECK(compatible_by(c, p.diagram(a), p.diagram(b), p) == compatible_by(c, q.diagram(a), q.diagram(b), q));
    }
  }
}

TEST_CASE("exactness where claimed, on the smaller types") {
  for (const char* t : {"A2", "A3", "A4", "B2", "B3", "B4", "I2(3)", "I2(6)", "I2(10)", "H3", "D4", "D5", "F4", "E6"}) {
    const CompatContext& ctx = context(t);
    for (Criterion c : {Criterion::CL1, Criterion::CL2, Criterion::CL3, Criterion::CL4, Criterion::CL5}) {
      const auto claim = claimed_exactness(ctx.sys->type, c);
      if (!claim) continue;
      CAPTURE(t);
      CAPTURE(to_string(c));
      const ExactnessReport rep = verify_compat(ctx, c);
      CHECK(rep.exact() == *claim);
      const int n = ctx.oracle.size();
      CHECK(rep.total == static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
}

TEST_CASE("E7: -a3 and a3 are a counterexample to cl5") {
  const CompatContext& ctx = context("E7");
  const int neg = 2, pos = positive_simple(ctx, 2);
  CHECK(!ctx.oracle.compatible(neg, pos));
  CHECK(cl5(ctx.diagram(neg), ctx.diagram(pos), ctx));
  const ExactnessReport rep = verify_compat(ctx, Criterion::CL5);
  CHECK(has_pair(rep, neg, pos));
}

TEST_CASE("claims table") {
  CHECK(claimed_exactness(CoxeterType::parse("B5"), Criterion::CL1) == true);
  CHECK(claimed_exactness(CoxeterType::parse("H3"), Criterion::CL1) == std::nullopt);
  CHECK(claimed_exactness(CoxeterType::parse("D6"), Criterion::CL3) == true);
  CHECK(claimed_exactness(CoxeterType::parse("E7"), Criterion::CL5) == false);
  CHECK(claimed_exactness(CoxeterType::parse("F4"), Criterion::NCA) == false);
  CHECK(claimed_exactness(CoxeterType::parse("H3"), Criterion::NCD) == true);
}
