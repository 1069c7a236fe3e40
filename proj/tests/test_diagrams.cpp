#include "coxplane/diagrams.h"
#include "coxplane/errors.h"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace coxplane;

namespace {

const char* const kTypes[] = {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "D6", "I2(5)", "I2(6)",
                              "I2(9)", "H3", "H4", "F4", "E6", "E7", "E8"};

}  // namespace

TEST_CASE("every ring has two distinguished edges and gains two vertices") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const PlaneSetup ps = setup_plane(sys);
    const ExpandedConfiguration ex = expand_configuration(ps.config);
    REQUIRE(ex.rings.size() == ps.config.rings.size());
    for (std::size_t r = 0; r < ex.rings.size(); ++r) {
      std::set<int> image;
      for (int p : ex.old_to_new[r])
        if (p >= 0) image.insert(p);
      CHECK(static_cast<int>(image.size()) == ex.h);
      for (int p : image) CHECK(p % 2 == ex.rings[r].parity);
      for (int v : ex.inserted[r]) {
        CHECK(image.count(v) == 0);
        CHECK(v % 2 == ex.rings[r].parity);
      }
    }
  }
}

TEST_CASE("expansion keeps cyclic order on each ring") {
  const CoxeterSystem sys = build_coxeter_system("E7");
  const ExpandedConfiguration ex = expand_configuration(setup_plane(sys).config);
  for (std::size_t r = 0; r < ex.rings.size(); ++r) {
    std::vector<int> seq;
    for (int p : ex.old_to_new[r])
      if (p >= 0) seq.push_back(p);
    int descents = 0;
    for (std::size_t k = 0; k < seq.size(); ++k)
      if (seq[(k + 1) % seq.size()] < seq[k]) ++descents;
    CHECK(descents == 1);
  }
}

TEST_CASE("root diagrams: axes, tau relations, injectivity") {
  for (const char* t : kTypes) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const PlaneSetup ps = setup_plane(sys);
    const CompatibilityOracle o(sys, ps.bip);
    const DiagramSet ds = all_root_diagrams(sys, ps, o);
    CHECK(ds.expanded.axis_plus == 0);
    CHECK(ds.expanded.axis_minus == sys.coxeter_number + 1);
    CHECK(static_cast<int>(ds.by_ap.size()) == o.size());
    const auto failures = diagram_invariant_failures(ds, o);
    CHECK(failures.empty());
    for (std::size_t k = 0; k < failures.size() && k < 5; ++k) MESSAGE(failures[k]);
  }
}

TEST_CASE("negative simple diagrams are symmetric about their axis") {
  for (const char* t : {"A4", "D5", "H3", "F4", "E6"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const PlaneSetup ps = setup_plane(sys);
    const CompatibilityOracle o(sys, ps.bip);
    const DiagramSet ds = all_root_diagrams(sys, ps, o);
    for (int s = 0; s < sys.rank; ++s) {
      // tau_eps fixes -alpha_s for s on the opposite side, so its diagram is
      // invariant under the matching reflection.
      const int eps = -ps.bip.side[static_cast<std::size_t>(s)];
      const RootDiagram& d = ds.by_ap[static_cast<std::size_t>(s)];
      CHECK(tau_on_diagram(eps, d, ds.expanded) == d);
      const auto axes = symmetry_axes({d}, ds.expanded);
      CHECK(std::find(axes.begin(), axes.end(), ds.expanded.axis(eps)) != axes.end());
    }
  }
}

TEST_CASE("swapped bipartition still gives consistent diagrams") {
  for (const char* t : {"A4", "D4", "H3", "F4", "E6", "E7"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const PlaneSetup ps = setup_plane(sys, true);
    const CompatibilityOracle o(sys, ps.bip);
    const DiagramSet ds = all_root_diagrams(sys, ps, o);
    CHECK(diagram_invariant_failures(ds, o).empty());
  }
}

TEST_CASE("gray zone: two opposite wedges of one step") {
  const CoxeterSystem sys = build_coxeter_system("D4");
  const PlaneSetup ps = setup_plane(sys);
  const CompatibilityOracle o(sys, ps.bip);
  const DiagramSet ds = all_root_diagrams(sys, ps, o);
  const GrayZone g = gray_zone(ds.expanded);
  CHECK(g.quarter_modulus == 4 * (sys.coxeter_number + 2));
  CHECK(g.width() == 2);
  int inside = 0, one = 0, two = 0;
  for (int q = 0; q < g.quarter_modulus; ++q) {
    const int s = g.side(q);
    inside += s == 0;
    one += s == 1;
    two += s == 2;
  }
  CHECK(inside == 2);  // the open wedges hold one odd quarter direction each
  CHECK(one == two);
}

TEST_CASE("reflection segments of the smallest orbit") {
  const CoxeterSystem sys = build_coxeter_system("A3");
  const PlaneSetup ps = setup_plane(sys);
  for (int t = 0; t < sys.num_positive; ++t) {
    const auto segs = reflection_segments(t, ps.config, ps.orbit);
    CHECK(segs.size() == 1);  // a transposition of the 4 points
  }
}
