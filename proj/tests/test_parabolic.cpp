#include "coxplane/errors.h"
#include "coxplane/geometry.h"
#include "coxplane/parabolic.h"

#include <doctest.h>

#include "oracles.h"

#include <set>

using namespace coxplane;

TEST_CASE("parabolic counts: set partitions in type A") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const CoxeterSystem sys = build_coxeter_system("A" + std::to_string(n));
    CHECK(enumerate_parabolics(sys, 100000).size() == oracle::bell(n + 1));
  }
  CHECK(oracle::bell(4) == 15);
}

TEST_CASE("parabolic counts match distinct fixed spaces of all elements") {
  for (const char* t : {"B3", "H3", "D4", "I2(8)", "F4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    CHECK(enumerate_parabolics(sys, 100000).size() == oracle::count_fixed_spaces(sys));
  }
}

TEST_CASE("enumeration budget") {
  const CoxeterSystem sys = build_coxeter_system("D4");
  CHECK_THROWS_AS(enumerate_parabolics(sys, 10), BudgetExceeded);
}

TEST_CASE("parabolics are closed: every reflection fixing the subspace belongs") {
  const CoxeterSystem sys = build_coxeter_system("B3");
  for (const Parabolic& p : enumerate_parabolics(sys, 100000)) {
    for (int t = 0; t < sys.num_positive; ++t) {
      const bool fixes = (p.fixed_basis.transpose() * sys.coords[static_cast<std::size_t>(t)]).norm() < 1e-7;
      CHECK(fixes == p.reflset.test(static_cast<std::size_t>(t)));
    }
    CHECK(p.rank + p.fixed_basis.cols() == sys.rank);
  }
}

TEST_CASE("fixed space read off from the orbit partition") {
  for (const char* t : {"A3", "B3", "H3", "D4", "F4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const OrbitPoints o = smallest_orbit(sys);
    for (const Parabolic& p : enumerate_parabolics(sys, 100000)) {
      const Matrix fixed = fixed_space_from_partition(o, orbit_partition(p, o));
      CHECK(oracle::subspace_key(fixed) == oracle::subspace_key(p.fixed_basis));
    }
  }
}

TEST_CASE("conjugacy classes of parabolics in A3") {
  const CoxeterSystem sys = build_coxeter_system("A3");
  const auto pars = enumerate_parabolics(sys, 100000);
  const auto cls = conjugacy_classes(sys, pars);
  std::multiset<int> sizes;
  std::map<int, int> count;
  for (int c : cls) ++count[c];
  for (auto [c, k] : count) sizes.insert(k);
  // trivial, 6 reflections, 3 of type A1xA1, 4 of type A2, whole group
  CHECK(sizes == std::multiset<int>{1, 1, 3, 4, 6});
}

TEST_CASE("convex hull and intersections") {
  const std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const auto hull = convex_hull(square, 1e-9);
  CHECK(hull.size() == 4);
  CHECK(in_hull(hull, {0.5, 0.2}, 1e-9));
  CHECK(!in_hull(hull, {1.5, 0.2}, 1e-9));
  CHECK(on_hull_boundary(hull, {1, 0.5}, 1e-9));
  CHECK(!on_hull_boundary(hull, {0.5, 0.5}, 1e-9));

  const auto seg = convex_hull({{0, 0}, {2, 0}, {1, 0}}, 1e-9);
  CHECK(seg.size() == 2);
  // Relative boundary of a segment: its two endpoints only.
  CHECK(on_hull_boundary(seg, {2, 0}, 1e-9));
  CHECK(!on_hull_boundary(seg, {1, 0}, 1e-9));

  CHECK(segment_intersection({0, 0}, {2, 2}, {0, 2}, {2, 0}, 1e-9).size() == 1);
  CHECK(segment_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}, 1e-9).empty());
  CHECK(segment_intersection({0, 0}, {2, 0}, {1, 0}, {3, 0}, 1e-9).size() == 2);
  CHECK(segment_intersection({0, 0}, {1, 0}, {1, 0}, {2, 0}, 1e-9).size() == 1);
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}, 1e-9) == 1);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}, 1e-9) == 0);
}
