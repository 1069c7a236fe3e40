#include "coxplane/errors.h"
#include "coxplane/plane.h"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace coxplane;

namespace {

struct Shape {
  const char* type;
  std::size_t rings;
  std::size_t origin;
};

}  // namespace

TEST_CASE("projected orbit: rings and origin points") {
  const std::vector<Shape> shapes = {
      {"E6", 2, 3}, {"E7", 3, 2}, {"E8", 8, 0}, {"F4", 2, 0}, {"H3", 1, 2}, {"H4", 4, 0},
      {"A2", 1, 0}, {"A5", 1, 0}, {"B3", 1, 0}, {"B5", 1, 0}, {"D4", 1, 2}, {"D6", 1, 2}, {"I2(7)", 1, 0},
  };
  for (const Shape& s : shapes) {
    CAPTURE(s.type);
    const CoxeterSystem sys = build_coxeter_system(s.type);
    const PlaneSetup ps = setup_plane(sys);
    const auto& cfg = ps.config;
    CHECK(cfg.rings.size() == s.rings);
    CHECK(cfg.origin_labels.size() == s.origin);
    for (const auto& members : cfg.ring_members) CHECK(static_cast<int>(members.size()) == cfg.h);
    CHECK(cfg.rings.size() * static_cast<std::size_t>(cfg.h) + cfg.origin_labels.size() == ps.orbit.size());
    for (std::size_t r = 1; r < cfg.rings.size(); ++r) CHECK(cfg.rings[r].radius < cfg.rings[r - 1].radius);
  }
}

TEST_CASE("c rotates the projection by 2 pi / h") {
  for (const char* t : {"A4", "D5", "H3", "E6", "F4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const PlaneSetup ps = setup_plane(sys);
    const auto& cfg = ps.config;
    const double a = 2 * std::numbers::pi / cfg.h;
    for (std::size_t p = 0; p < ps.orbit.size(); ++p) {
      const Vec2 x = cfg.projected[p];
      const Vec2 y = cfg.projected[static_cast<std::size_t>(cfg.c_perm[p])];
      CHECK(y.x == doctest::Approx(std::cos(a) * x.x - std::sin(a) * x.y).epsilon(1e-7));
      CHECK(y.y == doctest::Approx(std::sin(a) * x.x + std::cos(a) * x.y).epsilon(1e-7));
      // Snapping moves nothing.
      CHECK(dist(cfg.snapped(static_cast<int>(p)), x) < 1e-7);
    }
  }
}

TEST_CASE("c+ and c- act as reflections in L+ and L-") {
  const CoxeterSystem sys = build_coxeter_system("E6");
  const PlaneSetup ps = setup_plane(sys);
  const auto& cfg = ps.config;
  const int h = cfg.h;
  for (std::size_t p = 0; p < ps.orbit.size(); ++p) {
    const PlanarPoint x = cfg.point_of[p];
    if (x.at_origin()) continue;
    const PlanarPoint ym = cfg.point_of[static_cast<std::size_t>(cfg.c_minus_perm[p])];
    const PlanarPoint yp = cfg.point_of[static_cast<std::size_t>(cfg.c_plus_perm[p])];
    // L- at angle 0, L+ at angle pi - pi/h.
    CHECK(ym.pos == ((-x.pos) % (2 * h) + 2 * h) % (2 * h));
    CHECK(yp.pos == ((2 * (h - 1) - x.pos) % (2 * h) + 2 * h) % (2 * h));
  }
}

TEST_CASE("swapping the bipartition keeps the ring structure") {
  for (const char* t : {"E7", "F4", "D5", "H4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const auto a = setup_plane(sys, false).config;
    const auto b = setup_plane(sys, true).config;
    REQUIRE(a.rings.size() == b.rings.size());
    for (std::size_t r = 0; r < a.rings.size(); ++r) CHECK(a.rings[r].radius == doctest::Approx(b.rings[r].radius));
    CHECK(a.origin_labels.size() == b.origin_labels.size());
  }
}

TEST_CASE("hyperplane orbits under c+ and c-") {
  for (const char* t : {"A3", "A4", "B3", "D4", "D5", "I2(5)", "I2(6)", "H3", "H4", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const OrbitCheckReport rep = hyperplane_orbit_check(sys, bipartition(sys));
    CHECK(rep.ok());
    for (const auto& f : rep.failures) MESSAGE(f);
    std::size_t total = 0;
    for (const auto& o : rep.orbits) total += o.reflections.size();
    CHECK(static_cast<int>(total) == sys.num_positive);
  }
}

TEST_CASE("rank one has no Coxeter plane") {
  const CoxeterSystem sys = build_coxeter_system("A1");
  CHECK_THROWS_AS(setup_plane(sys), UsageError);
}
