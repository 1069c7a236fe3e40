#include "coxplane/plane.h"

#include "coxplane/errors.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace coxplane {

namespace {

constexpr double kPi = std::numbers::pi;

double line_angle(Vec2 normal) {
  double a = std::atan2(normal.y, normal.x) + kPi / 2;
  a = std::fmod(a, kPi);
  if (a < 0) a += kPi;
  return a;
}

double angle_gap(double a, double b, double period) {
  double d = std::fmod(std::abs(a - b), period);
  return std::min(d, period - d);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Bipartition bipartition(const CoxeterSystem& sys, bool swapped) {
  Bipartition bip;
  const auto color = diagram_coloring(sys.coxeter);
  bip.c_plus = identity_element(sys);
  bip.c_minus = identity_element(sys);
  bip.side.resize(static_cast<std::size_t>(sys.rank));
  for (int s = 0; s < sys.rank; ++s) {
    const bool plus = (color[static_cast<std::size_t>(s)] == 0) != swapped;
    bip.side[static_cast<std::size_t>(s)] = plus ? 1 : -1;
    (plus ? bip.s_plus : bip.s_minus).push_back(s);
    GroupElement& part = plus ? bip.c_plus : bip.c_minus;
    part = part * sys.simple_reflections[static_cast<std::size_t>(s)];
  }
  bip.c = bip.c_minus * bip.c_plus;
  return bip;
}

PlaneBasis coxeter_plane(const CoxeterSystem& sys, const Bipartition& bip) {
  if (sys.rank < 2) throw UsageError("rank-1 systems have no Coxeter plane");
  const int h = sys.coxeter_number;
  const double target = 2 * kPi / h;

  Eigen::EigenSolver<Matrix> es(bip.c.matrix());
  int found = -1, count = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto lambda = es.eigenvalues()(i);
    if (std::abs(std::abs(lambda) - 1) < 1e-6 && std::abs(std::arg(lambda) - target) < 1e-6) {
      found = static_cast<int>(i);
      ++count;
    }
  }
  if (count != 1) throw EigenbasisDegenerate("no unique eigenvalue exp(2 pi i/h) for " + sys.type.label());

  const Eigen::VectorXcd z = es.eigenvectors().col(found);
  Vector x = z.real(), y = -z.imag();
  if (std::abs(x.norm() - y.norm()) > 1e-6 * x.norm() || std::abs(x.dot(y)) > 1e-6 * x.norm() * y.norm())
    throw EigenbasisDegenerate("rotation eigenvector is not isotropic");
  x.normalize();
  y -= y.dot(x) * x;
  y.normalize();

  PlaneBasis pb{x, y, 0, 0};
  // Rotate the frame so that L- becomes the first axis.
  const double phi = line_angle(pb.project(sys.coords[static_cast<std::size_t>(bip.s_minus.front())]));
  pb.u = std::cos(phi) * x + std::sin(phi) * y;
  pb.v = -std::sin(phi) * x + std::cos(phi) * y;

  for (int eps : {1, -1}) {
    const auto& part = eps > 0 ? bip.s_plus : bip.s_minus;
    const double a = line_angle(pb.project(sys.coords[static_cast<std::size_t>(part.front())]));
    for (int s : part)
      if (angle_gap(line_angle(pb.project(sys.coords[static_cast<std::size_t>(s)])), a, kPi) > 1e-6)
        throw InternalError("simple hyperplanes of one part meet the Coxeter plane in different lines");
    (eps > 0 ? pb.l_plus_angle : pb.l_minus_angle) = a;
  }
  if (angle_gap(pb.l_minus_angle, 0, kPi) > 1e-6 || angle_gap(pb.l_plus_angle, kPi - kPi / h, kPi) > 1e-6)
    throw InternalError("lines L+ and L- are not at the expected angles");
  pb.l_minus_angle = 0;
  pb.l_plus_angle = kPi - kPi / h;

  const Vec2 cu = pb.project(bip.c.matrix() * pb.u);
  if (dist(cu, {std::cos(target), std::sin(target)}) > 1e-6) throw EigenbasisDegenerate("c does not rotate the plane by 2pi/h");
  return pb;
}

int ProjectedConfiguration::angular_index(int orbit_index) const {
  const PlanarPoint& p = point_of[static_cast<std::size_t>(orbit_index)];
  if (p.at_origin()) return -1;
  return (p.pos - rings[static_cast<std::size_t>(p.ring)].parity) / 2;
}

Vec2 ProjectedConfiguration::snapped(int orbit_index) const {
  const PlanarPoint& p = point_of[static_cast<std::size_t>(orbit_index)];
  if (p.at_origin()) return {0, 0};
  const double r = rings[static_cast<std::size_t>(p.ring)].radius;
  const double a = p.pos * kPi / h;
  return {r * std::cos(a), r * std::sin(a)};
}

ProjectedConfiguration project_orbit(const CoxeterSystem& sys, const Bipartition& bip, const PlaneBasis& pb,
                                     const OrbitPoints& o) {
  ProjectedConfiguration cfg;
  const int h = sys.coxeter_number;
  const int npts = static_cast<int>(o.size());
  const double eps = sys.eps;
  cfg.h = h;
  cfg.point_of.assign(static_cast<std::size_t>(npts), PlanarPoint{});
  for (int p = 0; p < npts; ++p) {
    cfg.projected.push_back(pb.project(o.points[static_cast<std::size_t>(p)]));
    cfg.c_plus_perm.push_back(o.act(bip.c_plus, p));
    cfg.c_minus_perm.push_back(o.act(bip.c_minus, p));
    cfg.c_perm.push_back(o.act(bip.c, p));
  }

  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(npts), false);
  for (int p = 0; p < npts; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    if (cfg.projected[static_cast<std::size_t>(p)].norm() < eps) {
      seen[static_cast<std::size_t>(p)] = true;
      cfg.origin_labels.push_back(p);
      continue;
    }
    std::vector<int> cyc;
    for (int q = p; !seen[static_cast<std::size_t>(q)]; q = cfg.c_perm[static_cast<std::size_t>(q)]) {
      seen[static_cast<std::size_t>(q)] = true;
      cyc.push_back(q);
    }
    if (static_cast<int>(cyc.size()) != h) throw SnapFailure("a projected c-orbit is not an h-gon");
    cycles.push_back(std::move(cyc));
  }

  auto radius_of = [&](const std::vector<int>& cyc) { return cfg.projected[static_cast<std::size_t>(cyc.front())].norm(); };
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) { return radius_of(a) > radius_of(b); });
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    const double radius = radius_of(cycles[r]);
    if (r > 0 && radius_of(cycles[r - 1]) - radius < 1e3 * eps)
      throw SnapFailure("two rings of " + sys.type.label() + " have the same radius");
    Ring ring{radius, -1};
    std::vector<int> members(static_cast<std::size_t>(h), -1);
    for (int p : cycles[r]) {
      const Vec2 x = cfg.projected[static_cast<std::size_t>(p)];
      if (std::abs(x.norm() - radius) > eps) throw SnapFailure("ring points are not equidistant from the origin");
      const int pos = mod(static_cast<int>(std::lround(std::atan2(x.y, x.x) * h / kPi)), 2 * h);
      if (ring.parity < 0) ring.parity = pos % 2;
      if (pos % 2 != ring.parity) throw SnapFailure("ring vertices are not on a regular polygon");
      cfg.point_of[static_cast<std::size_t>(p)] = PlanarPoint{static_cast<int>(r), pos};
      const int k = (pos - ring.parity) / 2;
      if (members[static_cast<std::size_t>(k)] >= 0) throw SnapFailure("two points snap to the same ring vertex");
      members[static_cast<std::size_t>(k)] = p;
    }
    cfg.rings.push_back(ring);
    cfg.ring_members.push_back(std::move(members));
  }

  for (int p = 0; p < npts; ++p) {
    if (dist(cfg.snapped(p), cfg.projected[static_cast<std::size_t>(p)]) > eps)
      throw SnapFailure("projected point is off its snapped position");
    const PlanarPoint a = cfg.point_of[static_cast<std::size_t>(p)];
    const PlanarPoint b = cfg.point_of[static_cast<std::size_t>(cfg.c_perm[static_cast<std::size_t>(p)])];
    if (!a.at_origin() && (a.ring != b.ring || mod(b.pos - a.pos, 2 * h) != 2))
      throw SnapFailure("c does not advance the angular index by one");
  }
  return cfg;
}

PlaneSetup setup_plane(const CoxeterSystem& sys, bool swapped) {
  PlaneSetup ps;
  ps.bip = bipartition(sys, swapped);
  ps.basis = coxeter_plane(sys, ps.bip);
  ps.orbit = smallest_orbit(sys);
  ps.config = project_orbit(sys, ps.bip, ps.basis, ps.orbit);
  return ps;
}

OrbitCheckReport hyperplane_orbit_check(const CoxeterSystem& sys, const Bipartition& bip) {
  OrbitCheckReport rep;
  const int h = sys.coxeter_number;
  const GroupElement w0 = longest_element(sys);
  std::vector<bool> seen(static_cast<std::size_t>(sys.num_positive), false);
  for (int t0 = 0; t0 < sys.num_positive; ++t0) {
    if (seen[static_cast<std::size_t>(t0)]) continue;
    HyperplaneOrbit orb;
    std::deque<int> queue{t0};
    seen[static_cast<std::size_t>(t0)] = true;
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      orb.reflections.push_back(t);
      for (const GroupElement* g : {&bip.c_plus, &bip.c_minus}) {
        const int img = sys.positive_of((*g)(t));
        if (!seen[static_cast<std::size_t>(img)]) {
          seen[static_cast<std::size_t>(img)] = true;
          queue.push_back(img);
        }
      }
    }
    std::sort(orb.reflections.begin(), orb.reflections.end());
    for (int t : orb.reflections)
      if (t < sys.rank) orb.simples.push_back(t);

    const int size = static_cast<int>(orb.reflections.size());
    const std::string where = "orbit of H_" + std::to_string(t0) + ": ";
    if (2 * size == h) {
      if (orb.simples.size() != 1)
        rep.failures.push_back(where + "size h/2 but meets the simple hyperplanes " + std::to_string(orb.simples.size()) + " times");
      else if (sys.positive_of(w0(orb.simples[0])) != orb.simples[0])
        rep.failures.push_back(where + "simple hyperplane is not w0-stable");
    } else if (size == h) {
      if (orb.simples.size() != 2)
        rep.failures.push_back(where + "size h but meets the simple hyperplanes " + std::to_string(orb.simples.size()) + " times");
      else if (sys.positive_of(w0(orb.simples[0])) != orb.simples[1])
        rep.failures.push_back(where + "the two simple hyperplanes are not exchanged by w0");
    } else {
      rep.failures.push_back(where + "size " + std::to_string(size) + " is neither h/2 nor h");
    }
    rep.orbits.push_back(std::move(orb));
  }
  return rep;
}

}  // namespace coxplane
