#include "coxplane/geometry.h"

#include <algorithm>

namespace coxplane {

namespace {

bool near(Vec2 a, Vec2 b, double tol) { return dist(a, b) <= tol; }

bool on_segment(Vec2 p, Vec2 a, Vec2 b, double tol) {
  const Vec2 d = b - a;
  const double len = d.norm();
  if (len <= tol) return near(p, a, tol);
  if (std::abs(cross(d, p - a)) > tol * len) return false;
  const double t = dot(p - a, d) / (len * len);
  return t >= -tol / len && t <= 1 + tol / len;
}

std::vector<std::pair<Vec2, Vec2>> edges(const std::vector<Vec2>& hull) {
  std::vector<std::pair<Vec2, Vec2>> out;
  if (hull.size() == 2) out.emplace_back(hull[0], hull[1]);
  if (hull.size() >= 3)
    for (std::size_t i = 0; i < hull.size(); ++i) out.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
  return out;
}

}  // namespace

int orientation(Vec2 a, Vec2 b, Vec2 c, double tol) {
  const double len = std::max(dist(a, b), dist(a, c));
  if (len <= tol) return 0;
  const double v = cross(b - a, c - a);
  if (std::abs(v) <= tol * len) return 0;
  return v > 0 ? 1 : -1;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double tol) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> uniq;
  for (Vec2 p : pts)
    if (std::none_of(uniq.begin(), uniq.end(), [&](Vec2 q) { return near(p, q, tol); })) uniq.push_back(p);
  if (uniq.size() <= 1) return uniq;

  std::vector<Vec2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], uniq[i], tol) <= 0) --k;
    hull[k++] = uniq[i];
  }
  for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], uniq[i], tol) <= 0) --k;
    hull[k++] = uniq[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 1) hull.push_back(uniq.back());  // all points collinear: keep the extremes
  if (hull.size() == 2 && near(hull[0], hull[1], tol)) hull.pop_back();
  return hull;
}

bool in_hull(const std::vector<Vec2>& hull, Vec2 p, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return near(hull[0], p, tol);
  if (hull.size() == 2) return on_segment(p, hull[0], hull[1], tol);
  for (auto [a, b] : edges(hull))
    if (orientation(a, b, p, tol) < 0) return false;
  return true;
}

bool on_hull_boundary(const std::vector<Vec2>& hull, Vec2 p, double tol) {
  if (hull.size() <= 2) {
    for (Vec2 q : hull)
      if (near(p, q, tol)) return true;
    return false;
  }
  for (auto [a, b] : edges(hull))
    if (on_segment(p, a, b, tol)) return true;
  return false;
}

std::vector<Vec2> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double tol) {
  const Vec2 d = a1 - a0, e = b1 - b0;
  const double la = d.norm(), lb = e.norm();
  if (la <= tol) return on_segment(a0, b0, b1, tol) ? std::vector<Vec2>{a0} : std::vector<Vec2>{};
  if (lb <= tol) return on_segment(b0, a0, a1, tol) ? std::vector<Vec2>{b0} : std::vector<Vec2>{};

  const double denom = cross(d, e);
  if (std::abs(denom) <= tol * la * lb) {
    // Parallel; only collinear overlaps matter.
    if (std::abs(cross(d, b0 - a0)) > tol * la) return {};
    double t0 = dot(b0 - a0, d) / (la * la), t1 = dot(b1 - a0, d) / (la * la);
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    if (lo > hi + tol / la) return {};
    const Vec2 p = a0 + lo * d, q = a0 + std::max(lo, hi) * d;
    if (near(p, q, tol)) return {p};
    return {p, q};
  }
  const double t = cross(b0 - a0, e) / denom;
  const double s = cross(b0 - a0, d) / denom;
  if (t < -tol / la || t > 1 + tol / la || s < -tol / lb || s > 1 + tol / lb) return {};
  return {a0 + std::clamp(t, 0.0, 1.0) * d};
}

std::vector<Vec2> hull_intersection_witnesses(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol) {
  std::vector<Vec2> out;
  for (Vec2 p : a)
    if (in_hull(b, p, tol)) out.push_back(p);
  for (Vec2 p : b)
    if (in_hull(a, p, tol)) out.push_back(p);
  for (auto [a0, a1] : edges(a))
    for (auto [b0, b1] : edges(b))
      for (Vec2 p : segment_intersection(a0, a1, b0, b1, tol)) out.push_back(p);
  return out;
}

}  // namespace coxplane
