#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace coxplane {

struct Vec2 {
  double x = 0;
  double y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  double norm() const { return std::hypot(x, y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 within tol (scaled by
/// the lengths involved).
int orientation(Vec2 a, Vec2 b, Vec2 c, double tol);

/// Convex hull in counterclockwise order without repeated or collinear
/// points. Returns one point for a point set, two for a segment.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts, double tol);

/// Whether p lies in the closed convex polygon (hull as returned above).
bool in_hull(const std::vector<Vec2>& hull, Vec2 p, double tol);

/// Whether p lies on the relative boundary of the hull: the point itself,
/// the two endpoints of a segment, or the edges of a polygon.
bool on_hull_boundary(const std::vector<Vec2>& hull, Vec2 p, double tol);

/// Points of the intersection of two convex hulls sufficient to decide
/// emptiness and diameter: vertices of each inside the other and pairwise
/// edge intersection points. Empty iff the hulls are disjoint.
std::vector<Vec2> hull_intersection_witnesses(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol);

/// Intersection of two closed segments: nothing, a point, or (when
/// collinear and overlapping) the overlap's endpoints.
std::vector<Vec2> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1, double tol);

}  // namespace coxplane
