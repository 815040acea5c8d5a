#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace polycond {

using Vec2 = Eigen::Vector2d;

// Malformed input geometry (self-intersections, degenerate polygons, ...).
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent problem description (region ids, conductivity bounds, ...).
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Counterclockwise perpendicular.
inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

// Wraps an angle into [0, 2*pi).
double wrap_angle(double a);

double polygon_signed_area(const std::vector<Vec2>& poly);

// No two non-adjacent edges intersect, no adjacent edges overlap.
bool polygon_is_simple(const std::vector<Vec2>& poly);

bool polygon_is_convex(const std::vector<Vec2>& poly);

// Winding-number test. Points within `tol` of an edge count as inside.
bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly, double tol = 0.0);

double dist_point_segment(const Vec2& p, const Vec2& a, const Vec2& b);
double dist_segment_segment(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Distance to the boundary polyline of a closed polygon.
double dist_point_polygon_boundary(const Vec2& p, const std::vector<Vec2>& poly);

// Interiors of the segments intersect in a single point (shared endpoints do
// not count as a crossing).
bool segments_properly_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Collinear segments sharing more than a single point.
bool segments_overlap_collinear(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                                double tol);

struct InscribedDisk {
  Vec2 center{0.0, 0.0};
  double radius = 0.0;
  bool exact = false;  // Chebyshev center (convex) vs grid lower bound
};

// Largest disk contained in the polygon. Convex polygons are solved exactly
// by enumerating active triples of edge half-planes; nonconvex ones fall back
// to a grid search at `grid_resolution`.
InscribedDisk largest_inscribed_disk(const std::vector<Vec2>& poly, double grid_resolution);

}  // namespace polycond
