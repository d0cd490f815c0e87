#pragma once

#include "nrshift/types.hpp"

#include <vector>

namespace nrshift {

/// Counterclockwise convex hull (Andrew's monotone chain). Cross products are
/// evaluated in long double; points within 1e-12 of collinear are dropped.
/// Degenerate inputs return 1 or 2 vertices.
std::vector<Point> convex_hull(std::vector<Point> points);

/// Signed clearance of p from the boundary of a convex CCW polygon: positive
/// inside, zero on the boundary, negative outside.
double hull_margin(const std::vector<Point>& hull, Point p);

/// Winding-number containment; points on an edge count as inside.
bool point_in_polygon(const std::vector<Point>& polygon, Point p);

/// Euclidean distance from p to the closed polygonal curve.
double distance_to_boundary(const std::vector<Point>& polygon, Point p);

/// Symmetric Hausdorff distance between two closed polygonal curves, using
/// vertex-to-edge distances in both directions.
double hausdorff_distance(const std::vector<Point>& lhs, const std::vector<Point>& rhs);

}  // namespace nrshift
