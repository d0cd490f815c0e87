#include "nrshift/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrshift {

namespace {

constexpr long double kCollinear = 1e-12L;

long double cross(Point o, Point a, Point b) {
    return (static_cast<long double>(a.x) - o.x) * (static_cast<long double>(b.y) - o.y) -
           (static_cast<long double>(a.y) - o.y) * (static_cast<long double>(b.x) - o.x);
}

// a is kept only if it sits strictly left of o->b by more than the tolerance
// (measured as a distance to the chord).
bool turns_left(Point o, Point a, Point b) {
    const long double dx = static_cast<long double>(b.x) - o.x;
    const long double dy = static_cast<long double>(b.y) - o.y;
    const long double chord = std::sqrt(dx * dx + dy * dy);
    if (chord == 0.0L) return false;
    return cross(o, a, b) / chord > kCollinear;
}

double segment_distance(Point p, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double directed_hausdorff(const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (const auto& p : from) worst = std::max(worst, distance_to_boundary(to, p));
    return worst;
}

}  // namespace

std::vector<Point> convex_hull(std::vector<Point> points) {
    std::sort(points.begin(), points.end(), [](Point l, Point r) { return l.x < r.x || (l.x == r.x && l.y < r.y); });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return points;

    // Lower hull left to right, then upper hull right to left; the last point of
    // each chain is the first point of the other.
    std::vector<Point> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], p)) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], *it)) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

double hull_margin(const std::vector<Point>& hull, Point p) {
    if (hull.empty()) return -std::numeric_limits<double>::infinity();
    if (hull.size() < 3) {
        return -(hull.size() == 1 ? std::hypot(p.x - hull[0].x, p.y - hull[0].y) : segment_distance(p, hull[0], hull[1]));
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point a = hull[i];
        const Point b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if (len == 0.0) continue;
        margin = std::min(margin, static_cast<double>(cross(a, b, p)) / len);
    }
    return margin;
}

bool point_in_polygon(const std::vector<Point>& polygon, Point p) {
    if (polygon.empty()) return false;
    if (distance_to_boundary(polygon, p) <= 1e-12) return true;
    int winding = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Point a = polygon[i];
        const Point b = polygon[(i + 1) % polygon.size()];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(a, b, p) > 0) ++winding;
        } else if (b.y <= p.y && cross(a, b, p) < 0) {
            --winding;
        }
    }
    return winding != 0;
}

double distance_to_boundary(const std::vector<Point>& polygon, Point p) {
    if (polygon.empty()) return std::numeric_limits<double>::infinity();
    if (polygon.size() == 1) return std::hypot(p.x - polygon[0].x, p.y - polygon[0].y);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < polygon.size(); ++i)
        best = std::min(best, segment_distance(p, polygon[i], polygon[(i + 1) % polygon.size()]));
    return best;
}

double hausdorff_distance(const std::vector<Point>& lhs, const std::vector<Point>& rhs) {
    return std::max(directed_hausdorff(lhs, rhs), directed_hausdorff(rhs, lhs));
}

}  // namespace nrshift
