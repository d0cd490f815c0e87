#include "doctest.h"
#include "nrshift/geometry.hpp"

#include <random>

using namespace nrshift;

TEST_CASE("hull of a square with interior and collinear points") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}, {1, 0.25}, {0.2, 0.7}};
    const auto h = convex_hull(pts);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == Point{0, 0});
    CHECK(h[1] == Point{1, 0});
    CHECK(h[2] == Point{1, 1});
    CHECK(h[3] == Point{0, 1});
}

TEST_CASE("degenerate hulls") {
    CHECK(convex_hull({}).empty());
    CHECK(convex_hull({{1, 0}, {1, 0}}).size() == 1);
    const auto seg = convex_hull({{0, 0}, {2, 0}, {1, 0}});
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == Point{0, 0});
    CHECK(seg[1] == Point{2, 0});
}

TEST_CASE("hull invariants on random clouds") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<Point> pts;
    for (int i = 0; i < 2000; ++i) pts.push_back({g(rng), 0.3 * g(rng)});
    const auto h = convex_hull(pts);
    CHECK(convex_hull(h) == h);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point a = h[i], b = h[(i + 1) % h.size()], c = h[(i + 2) % h.size()];
        CHECK((b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) >= -1e-12);
    }
    double worst = 1e300;
    for (const auto& p : pts) worst = std::min(worst, hull_margin(h, p));
    CHECK(worst >= -1e-12);
}

TEST_CASE("margin, containment and distances") {
    const std::vector<Point> sq{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    CHECK(hull_margin(sq, {0, 0}) == doctest::Approx(1.0));
    CHECK(hull_margin(sq, {1, 0}) == doctest::Approx(0.0));
    CHECK(hull_margin(sq, {2, 0}) < 0.0);
    CHECK(point_in_polygon(sq, {0.3, -0.2}));
    CHECK(point_in_polygon(sq, {1, 0.5}));
    CHECK_FALSE(point_in_polygon(sq, {1.5, 0}));
    CHECK(distance_to_boundary(sq, {0, 0}) == doctest::Approx(1.0));
    CHECK(distance_to_boundary(sq, {3, 0}) == doctest::Approx(2.0));

    const std::vector<Point> big{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}};
    CHECK(hausdorff_distance(sq, big) == doctest::Approx(std::sqrt(2.0)));
    CHECK(hausdorff_distance(sq, sq) == 0.0);
}
