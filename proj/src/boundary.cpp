#include "nrshift/boundary.hpp"

#include "nrshift/error.hpp"
#include "nrshift/geometry.hpp"
#include "nrshift/nrange.hpp"

#include <algorithm>
#include <cmath>

namespace nrshift {

CircleFamily CircleFamily::make(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0) || !std::isfinite(a) || !std::isfinite(c)) {
        throw Error(ErrorKind::InvalidFamily, "family needs a, c > 0");
    }
    if (std::abs(a - c - 1.0) > 1e-12) throw Error(ErrorKind::InvalidFamily, "family needs a - c = 1");
    return CircleFamily(a, c);
}

NormalizedFamily normalize_family(Complex a, Complex c) {
    if (std::abs(a) == 0.0) throw Error(ErrorKind::InvalidFamily, "family needs a != 0");
    return NormalizedFamily{CircleFamily::make(std::abs(a), std::abs(c)), a / std::abs(a)};
}

Circle circle_at(const CircleFamily& f, double theta) {
    const double a = f.a(), c = f.c(), s = a + c;
    return Circle{(a + c * std::polar(1.0, theta)) / s, a * c * (1.0 - std::cos(theta)) / (s * s)};
}

RifFactor family_factor(const CircleFamily& f) { return factor_from_coeffs(f.a(), -1.0, f.c(), 0.0); }

RifProduct family_product(const CircleFamily& f) {
    const RifFactor g = family_factor(f);
    return RifProduct({g, g});
}

double reparam_angle(const CircleFamily& f, Complex tau) {
    const Complex w = std::conj(tau);
    return std::arg(-(f.c() + f.a() * w) / (f.a() + f.c() * w));
}

double reparam_consistency(const CircleFamily& f, const RifProduct& theta, int samples) {
    if (theta.size() != 2) throw Error(ErrorKind::InvalidArgument, "family product has two factors");
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
    const MatrixSymbol m = build_symbol(theta);
    double worst = 0.0;
    for (const Complex tau : torus_grid(samples)) {
        const EllipseDisk e = ellipse_from_2x2(eval_symbol(m, tau));
        const Circle expect = circle_at(f, reparam_angle(f, tau));
        // Equal foci, so the range is a disk of radius minor / 2.
        worst = std::max({worst, std::abs(e.center() - expect.center), std::abs(0.5 * e.minor - expect.radius),
                          std::abs(e.f1 - e.f2)});
    }
    return worst;
}

std::vector<double> uniform_grid(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "grid needs at least one point");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = 2.0 * kPi * k / n;
    return g;
}

namespace {

EnvelopeCurve trace(const CircleFamily& f, const std::vector<double>& grid, Branch branch) {
    const double k = f.a() / (f.a() + f.c());
    EnvelopeCurve e;
    e.branch = branch;
    e.thetas = grid;
    e.s.reserve(grid.size());
    e.points.reserve(grid.size());
    for (const double theta : grid) {
        const double bend = std::asin(k * std::sin(theta));
        const double s = branch == Branch::Outer ? theta - bend : theta - kPi + bend;
        e.s.push_back(s);
        if (theta == 0.0) {
            e.points.push_back({1.0, 0.0});
            continue;
        }
        const Circle circle = circle_at(f, theta);
        e.points.push_back(to_point(circle.center + circle.radius * std::polar(1.0, s)));
    }
    return e;
}

}  // namespace

EnvelopePair envelope(const CircleFamily& f, const std::vector<double>& grid) {
    for (const double t : grid)
        if (!(t >= 0.0 && t < 2.0 * kPi)) throw Error(ErrorKind::InvalidArgument, "envelope grid must lie in [0, 2pi)");
    return EnvelopePair{trace(f, grid, Branch::Outer), trace(f, grid, Branch::Inner)};
}

EnvelopeResiduals envelope_residuals(const EnvelopeCurve& e, const CircleFamily& f) {
    const double a = f.a(), c = f.c(), s = a + c;
    EnvelopeResiduals out;
    for (std::size_t i = 0; i < e.points.size(); ++i) {
        const double theta = e.thetas[i];
        const Circle circle = circle_at(f, theta);
        const double dx = e.points[i].x - circle.center.real();
        const double dy = e.points[i].y - circle.center.imag();
        const double c1p = -c * std::sin(theta) / s;
        const double c2p = c * std::cos(theta) / s;
        const double rp = a * c * std::sin(theta) / (s * s);
        out.f = std::max(out.f, std::abs(dx * dx + dy * dy - circle.radius * circle.radius));
        out.f_theta = std::max(out.f_theta, std::abs(-2.0 * (dx * c1p + dy * c2p + circle.radius * rp)));
    }
    return out;
}

double non_circularity_gap(const CircleFamily& f) {
    const double a = f.a(), c = f.c(), s = a + c;
    const double qx = a / s, qy = (c * c + 2.0 * a * c) / (s * s);
    const double alpha = a * a / (s * s);
    const double r = (2.0 * a * c + c * c) / (s * s);
    return (qx - alpha) * (qx - alpha) + qy * qy - r * r;
}

bool convexity_check(const EnvelopeCurve& e) {
    const std::size_t n = e.points.size();
    if (n < 3) return true;
    for (std::size_t i = 1; i < e.s.size(); ++i)
        if (!(e.s[i] > e.s[i - 1])) return false;

    bool pos = false, neg = false;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point p0 = e.points[i];
        const Point p1 = e.points[(i + 1) % n];
        const Point p2 = e.points[(i + 2) % n];
        const double ux = p1.x - p0.x, uy = p1.y - p0.y;
        const double vx = p2.x - p1.x, vy = p2.y - p1.y;
        const double cr = ux * vy - uy * vx;
        if (cr > 1e-10) pos = true;
        if (cr < -1e-10) neg = true;
        turning += std::atan2(cr, ux * vx + uy * vy);
    }
    if (pos && neg) return false;
    return std::abs(std::abs(turning) - 2.0 * kPi) < 1e-6;
}

double hull_vs_envelope(const CircleFamily& f, const MatrixSymbol& m, int t, int k, int envelope_samples) {
    const PlanarRegion region = region_hull(m, t, k);
    const EnvelopePair env = envelope(f, uniform_grid(envelope_samples));
    return hausdorff_distance(region.hull, env.outer.points);
}

}  // namespace nrshift
