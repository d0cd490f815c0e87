#include "nrshift/nrange.hpp"

#include "nrshift/error.hpp"
#include "nrshift/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nrshift {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// A <- U^* A U and V <- V U for the unitary U that is the identity outside the
// (p, q) block, where that block is [[up_p, up_q], [uq_p, uq_q]].
void apply_rotation(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, Complex upp, Complex upq,
                    Complex uqp, Complex uqq) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& input) {
    const std::size_t n = input.size();
    if (input.max_abs_diff(input.adjoint()) > kHermitianTolerance) {
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within 1e-10");
    }
    ComplexMatrix a = input;
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = kOffDiagonalTarget * std::max(1.0, input.frobenius_norm());

    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                // Phase e makes the pivot real: with D = diag(1, conj(e)) the (p, q)
                // entry of D^* A D is |a_pq|, then a real rotation clears it.
                const Complex e = a(p, q) / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = theta == 0.0 ? 1.0 : std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                apply_rotation(a, v, p, q, c, s, -s * std::conj(e), c * std::conj(e));
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return a(l, l).real() < a(r, r).real(); });
    HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigs(const ComplexMatrix& a) { return hermitian_eigensystem(a).values; }

SupportSamples support_function(const ComplexMatrix& a, int k) {
    if (k < 8) throw Error(ErrorKind::InvalidArgument, "support function needs at least 8 angles");
    SupportSamples out;
    out.angles.resize(static_cast<std::size_t>(k));
    out.values.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double phi = 2.0 * kPi * i / k;
        out.angles[static_cast<std::size_t>(i)] = phi;
        out.values[static_cast<std::size_t>(i)] = hermitian_eigs(a.rotated_hermitian_part(phi)).back();
    }
    return out;
}

double support_gap(const ComplexMatrix& a, const ComplexMatrix& b, int k) {
    const SupportSamples ha = support_function(a, k), hb = support_function(b, k);
    double worst = 0.0;
    for (std::size_t i = 0; i < ha.values.size(); ++i) worst = std::max(worst, std::abs(ha.values[i] - hb.values[i]));
    return worst;
}

Complex support_point(const ComplexMatrix& a, double phi) {
    const auto sys = hermitian_eigensystem(a.rotated_hermitian_part(phi));
    const std::size_t n = a.size();
    const std::size_t top = n - 1;
    Complex value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * sys.vectors(j, top);
        value += std::conj(sys.vectors(i, top)) * row;
    }
    return value;
}

// ------------------------------------------------------------------- ellipses

double EllipseDisk::major() const { return std::hypot(std::abs(f1 - f2), minor); }

double EllipseDisk::axis_angle() const { return f1 == f2 ? 0.0 : std::arg(f2 - f1); }

Complex EllipseDisk::boundary_point(double t) const {
    return center() + std::polar(1.0, axis_angle()) * Complex(0.5 * major() * std::cos(t), 0.5 * minor * std::sin(t));
}

double EllipseDisk::support(double phi) const {
    const double rel = axis_angle() - phi;
    const double half_major = 0.5 * major(), half_minor = 0.5 * minor;
    return (center() * std::polar(1.0, -phi)).real() +
           std::sqrt(half_major * half_major * std::cos(rel) * std::cos(rel) +
                     half_minor * half_minor * std::sin(rel) * std::sin(rel));
}

EllipseDisk ellipse_from_2x2(const ComplexMatrix& a) {
    if (a.size() != 2) throw Error(ErrorKind::InvalidArgument, "elliptical range needs a 2x2 matrix");
    EllipseDisk e;
    if (a(1, 0) == 0.0 || a(0, 1) == 0.0) {
        e.f1 = a(0, 0);
        e.f2 = a(1, 1);
    } else {
        const Complex half_trace = 0.5 * (a(0, 0) + a(1, 1));
        const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        const Complex disc = std::sqrt(half_trace * half_trace - det);
        e.f1 = half_trace + disc;
        e.f2 = half_trace - disc;
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) trace += std::norm(a(i, j));
    e.minor = std::sqrt(std::max(0.0, trace - std::norm(e.f1) - std::norm(e.f2)));
    return e;
}

double minor_axis_identity_residual(const RifProduct& theta, Complex tau) {
    if (theta.size() != 2) throw Error(ErrorKind::InvalidArgument, "minor-axis identity is for two factors");
    if (std::abs(std::abs(tau) - 1.0) > 1e-10) throw Error(ErrorKind::InvalidArgument, "tau must be unimodular");
    const RifFactor& g1 = theta[0];
    const RifFactor& g2 = theta[1];
    const double minor = std::abs(g1.lambda() * g2.lambda()) * std::abs((tau - g1.tau2()) / (g1.a() + g1.c() * tau)) *
                         std::abs((tau - g2.tau2()) / (g2.a() + g2.c() * tau));
    const ComplexMatrix m = eval_symbol(build_symbol(theta), tau);
    const double rhs = std::sqrt(std::max(0.0, 1.0 - std::norm(m(0, 0)))) * std::sqrt(std::max(0.0, 1.0 - std::norm(m(1, 1))));
    return std::abs(minor - rhs);
}

// ------------------------------------------------------------------ hull sweep

std::vector<Complex> torus_grid(int t) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "torus grid needs at least one sample");
    std::vector<Complex> grid(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) grid[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / t);
    grid[0] = 1.0;
    if (t % 2 == 0) {
        grid[static_cast<std::size_t>(t / 2)] = -1.0;
    } else {
        grid.push_back(-1.0);
    }
    return grid;
}

std::vector<Point> range_boundary_samples(const ComplexMatrix& a, int k) {
    std::vector<Point> out;
    if (a.size() == 1) {
        out.push_back(to_point(a(0, 0)));
        return out;
    }
    out.reserve(static_cast<std::size_t>(k));
    if (a.size() == 2) {
        const EllipseDisk e = ellipse_from_2x2(a);
        for (int i = 0; i < k; ++i) out.push_back(to_point(e.boundary_point(2.0 * kPi * i / k)));
        return out;
    }
    for (int i = 0; i < k; ++i) out.push_back(to_point(support_point(a, 2.0 * kPi * i / k)));
    return out;
}

namespace {

void check_sweep(int t, int k) {
    if (t < 16) throw Error(ErrorKind::InvalidArgument, "need at least 16 tau samples");
    if (k < 16) throw Error(ErrorKind::InvalidArgument, "need at least 16 angle samples");
}

PlanarRegion finish_region(std::vector<std::vector<Point>>& per_tau) {
    PlanarRegion region;
    for (auto& chunk : per_tau) region.points.insert(region.points.end(), chunk.begin(), chunk.end());
    region.hull = convex_hull(region.points);
    return region;
}

}  // namespace

PlanarRegion region_hull(const MatrixSymbol& symbol, int t, int k) {
    check_sweep(t, k);
    const auto grid = torus_grid(t);
    std::vector<std::vector<Point>> per_tau(grid.size());
    const int count = static_cast<int>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        per_tau[idx] = range_boundary_samples(eval_symbol(symbol, grid[idx]), k);
    }
    return finish_region(per_tau);
}

PlanarRegion region_hull_serial(const MatrixSymbol& symbol, int t, int k) {
    check_sweep(t, k);
    const auto grid = torus_grid(t);
    std::vector<std::vector<Point>> per_tau;
    per_tau.reserve(grid.size());
    for (const auto& tau : grid) per_tau.push_back(range_boundary_samples(eval_symbol(symbol, tau), k));
    return finish_region(per_tau);
}

double numerical_radius(const PlanarRegion& region) {
    const auto& pts = region.hull.empty() ? region.points : region.hull;
    if (pts.empty()) throw Error(ErrorKind::InvalidArgument, "numerical radius of an empty region");
    double r = 0.0;
    for (const auto& p : pts) r = std::max(r, std::hypot(p.x, p.y));
    return r;
}

// ------------------------------------------------------------------ zero tests

WitnessVerdict witness_from_foci(Complex f1, Complex f2) {
    return std::abs(f1) + std::abs(f2) < std::abs(1.0 - std::conj(f1) * f2) - kZeroTolerance
               ? WitnessVerdict::InteriorWitness
               : WitnessVerdict::NoWitness;
}

namespace {

FocusCircleCondition focus_circle(const RifFactor& g, Complex focus) {
    FocusCircleCondition out;
    const Complex num = g.a() * std::conj(g.b()) - g.c() * std::conj(g.d());
    const double den = std::norm(g.a()) - std::norm(g.c());
    if (std::abs(den) > 1e-14 * std::max(1.0, g.coefficient_scale() * g.coefficient_scale())) {
        out.beta = -num / den;
        out.holds = std::abs(std::conj(out.beta) - focus) > std::abs(out.beta) + kZeroTolerance;
    } else {
        out.beta = Complex(std::nan(""), std::nan(""));
    }
    if (std::abs(num.imag()) <= 1e-12 * std::max(1.0, std::abs(num))) {
        out.real_test = std::abs(std::conj(g.a()) * g.d() - g.b() * std::conj(g.c())) > std::abs(num) + kZeroTolerance;
    }
    return out;
}

}  // namespace

GeneralZeroReport zero_test_general(const RifProduct& theta, Complex tau) {
    if (theta.size() != 2) throw Error(ErrorKind::InvalidArgument, "zero test needs exactly two factors");
    if (std::abs(std::abs(tau) - 1.0) > 1e-10) throw Error(ErrorKind::InvalidArgument, "tau must be unimodular");
    if (theta.distance_to_exceptional(tau) <= kSliceExclusion) {
        throw Error(ErrorKind::ExceptionalSlice, "tau lies in the exceptional set");
    }
    const ComplexMatrix m = eval_symbol(build_symbol(theta), tau);
    GeneralZeroReport out;
    out.f1 = m(0, 0);
    out.f2 = m(1, 1);
    out.foci_sum = std::abs(out.f1) + std::abs(out.f2);
    out.major_axis = std::abs(1.0 - std::conj(out.f1) * out.f2);
    out.verdict = witness_from_foci(out.f1, out.f2);
    out.circle[0] = focus_circle(theta[0], out.f1);
    out.circle[1] = focus_circle(theta[1], out.f2);
    return out;
}

NormalizedZeroReport zero_test_normalized(double c1, double c2) {
    if (!(c1 > 0.0) || !(c2 > 0.0) || !std::isfinite(c1) || !std::isfinite(c2)) {
        throw Error(ErrorKind::NonpositiveCoefficient, "normalized coefficients must be positive");
    }
    NormalizedZeroReport out;
    out.product = c1 * c2;
    out.root_upper = 1.0 / out.product - 1.0;
    out.root_lower = -1.0 - 1.0 / (c1 + c2 + out.product);
    if (std::abs(out.product - 0.5) <= kZeroTolerance) {
        out.verdict = ZeroVerdict::Boundary;
    } else {
        out.verdict = out.product > 0.5 ? ZeroVerdict::Interior : ZeroVerdict::NotInterior;
    }
    return out;
}

RifProduct normalized_product(double c1, double c2) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw Error(ErrorKind::NonpositiveCoefficient, "normalized coefficients must be positive");
    return RifProduct({factor_from_coeffs(c1 + 1.0, -1.0, c1, 0.0), factor_from_coeffs(c2 + 1.0, -1.0, c2, 0.0)});
}

const char* to_string(WitnessVerdict v) { return v == WitnessVerdict::InteriorWitness ? "InteriorWitness" : "NoWitness"; }

const char* to_string(ZeroVerdict v) {
    switch (v) {
        case ZeroVerdict::Interior: return "Interior";
        case ZeroVerdict::Boundary: return "Boundary";
        case ZeroVerdict::NotInterior: return "NotInterior";
    }
    return "?";
}

}  // namespace nrshift
