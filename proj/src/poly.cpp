#include "nrshift/poly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nrshift {

// ---------------------------------------------------------------- BivariatePoly

BivariatePoly::BivariatePoly() : c_(1) {}

BivariatePoly::BivariatePoly(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t width = 1;
    for (const auto& row : rows) width = std::max(width, row.size());
    const std::size_t height = std::max<std::size_t>(rows.size(), 1);
    deg_ = {static_cast<int>(height) - 1, static_cast<int>(width) - 1};
    c_.assign(height * width, Complex{});
    std::size_t k1 = 0;
    for (const auto& row : rows) {
        std::copy(row.begin(), row.end(), c_.begin() + static_cast<std::ptrdiff_t>(k1 * width));
        ++k1;
    }
    trim();
}

BivariatePoly::BivariatePoly(Bidegree grid, std::vector<Complex> row_major) : deg_(grid), c_(std::move(row_major)) {
    if (grid.z1 < 0 || grid.z2 < 0 ||
        c_.size() != static_cast<std::size_t>(grid.z1 + 1) * static_cast<std::size_t>(grid.z2 + 1)) {
        throw Error(ErrorKind::InvalidArgument, "coefficient grid does not match its degree");
    }
    trim();
}

Complex BivariatePoly::coeff(int k1, int k2) const {
    if (k1 < 0 || k2 < 0 || k1 > deg_.z1 || k2 > deg_.z2) return {};
    return c_[static_cast<std::size_t>(k1) * static_cast<std::size_t>(deg_.z2 + 1) + static_cast<std::size_t>(k2)];
}

bool BivariatePoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Complex v) { return v == Complex{}; });
}

void BivariatePoly::trim() {
    int m = deg_.z1;
    int n = deg_.z2;
    const auto at = [&](int k1, int k2) {
        return c_[static_cast<std::size_t>(k1) * static_cast<std::size_t>(deg_.z2 + 1) + static_cast<std::size_t>(k2)];
    };
    const auto row_zero = [&](int k1) {
        for (int k2 = 0; k2 <= n; ++k2)
            if (at(k1, k2) != Complex{}) return false;
        return true;
    };
    const auto col_zero = [&](int k2) {
        for (int k1 = 0; k1 <= m; ++k1)
            if (at(k1, k2) != Complex{}) return false;
        return true;
    };
    while (m > 0 && row_zero(m)) --m;
    while (n > 0 && col_zero(n)) --n;
    if (m == deg_.z1 && n == deg_.z2) return;

    std::vector<Complex> out(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1));
    for (int k1 = 0; k1 <= m; ++k1)
        for (int k2 = 0; k2 <= n; ++k2)
            out[static_cast<std::size_t>(k1) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(k2)] = at(k1, k2);
    c_ = std::move(out);
    deg_ = {m, n};
}

Complex eval2(const BivariatePoly& p, Complex z1, Complex z2) {
    const auto [m, n] = p.degree();
    Complex acc{};
    for (int k1 = m; k1 >= 0; --k1) {
        Complex row{};
        for (int k2 = n; k2 >= 0; --k2) row = row * z2 + p.coeff(k1, k2);
        acc = acc * z1 + row;
    }
    return acc;
}

BivariatePoly reflect(const BivariatePoly& p, Bidegree deg) {
    const auto d = p.degree();
    if (deg.z1 < d.z1 || deg.z2 < d.z2) {
        throw Error(ErrorKind::InvalidDegree, "reflection degree is smaller than the polynomial degree");
    }
    std::vector<Complex> out(static_cast<std::size_t>(deg.z1 + 1) * static_cast<std::size_t>(deg.z2 + 1));
    for (int k1 = 0; k1 <= deg.z1; ++k1)
        for (int k2 = 0; k2 <= deg.z2; ++k2)
            out[static_cast<std::size_t>(k1) * static_cast<std::size_t>(deg.z2 + 1) + static_cast<std::size_t>(k2)] =
                std::conj(p.coeff(deg.z1 - k1, deg.z2 - k2));
    return BivariatePoly(deg, std::move(out));
}

// --------------------------------------------------------------- UnivariatePoly

UnivariatePoly::UnivariatePoly() : c_(1) {}

UnivariatePoly::UnivariatePoly(std::initializer_list<Complex> coeffs) : c_(coeffs) { trim(); }

UnivariatePoly::UnivariatePoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
    while (c_.size() > 1 && c_.back() == Complex{}) c_.pop_back();
    if (c_.empty()) c_.emplace_back();
}

UnivariatePoly UnivariatePoly::from_roots(const std::vector<Complex>& roots, Complex leading) {
    UnivariatePoly out{leading};
    for (const auto& r : roots) out = out * UnivariatePoly{-r, 1.0};
    return out;
}

Complex UnivariatePoly::operator()(Complex z) const {
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::conj_coeffs() const {
    std::vector<Complex> out(c_.size());
    std::transform(c_.begin(), c_.end(), out.begin(), [](Complex v) { return std::conj(v); });
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const UnivariatePoly& lhs, const UnivariatePoly& rhs) {
    std::vector<Complex> out(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(Complex s, const UnivariatePoly& p) {
    std::vector<Complex> out(p.c_);
    for (auto& v : out) v *= s;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly slice_in_z1(const BivariatePoly& p, Complex z2) {
    const auto [m, n] = p.degree();
    std::vector<Complex> out(static_cast<std::size_t>(m + 1));
    for (int k1 = 0; k1 <= m; ++k1) {
        Complex row{};
        for (int k2 = n; k2 >= 0; --k2) row = row * z2 + p.coeff(k1, k2);
        out[static_cast<std::size_t>(k1)] = row;
    }
    return UnivariatePoly(std::move(out));
}

// ------------------------------------------------------------------ stability

LinearStability linear_stability_check(Complex a, Complex b, Complex c) {
    const double gap = std::abs(a) - (std::abs(b) + std::abs(c));
    if (std::abs(gap) <= kStabilityTolerance) return LinearStability::StableWithTorusZero;
    if (gap < 0.0) return LinearStability::Unstable;
    return LinearStability::StableNoTorusZero;
}

// ---------------------------------------------------------------- rootfinding

namespace {

double scaled_residual(const UnivariatePoly& q, Complex z) {
    const double r = std::max(1.0, std::abs(z));
    double scale = 0.0;
    double power = 1.0;
    for (const auto& c : q.coeffs()) {
        scale += std::abs(c) * power;
        power *= r;
    }
    return std::abs(q(z)) / scale;
}

double worst_residual(const UnivariatePoly& q, const std::vector<Complex>& zs) {
    double worst = 0.0;
    for (const auto& z : zs) worst = std::max(worst, scaled_residual(q, z));
    return worst;
}

}  // namespace

std::vector<Complex> roots(const UnivariatePoly& q, const RootOptions& opts) {
    if (q.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "the zero polynomial has no isolated roots");
    }
    const int n = q.degree();
    if (n == 0) return {};
    if (n == 1) return {-q[0] / q[1]};

    const Complex lead = q.leading();
    std::vector<Complex> monic(q.coeffs());
    for (auto& c : monic) c /= lead;
    const UnivariatePoly p(monic);

    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(monic[static_cast<std::size_t>(k)]));
    radius = 1.0 + radius;

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * k / n + 0.4 + jitter(rng);
        z[static_cast<std::size_t>(k)] = std::polar(radius * (1.0 + jitter(rng)), angle);
    }

    std::vector<Complex> best = z;
    double best_residual = worst_residual(q, z);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double max_step = 0.0;
        double scale = 1.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == Complex{}) denom = 1e-300;  // coincident iterates; nudge apart
            const Complex step = p(z[k]) / denom;
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step));
            scale = std::max(scale, std::abs(z[k]));
        }
        const double residual = worst_residual(q, z);
        if (residual < best_residual) {
            best_residual = residual;
            best = z;
        }
        if (residual <= opts.tolerance && max_step <= 1e-14 * scale) break;
    }

    if (best_residual > opts.tolerance) {
        throw RootfindFailure("Durand-Kerner did not converge", best);
    }
    return best;
}

}  // namespace nrshift
