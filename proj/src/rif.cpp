#include "nrshift/rif.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace nrshift {

namespace {

constexpr double kUnimodularTolerance = 1e-10;
constexpr double kTorusZeroTolerance = 1e-9;
constexpr double kStabilityMargin = 1e-9;
constexpr int kStabilityGrid = 64;

// No zero of p in the open bidisk. For fixed z1 the polynomial is linear in z2,
// so on a polar grid of z1 the zero in z2 is solved for exactly (and vice versa).
bool stable_on_bidisk(Complex a, Complex b, Complex c, Complex d) {
    const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    const auto leaves_disk = [&](Complex constant, Complex slope) {
        if (std::abs(slope) <= 1e-14 * scale) return std::abs(constant) > 1e-14 * scale;
        return std::abs(constant / slope) >= 1.0 - kStabilityMargin;
    };
    if (!leaves_disk(a, c) || !leaves_disk(a, b)) return false;
    for (int ir = 0; ir < kStabilityGrid; ++ir) {
        const double r = 0.1 + (0.99 - 0.1) * ir / (kStabilityGrid - 1);
        for (int it = 0; it < kStabilityGrid; ++it) {
            const Complex z = std::polar(r, 2.0 * kPi * it / kStabilityGrid);
            if (!leaves_disk(a + b * z, c + d * z)) return false;
            if (!leaves_disk(a + c * z, b + d * z)) return false;
        }
    }
    return true;
}

}  // namespace

// ------------------------------------------------------------------- RifFactor

BivariatePoly RifFactor::p() const { return BivariatePoly{{a_, c_}, {b_, d_}}; }

BivariatePoly RifFactor::p_tilde() const { return reflect(p(), {1, 1}); }

Complex RifFactor::eval_p_tilde(Complex z1, Complex z2) const {
    return std::conj(a_) * z1 * z2 + std::conj(b_) * z2 + std::conj(c_) * z1 + std::conj(d_);
}

Complex RifFactor::eval(Complex z1, Complex z2) const {
    const Complex den = eval_p(z1, z2);
    if (std::abs(den) <= 1e-12 * coefficient_scale()) {
        throw Error(ErrorKind::DenominatorZero, "p vanishes at the evaluation point");
    }
    return eval_p_tilde(z1, z2) / den;
}

Complex RifFactor::eval_kernel_function(Complex z1, Complex z2) const {
    const Complex den = eval_p(z1, z2);
    if (std::abs(den) <= 1e-12 * coefficient_scale()) {
        throw Error(ErrorKind::DenominatorZero, "p vanishes at the evaluation point");
    }
    return lambda_ * (z2 - tau2_) / den;
}

RifFactor RifFactor::with_flipped_lambda() const {
    RifFactor out = *this;
    out.lambda_ = -lambda_;
    return out;
}

RifFactor factor_from_coeffs(Complex a, Complex b, Complex c, Complex d) {
    const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c), nd = std::norm(d);
    const double scale2 = na + nb + nc + nd;
    if (scale2 == 0.0 || !std::isfinite(scale2)) {
        throw Error(ErrorKind::InvalidArgument, "coefficients must be finite and not all zero");
    }
    const double den1 = na + nb - nc - nd;
    const double den2 = na + nc - nb - nd;
    if (std::abs(den1) <= 1e-14 * scale2 || std::abs(den2) <= 1e-14 * scale2) {
        throw Error(ErrorKind::NotSingularOnTorus, "torus-zero formula is degenerate (zero denominator)");
    }

    RifFactor f;
    f.a_ = a;
    f.b_ = b;
    f.c_ = c;
    f.d_ = d;
    f.tau1_ = -2.0 * (a * std::conj(b) - c * std::conj(d)) / den1;
    f.tau2_ = -2.0 * (a * std::conj(c) - b * std::conj(d)) / den2;
    if (std::abs(std::abs(f.tau1_) - 1.0) > kUnimodularTolerance ||
        std::abs(std::abs(f.tau2_) - 1.0) > kUnimodularTolerance) {
        throw Error(ErrorKind::NotSingularOnTorus, "|tau1| = " + std::to_string(std::abs(f.tau1_)) +
                                                       ", |tau2| = " + std::to_string(std::abs(f.tau2_)) +
                                                       " (expected unimodular)");
    }
    if (std::abs(f.eval_p(f.tau1_, f.tau2_)) > kTorusZeroTolerance * std::max(1.0, f.coefficient_scale())) {
        throw Error(ErrorKind::NotSingularOnTorus, "p does not vanish at the computed torus point");
    }
    if (d == Complex{} && linear_stability_check(a, b, c) == LinearStability::Unstable) {
        throw Error(ErrorKind::UnstableDenominator, "|a| < |b| + |c|: p vanishes in the bidisk");
    }
    if (!stable_on_bidisk(a, b, c, d)) {
        throw Error(ErrorKind::UnstableDenominator, "p vanishes on the bidisk validation grid");
    }
    f.lambda_ = std::sqrt(canonical_zero(std::conj(a) * c - d * std::conj(b)));
    return f;
}

// ------------------------------------------------------------------ RifProduct

RifProduct::RifProduct(std::vector<RifFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "a product needs at least one factor");
    }
}

std::vector<Complex> RifProduct::exceptional_set() const {
    std::vector<Complex> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.tau2());
    return out;
}

double RifProduct::distance_to_exceptional(Complex tau) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : factors_) best = std::min(best, std::abs(tau - f.tau2()));
    return best;
}

Complex eval_product(const RifProduct& theta, Complex z1, Complex z2) {
    Complex acc = 1.0;
    for (const auto& f : theta.factors()) acc *= f.eval(z1, z2);
    return acc;
}

std::vector<Complex> slice_blaschke(const RifProduct& theta, Complex tau, std::uint64_t seed) {
    if (std::abs(std::abs(tau) - 1.0) > kUnimodularTolerance) {
        throw Error(ErrorKind::InvalidArgument, "slice parameter must lie on the unit circle");
    }
    if (theta.distance_to_exceptional(tau) <= kSliceExclusion) {
        throw Error(ErrorKind::ExceptionalSlice, "tau lies in the exceptional set");
    }
    std::vector<Complex> zeros;
    zeros.reserve(theta.size());
    RootOptions opts;
    opts.seed = seed;
    for (const auto& f : theta.factors()) {
        const auto part = roots(slice_in_z1(f.p_tilde(), tau), opts);
        zeros.insert(zeros.end(), part.begin(), part.end());
    }
    return zeros;
}

double backward_shift_residual(const RifFactor& factor, const std::vector<BidiskPoint>& samples) {
    const Complex a = factor.a(), b = factor.b(), c = factor.c(), d = factor.d();
    const Complex lambda = factor.lambda();
    const Complex tau2 = factor.tau2();
    double worst = 0.0;
    for (const auto& [z1, z2] : samples) {
        if (z1 == Complex{}) {
            throw Error(ErrorKind::InvalidArgument, "difference quotient needs z1 != 0");
        }
        const Complex f = factor.eval_kernel_function(z1, z2);
        const Complex f0 = factor.eval_kernel_function(0.0, z2);
        const Complex shifted_f = (f - f0) / z1;
        const Complex closed_f = f * (-(b + d * z2) / (a + c * z2));

        const Complex t = factor.eval(z1, z2);
        const Complex t0 = factor.eval(0.0, z2);
        const Complex shifted_t = (t - t0) / z1;
        const Complex closed_t = f * lambda * ((z2 - tau2) / (a + c * z2));

        worst = std::max({worst, std::abs(shifted_f - closed_f), std::abs(shifted_t - closed_t)});
    }
    return worst;
}

std::vector<BidiskPoint> random_bidisk_samples(std::size_t count, std::uint64_t seed, double rmin, double rmax) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius1(rmin, rmax);
    std::uniform_real_distribution<double> radius2(0.0, rmax);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<BidiskPoint> out(count);
    for (auto& pt : out) {
        pt[0] = std::polar(radius1(rng), angle(rng));
        pt[1] = std::polar(radius2(rng), angle(rng));
    }
    return out;
}

}  // namespace nrshift
