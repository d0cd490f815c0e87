#pragma once

#include "nrshift/poly.hpp"
#include "nrshift/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace nrshift {

inline constexpr double kSliceExclusion = 1e-6;

/// Degree-(1,1) rational inner function theta = p~/p with
/// p(z) = a + b z1 + c z2 + d z1 z2 vanishing at (tau1, tau2) on the torus.
/// Instances only come out of factor_from_coeffs(), which validates them.
class RifFactor {
  public:
    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }
    Complex tau1() const noexcept { return tau1_; }
    Complex tau2() const noexcept { return tau2_; }
    /// Square root of conj(a) c - d conj(b); principal branch unless flipped.
    Complex lambda() const noexcept { return lambda_; }

    BivariatePoly p() const;
    BivariatePoly p_tilde() const;

    Complex eval_p(Complex z1, Complex z2) const { return a_ + b_ * z1 + c_ * z2 + d_ * z1 * z2; }
    Complex eval_p_tilde(Complex z1, Complex z2) const;
    /// theta(z); throws DenominatorZero where p vanishes.
    Complex eval(Complex z1, Complex z2) const;
    /// f(z) = lambda (z2 - tau2) / p(z), the unit vector spanning S2 minus z2 S2.
    Complex eval_kernel_function(Complex z1, Complex z2) const;

    /// The same factor with lambda replaced by -lambda.
    RifFactor with_flipped_lambda() const;

    double coefficient_scale() const { return std::abs(a_) + std::abs(b_) + std::abs(c_) + std::abs(d_); }

  private:
    friend RifFactor factor_from_coeffs(Complex a, Complex b, Complex c, Complex d);
    Complex a_, b_, c_, d_;
    Complex tau1_, tau2_, lambda_;
};

/// Validates p = a + b z1 + c z2 + d z1 z2 and computes the torus zero and lambda.
/// Throws NotSingularOnTorus when the zero formula does not land on the torus
/// (or the formula is degenerate), UnstableDenominator when p vanishes in the bidisk.
RifFactor factor_from_coeffs(Complex a, Complex b, Complex c, Complex d);

/// Theta = product of factors, degree (m, m).
class RifProduct {
  public:
    explicit RifProduct(std::vector<RifFactor> factors);

    std::size_t size() const noexcept { return factors_.size(); }
    const std::vector<RifFactor>& factors() const noexcept { return factors_; }
    const RifFactor& operator[](std::size_t i) const { return factors_[i]; }

    /// E_Theta: the tau2 coordinates of the factor singularities.
    std::vector<Complex> exceptional_set() const;
    /// Distance from tau to the nearest point of E_Theta.
    double distance_to_exceptional(Complex tau) const;

  private:
    std::vector<RifFactor> factors_;
};

Complex eval_product(const RifProduct& theta, Complex z1, Complex z2);

/// Zeros of the one-variable Blaschke product Theta(., tau), factor by factor.
/// Throws ExceptionalSlice within kSliceExclusion of E_Theta.
std::vector<Complex> slice_blaschke(const RifProduct& theta, Complex tau, std::uint64_t seed = 0);

using BidiskPoint = std::array<Complex, 2>;

/// Max over samples of the two residuals between the difference quotient
/// (F(z) - F(0, z2)) / z1 and its closed form, for F = f and F = theta.
double backward_shift_residual(const RifFactor& factor, const std::vector<BidiskPoint>& samples);

/// Deterministic pseudo-random points with |z1| in [rmin, rmax] and |z2| <= rmax.
std::vector<BidiskPoint> random_bidisk_samples(std::size_t count, std::uint64_t seed, double rmin = 0.1,
                                               double rmax = 0.9);

}  // namespace nrshift
