#pragma once

#include "nrshift/rif.hpp"
#include "nrshift/symbol.hpp"
#include "nrshift/types.hpp"

#include <vector>

namespace nrshift {

/// Circles C_theta for Theta = theta1^2 with p = a - z1 + c z2, a, c > 0, a = c + 1:
///   center (a + c e^{i theta}) / (a + c),  radius a c (1 - cos theta) / (a + c)^2.
class CircleFamily {
  public:
    /// Throws InvalidFamily unless a, c > 0 and |a - c - 1| <= 1e-12.
    static CircleFamily make(double a, double c);

    double a() const noexcept { return a_; }
    double c() const noexcept { return c_; }

  private:
    CircleFamily(double a, double c) : a_(a), c_(c) {}
    double a_, c_;
};

/// For complex a, c (|a| = |c| + 1) the range is e^{i arg a} times the range of
/// the family built from |a|, |c|. `rotation` is that unimodular factor.
struct NormalizedFamily {
    CircleFamily family;
    Complex rotation;
};

NormalizedFamily normalize_family(Complex a, Complex c);

struct Circle {
    Complex center;
    double radius = 0.0;
};

Circle circle_at(const CircleFamily& f, double theta);

/// The factor a - z1 + c z2 of the family.
RifFactor family_factor(const CircleFamily& f);
/// Theta = theta1^2 for the family.
RifProduct family_product(const CircleFamily& f);

/// e^{i theta} = -(c + a conj(tau)) / (a + c conj(tau)).
double reparam_angle(const CircleFamily& f, Complex tau);

/// Max over `samples` tau on the circle of the distance between the circle
/// bounding W(M(tau)) (center and radius) and circle_at(f, reparam_angle(tau)).
double reparam_consistency(const CircleFamily& f, const RifProduct& theta, int samples);

enum class Branch { Outer, Inner };

struct EnvelopeCurve {
    Branch branch = Branch::Outer;
    std::vector<double> thetas;
    std::vector<double> s;       // direction of the contact point from the circle center
    std::vector<Point> points;
};

struct EnvelopePair {
    EnvelopeCurve outer;
    EnvelopeCurve inner;
};

/// n uniform angles 2 pi k / n, k = 0..n-1.
std::vector<double> uniform_grid(int n);

/// Outer: s1 = theta - asin(a sin(theta) / (a + c)); inner: s2 = theta - pi + asin(...).
/// Point = center(theta) + r(theta) e^{i s}; theta = 0 maps to (1, 0).
EnvelopePair envelope(const CircleFamily& f, const std::vector<double>& grid);

struct EnvelopeResiduals {
    double f = 0.0;        // max |(x - c1)^2 + (y - c2)^2 - r^2|
    double f_theta = 0.0;  // max |d/dtheta of the same|
};

EnvelopeResiduals envelope_residuals(const EnvelopeCurve& e, const CircleFamily& f);

/// dist^2(Q, (alpha, 0)) - r^2 for the point Q of the range outside the circle
/// through the extreme real points; equals (ac)^2 / (a + c)^4 > 0.
double non_circularity_gap(const CircleFamily& f);

/// True iff s is strictly increasing, the closed polygon through the points
/// turns one way (cross products within 1e-10) and its total turning is 2 pi.
/// Fewer than 3 points are vacuously convex.
bool convexity_check(const EnvelopeCurve& e);

/// Symmetric Hausdorff distance between the sampled hull of W(M) and the outer
/// envelope polygon on a uniform grid of `envelope_samples` angles.
double hull_vs_envelope(const CircleFamily& f, const MatrixSymbol& m, int t, int k, int envelope_samples);

}  // namespace nrshift
