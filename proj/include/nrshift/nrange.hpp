#pragma once

#include "nrshift/rif.hpp"
#include "nrshift/symbol.hpp"
#include "nrshift/types.hpp"

#include <optional>
#include <vector>

namespace nrshift {

inline constexpr double kZeroTolerance = 1e-9;

// ------------------------------------------------------------ Hermitian spectra

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius norm is at
/// most 1e-13 (relative to max(1, ||A||_F)). Throws NotHermitian if A differs
/// from A^* by more than 1e-10.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& a);
std::vector<double> hermitian_eigs(const ComplexMatrix& a);

// ----------------------------------------------------------- support functions

struct SupportSamples {
    std::vector<double> angles;  // 2 pi k / K
    std::vector<double> values;  // h(phi) = max eig of Re(e^{-i phi} A)
};

SupportSamples support_function(const ComplexMatrix& a, int k);

/// max_k |h_A(phi_k) - h_B(phi_k)| over K angles.
double support_gap(const ComplexMatrix& a, const ComplexMatrix& b, int k);

/// The boundary point of W(A) in direction phi: x^* A x for a top eigenvector x
/// of the rotated Hermitian part.
Complex support_point(const ComplexMatrix& a, double phi);

// --------------------------------------------------------------- 2x2 ellipses

/// Closed elliptical disk with foci f1, f2 and minor axis length `minor`.
struct EllipseDisk {
    Complex f1;
    Complex f2;
    double minor = 0.0;

    Complex center() const { return 0.5 * (f1 + f2); }
    double major() const;
    /// Direction of the major axis (arg(f2 - f1), or 0 for coincident foci).
    double axis_angle() const;
    /// center + e^{i psi} (major/2 cos t + i minor/2 sin t)
    Complex boundary_point(double t) const;
    /// max over the disk of Re(e^{-i phi} z).
    double support(double phi) const;
};

/// Numerical range of a 2x2 matrix as an ellipse: foci at the eigenvalues,
/// minor axis sqrt(trace(A^*A) - |f1|^2 - |f2|^2).
EllipseDisk ellipse_from_2x2(const ComplexMatrix& a);

/// |minor(tau) - sqrt(1 - |f1|^2) sqrt(1 - |f2|^2)| for a two-factor product,
/// with the minor axis from the factor coefficients and the foci from the symbol.
double minor_axis_identity_residual(const RifProduct& theta, Complex tau);

// ----------------------------------------------------------------- hull sweep

struct PlanarRegion {
    std::vector<Point> points;  // all sampled boundary points, in tau order
    std::vector<Point> hull;    // CCW convex hull vertices
};

/// Unit-circle samples e^{2 pi i t / T}; tau = 1 and tau = -1 are always present
/// and exact (-1 is appended when T is odd).
std::vector<Complex> torus_grid(int t);

/// Boundary samples of W(M(tau)) for one tau: a point for m = 1, the exact
/// ellipse parameterization for m = 2, support points otherwise.
std::vector<Point> range_boundary_samples(const ComplexMatrix& a, int k);

/// Convex hull of the union of W(M(tau)) over the torus grid. The tau loop runs
/// in parallel; samples are concatenated in tau order, so the result does not
/// depend on the thread count.
PlanarRegion region_hull(const MatrixSymbol& symbol, int t, int k);
PlanarRegion region_hull_serial(const MatrixSymbol& symbol, int t, int k);

/// Max modulus over the hull vertices.
double numerical_radius(const PlanarRegion& region);

// --------------------------------------------------------------- zero tests

enum class WitnessVerdict { InteriorWitness, NoWitness };

/// |f1| + |f2| < |1 - conj(f1) f2| - kZeroTolerance.
WitnessVerdict witness_from_foci(Complex f1, Complex f2);

struct FocusCircleCondition {
    Complex beta;                    // center of {-(b + d z)/(a + c z) : z in T}
    bool holds = false;              // |conj(beta) - f| > |conj(beta)|
    std::optional<bool> real_test;   // |conj(a) d - b conj(c)| > |a conj(b) - c conj(d)| when a conj(b) - c conj(d) is real
};

struct GeneralZeroReport {
    WitnessVerdict verdict = WitnessVerdict::NoWitness;
    Complex f1, f2;
    double foci_sum = 0.0;     // |f1| + |f2|
    double major_axis = 0.0;   // |1 - conj(f1) f2|
    FocusCircleCondition circle[2];
};

/// Interior-witness test at one tau for a two-factor product. The verdict uses
/// the ellipse condition; the focus-circle conditions are reported alongside.
/// Throws ExceptionalSlice within kSliceExclusion of E_Theta.
GeneralZeroReport zero_test_general(const RifProduct& theta, Complex tau);

enum class ZeroVerdict { Interior, Boundary, NotInterior };

struct NormalizedZeroReport {
    ZeroVerdict verdict = ZeroVerdict::NotInterior;
    double product = 0.0;      // c1 c2
    double root_upper = 0.0;   // 1/(c1 c2) - 1
    double root_lower = 0.0;   // -1 - 1/(c1 + c2 + c1 c2)
};

/// Zero inclusion for p_j = (c_j + 1) - z1 + c_j z2: interior iff c1 c2 > 1/2,
/// boundary iff c1 c2 = 1/2. Throws NonpositiveCoefficient unless c1, c2 > 0.
NormalizedZeroReport zero_test_normalized(double c1, double c2);

/// The two-factor product with p_j = (c_j + 1) - z1 + c_j z2.
RifProduct normalized_product(double c1, double c2);

const char* to_string(WitnessVerdict v);
const char* to_string(ZeroVerdict v);

}  // namespace nrshift
