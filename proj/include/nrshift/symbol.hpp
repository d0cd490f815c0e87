#pragma once

#include "nrshift/poly.hpp"
#include "nrshift/rif.hpp"
#include "nrshift/types.hpp"

#include <string>
#include <vector>

namespace nrshift {

/// num(w) / den(w) in the variable w = conj(z2). Not reduced to lowest terms.
struct RationalFunc {
    UnivariatePoly num;
    UnivariatePoly den{1.0};

    Complex operator()(Complex w) const { return num(w) / den(w); }
    bool is_zero() const { return num.is_zero(); }
};

/// m x m matrix of rational functions of conj(z2); lower triangular for products.
class MatrixSymbol {
  public:
    explicit MatrixSymbol(std::size_t m) : m_(m), entries_(m * m) {}

    std::size_t size() const noexcept { return m_; }
    RationalFunc& operator()(std::size_t row, std::size_t col) { return entries_[row * m_ + col]; }
    const RationalFunc& operator()(std::size_t row, std::size_t col) const { return entries_[row * m_ + col]; }

  private:
    std::size_t m_;
    std::vector<RationalFunc> entries_;
};

/// The Toeplitz symbol of the compressed shift for a product of degree-(1,1)
/// factors, in the ordered basis {f1, theta1 f2, theta1 theta2 f3, ...}:
///   (i,i): -conj((b_i + d_i z2) / (a_i + c_i z2))
///   (j,i), j > i: conj(lambda_j (z2 - tau2_j)/(a_j + c_j z2) * lambda_i (z2 - tau2_i)/(a_i + c_i z2)
///                      * prod_{i<k<j} (conj(b_k) z2 + conj(d_k)) / (a_k + c_k z2))
MatrixSymbol build_symbol(const RifProduct& theta);

/// Entrywise evaluation at w = conj(tau).
ComplexMatrix eval_symbol(const MatrixSymbol& symbol, Complex tau);

/// Row-major text rendering, one entry per line:
///   `row,col: num=[c0,c1,...] den=[d0,d1,...]` (1-based indices).
std::string format_symbol(const MatrixSymbol& symbol);
std::string format_matrix(const ComplexMatrix& matrix);
/// `re`, `re+imi` or `re-imi` with 17 significant digits.
std::string format_complex(Complex z);

/// Upper triangular matrix of the one-variable compressed shift in the
/// Takenaka-Malmquist-Walsh basis. Throws ZeroOutsideDisk unless all |alpha| < 1.
ComplexMatrix tmw_matrix(const std::vector<Complex>& zeros);

/// Gram matrix G(i,j) = <b_i, b_j> in H^2 of the bidisk for the basis
/// {f1, theta1 f2, ..., (theta1...theta_{m-1}) f_m}, by an N x N Riemann sum on
/// the torus: z1 at the midpoints 2 pi (k + 1/2) / N, z2 at 2 pi k / N, so no node
/// lies on the curve arg z1 + arg z2 = 0 through a torus zero. Convergence is
/// only O(N^{-1/2}) near that zero. The parallel version reduces row partial sums in a fixed order,
/// so its result does not depend on the thread count.
ComplexMatrix basis_gram(const RifProduct& theta, int n);
ComplexMatrix basis_gram_serial(const RifProduct& theta, int n);

/// Max |G - I| for the one-variable Gram matrix of the restricted basis
/// z1 -> b_i(z1, tau), by the N-point midpoint rule on the circle.
double slice_isometry_residual(const RifProduct& theta, Complex tau, int n);

/// Worst pair distance after greedy nearest-neighbour matching of two equally
/// sized multisets (adequate for m <= 8 well-separated points).
double greedy_match_distance(std::vector<Complex> lhs, std::vector<Complex> rhs);

/// Matching distance between the diagonal of M(tau) and the slice zeros.
double diagonal_zero_mismatch(const RifProduct& theta, const MatrixSymbol& symbol, Complex tau);

/// Values b_0(z), ..., b_{m-1}(z) of the orthonormal basis at one point.
std::vector<Complex> eval_basis(const RifProduct& theta, Complex z1, Complex z2);

}  // namespace nrshift
