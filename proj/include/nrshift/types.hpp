#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nrshift {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    ComplexMatrix adjoint() const;
    /// (e^{-i phi} A + e^{i phi} A^*) / 2
    ComplexMatrix rotated_hermitian_part(double phi) const;

    double max_abs_diff(const ComplexMatrix& other) const;
    double frobenius_norm() const;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Complex to_complex(Point p) { return {p.x, p.y}; }
inline Point to_point(Complex z) { return {z.real(), z.imag()}; }

/// Removes a negative zero from either component so that printing and branch
/// selection (principal square root) behave the same for +0 and -0.
inline Complex canonical_zero(Complex z) { return {z.real() + 0.0, z.imag() + 0.0}; }

}  // namespace nrshift
