#include "nrshift/error.hpp"
#include "nrshift/types.hpp"

#include <algorithm>
#include <cmath>

namespace nrshift {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidDegree: return "InvalidDegree";
        case ErrorKind::RootfindFailure: return "RootfindFailure";
        case ErrorKind::NotSingularOnTorus: return "NotSingularOnTorus";
        case ErrorKind::UnstableDenominator: return "UnstableDenominator";
        case ErrorKind::DenominatorZero: return "DenominatorZero";
        case ErrorKind::ExceptionalSlice: return "ExceptionalSlice";
        case ErrorKind::ZeroOutsideDisk: return "ZeroOutsideDisk";
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NonpositiveCoefficient: return "NonpositiveCoefficient";
        case ErrorKind::InvalidFamily: return "InvalidFamily";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_validation_failure(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::ConfigError:
        case ErrorKind::IoError:
            return false;
        default:
            return true;
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw Error(ErrorKind::InvalidArgument, "matrix rows must all have length n");
        }
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::rotated_hermitian_part(double phi) const {
    const Complex rot = std::polar(1.0, -phi);
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            const Complex v = 0.5 * (rot * (*this)(i, j) + std::conj(rot * (*this)(j, i)));
            out(i, j) = v;
            out(j, i) = std::conj(v);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const auto& v : data_) acc += std::norm(v);
    return std::sqrt(acc);
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    const std::size_t n = lhs.size();
    if (rhs.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "matrix dimensions differ");
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    return out;
}

}  // namespace nrshift
