#pragma once

#include "nrshift/error.hpp"
#include "nrshift/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nrshift {

/// Bidegree (deg in z1, deg in z2).
struct Bidegree {
    int z1 = 0;
    int z2 = 0;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Dense polynomial in two complex variables,
///   p(z1, z2) = sum_{k1 <= m, k2 <= n} c[k1][k2] z1^k1 z2^k2.
/// Trailing all-zero rows and columns are always trimmed, so degree() is exact;
/// the zero polynomial has degree (0, 0) and a single zero coefficient.
class BivariatePoly {
  public:
    BivariatePoly();
    /// rows[k1][k2]; ragged rows are zero-padded.
    BivariatePoly(std::initializer_list<std::initializer_list<Complex>> rows);
    BivariatePoly(Bidegree grid, std::vector<Complex> row_major);

    Bidegree degree() const noexcept { return deg_; }
    /// Zero outside the stored grid.
    Complex coeff(int k1, int k2) const;
    bool is_zero() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  private:
    void trim();

    Bidegree deg_;
    std::vector<Complex> c_;  // (deg_.z1 + 1) x (deg_.z2 + 1), row-major in k1
};

/// Horner evaluation.
Complex eval2(const BivariatePoly& p, Complex z1, Complex z2);

/// p~(z) = z1^m z2^n conj(p(1/conj z1, 1/conj z2)) with (m, n) = deg, i.e.
/// p~[k1][k2] = conj(p[m - k1][n - k2]). Throws InvalidDegree if deg is smaller
/// than the degree of p in either variable.
BivariatePoly reflect(const BivariatePoly& p, Bidegree deg);

/// Ascending-power univariate polynomial. Leading coefficient nonzero unless the
/// polynomial is zero (stored as the single coefficient 0).
class UnivariatePoly {
  public:
    UnivariatePoly();
    UnivariatePoly(std::initializer_list<Complex> coeffs);
    explicit UnivariatePoly(std::vector<Complex> coeffs);

    static UnivariatePoly from_roots(const std::vector<Complex>& roots, Complex leading = 1.0);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return c_; }
    Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex{}; }
    Complex leading() const { return c_.back(); }
    bool is_zero() const { return c_.size() == 1 && c_[0] == Complex{}; }

    Complex operator()(Complex z) const;
    UnivariatePoly conj_coeffs() const;

    friend UnivariatePoly operator*(const UnivariatePoly& lhs, const UnivariatePoly& rhs);
    friend UnivariatePoly operator*(Complex s, const UnivariatePoly& p);
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  private:
    void trim();
    std::vector<Complex> c_;
};

/// p(z1, z2) with z2 fixed, as a polynomial in z1.
UnivariatePoly slice_in_z1(const BivariatePoly& p, Complex z2);

enum class LinearStability { StableWithTorusZero, StableNoTorusZero, Unstable };

inline constexpr double kStabilityTolerance = 1e-10;

/// Trichotomy for p = a + b z1 + c z2 comparing |a| with |b| + |c|.
LinearStability linear_stability_check(Complex a, Complex b, Complex c);

struct RootOptions {
    int max_iterations = 500;
    double tolerance = 1e-12;
    std::uint64_t seed = 0;
};

class RootfindFailure : public Error {
  public:
    RootfindFailure(const std::string& what, std::vector<Complex> best)
        : Error(ErrorKind::RootfindFailure, what), best_(std::move(best)) {}
    const std::vector<Complex>& best_iterate() const noexcept { return best_; }

  private:
    std::vector<Complex> best_;
};

/// All roots with multiplicity (Durand-Kerner from a randomly perturbed circle).
/// Each root r satisfies |q(r)| <= tolerance * sum_k |q_k| max(1,|r|)^k.
std::vector<Complex> roots(const UnivariatePoly& q, const RootOptions& opts = {});

}  // namespace nrshift
