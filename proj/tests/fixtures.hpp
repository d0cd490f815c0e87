#pragma once

#include "nrshift/rif.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace fixtures {

using nrshift::Complex;
using nrshift::factor_from_coeffs;
using nrshift::RifProduct;

// (2 - z1 - z2)(3 - z1 - 2 z2), singular at (1, 1).
inline RifProduct two_factor() {
    return RifProduct({factor_from_coeffs(2, -1, -1, 0), factor_from_coeffs(3, -1, -2, 0)});
}

// The two factors above times 3 - z1 - z2 - z1 z2.
inline RifProduct three_factor() {
    return RifProduct(
        {factor_from_coeffs(2, -1, -1, 0), factor_from_coeffs(3, -1, -2, 0), factor_from_coeffs(3, -1, -1, -1)});
}

inline RifProduct single_factor() { return RifProduct({factor_from_coeffs(2, -1, -1, 0)}); }

// Unit-circle points drawn uniformly in angle, staying at least `gap` away from 1.
inline std::vector<Complex> random_torus(std::size_t n, unsigned seed, double gap = 1e-3) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(gap, 2.0 * M_PI - gap);
    std::vector<Complex> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::polar(1.0, angle(rng)));
    return out;
}

// Angles 2 pi (k + 1/2) / n: never hits tau = 1.
inline std::vector<Complex> offset_torus(std::size_t n) {
    std::vector<Complex> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(std::polar(1.0, 2.0 * M_PI * (k + 0.5) / n));
    return out;
}

}  // namespace fixtures
