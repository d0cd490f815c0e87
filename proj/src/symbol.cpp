#include "nrshift/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace nrshift {

MatrixSymbol build_symbol(const RifProduct& theta) {
    const auto& fs = theta.factors();
    const std::size_t m = fs.size();
    MatrixSymbol out(m);

    // In w = conj(z2): conj(a + c z2) = conj(a) + conj(c) w, conj(z2 - tau2) = w - conj(tau2),
    // conj(conj(b) z2 + conj(d)) = b w + d.
    const auto den_factor = [](const RifFactor& f) { return UnivariatePoly{std::conj(f.a()), std::conj(f.c())}; };
    const auto vanishing = [](const RifFactor& f) { return UnivariatePoly{-std::conj(f.tau2()), 1.0}; };

    for (std::size_t i = 0; i < m; ++i) {
        out(i, i) = RationalFunc{UnivariatePoly{-std::conj(fs[i].b()), -std::conj(fs[i].d())}, den_factor(fs[i])};
        for (std::size_t j = i + 1; j < m; ++j) {
            UnivariatePoly num = std::conj(fs[j].lambda() * fs[i].lambda()) * (vanishing(fs[j]) * vanishing(fs[i]));
            UnivariatePoly den = den_factor(fs[j]) * den_factor(fs[i]);
            for (std::size_t k = i + 1; k < j; ++k) {
                num = num * UnivariatePoly{fs[k].d(), fs[k].b()};
                den = den * den_factor(fs[k]);
            }
            out(j, i) = RationalFunc{std::move(num), std::move(den)};
        }
    }
    return out;
}

ComplexMatrix eval_symbol(const MatrixSymbol& symbol, Complex tau) {
    const Complex w = std::conj(tau);
    ComplexMatrix out(symbol.size());
    for (std::size_t i = 0; i < symbol.size(); ++i)
        for (std::size_t j = 0; j < symbol.size(); ++j)
            if (!symbol(i, j).is_zero()) out(i, j) = symbol(i, j)(w);
    return out;
}

std::string format_complex(Complex z) {
    z = canonical_zero(z);
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

namespace {

std::string format_coeffs(const UnivariatePoly& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += format_complex(p.coeffs()[k]);
    }
    return out + "]";
}

}  // namespace

std::string format_symbol(const MatrixSymbol& symbol) {
    std::ostringstream os;
    for (std::size_t i = 0; i < symbol.size(); ++i)
        for (std::size_t j = 0; j < symbol.size(); ++j)
            os << i + 1 << ',' << j + 1 << ": num=" << format_coeffs(symbol(i, j).num)
               << " den=" << format_coeffs(symbol(i, j).den) << '\n';
    return os.str();
}

std::string format_matrix(const ComplexMatrix& matrix) {
    std::ostringstream os;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j) os << (j ? " " : "") << format_complex(matrix(i, j));
        os << '\n';
    }
    return os.str();
}

ComplexMatrix tmw_matrix(const std::vector<Complex>& zeros) {
    for (const auto& a : zeros)
        if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::ZeroOutsideDisk, "Blaschke zeros must lie in the open disk");
    const std::size_t m = zeros.size();
    std::vector<double> defect(m);
    for (std::size_t i = 0; i < m; ++i) defect[i] = std::sqrt(1.0 - std::norm(zeros[i]));

    ComplexMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out(i, i) = zeros[i];
        Complex chain = 1.0;  // prod_{i<k<j} (-conj(alpha_k))
        for (std::size_t j = i + 1; j < m; ++j) {
            out(i, j) = chain * defect[i] * defect[j];
            chain *= -std::conj(zeros[j]);
        }
    }
    return out;
}

std::vector<Complex> eval_basis(const RifProduct& theta, Complex z1, Complex z2) {
    std::vector<Complex> out(theta.size());
    Complex prefix = 1.0;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const auto& f = theta[i];
        const Complex p = f.eval_p(z1, z2);
        out[i] = prefix * f.lambda() * (z2 - f.tau2()) / p;
        prefix *= f.eval_p_tilde(z1, z2) / p;
    }
    return out;
}

namespace {

void check_grid(int n) {
    if (n < 64 || (n & (n - 1)) != 0) {
        throw Error(ErrorKind::InvalidArgument, "quadrature grid must be a power of two >= 64");
    }
}

void accumulate_outer(ComplexMatrix& acc, const std::vector<Complex>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) acc(i, j) += v[i] * std::conj(v[j]);
}

Complex midpoint(int k, int n) { return std::polar(1.0, 2.0 * kPi * (k + 0.5) / n); }

// z2 nodes sit half a cell off the z1 midpoints. With the same offset in both
// variables the grid contains points with arg z1 + arg z2 = 0, the curve along
// which the basis functions blow up next to the torus zero.
Complex lattice(int k, int n) { return std::polar(1.0, 2.0 * kPi * k / n); }

void scale(ComplexMatrix& g, double weight) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) g(i, j) *= weight;
}

}  // namespace

ComplexMatrix basis_gram(const RifProduct& theta, int n) {
    check_grid(n);
    const std::size_t m = theta.size();
    std::vector<Complex> nodes(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        nodes[static_cast<std::size_t>(k)] = midpoint(k, n);
        second[static_cast<std::size_t>(k)] = lattice(k, n);
    }

    std::vector<ComplexMatrix> rows(static_cast<std::size_t>(n), ComplexMatrix(m));
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n; ++r) {
        ComplexMatrix& acc = rows[static_cast<std::size_t>(r)];
        const Complex z1 = nodes[static_cast<std::size_t>(r)];
        for (int k = 0; k < n; ++k) accumulate_outer(acc, eval_basis(theta, z1, second[static_cast<std::size_t>(k)]));
    }

    ComplexMatrix gram(m);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gram(i, j) += row(i, j);
    scale(gram, 1.0 / (static_cast<double>(n) * n));
    return gram;
}

ComplexMatrix basis_gram_serial(const RifProduct& theta, int n) {
    check_grid(n);
    ComplexMatrix gram(theta.size());
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) accumulate_outer(gram, eval_basis(theta, midpoint(r, n), lattice(k, n)));
    scale(gram, 1.0 / (static_cast<double>(n) * n));
    return gram;
}

double greedy_match_distance(std::vector<Complex> lhs, std::vector<Complex> rhs) {
    if (lhs.size() != rhs.size()) throw Error(ErrorKind::InvalidArgument, "multisets differ in size");
    double worst = 0.0;
    for (const auto& x : lhs) {
        auto it = std::min_element(rhs.begin(), rhs.end(),
                                   [&](Complex a, Complex b) { return std::abs(a - x) < std::abs(b - x); });
        worst = std::max(worst, std::abs(*it - x));
        rhs.erase(it);
    }
    return worst;
}

double diagonal_zero_mismatch(const RifProduct& theta, const MatrixSymbol& symbol, Complex tau) {
    const ComplexMatrix m = eval_symbol(symbol, tau);
    std::vector<Complex> diag;
    for (std::size_t i = 0; i < m.size(); ++i) diag.push_back(m(i, i));
    return greedy_match_distance(std::move(diag), slice_blaschke(theta, tau));
}

double slice_isometry_residual(const RifProduct& theta, Complex tau, int n) {
    if (n < 16) throw Error(ErrorKind::InvalidArgument, "slice quadrature needs at least 16 nodes");
    if (std::abs(std::abs(tau) - 1.0) > 1e-10) {
        throw Error(ErrorKind::InvalidArgument, "slice parameter must lie on the unit circle");
    }
    if (theta.distance_to_exceptional(tau) <= kSliceExclusion) {
        throw Error(ErrorKind::ExceptionalSlice, "tau lies in the exceptional set");
    }
    ComplexMatrix gram(theta.size());
    for (int k = 0; k < n; ++k) accumulate_outer(gram, eval_basis(theta, midpoint(k, n), tau));
    scale(gram, 1.0 / n);
    return gram.max_abs_diff(ComplexMatrix::identity(theta.size()));
}

}  // namespace nrshift
