#include "doctest.h"
#include "fixtures.hpp"
#include "nrshift/error.hpp"
#include "nrshift/geometry.hpp"
#include "nrshift/nrange.hpp"
#include "nrshift/symbol.hpp"

#include <Eigen/Eigenvalues>
#include <omp.h>

#include <algorithm>
#include <random>

using namespace nrshift;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    return a;
}

std::vector<double> eigen_oracle(const ComplexMatrix& h) {
    Eigen::MatrixXcd m(h.size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) m(i, j) = h(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    const Eigen::VectorXd v = es.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("Hermitian eigenvalues on small cases") {
    const auto d = hermitian_eigs(ComplexMatrix{{2, 0}, {0, 1}});
    CHECK(d == std::vector<double>{1, 2});
    const auto j = hermitian_eigs(ComplexMatrix{{0, 0.5}, {0.5, 0}});
    CHECK(j[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(j[1] == doctest::Approx(0.5).epsilon(1e-14));
    const auto id = hermitian_eigs(eval_symbol(build_symbol(fixtures::two_factor()), 1.0).rotated_hermitian_part(0.0));
    CHECK(std::abs(id[0] - 1.0) < 1e-15);
    CHECK(std::abs(id[1] - 1.0) < 1e-15);
}

TEST_CASE("Hermitian eigenvalues agree with an independent solver") {
    std::mt19937_64 rng(21);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const ComplexMatrix h = random_matrix(n, rng).rotated_hermitian_part(0.37 * trial);
            const auto ours = hermitian_eigs(h);
            const auto ref = eigen_oracle(h);
            for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ours[k] - ref[k]) < 1e-11);
        }
    }
}

TEST_CASE("eigenvectors diagonalize") {
    std::mt19937_64 rng(3);
    const ComplexMatrix h = random_matrix(5, rng).rotated_hermitian_part(1.0);
    const auto sys = hermitian_eigensystem(h);
    const ComplexMatrix d = sys.vectors.adjoint() * h * sys.vectors;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(d(i, j) - (i == j ? sys.values[i] : 0.0)) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
    try {
        (void)hermitian_eigs(ComplexMatrix{{0, 1}, {0, 0}});
        FAIL("expected NotHermitian");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
}

TEST_CASE("support functions of textbook matrices") {
    const auto jordan = support_function(ComplexMatrix{{0, 1}, {0, 0}}, 64);
    for (double v : jordan.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
    const auto id = support_function(ComplexMatrix::identity(2), 64);
    for (std::size_t k = 0; k < id.values.size(); ++k) CHECK(std::abs(id.values[k] - std::cos(id.angles[k])) < 1e-14);
    const auto seg = support_function(ComplexMatrix{{1, 0}, {0, -1}}, 64);
    for (std::size_t k = 0; k < seg.values.size(); ++k) CHECK(std::abs(seg.values[k] - std::abs(std::cos(seg.angles[k]))) < 1e-14);
    CHECK_THROWS_AS((void)support_function(ComplexMatrix::identity(2), 4), Error);
}

TEST_CASE("ellipses from 2x2 matrices") {
    const EllipseDisk j = ellipse_from_2x2(ComplexMatrix{{0, 1}, {0, 0}});
    CHECK(j.f1 == Complex(0));
    CHECK(j.minor == doctest::Approx(1.0));
    const EllipseDisk s = ellipse_from_2x2(ComplexMatrix{{1, 0}, {0, -1}});
    CHECK(s.minor == 0.0);
    CHECK(s.major() == doctest::Approx(2.0));

    const EllipseDisk e = ellipse_from_2x2(eval_symbol(build_symbol(fixtures::two_factor()), -1.0));
    CHECK(std::abs(e.f1 - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(e.f2 - 0.2) < 1e-15);
    CHECK(std::abs(e.minor - 4.0 * std::sqrt(12.0) / 15.0) < 1e-14);
}

TEST_CASE("ellipse support matches the eigenvalue sweep for random 2x2 matrices") {
    std::mt19937_64 rng(8);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = random_matrix(2, rng);
        const EllipseDisk e = ellipse_from_2x2(a);
        const int k = 90;
        const auto sweep = support_function(a, k);
        for (int i = 0; i < k; ++i) {
            // parametric oracle with 64x oversampling
            double best = -1e300;
            for (int t = 0; t < 64 * k; ++t) {
                const Complex z = e.boundary_point(2 * M_PI * t / (64.0 * k));
                best = std::max(best, (z * std::polar(1.0, -sweep.angles[i])).real());
            }
            worst = std::max(worst, std::abs(sweep.values[i] - e.support(sweep.angles[i])));
            CHECK(std::abs(best - e.support(sweep.angles[i])) < 1e-5 * std::max(1.0, e.major()));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("minor-axis identity") {
    const RifProduct theta = fixtures::two_factor();
    CHECK(minor_axis_identity_residual(theta, -1.0) <= 1e-12);
    CHECK(minor_axis_identity_residual(theta, 1.0) == doctest::Approx(0.0));
    double worst = 0.0;
    for (const Complex tau : fixtures::random_torus(100, 17)) worst = std::max(worst, minor_axis_identity_residual(theta, tau));
    CHECK(worst <= 1e-10);
}

TEST_CASE("symbol ranges agree with one-variable compressed shifts") {
    for (const RifProduct& theta : {fixtures::two_factor(), fixtures::three_factor()}) {
        const MatrixSymbol m = build_symbol(theta);
        double worst = 0.0;
        for (const Complex tau : fixtures::offset_torus(36))
            worst = std::max(worst, support_gap(eval_symbol(m, tau), tmw_matrix(slice_blaschke(theta, tau)), 360));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("flipping a lambda sign leaves the range unchanged") {
    const RifProduct theta = fixtures::three_factor();
    const RifProduct flipped({theta[0], theta[1].with_flipped_lambda(), theta[2]});
    const MatrixSymbol a = build_symbol(theta), b = build_symbol(flipped);
    double worst = 0.0;
    for (const Complex tau : fixtures::random_torus(20, 4)) worst = std::max(worst, support_gap(eval_symbol(a, tau), eval_symbol(b, tau), 360));
    CHECK(worst <= 1e-12);
}

TEST_CASE("torus grid hits both real points exactly") {
    const auto even = torus_grid(16);
    CHECK(even.size() == 16);
    CHECK(even[0] == Complex(1.0));
    CHECK(even[8] == Complex(-1.0));
    const auto odd = torus_grid(17);
    CHECK(odd.size() == 18);
    CHECK(odd.back() == Complex(-1.0));
}

TEST_CASE("two-factor range: radius one and contraction bound") {
    const PlanarRegion r = region_hull(build_symbol(fixtures::two_factor()), 720, 720);
    CHECK(std::abs(numerical_radius(r) - 1.0) <= 1e-9);
    CHECK(point_in_polygon(r.hull, {1, 0}));
    double biggest = 0.0;
    for (const auto& p : r.points) biggest = std::max(biggest, std::hypot(p.x, p.y));
    CHECK(biggest <= 1.0 + 1e-9);
    CHECK(convex_hull(r.hull) == r.hull);
}

TEST_CASE("single factor range is the disk through 1 and 1/3") {
    const PlanarRegion r = region_hull(build_symbol(fixtures::single_factor()), 720, 16);
    double worst = 0.0;
    for (const auto& p : r.hull) worst = std::max(worst, std::abs(std::hypot(p.x - 2.0 / 3.0, p.y) - 1.0 / 3.0));
    CHECK(worst <= 1e-6);
}

TEST_CASE("sampled hulls grow under refinement") {
    const MatrixSymbol m = build_symbol(fixtures::two_factor());
    const PlanarRegion coarse = region_hull(m, 16, 16), fine = region_hull(m, 720, 720);
    for (const auto& p : coarse.hull) CHECK(hull_margin(fine.hull, p) >= -1e-12);
}

TEST_CASE("general-m path agrees with the ellipse path") {
    const MatrixSymbol m = build_symbol(fixtures::two_factor());
    for (const Complex tau : fixtures::random_torus(8, 2)) {
        const ComplexMatrix a = eval_symbol(m, tau);
        const EllipseDisk e = ellipse_from_2x2(a);
        for (int k = 0; k < 64; ++k) {
            const double phi = 2 * M_PI * k / 64;
            const Complex z = support_point(a, phi);
            CHECK(std::abs((z * std::polar(1.0, -phi)).real() - e.support(phi)) < 1e-12);
        }
    }
}

TEST_CASE("parallel sweep equals the serial sweep for any thread count") {
    const MatrixSymbol m = build_symbol(fixtures::three_factor());
    const PlanarRegion serial = region_hull_serial(m, 64, 32);
    omp_set_num_threads(1);
    const PlanarRegion one = region_hull(m, 64, 32);
    omp_set_num_threads(3);
    const PlanarRegion three = region_hull(m, 64, 32);
    CHECK(one.points == serial.points);
    CHECK(three.points == serial.points);
    CHECK(three.hull == serial.hull);
}

TEST_CASE("sweep argument checks") {
    const MatrixSymbol m = build_symbol(fixtures::two_factor());
    CHECK_THROWS_AS((void)region_hull(m, 8, 64), Error);
    CHECK_THROWS_AS((void)region_hull(m, 64, 8), Error);
    CHECK_THROWS_AS((void)numerical_radius(PlanarRegion{}), Error);
}

TEST_CASE("numerical radius of simple regions") {
    CHECK(numerical_radius(PlanarRegion{{{1, 0}}, {{1, 0}}}) == 1.0);
    std::vector<Point> circle;
    for (int k = 0; k < 64; ++k) circle.push_back({0.5 * std::cos(2 * M_PI * k / 64), 0.5 * std::sin(2 * M_PI * k / 64)});
    CHECK(numerical_radius(PlanarRegion{circle, convex_hull(circle)}) == doctest::Approx(0.5));
    // one-variable control: no torus singularity, radius stays below 1
    const ComplexMatrix t = tmw_matrix({0.5});
    PlanarRegion r;
    r.points = {to_point(t(0, 0))};
    r.hull = r.points;
    CHECK(numerical_radius(r) == doctest::Approx(0.5));
}

TEST_CASE("ellipse witness condition") {
    CHECK(witness_from_foci(0.1, -0.1) == WitnessVerdict::InteriorWitness);
    CHECK(witness_from_foci(1.0, 1.0) == WitnessVerdict::NoWitness);
    CHECK(witness_from_foci(1.0, 0.0) == WitnessVerdict::NoWitness);
}

TEST_CASE("general zero test at one tau") {
    const RifProduct theta = fixtures::two_factor();
    const GeneralZeroReport r = zero_test_general(theta, -1.0);
    CHECK(std::abs(r.f1 - 1.0 / 3.0) < 1e-15);
    CHECK(r.foci_sum == doctest::Approx(1.0 / 3.0 + 0.2));
    CHECK(r.verdict == WitnessVerdict::InteriorWitness);
    // a conj(b) - c conj(d) = -2 is real for the first factor
    REQUIRE(r.circle[0].real_test.has_value());
    CHECK(std::abs(r.circle[0].beta - Complex(2.0 / 3.0)) < 1e-15);

    try {
        (void)zero_test_general(theta, 1.0);
        FAIL("expected ExceptionalSlice");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ExceptionalSlice);
    }
    CHECK_THROWS_AS((void)zero_test_general(fixtures::three_factor(), -1.0), Error);
}

TEST_CASE("normalized zero test verdicts") {
    CHECK(zero_test_normalized(1, 0.5).verdict == ZeroVerdict::Boundary);
    CHECK(zero_test_normalized(0.9, 0.9).verdict == ZeroVerdict::Interior);
    CHECK(zero_test_normalized(0.5, 0.5).verdict == ZeroVerdict::NotInterior);
    const auto r = zero_test_normalized(1, 0.5);
    CHECK(r.root_upper == doctest::Approx(1.0));
    CHECK(r.root_lower == doctest::Approx(-1.0 - 1.0 / 2.0));
    try {
        (void)zero_test_normalized(0.0, 1.0);
        FAIL("expected NonpositiveCoefficient");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonpositiveCoefficient);
    }
}

TEST_CASE("zero verdicts agree with the sampled hull") {
    const PlanarRegion in = region_hull(build_symbol(normalized_product(0.9, 0.9)), 256, 256);
    CHECK(hull_margin(in.hull, {0, 0}) > 0.0);
    const PlanarRegion out = region_hull(build_symbol(normalized_product(0.5, 0.5)), 256, 256);
    double minx = 1e300;
    for (const auto& p : out.hull) minx = std::min(minx, p.x);
    CHECK(minx > 0.0);
}
