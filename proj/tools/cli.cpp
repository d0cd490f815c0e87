#include "cli.hpp"

#include "nrshift/boundary.hpp"
#include "nrshift/error.hpp"
#include "nrshift/geometry.hpp"
#include "nrshift/io.hpp"
#include "nrshift/nrange.hpp"
#include "nrshift/symbol.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace nrshift::cli {

namespace {

constexpr int kMinSamples = 16;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v + 0.0);
    return buf;
}

Complex parse_complex_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected re,im but got '" + text + "'");
    try {
        std::size_t used_re = 0, used_im = 0;
        const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
        const double x = std::stod(re, &used_re), y = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw std::invalid_argument("trailing characters");
        return {x, y};
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "expected re,im but got '" + text + "'");
    }
}

RifProduct load_product(const std::string& path) { return product_from_config(parse_factor_config(read_text_file(path))); }

void require_samples(int n, const char* what) {
    if (n < kMinSamples) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be at least 16");
}

// Unit-circle draws that stay clear of the exceptional set.
std::vector<Complex> draw_taus(const RifProduct& theta, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::vector<Complex> out;
    while (out.size() < n) {
        const Complex tau = std::polar(1.0, angle(rng));
        if (theta.distance_to_exceptional(tau) > 1e-3) out.push_back(tau);
    }
    return out;
}

// Offset grid 2 pi (k + 1/2) / n, skipping points near the exceptional set.
std::vector<Complex> offset_taus(const RifProduct& theta, int n) {
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) {
        const Complex tau = std::polar(1.0, 2.0 * kPi * (k + 0.5) / n);
        if (theta.distance_to_exceptional(tau) > 1e-3) out.push_back(tau);
    }
    return out;
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

// ------------------------------------------------------------------ commands

struct SymbolOpts {
    std::string config;
    std::string at;
};

int cmd_symbol(const SymbolOpts& o, std::ostream& out) {
    const MatrixSymbol m = build_symbol(load_product(o.config));
    out << (o.at.empty() ? format_symbol(m) : format_matrix(eval_symbol(m, parse_complex_pair(o.at))));
    return kOk;
}

struct RangeOpts {
    std::string config;
    int tau_samples = 720;
    int angle_samples = 720;
    std::string out_path;
    std::string format = "csv";
    bool dense = false;
    int threads = 0;
    std::uint64_t seed = 0;
};

int cmd_range(const RangeOpts& o, std::ostream& out) {
    require_samples(o.tau_samples, "--tau-samples");
    require_samples(o.angle_samples, "--angle-samples");
    const RifProduct theta = load_product(o.config);
    if (o.threads > 0) omp_set_num_threads(o.threads);
    const PlanarRegion region = region_hull(build_symbol(theta), o.tau_samples, o.angle_samples);
    const double radius = numerical_radius(region);
    if (!o.out_path.empty()) {
        std::ostringstream body;
        if (o.format == "json") {
            body << hull_json(region.hull, radius);
        } else if (o.format == "svg") {
            SvgScene scene;
            scene.curve = region.hull;
            body << render_svg(scene);
        } else {
            std::vector<Point> pts = region.hull;
            if (o.dense) pts.insert(pts.end(), region.points.begin(), region.points.end());
            write_points_csv(body, pts);
        }
        write_text_file(o.out_path, body.str());
    }
    out << "radius=" << fmt("%.9f", radius) << '\n';
    return kOk;
}

struct BoundaryOpts {
    double a = 0.0;
    double c = 0.0;
    int samples = 1024;
    std::string out_path;
    bool inner = false;
    bool check = false;
};

CircleFamily family_from_flags(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0) || std::abs(a - c - 1.0) > 1e-9) {
        throw Error(ErrorKind::InvalidArgument, "--a and --c must be positive with a - c = 1");
    }
    return CircleFamily::make(a, a - 1.0);
}

int cmd_boundary(const BoundaryOpts& o, std::ostream& out) {
    require_samples(o.samples, "--samples");
    const CircleFamily f = family_from_flags(o.a, o.c);
    const EnvelopePair env = envelope(f, uniform_grid(o.samples));

    std::ostringstream outer_csv, inner_csv;
    write_theta_csv(outer_csv, env.outer.thetas, env.outer.points);
    if (o.inner) write_theta_csv(inner_csv, env.inner.thetas, env.inner.points);
    if (o.out_path.empty()) {
        out << outer_csv.str();
        if (o.inner) out << '\n' << inner_csv.str();
    } else {
        write_text_file(o.out_path, outer_csv.str());
        if (o.inner) write_text_file(with_suffix(o.out_path, "_inner"), inner_csv.str());
    }

    if (o.check) {
        const EnvelopeResiduals ro = envelope_residuals(env.outer, f);
        const EnvelopeResiduals ri = envelope_residuals(env.inner, f);
        out << "outer_residual_f=" << fmt("%.3e", ro.f) << " outer_residual_f_theta=" << fmt("%.3e", ro.f_theta) << '\n';
        out << "inner_residual_f=" << fmt("%.3e", ri.f) << " inner_residual_f_theta=" << fmt("%.3e", ri.f_theta) << '\n';
        out << "convex=" << (convexity_check(env.outer) ? "true" : "false") << '\n';
        out << "gap=" << format_real(non_circularity_gap(f)) << '\n';
    }
    return kOk;
}

struct ZeroOpts {
    std::optional<double> c1, c2;
    std::string config;
};

struct ScanResult {
    int witnesses = 0;
    int samples = 0;
    double best_margin = -1e300;  // max of |1 - conj(f1) f2| - |f1| - |f2|
    Complex best_tau;
};

ScanResult scan_witness(const RifProduct& theta) {
    ScanResult r;
    for (const Complex tau : offset_taus(theta, 360)) {
        const GeneralZeroReport z = zero_test_general(theta, tau);
        ++r.samples;
        if (z.verdict == WitnessVerdict::InteriorWitness) ++r.witnesses;
        const double margin = z.major_axis - z.foci_sum;
        if (margin > r.best_margin) {
            r.best_margin = margin;
            r.best_tau = tau;
        }
    }
    return r;
}

void print_scan(const ScanResult& s, std::ostream& out) {
    out << "witness_taus=" << s.witnesses << '/' << s.samples << '\n';
    out << "best_margin=" << format_real(s.best_margin) << '\n';
    out << "best_tau=" << format_complex(s.best_tau) << '\n';
}

int cmd_zero_test(const ZeroOpts& o, std::ostream& out) {
    const bool normalized = o.c1 || o.c2;
    if (normalized == !o.config.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give either --c1 and --c2, or --config");
    }
    if (normalized) {
        if (!o.c1 || !o.c2) throw Error(ErrorKind::InvalidArgument, "--c1 and --c2 go together");
        const NormalizedZeroReport r = zero_test_normalized(*o.c1, *o.c2);
        out << "verdict=" << to_string(r.verdict) << '\n';
        out << "product=" << format_real(r.product) << '\n';
        out << "root_upper=" << format_real(r.root_upper) << '\n';
        out << "root_lower=" << format_real(r.root_lower) << '\n';
        print_scan(scan_witness(normalized_product(*o.c1, *o.c2)), out);
        return kOk;
    }
    const RifProduct theta = load_product(o.config);
    if (theta.size() != 2) throw Error(ErrorKind::InvalidArgument, "zero test needs exactly two factors");
    const ScanResult s = scan_witness(theta);
    out << "verdict=" << (s.witnesses > 0 ? "InteriorWitness" : "NoWitness") << '\n';
    print_scan(s, out);
    const GeneralZeroReport best = zero_test_general(theta, s.best_tau);
    for (int j = 0; j < 2; ++j) {
        const FocusCircleCondition& c = best.circle[j];
        out << "circle" << j + 1 << " beta=" << format_complex(c.beta) << " holds=" << (c.holds ? "true" : "false")
            << " real_test=" << (c.real_test ? (*c.real_test ? "true" : "false") : "n/a") << '\n';
    }
    return kOk;
}

struct VerifyOpts {
    std::string config;
    std::uint64_t seed = 0;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    const RifProduct theta = load_product(o.config);
    const MatrixSymbol m = build_symbol(theta);
    bool all = true;
    const auto report = [&](const char* name, double dev, double tol) {
        const bool pass = dev <= tol;
        all = all && pass;
        out << name << " max_dev=" << fmt("%.3e", dev) << " tol=" << fmt("%.0e", tol) << (pass ? " PASS" : " FAIL")
            << '\n';
    };

    {
        // |Theta| = 1 on an offset torus grid away from the torus zeros
        double worst = 0.0;
        const int n = 64;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Complex z1 = std::polar(1.0, 2 * kPi * (i + 0.5) / n), z2 = std::polar(1.0, 2 * kPi * (j + 0.5) / n);
                bool near = false;
                for (const auto& f : theta.factors()) near = near || std::abs(z1 - f.tau1()) + std::abs(z2 - f.tau2()) < 1e-3;
                if (!near) worst = std::max(worst, std::abs(std::abs(eval_product(theta, z1, z2)) - 1.0));
            }
        report("inner", worst, 1e-9);
    }
    // The torus Riemann sum converges like N^{-1/2} near a torus zero.
    report("gram", basis_gram(theta, 512).max_abs_diff(ComplexMatrix::identity(theta.size())), 3e-2);
    {
        double worst = 0.0;
        for (const Complex tau : offset_taus(theta, 8)) worst = std::max(worst, slice_isometry_residual(theta, tau, 4096));
        report("slice_isometry", worst, 1e-6);
    }
    const auto taus = offset_taus(theta, 36);
    {
        double worst = 0.0;
        for (const Complex tau : taus) worst = std::max(worst, diagonal_zero_mismatch(theta, m, tau));
        report("diagonal_vs_slice_zeros", worst, 1e-9);
    }
    if (theta.size() == 2) {
        double worst = 0.0;
        for (const Complex tau : draw_taus(theta, 100, o.seed)) worst = std::max(worst, minor_axis_identity_residual(theta, tau));
        report("minor_axis", worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const Complex tau : taus) worst = std::max(worst, support_gap(eval_symbol(m, tau), tmw_matrix(slice_blaschke(theta, tau)), 360));
        report("tmw_cross_oracle", worst, 1e-8);
    }
    {
        double worst = 0.0;
        const auto samples = random_bidisk_samples(100, o.seed);
        for (const auto& f : theta.factors()) worst = std::max(worst, backward_shift_residual(f, samples));
        report("backward_shift", worst, 1e-10);
    }
    {
        std::vector<RifFactor> flipped;
        for (const auto& f : theta.factors()) flipped.push_back(f.with_flipped_lambda());
        const MatrixSymbol mf = build_symbol(RifProduct(flipped));
        double worst = 0.0;
        for (const Complex tau : taus) worst = std::max(worst, support_gap(eval_symbol(m, tau), eval_symbol(mf, tau), 360));
        report("lambda_flip", worst, 1e-12);
    }
    return all ? kOk : kVerifyFailed;
}

struct PlotOpts {
    std::string in_path;
    std::string out_path;
    int circles = 0;
    double a = 2.0;
    double c = 1.0;
    SvgStyle style;
};

int cmd_plot(const PlotOpts& o) {
    std::ifstream in(o.in_path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + o.in_path);
    const CsvCurve curve = read_curve_csv(in);
    if (o.circles < 0) throw Error(ErrorKind::InvalidArgument, "--with-circles must be non-negative");
    const CircleFamily f = family_from_flags(o.a, o.c);

    SvgScene scene;
    scene.curve = curve.points;
    for (int k = 0; k < o.circles; ++k) {
        const Circle c = circle_at(f, 2.0 * kPi * (k + 0.5) / o.circles);
        scene.circles.push_back({c.center, c.radius});
    }
    // farthest point of each circle from the center a / (a + c) of the circle of centers
    for (const double theta : uniform_grid(512)) {
        const Circle c = circle_at(f, theta);
        scene.extreme.push_back(to_point(c.center + c.radius * std::polar(1.0, theta)));
    }
    write_text_file(o.out_path, render_svg(scene, o.style));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical ranges of compressed shifts on two-variable model spaces"};
    app.require_subcommand(1);

    SymbolOpts so;
    auto* symbol = app.add_subcommand("symbol", "print the matrix symbol of a factor product");
    symbol->add_option("config", so.config, "JSON factor config")->required();
    symbol->add_option("--at", so.at, "evaluate at tau = re,im instead");

    RangeOpts ro;
    auto* range = app.add_subcommand("range", "sampled convex hull of the numerical range and its radius");
    range->add_option("config", ro.config, "JSON factor config")->required();
    range->add_option("--tau-samples", ro.tau_samples, "torus samples (>= 16)")->capture_default_str();
    range->add_option("--angle-samples", ro.angle_samples, "boundary samples per tau (>= 16)")->capture_default_str();
    range->add_option("--out", ro.out_path, "output file");
    range->add_option("--format", ro.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}))->capture_default_str();
    range->add_flag("--dense", ro.dense, "append every sampled boundary point to the CSV");
    range->add_option("--threads", ro.threads, "OpenMP threads (0: runtime default)");
    range->add_option("--seed", ro.seed, "seed for randomized internals")->capture_default_str();

    BoundaryOpts bo;
    auto* boundary = app.add_subcommand("boundary", "envelope boundary for a squared factor a - z1 + c z2");
    boundary->add_option("--a", bo.a, "a > 0")->required();
    boundary->add_option("--c", bo.c, "c > 0 with a - c = 1")->required();
    boundary->add_option("--samples", bo.samples, "grid size (>= 16)")->capture_default_str();
    boundary->add_option("--out", bo.out_path, "theta,x,y CSV of the outer curve (stdout if omitted)");
    boundary->add_flag("--inner", bo.inner, "also write the inner curve (to OUT with an _inner suffix)");
    boundary->add_flag("--check", bo.check, "print residuals, convexity and the non-circularity gap");

    ZeroOpts zo;
    double c1 = 0.0, c2 = 0.0;
    auto* zero = app.add_subcommand("zero-test", "is 0 an interior point of the numerical range");
    auto* c1_opt = zero->add_option("--c1", c1, "normalized coefficient c1 > 0");
    auto* c2_opt = zero->add_option("--c2", c2, "normalized coefficient c2 > 0");
    zero->add_option("--config", zo.config, "two-factor JSON config");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run the invariant checks on a config");
    verify->add_option("config", vo.config, "JSON factor config")->required();
    verify->add_option("--seed", vo.seed, "seed for random samples")->capture_default_str();

    PlotOpts po;
    auto* plot = app.add_subcommand("plot", "render a CSV curve with the circle family as SVG");
    plot->add_option("input", po.in_path, "x,y or theta,x,y CSV")->required();
    plot->add_option("-o,--out", po.out_path, "SVG output")->required();
    plot->add_option("--with-circles", po.circles, "number of family circles to draw")->capture_default_str();
    plot->add_option("--a", po.a, "family parameter a")->capture_default_str();
    plot->add_option("--c", po.c, "family parameter c")->capture_default_str();
    plot->add_option("--curve-color", po.style.curve_color)->capture_default_str();
    plot->add_option("--extreme-color", po.style.extreme_color)->capture_default_str();
    plot->add_option("--circle-color", po.style.circle_color)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (symbol->parsed()) return cmd_symbol(so, out);
        if (range->parsed()) return cmd_range(ro, out);
        if (boundary->parsed()) return cmd_boundary(bo, out);
        if (zero->parsed()) {
            if (c1_opt->count()) zo.c1 = c1;
            if (c2_opt->count()) zo.c2 = c2;
            return cmd_zero_test(zo, out);
        }
        if (verify->parsed()) return cmd_verify(vo, out);
        if (plot->parsed()) return cmd_plot(po);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_validation_failure(e.kind()) ? kValidation : kUsage;
    }
    return kUsage;
}

}  // namespace nrshift::cli
