#pragma once

#include "nrshift/rif.hpp"
#include "nrshift/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nrshift {

struct FactorCoeffs {
    Complex a, b, c, d;
};

/// {"factors":[{"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}, ...]}
/// A bare number is accepted for a real coefficient. Throws ConfigError.
std::vector<FactorCoeffs> parse_factor_config(const std::string& text);

/// Validates every factor (factor_from_coeffs errors propagate).
RifProduct product_from_config(const std::vector<FactorCoeffs>& factors);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// %.17g
std::string format_real(double v);

// CSV: header row, comma separated, LF line endings.
void write_points_csv(std::ostream& os, const std::vector<Point>& points);
void write_theta_csv(std::ostream& os, const std::vector<double>& thetas, const std::vector<Point>& points);

struct CsvCurve {
    bool has_theta = false;
    std::vector<double> thetas;
    std::vector<Point> points;
};

/// Reads either `x,y` or `theta,x,y`. Throws IoError on anything else.
CsvCurve read_curve_csv(std::istream& is);

/// {"hull":[[x,y],...],"radius":v}
std::string hull_json(const std::vector<Point>& hull, double radius);

struct SvgStyle {
    std::string curve_color = "green";
    std::string extreme_color = "red";
    std::string circle_color = "#9a9a9a";
    std::string unit_circle_color = "black";
    double stroke = 0.006;
};

struct SvgCircle {
    Complex center;
    double radius = 0.0;
};

struct SvgScene {
    std::vector<Point> curve;            // closed path, curve_color
    std::vector<Point> extreme;          // closed path, extreme_color (optional)
    std::vector<SvgCircle> circles;      // circle_color
};

/// Standalone SVG on the view box [-1.2, 1.2]^2 with the unit circle drawn as a
/// path; y points up.
std::string render_svg(const SvgScene& scene, const SvgStyle& style = {});

}  // namespace nrshift
