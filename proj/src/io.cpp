#include "nrshift/io.hpp"

#include "nrshift/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nrshift {

namespace {

Complex parse_coeff(const nlohmann::json& j, const char* name, std::size_t index) {
    const std::string where = "factor " + std::to_string(index) + " field '" + name + "'";
    if (!j.contains(name)) throw Error(ErrorKind::ConfigError, where + " is missing");
    const auto& v = j.at(name);
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw Error(ErrorKind::ConfigError, where + " must be [re, im] or a number");
}

}  // namespace

std::vector<FactorCoeffs> parse_factor_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ConfigError, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("factors") || !doc["factors"].is_array()) {
        throw Error(ErrorKind::ConfigError, "config needs a \"factors\" array");
    }
    const auto& list = doc["factors"];
    if (list.empty()) throw Error(ErrorKind::ConfigError, "factors list is empty");
    std::vector<FactorCoeffs> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!list[i].is_object()) throw Error(ErrorKind::ConfigError, "factor " + std::to_string(i) + " is not an object");
        out.push_back({parse_coeff(list[i], "a", i), parse_coeff(list[i], "b", i), parse_coeff(list[i], "c", i),
                       parse_coeff(list[i], "d", i)});
    }
    return out;
}

RifProduct product_from_config(const std::vector<FactorCoeffs>& factors) {
    std::vector<RifFactor> fs;
    fs.reserve(factors.size());
    for (const auto& f : factors) fs.push_back(factor_from_coeffs(f.a, f.b, f.c, f.d));
    return RifProduct(std::move(fs));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
    return buf;
}

void write_points_csv(std::ostream& os, const std::vector<Point>& points) {
    os << "x,y\n";
    for (const auto& p : points) os << format_real(p.x) << ',' << format_real(p.y) << '\n';
}

void write_theta_csv(std::ostream& os, const std::vector<double>& thetas, const std::vector<Point>& points) {
    os << "theta,x,y\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        os << format_real(thetas[i]) << ',' << format_real(points[i].x) << ',' << format_real(points[i].y) << '\n';
}

CsvCurve read_curve_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorKind::IoError, "empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    CsvCurve out;
    if (line == "theta,x,y") {
        out.has_theta = true;
    } else if (line != "x,y") {
        throw Error(ErrorKind::IoError, "unexpected CSV header '" + line + "'");
    }
    const std::size_t fields = out.has_theta ? 3 : 2;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double x = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size()) {
                throw Error(ErrorKind::IoError, "bad number on CSV row " + std::to_string(row));
            }
            v.push_back(x);
        }
        if (v.size() != fields) throw Error(ErrorKind::IoError, "wrong field count on CSV row " + std::to_string(row));
        if (out.has_theta) out.thetas.push_back(v[0]);
        out.points.push_back({v[fields - 2], v[fields - 1]});
    }
    return out;
}

std::string hull_json(const std::vector<Point>& hull, double radius) {
    // Hand-written so the numbers keep 17 significant digits.
    std::string s = "{\"hull\":[";
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (i) s += ',';
        s += '[' + format_real(hull[i].x) + ',' + format_real(hull[i].y) + ']';
    }
    return s + "],\"radius\":" + format_real(radius) + "}\n";
}

namespace {

std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
    return buf;
}

std::string closed_path(const std::vector<Point>& pts, const std::string& color, double stroke) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d += i ? " L " : "M ";
        d += svg_num(pts[i].x) + ' ' + svg_num(pts[i].y);
    }
    return "  <path d=\"" + d + " Z\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";
}

}  // namespace

std::string render_svg(const SvgScene& scene, const SvgStyle& style) {
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" width=\"600\" height=\"600\">\n";
    s += " <g transform=\"scale(1,-1)\">\n";
    std::vector<Point> unit;
    for (int k = 0; k < 360; ++k) unit.push_back({std::cos(2 * kPi * k / 360), std::sin(2 * kPi * k / 360)});
    s += closed_path(unit, style.unit_circle_color, style.stroke);
    for (const auto& c : scene.circles) {
        s += "  <circle cx=\"" + svg_num(c.center.real()) + "\" cy=\"" + svg_num(c.center.imag()) + "\" r=\"" +
             svg_num(c.radius) + "\" fill=\"none\" stroke=\"" + style.circle_color + "\" stroke-width=\"" +
             svg_num(0.5 * style.stroke) + "\"/>\n";
    }
    if (!scene.extreme.empty()) s += closed_path(scene.extreme, style.extreme_color, style.stroke);
    if (!scene.curve.empty()) s += closed_path(scene.curve, style.curve_color, style.stroke);
    s += " </g>\n</svg>\n";
    return s;
}

}  // namespace nrshift
