#include "resonance/figures.hpp"

#include "resonance/ct_resonance.hpp"
#include "resonance/dt_resonance.hpp"
#include "resonance/report_json.hpp"
#include "resonance/s2z_maps.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace resonance {

using std::numbers::pi;

std::string_view to_string(Figure f) {
    switch (f) {
    case Figure::SRegion: return "s-region";
    case Figure::ZRegion: return "z-region";
    case Figure::MappingComparison: return "mapping-comparison";
    }
    return "unknown";
}

std::string_view to_string(PlotFormat f) {
    switch (f) {
    case PlotFormat::Csv: return "csv";
    case PlotFormat::Svg: return "svg";
    case PlotFormat::Json: return "json";
    }
    return "unknown";
}

std::optional<Figure> parse_figure(std::string_view name) {
    for (Figure f : {Figure::SRegion, Figure::ZRegion, Figure::MappingComparison}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

std::optional<PlotFormat> parse_plot_format(std::string_view name) {
    for (PlotFormat f : {PlotFormat::Csv, PlotFormat::Svg, PlotFormat::Json}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

namespace {

std::vector<double> dt_grid(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = k + 1 == n ? pi : pi * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return out;
}

LabeledCurve unit_circle(std::size_t n) {
    LabeledCurve c{"unit_circle", {}, {}};
    for (std::size_t k = 0; k < n; ++k) {
        const double t = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n - 1);
        c.params.push_back(t);
        c.points.push_back(std::polar(1.0, t));
    }
    return c;
}

struct View {
    double x_min, x_max, y_min, y_max;
    double width = 520.0;

    double scale() const { return width / (x_max - x_min); }
    double height() const { return (y_max - y_min) * scale(); }
    double px(double x) const { return (x - x_min) * scale(); }
    double py(double y) const { return (y_max - y) * scale(); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string svg_points(const View& v, const std::vector<std::complex<double>>& pts) {
    std::string s;
    for (const auto& z : pts) {
        if (!s.empty()) s += ' ';
        s += fmt(v.px(z.real())) + "," + fmt(v.py(z.imag()));
    }
    return s;
}

std::string curve_color(std::string_view label) {
    if (label == "impulse") return "#1f77b4";
    if (label == "backward") return "#2ca02c";
    if (label == "bilinear") return "#000000";
    if (label == "unit_circle") return "#555555";
    return "#d62728";
}

// Region between the exact z-plane boundary and the unit circle, one half-plane.
std::vector<std::complex<double>> z_region_polygon(const std::vector<std::complex<double>>& boundary,
                                                   bool upper) {
    std::vector<std::complex<double>> poly = boundary;
    const std::size_t arc = 181;
    for (std::size_t k = 0; k < arc; ++k) {
        const double t = pi * (1.0 - static_cast<double>(k) / static_cast<double>(arc - 1));
        poly.push_back(std::polar(1.0, upper ? t : -t));
    }
    return poly;
}

} // namespace

FigureData figure_data(Figure figure, std::size_t samples) {
    FigureData data;
    data.figure = figure;
    switch (figure) {
    case Figure::SRegion: {
        data.param_column = "sigma_rad_per_s";
        const BoundaryPolyline b = ct_region_boundary(samples, 1.0);
        std::vector<double> sigma;
        for (const auto& z : b.upper) sigma.push_back(-z.real());
        data.curves.push_back({"upper_ray", sigma, b.upper});
        data.curves.push_back({"lower_ray", sigma, b.lower});
        break;
    }
    case Figure::ZRegion: {
        data.param_column = "omega0_rad";
        const BoundaryPolyline b = dt_region_boundary(samples);
        const std::vector<double> grid = dt_grid(samples);
        data.curves.push_back({"boundary", grid, b.upper});
        std::vector<double> neg(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) neg[k] = -grid[k];
        data.curves.push_back({"boundary_conjugate", neg, b.lower});
        data.curves.push_back(unit_circle(samples));
        break;
    }
    case Figure::MappingComparison: {
        data.param_column = "param_omega0_rad_or_sigmaT";
        const BoundaryPolyline b = dt_region_boundary(samples);
        data.curves.push_back({"exact", dt_grid(samples), b.upper});
        for (MappingMethod m : kAllMappingMethods) {
            MappedCurve c = boundary_curve(m, samples);
            data.curves.push_back({std::string(to_string(m)), std::move(c.params), std::move(c.points)});
        }
        break;
    }
    }
    return data;
}

std::string render_csv(const FigureData& data) {
    const bool s_plane = data.figure == Figure::SRegion;
    const std::string unit = s_plane ? "_rad_per_s" : "";
    std::string out = "curve," + data.param_column + ",re" + unit + ",im" + unit + ",radius" + unit +
                      ",angle_rad\n";
    for (const auto& c : data.curves) {
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            const auto& z = c.points[k];
            out += c.label;
            out += ',';
            out += json::format_double(c.params[k]);
            out += ',';
            out += json::format_double(z.real());
            out += ',';
            out += json::format_double(z.imag());
            out += ',';
            out += json::format_double(std::abs(z));
            out += ',';
            out += json::format_double(std::arg(z));
            out += '\n';
        }
    }
    return out;
}

std::string render_json(const FigureData& data) {
    json::Json doc;
    doc["schema_version"] = json::kSchemaVersion;
    doc["figure"] = to_string(data.figure);
    doc["param"] = data.param_column;
    json::Json curves = json::Json::array();
    for (const auto& c : data.curves) {
        json::Json item;
        item["label"] = c.label;
        item["params"] = c.params;
        item["points"] = json::points(c.points);
        curves.push_back(std::move(item));
    }
    doc["curves"] = std::move(curves);
    return json::dump_canonical(doc) + "\n";
}

std::string render_svg(const FigureData& data) {
    const bool s_plane = data.figure == Figure::SRegion;
    const View v = s_plane ? View{-1.25, 0.5, -1.25, 1.25} : View{-1.25, 1.25, -1.25, 1.25};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(v.width) << "\" height=\""
       << fmt(v.height()) << "\" viewBox=\"0 0 " << fmt(v.width) << ' ' << fmt(v.height()) << "\">\n"
       << "<title>" << to_string(data.figure) << "</title>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // shaded resonance region
    if (s_plane) {
        const double e = 1.25;
        for (double sign : {1.0, -1.0}) {
            os << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"none\" points=\""
               << svg_points(v, {{0.0, 0.0}, {-e, sign * e}, {0.0, sign * e}}) << "\"/>\n";
        }
    } else {
        const auto& exact = data.curves.front().points;
        std::vector<std::complex<double>> mirrored;
        for (const auto& z : exact) mirrored.push_back(std::conj(z));
        os << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"none\" points=\""
           << svg_points(v, z_region_polygon(exact, true)) << "\"/>\n";
        os << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"none\" points=\""
           << svg_points(v, z_region_polygon(mirrored, false)) << "\"/>\n";
    }

    // axes
    os << "<g stroke=\"#888888\" stroke-width=\"1\">\n"
       << "<line x1=\"" << fmt(v.px(v.x_min)) << "\" y1=\"" << fmt(v.py(0)) << "\" x2=\""
       << fmt(v.px(v.x_max)) << "\" y2=\"" << fmt(v.py(0)) << "\"/>\n"
       << "<line x1=\"" << fmt(v.px(0)) << "\" y1=\"" << fmt(v.py(v.y_min)) << "\" x2=\"" << fmt(v.px(0))
       << "\" y2=\"" << fmt(v.py(v.y_max)) << "\"/>\n"
       << "</g>\n";
    if (!s_plane && data.figure == Figure::MappingComparison) {
        os << "<circle cx=\"" << fmt(v.px(0)) << "\" cy=\"" << fmt(v.py(0)) << "\" r=\"" << fmt(v.scale())
           << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    }

    for (const auto& c : data.curves) {
        os << "<polyline fill=\"none\" stroke=\"" << curve_color(c.label)
           << "\" stroke-width=\"1.5\" data-label=\"" << c.label << "\" points=\"" << svg_points(v, c.points)
           << "\"/>\n";
    }

    double y = 18.0;
    for (const auto& c : data.curves) {
        os << "<text x=\"8\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
           << curve_color(c.label) << "\">" << c.label << "</text>\n";
        y += 15.0;
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_figure(Figure figure, PlotFormat format, std::size_t samples) {
    const FigureData data = figure_data(figure, samples);
    switch (format) {
    case PlotFormat::Csv: return render_csv(data);
    case PlotFormat::Svg: return render_svg(data);
    case PlotFormat::Json: return render_json(data);
    }
    return {};
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) {
        throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
    }
}

void emit_figure(const PlotSpec& spec) {
    if (spec.samples < 2) {
        throw Error(ErrorCode::BadSampleCount, "samples must be >= 2");
    }
    write_text_file(spec.output_path, render_figure(spec.figure, spec.format, spec.samples));
}

} // namespace resonance
