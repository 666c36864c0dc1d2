#pragma once

#include "resonance/core.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace resonance {

enum class Figure { SRegion, ZRegion, MappingComparison };
enum class PlotFormat { Csv, Svg, Json };

std::string_view to_string(Figure f);
std::string_view to_string(PlotFormat f);
std::optional<Figure> parse_figure(std::string_view name);
std::optional<PlotFormat> parse_plot_format(std::string_view name);

struct PlotSpec {
    Figure figure = Figure::ZRegion;
    PlotFormat format = PlotFormat::Csv;
    std::string output_path;
    std::size_t samples = 721;
};

/// One labeled polyline of a figure; params[k] is the curve parameter of points[k].
struct LabeledCurve {
    std::string label;
    std::vector<double> params;
    std::vector<std::complex<double>> points;
};

struct FigureData {
    Figure figure = Figure::ZRegion;
    std::string param_column; ///< CSV header name of the parameter column
    std::vector<LabeledCurve> curves;
};

/**
 * Curves behind each figure, samples points per curve:
 *  - SRegion: upper_ray, lower_ray of the +/-45 degree cone (sigma in (0, 1]).
 *  - ZRegion: boundary, boundary_conjugate, unit_circle.
 *  - MappingComparison: exact, impulse, backward, bilinear.
 * Throws BadSampleCount if samples is too small for the underlying generator.
 */
FigureData figure_data(Figure figure, std::size_t samples);

std::string render_csv(const FigureData& data);
std::string render_svg(const FigureData& data);
std::string render_json(const FigureData& data);

std::string render_figure(Figure figure, PlotFormat format, std::size_t samples);

/// Writes the rendered figure to spec.output_path. Throws IoError if the file cannot be written.
void emit_figure(const PlotSpec& spec);

/// Writes text to path, throwing IoError on failure.
void write_text_file(const std::string& path, std::string_view text);

} // namespace resonance
