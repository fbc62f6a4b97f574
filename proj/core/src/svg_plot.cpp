#include "apsk/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "apsk/error.hpp"
#include "apsk/experiment.hpp"

namespace apsk {

namespace {

constexpr double kWidth = 880;
constexpr double kHeight = 560;
constexpr double kLeft = 80;
constexpr double kRight = 40;
constexpr double kTop = 48;
constexpr double kBottom = 64;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) { return format_double(v); }

// Marker shapes cycle with the palette so overlapping curves stay
// distinguishable in monochrome prints.
std::string marker(double cx, double cy, int series_idx, const std::string& color) {
    switch (series_idx % 4) {
        case 0:
            return "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"3.5\" fill=\"" +
                   color + "\"/>";
        case 1:
            return "<rect x=\"" + num(cx - 3) + "\" y=\"" + num(cy - 3) +
                   "\" width=\"6\" height=\"6\" fill=\"" + color + "\"/>";
        case 2:
            return "<path d=\"M " + num(cx) + " " + num(cy - 4) + " L " + num(cx + 4) + " " +
                   num(cy + 3.5) + " L " + num(cx - 4) + " " + num(cy + 3.5) +
                   " Z\" fill=\"" + color + "\"/>";
        default:
            return "<path d=\"M " + num(cx - 4) + " " + num(cy) + " L " + num(cx) + " " +
                   num(cy - 4) + " L " + num(cx + 4) + " " + num(cy) + " L " + num(cx) + " " +
                   num(cy + 4) + " Z\" fill=\"" + color + "\"/>";
    }
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

} // namespace

std::string render_plot_svg(const std::vector<PlotSeries>& series, const PlotOptions& options) {
    if (series.empty()) throw Error(ErrorCode::kEmptySeries, "no series to plot");
    for (const auto& s : series) {
        if (s.x.empty() || s.x.size() != s.y.size())
            throw Error(ErrorCode::kEmptySeries, "series \"" + s.name + "\" has no usable points");
    }

    const double floor_val = std::pow(10.0, -options.floor_exp);
    double xmin = series[0].x[0], xmax = series[0].x[0];
    double ymin_exp = 0.0;
    for (const auto& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            double y = std::max(s.y[i], floor_val);
            ymin_exp = std::min(ymin_exp, std::floor(std::log10(y)));
        }
    }
    if (xmax == xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    const double ymax_exp = 0.0; // error rates never exceed 1
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    auto map_x = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto map_y = [&](double y) {
        double e = std::log10(std::max(y, floor_val));
        return kTop + (ymax_exp - e) / (ymax_exp - ymin_exp) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<!-- log-floor=1e-" + std::to_string(options.floor_exp) +
           " (zero rates are clamped to the floor) -->\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // y grid: one line per decade
    for (double e = ymax_exp; e >= ymin_exp - 0.5; e -= 1.0) {
        double y = kTop + (ymax_exp - e) / (ymax_exp - ymin_exp) * plot_h;
        svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kLeft + plot_w) + "\" y2=\"" + num(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
               format_double(e) + "</text>\n";
    }
    // x ticks: step chosen to land near 8 ticks
    double span = xmax - xmin;
    double step = std::pow(10.0, std::floor(std::log10(span / 8.0)));
    while (span / step > 12.0) step *= (std::fmod(span / step, 2.0) == 0 ? 2.0 : 2.5);
    for (double x = std::ceil(xmin / step) * step; x <= xmax + 1e-9; x += step) {
        double px = map_x(x);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(px) +
               "\" y2=\"" + num(kTop + plot_h) + "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" + num(kTop + plot_h + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               format_double(x) + "</text>\n";
    }

    svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           escape_xml(options.x_label) + "</text>\n";
    svg += "<text x=\"20\" y=\"" + num(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 " +
           num(kTop + plot_h / 2) + ")\">" + escape_xml(options.y_label) + "</text>\n";
    if (!options.title.empty()) {
        svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"16\">" +
               escape_xml(options.title) + "</text>\n";
    }

    for (size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const std::string color = kPalette[si % (sizeof kPalette / sizeof kPalette[0])];
        std::string path = "M";
        for (size_t i = 0; i < s.x.size(); ++i) {
            path += " " + num(map_x(s.x[i])) + " " + num(map_y(s.y[i]));
            if (i == 0 && s.x.size() > 1) path += " L";
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.8\"/>\n";
        for (size_t i = 0; i < s.x.size(); ++i) {
            svg += marker(map_x(s.x[i]), map_y(s.y[i]), static_cast<int>(si), color) + "\n";
        }
        // legend row
        double ly = kTop + 14 + 18 * static_cast<double>(si);
        double lx = kLeft + plot_w - 230;
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 26) +
               "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.8\"/>\n";
        svg += marker(lx + 13, ly, static_cast<int>(si), color) + "\n";
        svg += "<text x=\"" + num(lx + 32) + "\" y=\"" + num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(s.name) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void emit_plot(const std::vector<PlotSeries>& series, const std::string& path,
               const PlotOptions& options) {
    std::string svg = render_plot_svg(series, options);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
    out << svg;
    if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

} // namespace apsk
