#ifndef APSK_SVG_PLOT_HPP
#define APSK_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace apsk {

struct PlotSeries {
    std::string name;
    std::vector<double> x; // SNR in dB (linear axis)
    std::vector<double> y; // error rates (log axis)
};

struct PlotOptions {
    std::string title;
    std::string x_label = "SNR (dB)";
    std::string y_label = "SER";
    // y values of zero (or below the floor) are clamped to 10^-floor_exp
    // so the log axis can show them; the floor is recorded in the SVG
    // metadata comment.
    int floor_exp = 7;
};

// Self-contained SVG: linear x, log10 y, legend entries in input order,
// numeric content taken verbatim from the series. Throws kEmptySeries
// when there is nothing to draw.
std::string render_plot_svg(const std::vector<PlotSeries>& series, const PlotOptions& options);

void emit_plot(const std::vector<PlotSeries>& series, const std::string& path,
               const PlotOptions& options = {});

} // namespace apsk

#endif
