#include "apsk/figures.hpp"

#include <cctype>
#include <filesystem>
#include <map>

#include "apsk/error.hpp"
#include "apsk/experiment.hpp"
#include "apsk/svg_plot.hpp"

namespace apsk {

namespace {

// pi/8 = 0.39269908169872414, pi/10 = 0.3141592653589793,
// pi/18 = 0.17453292519943295.
const std::map<std::string, std::string>& figure_registry() {
    static const std::map<std::string, std::string> registry = {
        {"fig3", R"json({
  "figure": "fig3",
  "title": "8-point designs vs 8-QAM, phase bound pi/8",
  "phase_bound": 0.39269908169872414,
  "snr_db": [0, 5, 10, 15, 20, 25],
  "trials_per_point": 100000,
  "seed": 3101,
  "series": [
    {"label": "(4,2)", "family": "psk-pam", "m": 8, "k": 4},
    {"label": "(2,4)", "family": "psk-pam", "m": 8, "k": 2},
    {"label": "(8,1)", "family": "psk-pam", "m": 8, "k": 8},
    {"label": "8-QAM", "family": "qam", "m": 8}
  ]
})json"},
        {"fig4", R"json({
  "figure": "fig4",
  "title": "16-point designs vs 16-QAM, phase bound pi/8",
  "phase_bound": 0.39269908169872414,
  "snr_db": [0, 5, 10, 15, 20, 25],
  "trials_per_point": 100000,
  "seed": 4101,
  "series": [
    {"label": "(8,2)", "family": "psk-pam", "m": 16, "k": 8},
    {"label": "(4,4)", "family": "psk-pam", "m": 16, "k": 4},
    {"label": "(16,1)", "family": "psk-pam", "m": 16, "k": 16},
    {"label": "16-QAM", "family": "qam", "m": 16}
  ]
})json"},
        {"fig5", R"json({
  "figure": "fig5",
  "title": "8-point designs vs 8-QAM, phase bound pi/18",
  "phase_bound": 0.17453292519943295,
  "snr_db": [0, 5, 10, 15, 20, 25],
  "trials_per_point": 100000,
  "seed": 5101,
  "series": [
    {"label": "(4,2)", "family": "psk-pam", "m": 8, "k": 4},
    {"label": "(2,4)", "family": "psk-pam", "m": 8, "k": 2},
    {"label": "(8,1)", "family": "psk-pam", "m": 8, "k": 8},
    {"label": "8-QAM", "family": "qam", "m": 8}
  ]
})json"},
        {"fig6", R"json({
  "figure": "fig6",
  "title": "16-point designs vs 16-QAM, phase bound pi/18",
  "phase_bound": 0.17453292519943295,
  "snr_db": [0, 5, 10, 15, 20, 25],
  "trials_per_point": 100000,
  "seed": 6101,
  "series": [
    {"label": "(8,2)", "family": "psk-pam", "m": 16, "k": 8},
    {"label": "(4,4)", "family": "psk-pam", "m": 16, "k": 4},
    {"label": "(16,1)", "family": "psk-pam", "m": 16, "k": 16},
    {"label": "16-QAM", "family": "qam", "m": 16}
  ]
})json"},
        {"fig7", R"json({
  "figure": "fig7",
  "title": "Union bound vs simulation, phase bound pi/10",
  "phase_bound": 0.3141592653589793,
  "snr_db": [14, 18, 22, 26, 30],
  "trials_per_point": 1000000,
  "seed": 7101,
  "series": [
    {"label": "(4,2) sim", "family": "psk-pam", "m": 8, "k": 4},
    {"label": "(4,4) sim", "family": "psk-pam", "m": 16, "k": 4}
  ],
  "analytic": [
    {"label": "(4,2) bound", "family": "psk-pam", "m": 8, "k": 4, "mode": "union"},
    {"label": "(4,4) bound", "family": "psk-pam", "m": 16, "k": 4, "mode": "union"}
  ]
})json"},
    };
    return registry;
}

} // namespace

std::vector<std::string> figure_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : figure_registry()) names.push_back(name);
    return names;
}

const std::string& figure_config_text(const std::string& name) {
    const auto& registry = figure_registry();
    auto it = registry.find(name);
    if (it == registry.end())
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown figure \"" + name + "\" (known: fig3..fig7)");
    return it->second;
}

FigureConfig figure_config(const std::string& name) {
    return parse_figure_config(figure_config_text(name));
}

std::string slugify(const std::string& label) {
    std::string out;
    bool pending_dash = false;
    for (char ch : label) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            if (pending_dash && !out.empty()) out.push_back('-');
            pending_dash = false;
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else {
            pending_dash = true;
        }
    }
    return out.empty() ? "series" : out;
}

std::vector<std::string> reproduce_figure(const FigureConfig& fig, const std::string& out_dir,
                                          int n_threads) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;
    std::vector<PlotSeries> plot;

    for (const auto& series : fig.series) {
        ExperimentConfig cfg = experiment_for_series(fig, series);
        cfg.out_path = out_dir + "/" + fig.name + "_" + slugify(series.label) + ".csv";
        std::vector<SerEstimate> points = run_sweep(cfg, n_threads);
        written.push_back(cfg.out_path);

        PlotSeries ps;
        ps.name = series.label;
        for (const auto& p : points) {
            ps.x.push_back(p.snr_db);
            ps.y.push_back(p.ser);
        }
        plot.push_back(std::move(ps));
    }

    QuadratureSpec quad;
    for (const auto& an : fig.analytic) {
        ExperimentConfig cfg;
        cfg.constellation = an.constellation;
        cfg.phase_bound_a = fig.phase_bound_a;
        cfg.snr_grid_db = fig.snr_grid_db;
        cfg.trials_per_point = fig.trials_per_point;
        cfg.master_seed = fig.master_seed;
        AnalyticMode mode = an.union_bound ? AnalyticMode::kUnion : AnalyticMode::kDominant;
        std::vector<AnalyticPoint> points = run_analytic_curve(cfg, quad, mode);
        std::string path = out_dir + "/" + fig.name + "_" + slugify(an.label) + "_analytic.csv";
        write_analytic_csv(path, cfg, quad, mode, ObjectiveMode::kDefault, points);
        written.push_back(path);

        PlotSeries ps;
        ps.name = an.label;
        for (const auto& p : points) {
            ps.x.push_back(p.snr_db);
            ps.y.push_back(p.p_total);
        }
        plot.push_back(std::move(ps));
    }

    PlotOptions opts;
    opts.title = fig.title;
    std::string svg_path = out_dir + "/" + fig.name + ".svg";
    emit_plot(plot, svg_path, opts);
    written.push_back(svg_path);
    return written;
}

} // namespace apsk
