// Command-line front end: constellation tables, Monte Carlo SER sweeps,
// analytic error curves, min-max (K,N) design search, SVG plotting and
// one-shot reproduction of the bundled figure manifests.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apsk/design.hpp"
#include "apsk/error.hpp"
#include "apsk/experiment.hpp"
#include "apsk/figures.hpp"
#include "apsk/svg_plot.hpp"

namespace {

using namespace apsk;

Family family_from_flag(const std::string& s) {
    if (s == "psk-pam") return Family::kPskPam;
    if (s == "qam") return Family::kQam;
    if (s == "psk") return Family::kPsk;
    throw Error(ErrorCode::kBadConfig, "--family must be psk-pam|qam|psk");
}

NormMode norm_from_flag(const std::string& s) {
    if (s == "mean") return NormMode::kMeanPower;
    if (s == "paper-sum") return NormMode::kPaperSum;
    throw Error(ErrorCode::kBadConfig, "--norm must be mean|paper-sum");
}

ObjectiveMode objective_from_flag(const std::string& s) {
    if (s == "default") return ObjectiveMode::kDefault;
    if (s == "paper-exact-eq25") return ObjectiveMode::kPaperExactEq25;
    throw Error(ErrorCode::kBadConfig, "--objective must be default|paper-exact-eq25");
}

bool reestimate_from_flag(const std::string& s) {
    if (s == "on") return true;
    if (s == "off") return false;
    throw Error(ErrorCode::kBadConfig, "--reestimate must be on|off");
}

// Accepts either a comma list ("10,15,20") or a range ("10:5:25").
std::vector<double> parse_snr_spec(const std::string& spec) {
    std::vector<double> grid;
    auto parse_num = [](const std::string& tok) {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw Error(ErrorCode::kBadConfig, "bad number in --snr-db: " + tok);
        return v;
    };
    if (spec.find(':') != std::string::npos) {
        std::istringstream in(spec);
        std::string a, b, c;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c))
            throw Error(ErrorCode::kBadConfig, "--snr-db range must be start:step:stop");
        double start = parse_num(a), step = parse_num(b), stop = parse_num(c);
        if (!(step > 0.0)) throw Error(ErrorCode::kBadConfig, "--snr-db step must be positive");
        long count = std::lround((stop - start) / step);
        for (long i = 0; i <= count; ++i) {
            double v = start + step * static_cast<double>(i);
            if (v <= stop + 1e-9) grid.push_back(v);
        }
    } else {
        std::istringstream in(spec);
        std::string tok;
        while (std::getline(in, tok, ',')) grid.push_back(parse_num(tok));
    }
    if (grid.empty()) throw Error(ErrorCode::kBadConfig, "--snr-db produced an empty grid");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error(ErrorCode::kBadConfig, "--snr-db grid must be strictly increasing");
    return grid;
}

void output_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIoError, "cannot open " + out_path + " for writing");
    out << text;
    if (!out) throw Error(ErrorCode::kIoError, "write failed for " + out_path);
}

struct CsvCurve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

CsvCurve read_csv_curve(const std::string& path, const std::string& y_col_request) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
    CsvCurve curve;
    auto stem = path.substr(path.find_last_of('/') + 1);
    curve.label = stem.substr(0, stem.find_last_of('.'));

    std::string line;
    int x_idx = -1, y_idx = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (x_idx < 0) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] == "snr_db") x_idx = static_cast<int>(i);
                if (y_col_request == "auto" ? (cells[i] == "ser" || cells[i] == "p_total")
                                            : cells[i] == y_col_request)
                    if (y_idx < 0) y_idx = static_cast<int>(i);
            }
            if (x_idx < 0 || y_idx < 0)
                throw Error(ErrorCode::kBadConfig,
                            path + " lacks snr_db/" +
                                (y_col_request == "auto" ? "ser|p_total" : y_col_request) +
                                " columns");
            continue;
        }
        curve.x.push_back(std::stod(cells[static_cast<size_t>(x_idx)]));
        curve.y.push_back(std::stod(cells[static_cast<size_t>(y_idx)]));
    }
    if (curve.x.empty()) throw Error(ErrorCode::kEmptySeries, path + " has no data rows");
    return curve;
}

int run(int argc, char** argv) {
    CLI::App app{"PSK-PAM ring constellation toolkit"};
    app.require_subcommand(1);

    std::string family = "psk-pam", norm = "mean", objective = "default", reestimate = "on";
    std::string snr_spec, out_path, config_path, decoder = "auto", bound = "union";
    int m = 8, k = 0, threads = 0;
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    double phase_bound = 0.0;

    auto* c_const = app.add_subcommand("constellation", "Emit a constellation point table (CSV)");
    c_const->add_option("--family", family, "psk-pam|qam|psk");
    c_const->add_option("--m", m, "total points")->required();
    c_const->add_option("--k", k, "subset count (psk-pam)");
    c_const->add_option("--norm", norm, "mean|paper-sum");
    c_const->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* c_ser = app.add_subcommand("ser", "Monte Carlo SER sweep (CSV)");
    c_ser->add_option("--config", config_path, "experiment config JSON (overrides flags)");
    c_ser->add_option("--family", family, "psk-pam|qam|psk");
    c_ser->add_option("--m", m, "total points");
    c_ser->add_option("--k", k, "subset count (psk-pam)");
    c_ser->add_option("--norm", norm, "mean|paper-sum");
    c_ser->add_option("--phase-bound", phase_bound, "phase error bound a, radians");
    c_ser->add_option("--snr-db", snr_spec, "start:step:stop or comma list");
    c_ser->add_option("--trials", trials, "trials per SNR point");
    c_ser->add_option("--seed", seed, "master seed");
    c_ser->add_option("--reestimate", reestimate, "on|off");
    c_ser->add_option("--decoder", decoder, "auto|two-step|coherent");
    c_ser->add_option("--threads", threads, "worker threads (0 = auto)");
    c_ser->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* c_an = app.add_subcommand("analytic", "Analytic error curve (CSV)");
    c_an->add_option("--family", family, "psk-pam|psk");
    c_an->add_option("--m", m, "total points")->required();
    c_an->add_option("--k", k, "subset count (psk-pam)");
    c_an->add_option("--norm", norm, "mean|paper-sum");
    c_an->add_option("--phase-bound", phase_bound, "phase error bound a, radians");
    c_an->add_option("--snr-db", snr_spec, "start:step:stop or comma list")->required();
    c_an->add_option("--objective", objective, "default|paper-exact-eq25");
    c_an->add_option("--bound", bound, "p_total column: union|dominant");
    c_an->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* c_design = app.add_subcommand("design", "Min-max (K,N) search for one SNR (CSV)");
    c_design->add_option("--m", m, "total points")->required();
    c_design->add_option("--phase-bound", phase_bound, "phase error bound a, radians")->required();
    c_design->add_option("--snr-db", snr_spec, "single SNR point (dB)")->required();
    c_design->add_option("--norm", norm, "mean|paper-sum");
    c_design->add_option("--objective", objective, "default|paper-exact-eq25");
    c_design->add_option("--out", out_path, "output path (stdout if omitted)");

    std::vector<std::string> plot_inputs, plot_labels;
    std::string plot_title, y_col = "auto";
    auto* c_plot = app.add_subcommand("plot", "Render CSV curves to SVG");
    c_plot->add_option("--in", plot_inputs, "input CSV (repeatable)")->required();
    c_plot->add_option("--label", plot_labels, "series label (repeatable, pairs with --in)");
    c_plot->add_option("--y-col", y_col, "auto|ser|p_total");
    c_plot->add_option("--title", plot_title, "plot title");
    c_plot->add_option("--out", out_path, "output SVG path")->required();

    std::string fig_name, out_dir = ".";
    auto* c_repro = app.add_subcommand("reproduce", "Run a bundled figure manifest");
    c_repro->add_option("figure", fig_name, "fig3|fig4|fig5|fig6|fig7")->required();
    c_repro->add_option("--out-dir", out_dir, "output directory");
    c_repro->add_option("--threads", threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    if (c_const->parsed()) {
        ConstellationSpec spec{family_from_flag(family), m, k, norm_from_flag(norm)};
        output_text(out_path, constellation_csv_text(make_constellation(spec)));
        return 0;
    }

    if (c_ser->parsed()) {
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            cfg = load_experiment_config(config_path);
            if (!out_path.empty()) cfg.out_path = out_path;
        } else {
            if (snr_spec.empty()) throw Error(ErrorCode::kBadConfig, "--snr-db is required");
            cfg.constellation = {family_from_flag(family), m, k, norm_from_flag(norm)};
            cfg.phase_bound_a = phase_bound;
            cfg.snr_grid_db = parse_snr_spec(snr_spec);
            cfg.trials_per_point = trials;
            cfg.master_seed = seed;
            cfg.allow_reestimate = reestimate_from_flag(reestimate);
            if (decoder == "auto") cfg.algorithm = DecoderAlgo::kAuto;
            else if (decoder == "two-step") cfg.algorithm = DecoderAlgo::kTwoStep;
            else if (decoder == "coherent") cfg.algorithm = DecoderAlgo::kCoherent;
            else throw Error(ErrorCode::kBadConfig, "--decoder must be auto|two-step|coherent");
        }
        std::vector<SerEstimate> points;
        for (size_t p = 0; p < cfg.snr_grid_db.size(); ++p)
            points.push_back(run_ser_point(cfg, cfg.snr_grid_db[p], threads,
                                           static_cast<std::int64_t>(p) * cfg.trials_per_point));
        output_text(cfg.out_path.empty() ? out_path : cfg.out_path, ser_csv_text(cfg, points));
        return 0;
    }

    if (c_an->parsed()) {
        ExperimentConfig cfg;
        cfg.constellation = {family_from_flag(family), m, k, norm_from_flag(norm)};
        cfg.phase_bound_a = phase_bound;
        cfg.snr_grid_db = parse_snr_spec(snr_spec);
        cfg.trials_per_point = 1;
        cfg.master_seed = 0;
        QuadratureSpec quad;
        AnalyticMode mode = bound == "dominant" ? AnalyticMode::kDominant : AnalyticMode::kUnion;
        if (bound != "union" && bound != "dominant")
            throw Error(ErrorCode::kBadConfig, "--bound must be union|dominant");
        ObjectiveMode omode = objective_from_flag(objective);
        auto points = run_analytic_curve(cfg, quad, mode, omode);
        output_text(out_path, analytic_csv_text(cfg, quad, mode, omode, points));
        return 0;
    }

    if (c_design->parsed()) {
        std::vector<double> grid = parse_snr_spec(snr_spec);
        if (grid.size() != 1)
            throw Error(ErrorCode::kBadConfig, "design evaluates one SNR point; pass a single --snr-db");
        ChannelParams params{std::pow(10.0, grid[0] / 10.0), phase_bound};
        QuadratureSpec quad;
        DesignReport report =
            optimize_kn(m, params, quad, norm_from_flag(norm), objective_from_flag(objective));
        output_text(out_path, design_csv_text(report));
        return 0;
    }

    if (c_plot->parsed()) {
        if (!plot_labels.empty() && plot_labels.size() != plot_inputs.size())
            throw Error(ErrorCode::kBadConfig, "--label count must match --in count");
        if (y_col != "auto" && y_col != "ser" && y_col != "p_total")
            throw Error(ErrorCode::kBadConfig, "--y-col must be auto|ser|p_total");
        std::vector<PlotSeries> series;
        for (size_t i = 0; i < plot_inputs.size(); ++i) {
            CsvCurve curve = read_csv_curve(plot_inputs[i], y_col);
            PlotSeries ps;
            ps.name = plot_labels.empty() ? curve.label : plot_labels[i];
            ps.x = std::move(curve.x);
            ps.y = std::move(curve.y);
            series.push_back(std::move(ps));
        }
        PlotOptions opts;
        opts.title = plot_title;
        emit_plot(series, out_path, opts);
        return 0;
    }

    if (c_repro->parsed()) {
        FigureConfig fig = figure_config(fig_name);
        for (const std::string& path : reproduce_figure(fig, out_dir, threads))
            std::cout << path << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const apsk::Error& e) {
        // machine-parsable: error: <CODE>: <message>
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: INTERNAL: %s\n", e.what());
        return 1;
    }
}
