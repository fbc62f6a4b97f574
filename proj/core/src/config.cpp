#include "apsk/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apsk/error.hpp"
#include "apsk/sha1.hpp"

namespace apsk {

using nlohmann::json;

const char* decoder_algo_name(DecoderAlgo a) {
    switch (a) {
        case DecoderAlgo::kAuto: return "auto";
        case DecoderAlgo::kTwoStep: return "two-step";
        case DecoderAlgo::kCoherent: return "coherent";
    }
    return "?";
}

Constellation make_constellation(const ConstellationSpec& spec) {
    switch (spec.family) {
        case Family::kPskPam: return build_psk_pam(spec.m, spec.k, spec.norm);
        case Family::kQam: return build_qam(spec.m, spec.norm);
        case Family::kPsk: return build_psk(spec.m, spec.norm);
    }
    throw Error(ErrorCode::kBadConfig, "unknown constellation family");
}

DecoderAlgo ExperimentConfig::resolved_algorithm() const {
    if (algorithm != DecoderAlgo::kAuto) return algorithm;
    return constellation.family == Family::kQam ? DecoderAlgo::kCoherent : DecoderAlgo::kTwoStep;
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::kBadConfig, msg); }

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            if (it.key() == key) ok = true;
        if (!ok) bad("unknown key \"" + it.key() + "\" in " + where);
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad("missing key \"" + std::string(key) + "\" in " + where);
    return *it;
}

Family parse_family(const std::string& s) {
    if (s == "psk-pam") return Family::kPskPam;
    if (s == "qam") return Family::kQam;
    if (s == "psk") return Family::kPsk;
    bad("family must be one of psk-pam|qam|psk, got \"" + s + "\"");
}

NormMode parse_norm(const std::string& s) {
    if (s == "mean") return NormMode::kMeanPower;
    if (s == "paper-sum") return NormMode::kPaperSum;
    bad("norm must be mean|paper-sum, got \"" + s + "\"");
}

// Reads the family/m/k/norm fields from an object that may carry other
// (already vetted) keys alongside them.
ConstellationSpec parse_constellation_fields(const json& obj, const std::string& where) {
    ConstellationSpec spec;
    spec.family = parse_family(require(obj, "family", where).get<std::string>());
    spec.m = require(obj, "m", where).get<int>();
    if (spec.family == Family::kPskPam) {
        spec.k = require(obj, "k", where).get<int>();
    } else if (obj.contains("k")) {
        bad("\"k\" is only valid for family psk-pam in " + where);
    }
    if (obj.contains("norm")) spec.norm = parse_norm(obj.at("norm").get<std::string>());
    return spec;
}

ConstellationSpec parse_constellation_spec(const json& obj, const std::string& where) {
    if (!obj.is_object()) bad(where + " must be an object");
    reject_unknown_keys(obj, {"family", "m", "k", "norm"}, where);
    return parse_constellation_fields(obj, where);
}

std::vector<double> parse_snr_grid(const json& arr, const std::string& where) {
    if (!arr.is_array()) bad("snr_db must be an array in " + where);
    std::vector<double> grid;
    for (const auto& v : arr) {
        if (!v.is_number()) bad("snr_db entries must be numbers in " + where);
        grid.push_back(v.get<double>());
    }
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) bad("snr_db grid must be strictly increasing in " + where);
    return grid;
}

double parse_phase_bound(const json& v, const std::string& where) {
    double a = v.get<double>();
    if (!(a >= 0.0 && a <= 3.14159265358979323847))
        bad("phase_bound must lie in [0, pi] in " + where);
    return a;
}

std::int64_t parse_trials(const json& v, const std::string& where) {
    std::int64_t t = v.get<std::int64_t>();
    if (t < 1) bad("trials_per_point must be >= 1 in " + where);
    return t;
}

json constellation_to_json(const ConstellationSpec& spec) {
    json obj;
    obj["family"] = family_name(spec.family);
    obj["m"] = spec.m;
    if (spec.family == Family::kPskPam) obj["k"] = spec.k;
    obj["norm"] = spec.norm == NormMode::kMeanPower ? "mean" : "paper-sum";
    return obj;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) bad("config is not valid JSON");
    if (!root.is_object()) bad("config root must be an object");
    reject_unknown_keys(root,
                        {"constellation", "phase_bound", "snr_db", "trials_per_point", "seed",
                         "decoder", "out"},
                        "config");

    ExperimentConfig cfg;
    cfg.constellation = parse_constellation_spec(require(root, "constellation", "config"),
                                                 "config.constellation");
    cfg.phase_bound_a = parse_phase_bound(require(root, "phase_bound", "config"), "config");
    cfg.snr_grid_db = parse_snr_grid(require(root, "snr_db", "config"), "config");
    cfg.trials_per_point = parse_trials(require(root, "trials_per_point", "config"), "config");
    cfg.master_seed = require(root, "seed", "config").get<std::uint64_t>();

    if (root.contains("decoder")) {
        const json& dec = root.at("decoder");
        if (!dec.is_object()) bad("decoder must be an object");
        reject_unknown_keys(dec, {"algorithm", "reestimate"}, "config.decoder");
        if (dec.contains("algorithm")) {
            std::string a = dec.at("algorithm").get<std::string>();
            if (a == "auto") cfg.algorithm = DecoderAlgo::kAuto;
            else if (a == "two-step") cfg.algorithm = DecoderAlgo::kTwoStep;
            else if (a == "coherent") cfg.algorithm = DecoderAlgo::kCoherent;
            else bad("decoder.algorithm must be auto|two-step|coherent");
        }
        if (dec.contains("reestimate")) cfg.allow_reestimate = dec.at("reestimate").get<bool>();
    }
    if (root.contains("out")) cfg.out_path = root.at("out").get<std::string>();

    // Constructability check up front so failures surface at parse time.
    make_constellation(cfg.constellation);
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

std::string canonical_json(const ExperimentConfig& config) {
    json root;
    root["constellation"] = constellation_to_json(config.constellation);
    root["phase_bound"] = config.phase_bound_a;
    root["snr_db"] = config.snr_grid_db;
    root["trials_per_point"] = config.trials_per_point;
    root["seed"] = config.master_seed;
    root["decoder"] = {{"algorithm", decoder_algo_name(config.algorithm)},
                       {"reestimate", config.allow_reestimate}};
    return root.dump(); // nlohmann objects iterate in sorted key order
}

std::string config_hash(const ExperimentConfig& config) {
    return git_blob_sha1(canonical_json(config));
}

FigureConfig parse_figure_config(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) bad("figure config is not valid JSON");
    if (!root.is_object()) bad("figure config root must be an object");
    reject_unknown_keys(root,
                        {"figure", "title", "phase_bound", "snr_db", "trials_per_point", "seed",
                         "series", "analytic"},
                        "figure config");

    FigureConfig fig;
    fig.name = require(root, "figure", "figure config").get<std::string>();
    if (root.contains("title")) fig.title = root.at("title").get<std::string>();
    fig.phase_bound_a = parse_phase_bound(require(root, "phase_bound", "figure config"), fig.name);
    fig.snr_grid_db = parse_snr_grid(require(root, "snr_db", "figure config"), fig.name);
    fig.trials_per_point = parse_trials(require(root, "trials_per_point", "figure config"), fig.name);
    fig.master_seed = require(root, "seed", "figure config").get<std::uint64_t>();

    const json& series = require(root, "series", "figure config");
    if (!series.is_array() || series.empty()) bad("series must be a non-empty array");
    for (const auto& entry : series) {
        if (!entry.is_object()) bad("series entries must be objects");
        reject_unknown_keys(entry, {"label", "family", "m", "k", "norm", "reestimate"},
                            "figure series");
        FigureSeries s;
        s.label = require(entry, "label", "figure series").get<std::string>();
        s.constellation = parse_constellation_fields(entry, "figure series \"" + s.label + "\"");
        if (entry.contains("reestimate")) s.allow_reestimate = entry.at("reestimate").get<bool>();
        fig.series.push_back(std::move(s));
    }

    if (root.contains("analytic")) {
        const json& an = root.at("analytic");
        if (!an.is_array()) bad("analytic must be an array");
        for (const auto& entry : an) {
            if (!entry.is_object()) bad("analytic entries must be objects");
            reject_unknown_keys(entry, {"label", "family", "m", "k", "norm", "mode"},
                                "figure analytic series");
            FigureAnalyticSeries s;
            s.label = require(entry, "label", "figure analytic").get<std::string>();
            s.constellation =
                parse_constellation_fields(entry, "figure analytic \"" + s.label + "\"");
            if (s.constellation.family == Family::kQam)
                bad("analytic curves are defined for psk-pam/psk series only");
            if (entry.contains("mode")) {
                std::string m = entry.at("mode").get<std::string>();
                if (m == "union") s.union_bound = true;
                else if (m == "dominant") s.union_bound = false;
                else bad("analytic mode must be union|dominant");
            }
            fig.analytic.push_back(std::move(s));
        }
    }
    return fig;
}

std::string canonical_json(const FigureConfig& config) {
    json root;
    root["figure"] = config.name;
    root["title"] = config.title;
    root["phase_bound"] = config.phase_bound_a;
    root["snr_db"] = config.snr_grid_db;
    root["trials_per_point"] = config.trials_per_point;
    root["seed"] = config.master_seed;
    json series = json::array();
    for (const auto& s : config.series) {
        json e = constellation_to_json(s.constellation);
        e["label"] = s.label;
        e["reestimate"] = s.allow_reestimate;
        series.push_back(e);
    }
    root["series"] = series;
    json an = json::array();
    for (const auto& s : config.analytic) {
        json e = constellation_to_json(s.constellation);
        e["label"] = s.label;
        e["mode"] = s.union_bound ? "union" : "dominant";
        an.push_back(e);
    }
    root["analytic"] = an;
    return root.dump();
}

ExperimentConfig experiment_for_series(const FigureConfig& fig, const FigureSeries& series) {
    ExperimentConfig cfg;
    cfg.constellation = series.constellation;
    cfg.phase_bound_a = fig.phase_bound_a;
    cfg.snr_grid_db = fig.snr_grid_db;
    cfg.trials_per_point = fig.trials_per_point;
    cfg.master_seed = fig.master_seed;
    cfg.allow_reestimate = series.allow_reestimate;
    return cfg;
}

} // namespace apsk
