#include "collabmkt/cli.hpp"

#include "collabmkt/collab.hpp"
#include "collabmkt/csv.hpp"
#include "collabmkt/dataset.hpp"
#include "collabmkt/efficiency.hpp"
#include "collabmkt/proximity.hpp"
#include "collabmkt/synth.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <iostream>
#include <string>

namespace collabmkt::cli {

namespace {

using json = nlohmann::ordered_json;

// Report rendering conventions: percentages one decimal, kilometers and
// means two, scores shortest-round-trip. JSON carries full precision.
std::string fmt_pct(double share) { return csv::format_fixed(share * 100.0, 1); }
std::string fmt_km(double km) { return csv::format_fixed(km, 2); }
std::string fmt_2(double v) { return csv::format_fixed(v, 2); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        csv::write_file_atomic(out_path, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct CommonOpts {
    std::string data_dir;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_data_dir = true) {
    if (with_data_dir) {
        cmd->add_option("--data-dir", opts.data_dir, "Directory with the five dataset CSVs")
            ->envname("COLLABMKT_DATA_DIR")
            ->required();
    }
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write output to this file (atomic) instead of stdout");
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(const CommonOpts& opts) {
    const Dataset ds = load_dataset(opts.data_dir);
    const ValidationReport report = validate(ds);
    if (opts.format == "json") {
        json out;
        out["findings"] = json::array();
        for (const Finding& f : report.findings) {
            out["findings"].push_back({{"kind", std::string(to_string(f.kind))},
                                       {"entity", f.entity},
                                       {"field", f.field},
                                       {"message", f.message}});
        }
        out["count"] = report.findings.size();
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"kind", "entity", "field", "message"});
        for (const Finding& f : report.findings) {
            rows.push_back({std::string(to_string(f.kind)), f.entity, f.field, f.message});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

int cmd_table1(const Dataset& ds, const CommonOpts& opts) {
    const collab::SummaryCounts counts = collab::summary(ds);
    if (opts.format == "json") {
        json out;
        out["publications"] = counts.publications;
        out["rows"] = json::array({{{"level", "university_company"},
                                    {"collaborations", counts.uc_collaborations},
                                    {"pairs", counts.uc_pairs}},
                                   {{"level", "sds_company"},
                                    {"collaborations", counts.sc_collaborations},
                                    {"pairs", counts.sc_pairs}}});
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"level", "collaborations", "pairs"});
        rows.push_back({"university_company", std::to_string(counts.uc_collaborations),
                        std::to_string(counts.uc_pairs)});
        rows.push_back({"sds_company", std::to_string(counts.sc_collaborations),
                        std::to_string(counts.sc_pairs)});
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

int cmd_table2(const Dataset& ds, const CommonOpts& opts) {
    const collab::FrequencyGrid grid = collab::frequency_grids(ds);
    const long total = grid.total_publications();
    if (opts.format == "json") {
        json out;
        out["total_publications"] = total;
        out["cells"] = json::array();
        for (const auto& [key, cell] : grid.cells) {
            out["cells"].push_back({{"n_companies", key.first},
                                    {"n_universities", key.second},
                                    {"publications", cell.publications},
                                    {"share", total > 0 ? json(static_cast<double>(cell.publications) /
                                                              static_cast<double>(total))
                                                        : json(nullptr)}});
        }
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"n_companies", "n_universities", "publications", "share_pct"});
        for (const auto& [key, cell] : grid.cells) {
            rows.push_back({std::to_string(key.first), std::to_string(key.second),
                            std::to_string(cell.publications),
                            fmt_pct(static_cast<double>(cell.publications) /
                                    static_cast<double>(total))});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

int cmd_table3(const Dataset& ds, const CommonOpts& opts) {
    const collab::FrequencyGrid grid = collab::frequency_grids(ds);
    if (opts.format == "json") {
        json out;
        out["cells"] = json::array();
        for (const auto& [key, cell] : grid.cells) {
            out["cells"].push_back({{"n_companies", key.first},
                                    {"n_universities", key.second},
                                    {"publications", cell.publications},
                                    {"mean_sds_total", cell.mean_sds_total}});
        }
        out["overall_mean_sds_total"] =
            grid.overall_mean_sds_total ? json(*grid.overall_mean_sds_total) : json(nullptr);
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"n_companies", "n_universities", "publications", "mean_sds_total"});
        for (const auto& [key, cell] : grid.cells) {
            rows.push_back({std::to_string(key.first), std::to_string(key.second),
                            std::to_string(cell.publications), fmt_2(cell.mean_sds_total)});
        }
        if (grid.overall_mean_sds_total) {
            rows.push_back({"overall", "", std::to_string(grid.total_publications()),
                            fmt_2(*grid.overall_mean_sds_total)});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

int cmd_table4(const Dataset& ds, const CommonOpts& opts, const std::string& group_by) {
    const collab::IntensityReport report = collab::company_intensity(
        ds, group_by == "company" ? collab::GroupBy::company : collab::GroupBy::site);
    const double entities = static_cast<double>(report.totals.entities);
    const double collabs = static_cast<double>(report.totals.collaborations);
    if (opts.format == "json") {
        json out;
        out["group_by"] = group_by;
        out["total_entities"] = report.totals.entities;
        out["total_collaborations"] = report.totals.collaborations;
        out["rows"] = json::array();
        for (const collab::IntensityRow& row : report.rows) {
            out["rows"].push_back({{"collaborations_per_entity", row.collab_count},
                                   {"entities", row.entity_count},
                                   {"subtotal", row.subtotal}});
        }
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"collaborations_per_entity", "entities", "entity_pct",
                        "entity_cum_pct", "collaborations", "collab_pct", "collab_cum_pct"});
        long entity_cum = 0;
        long collab_cum = 0;
        for (const collab::IntensityRow& row : report.rows) {
            entity_cum += row.entity_count;
            collab_cum += row.subtotal;
            rows.push_back({std::to_string(row.collab_count), std::to_string(row.entity_count),
                            fmt_pct(static_cast<double>(row.entity_count) / entities),
                            fmt_pct(static_cast<double>(entity_cum) / entities),
                            std::to_string(row.subtotal),
                            fmt_pct(static_cast<double>(row.subtotal) / collabs),
                            fmt_pct(static_cast<double>(collab_cum) / collabs)});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

int cmd_fig1(const Dataset& ds, const CommonOpts& opts, double bin_km) {
    const auto dists = collab::distances(collab::enumerate_uc(ds));
    const collab::Histogram hist = collab::distance_histogram(dists, bin_km);
    if (opts.format == "json") {
        json out;
        out["bin_km"] = hist.bin_km;
        out["total"] = hist.total;
        out["mean_km"] = hist.mean_km ? json(*hist.mean_km) : json(nullptr);
        out["max_km"] = hist.max_km ? json(*hist.max_km) : json(nullptr);
        out["bins"] = json::array();
        for (std::size_t k = 0; k < hist.counts.size(); ++k) {
            out["bins"].push_back({{"start_km", static_cast<double>(k) * hist.bin_km},
                                   {"end_km", static_cast<double>(k + 1) * hist.bin_km},
                                   {"count", hist.counts[k]}});
        }
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"bin_start_km", "bin_end_km", "count", "share_pct"});
        for (std::size_t k = 0; k < hist.counts.size(); ++k) {
            rows.push_back({csv::format_double(static_cast<double>(k) * hist.bin_km),
                            csv::format_double(static_cast<double>(k + 1) * hist.bin_km),
                            std::to_string(hist.counts[k]),
                            fmt_pct(static_cast<double>(hist.counts[k]) /
                                    static_cast<double>(hist.total))});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// proximity
// ---------------------------------------------------------------------------

int cmd_proximity(const CommonOpts& opts) {
    const Dataset ds = load_dataset(opts.data_dir);
    const proximity::ProximityReport report = proximity::proximity_report(ds);
    const double n = static_cast<double>(report.n_rows);
    if (opts.format == "json") {
        json out;
        out["collaborations"] = report.n_rows;
        out["real_avg_km"] = report.real_avg_km;
        out["expected_avg_km"] = report.expected_avg_km;
        out["mbd_avg_km"] = report.mbd_avg_km;
        out["ssbd_avg_km"] = report.ssbd_avg_km ? json(*report.ssbd_avg_km) : json(nullptr);
        out["expected_ratio"] = report.expected_ratio;
        out["mbd_ratio"] = report.mbd_ratio;
        out["ssbd_ratio"] = report.ssbd_ratio ? json(*report.ssbd_ratio) : json(nullptr);
        out["expected_gt_real_count"] = report.expected_gt_real_count;
        out["mbd_gt_real_count"] = report.mbd_gt_real_count;
        out["ssbd_gt_real_count"] = report.ssbd_gt_real_count;
        out["ssbd_excluded_count"] = report.ssbd_excluded_count;
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"measure", "value_km", "ratio_to_real", "n_greater_than_real",
                        "greater_share_pct", "excluded_rows"});
        rows.push_back({"real", fmt_km(report.real_avg_km), fmt_2(1.0), "", "", ""});
        rows.push_back({"expected", fmt_km(report.expected_avg_km),
                        fmt_2(report.expected_ratio),
                        std::to_string(report.expected_gt_real_count),
                        fmt_pct(static_cast<double>(report.expected_gt_real_count) / n), ""});
        rows.push_back({"mass_barycentric", fmt_km(report.mbd_avg_km), fmt_2(report.mbd_ratio),
                        std::to_string(report.mbd_gt_real_count),
                        fmt_pct(static_cast<double>(report.mbd_gt_real_count) / n), ""});
        if (report.ssbd_avg_km) {
            rows.push_back({"ss_barycentric", fmt_km(*report.ssbd_avg_km),
                            fmt_2(*report.ssbd_ratio),
                            std::to_string(report.ssbd_gt_real_count),
                            fmt_pct(static_cast<double>(report.ssbd_gt_real_count) / n),
                            std::to_string(report.ssbd_excluded_count)});
        } else {
            rows.push_back({"ss_barycentric", "", "", "", "",
                            std::to_string(report.ssbd_excluded_count)});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// efficiency
// ---------------------------------------------------------------------------

std::string reason_string(const efficiency::CounterfactualResult& r) {
    if (!r.reason) return "";
    return *r.reason == efficiency::IneligibleReason::multi_company ? "multi_company"
                                                                    : "unstable_author";
}

int cmd_efficiency(const CommonOpts& opts, const std::string& level_name, bool detail) {
    const Dataset ds = load_dataset(opts.data_dir);
    const efficiency::Level level = level_name == "scientist"
                                        ? efficiency::Level::scientist
                                        : efficiency::Level::university;
    const efficiency::EfficiencyReport report = efficiency::efficiency_report(ds, level);

    if (opts.format == "json") {
        json summary;
        summary["level"] = level_name;
        summary["total_publications"] = report.total_publications;
        summary["eligible_publications"] = report.eligible_count;
        summary["better_exists_count"] = report.better_exists_count;
        summary["better_exists_share"] =
            report.better_exists_share ? json(*report.better_exists_share) : json(nullptr);
        summary["better_and_closer_count"] = report.better_and_closer_count;
        summary["better_and_closer_share_of_eligible"] =
            report.bc_share_of_eligible ? json(*report.bc_share_of_eligible) : json(nullptr);
        summary["better_and_closer_share_of_better_exists"] =
            report.bc_share_of_better_exists ? json(*report.bc_share_of_better_exists)
                                             : json(nullptr);
        summary["mean_better_count"] =
            report.mean_better_count ? json(*report.mean_better_count) : json(nullptr);
        summary["mean_better_and_closer"] =
            report.mean_better_and_closer ? json(*report.mean_better_and_closer) : json(nullptr);
        json out;
        out["summary"] = std::move(summary);
        if (detail) {
            out["detail"] = json::array();
            for (const efficiency::CounterfactualResult& r : report.results) {
                json row;
                row["publication_id"] = r.publication_id;
                row["eligible"] = r.eligible;
                row["reason"] = r.reason ? json(reason_string(r)) : json(nullptr);
                row["benchmark_id"] = r.eligible ? json(r.benchmark_id) : json(nullptr);
                row["benchmark_sds"] = r.eligible ? json(r.benchmark_sds) : json(nullptr);
                row["benchmark_score"] = r.eligible ? json(r.benchmark_score) : json(nullptr);
                row["better_count"] = r.better_count ? json(*r.better_count) : json(nullptr);
                row["better_and_closer_count"] =
                    r.better_and_closer_count ? json(*r.better_and_closer_count) : json(nullptr);
                out["detail"].push_back(std::move(row));
            }
        }
        emit(dump(out), opts.out);
        return 0;
    }

    std::vector<csv::Row> rows;
    if (detail) {
        rows.push_back({"publication_id", "eligible", "reason", "benchmark_id", "benchmark_sds",
                        "benchmark_score", "better_count", "better_and_closer_count"});
        for (const efficiency::CounterfactualResult& r : report.results) {
            rows.push_back({r.publication_id, r.eligible ? "true" : "false", reason_string(r),
                            r.eligible ? r.benchmark_id : "",
                            r.eligible ? r.benchmark_sds : "",
                            r.eligible ? csv::format_double(r.benchmark_score) : "",
                            r.better_count ? std::to_string(*r.better_count) : "",
                            r.better_and_closer_count
                                ? std::to_string(*r.better_and_closer_count)
                                : ""});
        }
    } else {
        rows.push_back({"metric", "value"});
        rows.push_back({"level", level_name});
        rows.push_back({"total_publications", std::to_string(report.total_publications)});
        rows.push_back({"eligible_publications", std::to_string(report.eligible_count)});
        rows.push_back({"better_exists_count", std::to_string(report.better_exists_count)});
        rows.push_back({"better_exists_pct",
                        report.better_exists_share ? fmt_pct(*report.better_exists_share) : ""});
        rows.push_back(
            {"better_and_closer_count", std::to_string(report.better_and_closer_count)});
        rows.push_back({"better_and_closer_pct_of_eligible",
                        report.bc_share_of_eligible ? fmt_pct(*report.bc_share_of_eligible) : ""});
        rows.push_back({"better_and_closer_pct_of_better_exists",
                        report.bc_share_of_better_exists
                            ? fmt_pct(*report.bc_share_of_better_exists)
                            : ""});
        rows.push_back({"mean_better_count",
                        report.mean_better_count ? fmt_2(*report.mean_better_count) : ""});
        rows.push_back({"mean_better_and_closer",
                        report.mean_better_and_closer ? fmt_2(*report.mean_better_and_closer)
                                                      : ""});
    }
    emit(csv::to_string(rows), opts.out);
    return 0;
}

// ---------------------------------------------------------------------------
// recommend
// ---------------------------------------------------------------------------

int cmd_recommend(const CommonOpts& opts, double lat, double lon, const std::string& sds,
                  int top_n) {
    const Dataset ds = load_dataset(opts.data_dir);
    const auto recs = efficiency::recommend(ds, GeoPoint{lat, lon}, sds, top_n);
    if (opts.format == "json") {
        json out;
        out["sds"] = sds;
        out["rows"] = json::array();
        for (const efficiency::Recommendation& r : recs) {
            out["rows"].push_back({{"rank", r.rank},
                                   {"university_id", r.university_id},
                                   {"qp", r.qp},
                                   {"distance_km", r.distance_km}});
        }
        emit(dump(out), opts.out);
    } else {
        std::vector<csv::Row> rows;
        rows.push_back({"rank", "university_id", "qp", "distance_km"});
        for (const efficiency::Recommendation& r : recs) {
            rows.push_back({std::to_string(r.rank), r.university_id,
                            csv::format_double(r.qp), fmt_km(r.distance_km)});
        }
        emit(csv::to_string(rows), opts.out);
    }
    return 0;
}

} // namespace

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args) {
    CLI::App app{"University-industry research collaboration analytics"};
    app.require_subcommand(1);

    CommonOpts validate_opts;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Load the dataset and report findings");
    add_common(validate_cmd, validate_opts);

    CommonOpts tables_opts;
    std::string which;
    double bin_km = 50.0;
    std::string group_by = "site";
    CLI::App* tables_cmd = app.add_subcommand("tables", "Counting reports and histograms");
    add_common(tables_cmd, tables_opts);
    tables_cmd->add_option("--which", which, "Which report to produce")
        ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "fig1"}))
        ->required();
    tables_cmd->add_option("--bin-km", bin_km, "Histogram bin width for fig1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    tables_cmd->add_option("--group-by", group_by, "Entity grouping for table4")
        ->check(CLI::IsMember({"site", "company"}))
        ->capture_default_str();

    CommonOpts proximity_opts;
    CLI::App* proximity_cmd =
        app.add_subcommand("proximity", "Real versus expected collaboration distances");
    add_common(proximity_cmd, proximity_opts);

    CommonOpts efficiency_opts;
    std::string level = "university";
    bool detail = false;
    CLI::App* efficiency_cmd =
        app.add_subcommand("efficiency", "Counterfactual partner-choice analysis");
    add_common(efficiency_cmd, efficiency_opts);
    efficiency_cmd->add_option("--level", level, "Counterfactual level")
        ->check(CLI::IsMember({"university", "scientist"}))
        ->required();
    efficiency_cmd->add_flag("--detail", detail, "Emit one row per publication");

    CommonOpts recommend_opts;
    double lat = 0.0;
    double lon = 0.0;
    std::string sds;
    int top_n = 10;
    CLI::App* recommend_cmd =
        app.add_subcommand("recommend", "Rank partner universities for a location");
    add_common(recommend_cmd, recommend_opts);
    recommend_cmd->add_option("--lat", lat, "Latitude, degrees")
        ->check(CLI::Range(-90.0, 90.0))
        ->required();
    recommend_cmd->add_option("--lon", lon, "Longitude, degrees")
        ->check(CLI::Range(-180.0, 180.0))
        ->required();
    recommend_cmd->add_option("--sds", sds, "Disciplinary sector code")->required();
    recommend_cmd->add_option("--top", top_n, "Entries to keep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string config_path;
    std::string synth_out;
    CommonOpts synth_opts;
    CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth_cmd->add_option("--config", config_path, "Generator config file")->required();
    synth_cmd->add_option("--out", synth_out, "Directory for the five CSVs")->required();
    synth_cmd->add_option("--format", synth_opts.format, "Accepted for symmetry; datasets are CSV")
        ->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(validate_opts);
        if (app.got_subcommand(tables_cmd)) {
            const Dataset ds = load_dataset(tables_opts.data_dir);
            if (which == "table1") return cmd_table1(ds, tables_opts);
            if (which == "table2") return cmd_table2(ds, tables_opts);
            if (which == "table3") return cmd_table3(ds, tables_opts);
            if (which == "table4") return cmd_table4(ds, tables_opts, group_by);
            return cmd_fig1(ds, tables_opts, bin_km);
        }
        if (app.got_subcommand(proximity_cmd)) return cmd_proximity(proximity_opts);
        if (app.got_subcommand(efficiency_cmd)) {
            return cmd_efficiency(efficiency_opts, level, detail);
        }
        if (app.got_subcommand(recommend_cmd)) {
            return cmd_recommend(recommend_opts, lat, lon, sds, top_n);
        }
        if (app.got_subcommand(synth_cmd)) {
            const synth::SynthConfig config = synth::parse_config(config_path);
            save_dataset(synth::generate(config), synth_out);
            return 0;
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2; // unreachable with require_subcommand(1)
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace collabmkt::cli
