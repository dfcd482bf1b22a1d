#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvetk/analysis.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::optional<double> tol_pair;
    std::optional<double> eps_class;
    std::optional<double> eps_theta;
    std::optional<double> eps_flat;
    std::optional<double> lambda;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("config", opts.config_path, "analysis config (JSON)")->required();
    cmd->add_option("--tol-pair", opts.tol_pair, "override tolerances.tol_pair");
    cmd->add_option("--eps-class", opts.eps_class, "override tolerances.eps_class");
    cmd->add_option("--eps-theta", opts.eps_theta, "override tolerances.eps_theta");
    cmd->add_option("--eps-flat", opts.eps_flat, "override tolerances.eps_flat");
    cmd->add_option("--lambda", opts.lambda, "override bertrand_lambda");
}

curvetk::AnalysisConfig load(const CommonOptions& opts) {
    curvetk::AnalysisConfig cfg = curvetk::load_config(opts.config_path);
    const auto apply = [&](const std::optional<double>& v, double& slot, const char* name) {
        if (!v) return;
        if (!(*v > 0.0))
            curvetk::raise(curvetk::errc::config_error,
                           std::string(name) + " must be positive");
        slot = *v;
        cfg.echo["tolerances"][name] = *v;
    };
    apply(opts.tol_pair, cfg.tol.tol_pair, "tol_pair");
    apply(opts.eps_class, cfg.tol.eps_class, "eps_class");
    apply(opts.eps_theta, cfg.tol.eps_theta, "eps_theta");
    apply(opts.eps_flat, cfg.tol.eps_flat, "eps_flat");
    if (opts.lambda) {
        cfg.bertrand_lambda = *opts.lambda;
        cfg.echo["bertrand_lambda"] = *opts.lambda;
    }
    return cfg;
}

int write_report(const nlohmann::json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open for writing: %s\n", out_path.c_str());
        return 6;
    }
    out << text;
    out.flush();
    return out ? 0 : 6;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frenet frames, Bertrand mates, harmonicity classification and "
                 "characterizing-ODE residuals for parametric space curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "curvetk " + curvetk::tool_version());

    CommonOptions analyze_opts, frenet_opts, residuals_opts, plot_opts;
    std::string out_path, csv_path;

    CLI::App* analyze = app.add_subcommand("analyze", "full pipeline, JSON report");
    add_common(analyze, analyze_opts);
    analyze->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* frenet = app.add_subcommand("frenet", "frame table only");
    add_common(frenet, frenet_opts);

    CLI::App* residuals = app.add_subcommand("residuals", "ODE residual checks only");
    add_common(residuals, residuals_opts);

    CLI::App* plot = app.add_subcommand("plot-data", "CSV samples for external plotting");
    add_common(plot, plot_opts);
    plot->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            const auto result = curvetk::run_analyze(load(analyze_opts));
            const int io = write_report(result.report, out_path);
            return io != 0 ? io : result.exit_code;
        }
        if (frenet->parsed()) {
            curvetk::SectionMask mask;
            mask.pair = mask.classification = mask.residuals = false;
            const auto result = curvetk::run_analyze(load(frenet_opts), mask);
            const int io = write_report(result.report, "");
            return io != 0 ? io : result.exit_code;
        }
        if (residuals->parsed()) {
            curvetk::AnalysisConfig cfg = load(residuals_opts);
            cfg.want_residuals = true;
            curvetk::SectionMask mask;
            mask.frame_table = mask.classification = false;
            const auto result = curvetk::run_analyze(cfg, mask);
            const int io = write_report(result.report, "");
            return io != 0 ? io : result.exit_code;
        }
        if (plot->parsed()) {
            curvetk::AnalysisConfig cfg = load(plot_opts);
            cfg.want_residuals = true;
            curvetk::SectionMask mask;
            mask.classification = false;
            const auto result = curvetk::run_analyze(cfg, mask);
            curvetk::emit_plot_data(result.report, csv_path);
            return result.exit_code;
        }
    } catch (const curvetk::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", curvetk::errc_name(e.code()), e.what());
        return curvetk::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    }
    return 0;
}
