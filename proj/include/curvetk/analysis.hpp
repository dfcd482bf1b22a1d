#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "curvetk/classify.hpp"
#include "curvetk/curve.hpp"
#include "curvetk/error.hpp"
#include "curvetk/tolerances.hpp"

namespace curvetk {

// Parsed and validated analysis request. `echo` keeps the normalized
// document (defaults filled in) that goes back out in the report verbatim.
struct AnalysisConfig {
    CurveSpec curve;
    std::optional<double> bertrand_lambda;
    Grid grid{0.0, 1.0, 2};
    int jet_order = 6;
    Tolerances tol;
    bool want_residuals = true;
    nlohmann::json echo;
};

AnalysisConfig parse_config(const nlohmann::json& doc);
AnalysisConfig load_config(const std::string& path);

// Which report sections to emit; the frenet and residuals subcommands
// reuse the analyze pipeline with a narrower mask. Frames are always
// computed internally (everything needs them); frame_table only controls
// whether the per-sample table lands in the report.
struct SectionMask {
    bool frame_table = true;
    bool pair = true;
    bool classification = true;
    bool residuals = true;
};

struct AnalysisResult {
    nlohmann::json report;
    int exit_code = 0;
};

// Runs the pipeline stage by stage. A stage failure is recorded under
// "errors" with its machine-readable code and the later stages that do not
// depend on it still run, so a NotBertrand offset still yields the frame
// table. The exit code reflects the first recorded error.
AnalysisResult run_analyze(const AnalysisConfig& cfg, const SectionMask& sections = {});

// CSV for external plotting: one row per sample, base and partner columns,
// invariants, residuals. Columns whose stage failed stay empty.
std::string render_plot_csv(const nlohmann::json& report);
void emit_plot_data(const nlohmann::json& report, const std::string& path);

int exit_code_for(errc code);

// Checks a document against the subset of JSON Schema the shipped report
// schema uses (type, required, properties, items, enum, minItems).
// Returns a description of the first violation, or nothing when valid.
std::optional<std::string> schema_violation(const nlohmann::json& doc,
                                            const nlohmann::json& schema);

std::string tool_version();

} // namespace curvetk
