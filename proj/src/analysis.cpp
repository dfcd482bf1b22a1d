#include "curvetk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <vector>

#include "curvetk/bertrand.hpp"
#include "curvetk/framefield.hpp"
#include "curvetk/frenet.hpp"
#include "curvetk/odes.hpp"

namespace curvetk {

namespace {

using nlohmann::json;

int log_threshold() {
    static const int level = [] {
        const char* env = std::getenv("CURVETK_LOG");
        if (env == nullptr) return 0;
        const std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        return 0;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_threshold() >= 1) std::fprintf(stderr, "[curvetk] %s\n", msg.c_str());
}

void log_debug(const std::string& msg) {
    if (log_threshold() >= 2) std::fprintf(stderr, "[curvetk] %s\n", msg.c_str());
}

[[noreturn]] void bad_config(const std::string& msg) { raise(errc::config_error, msg); }

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known)
            bad_config(std::string(where) + " has an unknown member \"" + item.key() + "\"");
    }
}

double number_at(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key)) bad_config(std::string(where) + " is missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) bad_config(std::string(where) + "." + key + " must be a number");
    return v.get<double>();
}

int integer_at(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key)) bad_config(std::string(where) + " is missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        bad_config(std::string(where) + "." + key + " must be an integer");
    return v.get<int>();
}

std::string string_at(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key)) bad_config(std::string(where) + " is missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_string()) bad_config(std::string(where) + "." + key + " must be a string");
    return v.get<std::string>();
}

CurveSpec parse_curve(const json& doc) {
    if (!doc.is_object()) bad_config("curve must be an object");
    const bool has_family = doc.contains("family");
    const bool has_expr = doc.contains("x") || doc.contains("y") || doc.contains("z");
    if (has_family && has_expr)
        bad_config("curve mixes family/params with x/y/z expressions; pick one form");
    if (!has_family && !has_expr)
        bad_config("curve needs either family/params or x/y/z expression strings");

    if (has_expr) {
        reject_unknown_keys(doc, {"x", "y", "z"}, "curve");
        return CurveSpec::expression(string_at(doc, "x", "curve"), string_at(doc, "y", "curve"),
                                     string_at(doc, "z", "curve"));
    }

    reject_unknown_keys(doc, {"family", "params"}, "curve");
    const std::string name = string_at(doc, "family", "curve");
    CurveSpec spec;
    if (name == "circular_helix")
        spec.family = CurveFamily::CircularHelix;
    else if (name == "general_helix")
        spec.family = CurveFamily::GeneralHelix;
    else if (name == "circle")
        spec.family = CurveFamily::Circle;
    else if (name == "twisted_cubic")
        spec.family = CurveFamily::TwistedCubic;
    else if (name == "line")
        spec.family = CurveFamily::Line;
    else
        bad_config("unknown curve family \"" + name + "\"");

    if (doc.contains("params")) {
        const json& params = doc.at("params");
        if (!params.is_array()) bad_config("curve.params must be an array of numbers");
        for (const json& v : params) {
            if (!v.is_number()) bad_config("curve.params must be an array of numbers");
            spec.params.push_back(v.get<double>());
        }
    }
    return spec;
}

json echo_curve(const CurveSpec& spec, const json& original) {
    if (spec.family == CurveFamily::Expression) {
        return {{"x", original.at("x")}, {"y", original.at("y")}, {"z", original.at("z")}};
    }
    return {{"family", family_name(spec.family)}, {"params", spec.params}};
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json route_json(const RouteResult& r) {
    json j{{"verdict", verdict_name(r.verdict)},
           {"fit_constant", r.fit_constant},
           {"fit_residual", r.fit_residual},
           {"ratio_spread", r.ratio_spread},
           {"max_laplacian_norm", r.max_laplacian_norm}};
    if (r.harmonic_constant)
        j["harmonic_constant"] = *r.harmonic_constant;
    else
        j["harmonic_constant"] = nullptr;
    return j;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Pulls "field" out of table["samples"][row] when that cell exists.
std::string csv_cell(const json* table, std::size_t row, const char* field) {
    if (table == nullptr || !table->contains("samples")) return "";
    const json& samples = table->at("samples");
    if (row >= samples.size()) return "";
    const json& sample = samples[row];
    if (!sample.contains(field)) return "";
    return format_double(sample.at(field).get<double>());
}

std::string csv_vec_cell(const json* table, std::size_t row, const char* field, int axis) {
    if (table == nullptr || !table->contains("samples")) return "";
    const json& samples = table->at("samples");
    if (row >= samples.size()) return "";
    const json& sample = samples[row];
    if (!sample.contains(field)) return "";
    return format_double(sample.at(field)[axis].get<double>());
}

const json* section(const json& report, const char* name) {
    return report.contains(name) ? &report.at(name) : nullptr;
}

bool type_matches(const json& doc, const std::string& type) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "integer") return doc.is_number_integer();
    if (type == "number") return doc.is_number();
    if (type == "boolean") return doc.is_boolean();
    if (type == "null") return doc.is_null();
    return false;
}

std::optional<std::string> violation(const json& doc, const json& schema,
                                     const std::string& path) {
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        std::string expected;
        if (t.is_string()) {
            ok = type_matches(doc, t.get<std::string>());
            expected = t.get<std::string>();
        } else {
            for (const json& one : t) {
                if (type_matches(doc, one.get<std::string>())) ok = true;
                if (!expected.empty()) expected += " or ";
                expected += one.get<std::string>();
            }
        }
        if (!ok) return path + ": expected " + expected;
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& v : schema.at("enum"))
            if (doc == v) ok = true;
        if (!ok) return path + ": value not in enum";
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const json& key : schema.at("required"))
                if (!doc.contains(key.get<std::string>()))
                    return path + ": missing required member \"" + key.get<std::string>() + "\"";
        if (schema.contains("properties"))
            for (const auto& item : schema.at("properties").items())
                if (doc.contains(item.key()))
                    if (auto v = violation(doc.at(item.key()), item.value(),
                                           path + "." + item.key()))
                        return v;
    }
    if (doc.is_array()) {
        if (schema.contains("minItems") &&
            doc.size() < schema.at("minItems").get<std::size_t>())
            return path + ": fewer than " + schema.at("minItems").dump() + " items";
        if (schema.contains("items")) {
            std::size_t i = 0;
            for (const json& element : doc) {
                if (auto v = violation(element, schema.at("items"),
                                       path + "[" + std::to_string(i) + "]"))
                    return v;
                ++i;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::string tool_version() { return "0.1.0"; }

int exit_code_for(errc code) {
    switch (code) {
    case errc::config_error:
    case errc::syntax_error:
    case errc::unknown_identifier:
    case errc::non_integer_exponent:
        return 2;
    case errc::not_bertrand:
        return 3;
    case errc::theta_degenerate:
    case errc::frame_undefined:
    case errc::singular_speed:
    case errc::torsion_zero:
    case errc::degenerate_denominator:
    case errc::not_normal_field:
    case errc::not_helix_base:
    case errc::degenerate:
    case errc::degenerate_fixture:
        return 4;
    case errc::guard_violation:
    case errc::domain_error:
    case errc::jet_order_exhausted:
        return 5;
    case errc::io_error:
        return 6;
    }
    return 5;
}

AnalysisConfig parse_config(const json& doc) {
    if (!doc.is_object()) bad_config("config must be a JSON object");
    reject_unknown_keys(
        doc, {"curve", "bertrand_lambda", "grid", "jet_order", "tolerances", "outputs"}, "config");
    if (!doc.contains("curve")) bad_config("config is missing \"curve\"");
    if (!doc.contains("grid")) bad_config("config is missing \"grid\"");

    AnalysisConfig cfg;
    cfg.curve = parse_curve(doc.at("curve"));
    validate_spec(cfg.curve);

    const json& grid = doc.at("grid");
    if (!grid.is_object()) bad_config("grid must be an object");
    reject_unknown_keys(grid, {"t_start", "t_end", "samples"}, "grid");
    cfg.grid.t_start = number_at(grid, "t_start", "grid");
    cfg.grid.t_end = number_at(grid, "t_end", "grid");
    cfg.grid.samples = integer_at(grid, "samples", "grid");
    cfg.grid.points(); // bounds and count validation

    if (doc.contains("bertrand_lambda")) {
        const json& v = doc.at("bertrand_lambda");
        if (!v.is_number()) bad_config("bertrand_lambda must be a number");
        cfg.bertrand_lambda = v.get<double>();
    }

    if (doc.contains("jet_order")) {
        cfg.jet_order = integer_at(doc, "jet_order", "config");
        if (cfg.jet_order < 4 || cfg.jet_order > 24)
            bad_config("jet_order must be between 4 and 24, got " +
                       std::to_string(cfg.jet_order));
    }

    if (doc.contains("tolerances")) {
        const json& tol = doc.at("tolerances");
        if (!tol.is_object()) bad_config("tolerances must be an object");
        reject_unknown_keys(tol, {"eps_flat", "tol_pair", "eps_theta", "eps_class"},
                            "tolerances");
        const auto positive = [&](const char* key, double fallback) {
            if (!tol.contains(key)) return fallback;
            const double v = number_at(tol, key, "tolerances");
            if (!(v > 0.0)) bad_config(std::string("tolerances.") + key + " must be positive");
            return v;
        };
        cfg.tol.eps_flat = positive("eps_flat", cfg.tol.eps_flat);
        cfg.tol.tol_pair = positive("tol_pair", cfg.tol.tol_pair);
        cfg.tol.eps_theta = positive("eps_theta", cfg.tol.eps_theta);
        cfg.tol.eps_class = positive("eps_class", cfg.tol.eps_class);
    }

    json outputs = json::array({"report", "residuals", "plot_data"});
    if (doc.contains("outputs")) {
        const json& list = doc.at("outputs");
        if (!list.is_array()) bad_config("outputs must be an array of strings");
        for (const json& v : list) {
            if (!v.is_string() || (v != "report" && v != "residuals" && v != "plot_data"))
                bad_config("outputs entries must be \"report\", \"residuals\" or \"plot_data\"");
        }
        outputs = list;
        cfg.want_residuals = false;
        for (const json& v : list)
            if (v == "residuals") cfg.want_residuals = true;
    }

    cfg.echo["curve"] = echo_curve(cfg.curve, doc.at("curve"));
    if (cfg.bertrand_lambda) cfg.echo["bertrand_lambda"] = *cfg.bertrand_lambda;
    cfg.echo["grid"] = {{"t_start", cfg.grid.t_start},
                        {"t_end", cfg.grid.t_end},
                        {"samples", cfg.grid.samples}};
    cfg.echo["jet_order"] = cfg.jet_order;
    cfg.echo["tolerances"] = {{"eps_flat", cfg.tol.eps_flat},
                              {"tol_pair", cfg.tol.tol_pair},
                              {"eps_theta", cfg.tol.eps_theta},
                              {"eps_class", cfg.tol.eps_class}};
    cfg.echo["outputs"] = outputs;
    return cfg;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        bad_config("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(doc);
}

AnalysisResult run_analyze(const AnalysisConfig& cfg, const SectionMask& sections) {
    AnalysisResult result;
    json& report = result.report;
    report["tool"] = {{"name", "curvetk"}, {"version", tool_version()}};
    report["generated_at"] = timestamp_utc();
    report["config"] = cfg.echo;
    json errors = json::array();

    // A wrapped error (NotBertrand caused by FrameUndefined on the
    // partner, say) exits with the underlying cause's code: the offset
    // made the construction degenerate, it did not refute the mate.
    const auto record = [&](const char* stage, const Error& e) {
        log_info(std::string(stage) + " stage failed: " + e.what());
        json entry{{"stage", stage}, {"code", errc_name(e.code())}, {"message", e.what()}};
        if (e.cause()) entry["cause"] = errc_name(*e.cause());
        errors.push_back(std::move(entry));
        if (result.exit_code == 0)
            result.exit_code = exit_code_for(e.cause() ? *e.cause() : e.code());
    };

    const std::vector<double> ts = cfg.grid.points();
    std::vector<std::optional<FrenetFrame>> frames(ts.size());

    // Frame table. A failure stops the walk; everything downstream works
    // on the prefix that exists.
    {
        log_debug("frenet stage over " + std::to_string(ts.size()) + " samples");
        json samples = json::array();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            try {
                const VecJet jets = eval_jet(cfg.curve, ts[i], cfg.jet_order);
                const FrenetFrame frame = frenet_apparatus(jets, cfg.tol.eps_flat);
                frames[i] = frame;
                samples.push_back({{"t", ts[i]},
                                   {"position", vec_json(jets.coefficients()[0])},
                                   {"tangent", vec_json(frame.T)},
                                   {"normal", vec_json(frame.N)},
                                   {"binormal", vec_json(frame.B)},
                                   {"speed", frame.speed.value()},
                                   {"kappa", frame.kappa.value()},
                                   {"tau", frame.tau.value()}});
            } catch (const Error& e) {
                record("frenet", Error(e.code(), "t = " + format_double(ts[i]) + ": " + e.what()));
                break;
            }
        }
        if (sections.frame_table) report["frenet"] = {{"samples", std::move(samples)}};
    }

    std::optional<BertrandPair> pair;
    bool pair_not_bertrand = false;
    if (cfg.bertrand_lambda && sections.pair) {
        log_debug("pair stage, lambda = " + format_double(*cfg.bertrand_lambda));
        try {
            pair = validate_pair(cfg.curve, *cfg.bertrand_lambda, cfg.grid, cfg.jet_order,
                                 cfg.tol);
            json p{{"lambda", pair->lambda},
                   {"mu", pair->mu},
                   {"mu_spread", pair->mu_spread},
                   {"cos_theta", pair->cos_theta},
                   {"sin_theta", pair->sin_theta},
                   {"theta_spread", pair->theta_spread},
                   {"normal_sign", pair->normal_sign},
                   {"max_pair_identity_error", pair->max_pair_identity_error},
                   {"max_frame_error", pair->max_frame_error},
                   {"max_curvature_error", pair->max_curvature_error},
                   {"max_speed_error", pair->max_speed_error}};
            json samples = json::array();
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (!frames[i]) break;
                json row{{"t", ts[i]},
                         {"position", vec_json(partner_point(cfg.curve, pair->lambda, ts[i],
                                                             cfg.jet_order, cfg.tol.eps_flat))},
                         {"cos_theta", pair->theta_samples[i].cos_theta},
                         {"sin_theta", pair->theta_samples[i].sin_theta}};
                try {
                    const PartnerCurvatures pc = partner_curvatures_closed_form(
                        frames[i]->kappa.value(), frames[i]->tau.value(), pair->lambda,
                        pair->angles());
                    row["kappa_beta"] = pc.kappa;
                    row["tau_beta"] = pc.tau;
                } catch (const Error& e) {
                    if (e.code() != errc::degenerate_denominator) throw;
                }
                samples.push_back(std::move(row));
            }
            p["samples"] = std::move(samples);
            report["pair"] = std::move(p);
        } catch (const Error& e) {
            record("pair", e);
            // Only a genuine refutation (mu spread, broken identity) kills
            // classification; a degeneracy-caused failure still gets its
            // Degenerate verdict below.
            pair_not_bertrand = e.code() == errc::not_bertrand && !e.cause();
        }
    }

    // Classification still makes sense for degenerate offsets (it reports
    // the Degenerate verdict with its reason); a genuine NotBertrand has
    // no pair to classify, so the stage is skipped outright.
    if (cfg.bertrand_lambda && sections.classification && !pair_not_bertrand) {
        log_debug("classification stage");
        try {
            const ClassificationReport rep =
                classify(cfg.curve, *cfg.bertrand_lambda, cfg.grid, cfg.jet_order, cfg.tol);
            json c{{"full", route_json(rep.full)},
                   {"normal", route_json(rep.normal)},
                   {"scale", rep.scale}};
            if (rep.helix_constants)
                c["helix_constants"] = {{"full", rep.helix_constants->first},
                                        {"normal", rep.helix_constants->second}};
            if (!rep.degenerate_reason.empty()) c["degenerate_reason"] = rep.degenerate_reason;
            json conditions = json::array();
            for (const ConditionSample& s : rep.conditions)
                conditions.push_back({{"t", s.t},
                                      {"full", json::array({s.full[0], s.full[1], s.full[2]})},
                                      {"normal", json::array({s.normal[0], s.normal[1]})}});
            c["conditions"] = std::move(conditions);
            json laplacians = json::array();
            for (const LaplacianSample& s : rep.laplacians)
                laplacians.push_back({{"t", s.t},
                                      {"h", vec_json(s.h)},
                                      {"full", vec_json(s.lap_full)},
                                      {"full_closed", vec_json(s.lap_full_closed)},
                                      {"normal", vec_json(s.lap_normal)},
                                      {"normal_closed", vec_json(s.lap_normal_closed)}});
            c["laplacians"] = std::move(laplacians);
            report["classification"] = std::move(c);
            if (rep.full.verdict == Verdict::Degenerate)
                record("classification",
                       Error(errc::degenerate, rep.degenerate_reason.empty()
                                                   ? "pair too degenerate to classify"
                                                   : rep.degenerate_reason));
        } catch (const Error& e) {
            record("classification", e);
        }
    }

    if (sections.residuals && cfg.want_residuals) {
        log_debug("residual stage");
        json res;

        // Frenet system, finite differences against the jet frame.
        try {
            json samples = json::array();
            double worst = 0.0;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (!frames[i]) break;
                const double r = frenet_ode_residual(cfg.curve, ts[i], cfg.jet_order);
                worst = std::max(worst, r);
                samples.push_back({{"t", ts[i]}, {"residual", r}});
            }
            if (!samples.empty())
                res["frenet"] = {{"samples", std::move(samples)}, {"max_residual", worst}};
        } catch (const Error& e) {
            record("residuals.frenet", e);
        }

        // Characterizing ODE of the tangent.
        try {
            json samples = json::array();
            double worst = 0.0;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (!frames[i]) break;
                const OdeCoefficients co = tangent_ode_coefficients(*frames[i]);
                const double r = tangent_ode_residual(*frames[i]);
                worst = std::max(worst, r);
                samples.push_back({{"t", ts[i]},
                                   {"lambda2", co.lambda2},
                                   {"lambda1", co.lambda1},
                                   {"lambda0", co.lambda0},
                                   {"residual", r}});
            }
            if (!samples.empty())
                res["tangent"] = {{"samples", std::move(samples)}, {"max_residual", worst}};
        } catch (const Error& e) {
            record("residuals.tangent", e);
        }

        if (pair) {
            // Binormal ODE: statement coefficients, connection-route
            // coefficients, and where the iterated fields span enough of
            // the frame, the solved-for coefficients as a third opinion.
            try {
                json samples = json::array();
                double worst = 0.0, worst_gap = 0.0;
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    if (!frames[i]) break;
                    const DerivationCoefficients co = derivation_coefficients(
                        *frames[i], pair->lambda, pair->mu, pair->angles(), cfg.tol);
                    const OdeCoefficients stmt =
                        binormal_ode_coefficients(*frames[i], pair->angles());
                    const OdeCoefficients conn = binormal_ode_coefficients_connection(co);
                    const double r = binormal_ode_residual(*frames[i], co, pair->angles());
                    const double gap = std::max({std::abs(stmt.lambda2 - conn.lambda2),
                                                 std::abs(stmt.lambda1 - conn.lambda1),
                                                 std::abs(stmt.lambda0 - conn.lambda0)});
                    worst = std::max(worst, r);
                    worst_gap = std::max(worst_gap, gap);

                    const FrameField x = FrameField::basis_B(co.alpha2.order() + 3);
                    const FrameField d1 = derive_B(x, co);
                    const FrameField d2 = derive_B(d1, co);
                    const FrameField d3 = derive_B(d2, co);
                    const auto fit = fit_ode_coefficients(d3, d2, d1, x);

                    json row{{"t", ts[i]},
                             {"lambda2", stmt.lambda2},
                             {"lambda1", stmt.lambda1},
                             {"lambda0", stmt.lambda0},
                             {"connection",
                              json::array({conn.lambda2, conn.lambda1, conn.lambda0})},
                             {"route_gap", gap},
                             {"residual", r}};
                    row["fit"] = fit ? json::array({fit->lambda2, fit->lambda1, fit->lambda0})
                                     : json(nullptr);
                    samples.push_back(std::move(row));
                }
                if (!samples.empty())
                    res["binormal"] = {{"samples", std::move(samples)},
                                       {"max_residual", worst},
                                       {"max_route_gap", worst_gap}};
            } catch (const Error& e) {
                record("residuals.binormal", e);
            }

            // Normal-connection ODEs for T and N.
            try {
                json samples = json::array();
                double worst = 0.0;
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    if (!frames[i]) break;
                    const DerivationCoefficients co = derivation_coefficients(
                        *frames[i], pair->lambda, pair->mu, pair->angles(), cfg.tol);
                    const auto r = normal_ode_residuals(co);
                    worst = std::max({worst, r[0], r[1]});
                    samples.push_back(
                        {{"t", ts[i]}, {"residual_T", r[0]}, {"residual_N", r[1]}});
                }
                if (!samples.empty())
                    res["normal"] = {{"samples", std::move(samples)}, {"max_residual", worst}};
            } catch (const Error& e) {
                record("residuals.normal", e);
            }
        }

        if (!res.is_null()) report["residuals"] = std::move(res);
    }

    report["errors"] = std::move(errors);
    return result;
}

std::string render_plot_csv(const json& report) {
    if (!report.contains("frenet") || !report.at("frenet").contains("samples"))
        raise(errc::domain_error, "report has no frame table to plot");
    const json& frame_samples = report.at("frenet").at("samples");

    const json* pair = section(report, "pair");
    const json* residuals = section(report, "residuals");
    const json* frenet_res = residuals ? section(*residuals, "frenet") : nullptr;
    const json* tangent = residuals ? section(*residuals, "tangent") : nullptr;
    const json* binormal = residuals ? section(*residuals, "binormal") : nullptr;
    const json* normal = residuals ? section(*residuals, "normal") : nullptr;
    const json* frenet_table = section(report, "frenet");

    std::string out =
        "t,alpha_x,alpha_y,alpha_z,beta_x,beta_y,beta_z,kappa,tau,kappa_beta,tau_beta,"
        "frenet_residual,tangent_residual,binormal_residual,normal_residual_T,"
        "normal_residual_N\n";
    for (std::size_t i = 0; i < frame_samples.size(); ++i) {
        const json& s = frame_samples[i];
        out += format_double(s.at("t").get<double>());
        for (int axis = 0; axis < 3; ++axis)
            out += "," + csv_vec_cell(frenet_table, i, "position", axis);
        for (int axis = 0; axis < 3; ++axis)
            out += "," + csv_vec_cell(pair, i, "position", axis);
        out += "," + csv_cell(frenet_table, i, "kappa");
        out += "," + csv_cell(frenet_table, i, "tau");
        out += "," + csv_cell(pair, i, "kappa_beta");
        out += "," + csv_cell(pair, i, "tau_beta");
        out += "," + csv_cell(frenet_res, i, "residual");
        out += "," + csv_cell(tangent, i, "residual");
        out += "," + csv_cell(binormal, i, "residual");
        out += "," + csv_cell(normal, i, "residual_T");
        out += "," + csv_cell(normal, i, "residual_N");
        out += "\n";
    }
    return out;
}

void emit_plot_data(const json& report, const std::string& path) {
    const std::string csv = render_plot_csv(report);
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(errc::io_error, "cannot open for writing: " + path);
    out << csv;
    out.flush();
    if (!out) raise(errc::io_error, "write failed: " + path);
}

std::optional<std::string> schema_violation(const json& doc, const json& schema) {
    return violation(doc, schema, "$");
}

} // namespace curvetk
