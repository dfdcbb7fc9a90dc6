// Command-line front end over the nhspec C API.
//
//   nhspec eval     --family k2 --variant plus --kappa 1 --tau 1 --t 0.5
//   nhspec spectrum --canonical --theta 1 --n-max 2
//   nhspec match    --family k2 --variant plus --theta 0.5 --format json
//   nhspec verify   --suite fock --dim 64
//   nhspec limit    --family k6 --variant minus --t 1
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification or
// formula-defect failure.

#include "nhspec/nhspec.h"

#include "run_config.hpp"
#include "writer.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

using namespace nhspec::cli;
using json = nhspec::cli::ojson;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitFailure = 3;

// Raised when the library rejects a value.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check(nhs_status status) {
    if (status != NHS_OK) throw DomainError(nhs_last_error());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using ModelPtr = std::unique_ptr<nhs_model, Deleter<nhs_model, nhs_model_destroy>>;
using SpectrumPtr = std::unique_ptr<nhs_spectrum, Deleter<nhs_spectrum, nhs_spectrum_destroy>>;
using ReportPtr =
    std::unique_ptr<nhs_match_report, Deleter<nhs_match_report, nhs_match_report_destroy>>;
using SummaryPtr = std::unique_ptr<nhs_summary, Deleter<nhs_summary, nhs_summary_destroy>>;
using LimitPtr =
    std::unique_ptr<nhs_limit_report, Deleter<nhs_limit_report, nhs_limit_report_destroy>>;

// Raw flag text; only flags that were given override the config file.
struct Flags {
    std::map<std::string, std::string> values;
    bool canonical = false;
    std::string config_path;
};

nhs_family family_of(const RunConfig& c) {
    if (!c.family) throw UsageError("--family is required");
    static const std::map<std::string, nhs_family> tags{{"k1", NHS_K1}, {"k2", NHS_K2},
                                                        {"k3", NHS_K3}, {"k4", NHS_K4},
                                                        {"k5", NHS_K5}, {"k6", NHS_K6}};
    const auto it = tags.find(*c.family);
    if (it == tags.end()) throw UsageError("family must be one of k1..k6, got '" + *c.family + "'");
    return it->second;
}

nhs_variant variant_of(const RunConfig& c) {
    if (!c.variant) throw UsageError("--variant is required");
    if (*c.variant == "plus") return NHS_PLUS;
    if (*c.variant == "minus") return NHS_MINUS;
    throw UsageError("variant must be plus or minus, got '" + *c.variant + "'");
}

ModelPtr make_model(const RunConfig& c) {
    nhs_model* raw = nullptr;
    check(nhs_model_create(family_of(c), variant_of(c), c.kappa, c.tau, &raw));
    return ModelPtr(raw);
}

json model_meta(const RunConfig& c) {
    return {{"family", c.family.value_or("")},
            {"variant", c.variant.value_or("")},
            {"kappa", number(c.kappa)},
            {"tau", number(c.tau)}};
}

Document cmd_eval(const RunConfig& c) {
    const ModelPtr model = make_model(c);
    std::vector<double> times;
    if (c.t_grid) times = c.t_grid->points();
    else if (c.t) times = {*c.t};
    else throw UsageError("eval needs --t or --t-grid");

    Document doc;
    doc.meta = model_meta(c);
    doc.meta["command"] = "eval";
    doc.data = json::array();
    doc.table.header = {"t", "f", "quantum"};
    for (double t : times) {
        double f = 0.0;
        double q = 0.0;
        check(nhs_eval_f(model.get(), t, &f));
        check(nhs_eval_quantum(model.get(), t, &q));
        doc.data.push_back({{"t", number(t)}, {"f", number(f)}, {"quantum", number(q)}});
        doc.table.rows.push_back({number(t), number(f), number(q)});
    }
    return doc;
}

Document cmd_spectrum(const RunConfig& c) {
    nhs_spectrum* raw = nullptr;
    Document doc;
    if (c.canonical) {
        if (!c.theta) throw UsageError("--canonical needs --theta");
        check(nhs_canonical_spectrum_create(*c.theta, c.n_max, &raw));
        doc.meta = {{"canonical", true}, {"theta", number(*c.theta)}};
    } else {
        if (!c.t) throw UsageError("spectrum needs --t (or --canonical)");
        const ModelPtr model = make_model(c);
        check(nhs_spectrum_create(model.get(), *c.t, c.n_max, &raw));
        doc.meta = model_meta(c);
        doc.meta["canonical"] = false;
    }
    const SpectrumPtr table(raw);
    doc.meta["command"] = "spectrum";
    doc.meta["n_max"] = c.n_max;

    int has_time = 0;
    double time = 0.0;
    double quantum = 0.0;
    check(nhs_spectrum_time(table.get(), &has_time, &time));
    check(nhs_spectrum_quantum(table.get(), &quantum));

    json levels = json::array();
    doc.table.header = {"n", "s_n"};
    for (size_t i = 0; i < nhs_spectrum_size(table.get()); ++i) {
        int n = 0;
        double s = 0.0;
        check(nhs_spectrum_level(table.get(), i, &n, &s));
        levels.push_back({{"n", n}, {"s_n", number(s)}});
        doc.table.rows.push_back({n, number(s)});
    }
    doc.data = {{"time", has_time ? number(time) : json(nullptr)},
                {"quantum", number(quantum)},
                {"levels", std::move(levels)}};
    return doc;
}

std::string_view verdict_name(nhs_verdict v) {
    switch (v) {
    case NHS_ACCEPTED: return "accepted";
    case NHS_REJECTED: return "rejected";
    case NHS_OUT_OF_DOMAIN: return "out_of_domain";
    case NHS_OUT_OF_WINDOW: return "out_of_window";
    }
    return "?";
}

Document cmd_match(const RunConfig& c, int& exit_code) {
    if (!c.theta) throw UsageError("match needs --theta");
    const ModelPtr model = make_model(c);
    const auto window = c.window.value_or(std::pair{-M_PI * c.tau, M_PI * c.tau});

    nhs_match_report* raw = nullptr;
    check(nhs_match_validate(model.get(), *c.theta, window.first, window.second, c.tol,
                             c.grid_points, &raw));
    const ReportPtr report(raw);

    Document doc;
    doc.meta = model_meta(c);
    doc.meta["command"] = "match";
    doc.meta["theta"] = number(*c.theta);
    doc.meta["window"] = {number(window.first), number(window.second)};
    doc.meta["tol"] = number(c.tol);
    doc.meta["grid_points"] = nhs_match_grid_points(report.get());

    doc.table.header = {"kind",     "index",     "formula",      "branch",     "printed",
                        "time",     "verdict",   "residual",     "nearest_root", "root_distance",
                        "bracket_lo", "bracket_hi", "multiple", "k"};

    json candidates = json::array();
    for (size_t i = 0; i < nhs_match_candidate_count(report.get()); ++i) {
        nhs_candidate cand{};
        check(nhs_match_candidate(report.get(), i, &cand));
        const json time = cand.has_time ? number(cand.time) : json(nullptr);
        const json residual = cand.has_residual ? number(cand.residual) : json(nullptr);
        const json nearest = cand.has_nearest_root ? json(cand.nearest_root) : json(nullptr);
        const json distance = cand.has_nearest_root ? number(cand.root_distance) : json(nullptr);
        const std::string formula = "k" + std::to_string(static_cast<int>(cand.formula));
        candidates.push_back({{"formula", formula},
                              {"branch", cand.branch},
                              {"printed", static_cast<bool>(cand.printed)},
                              {"argument", {number(cand.argument_re), number(cand.argument_im)}},
                              {"time", time},
                              {"verdict", verdict_name(cand.verdict)},
                              {"residual", residual},
                              {"nearest_root", nearest},
                              {"root_distance", distance},
                              {"oracle_agrees", static_cast<bool>(cand.oracle_agrees)}});
        doc.table.rows.push_back({"candidate", i, formula, cand.branch,
                                  static_cast<bool>(cand.printed), time,
                                  verdict_name(cand.verdict), residual, nearest, distance, nullptr,
                                  nullptr, nullptr, nullptr});
    }

    json roots = json::array();
    for (size_t i = 0; i < nhs_match_root_count(report.get()); ++i) {
        nhs_root r{};
        check(nhs_match_root(report.get(), i, &r));
        roots.push_back({{"time", number(r.time)},
                         {"bracket", {number(r.bracket_lo), number(r.bracket_hi)}},
                         {"residual", number(r.residual)},
                         {"multiple", static_cast<bool>(r.multiple)}});
        doc.table.rows.push_back({"root", i, nullptr, nullptr, nullptr, number(r.time), nullptr,
                                  number(r.residual), nullptr, nullptr, number(r.bracket_lo),
                                  number(r.bracket_hi), static_cast<bool>(r.multiple), nullptr});
    }

    json periodic = json::array();
    if (c.k_range) {
        size_t count = 0;
        check(nhs_match_periodic(report.get(), c.k_range->first, c.k_range->second, nullptr, 0,
                                 &count));
        std::vector<nhs_periodic_root> buf(count);
        check(nhs_match_periodic(report.get(), c.k_range->first, c.k_range->second, buf.data(),
                                 buf.size(), &count));
        for (size_t i = 0; i < buf.size(); ++i) {
            const auto& p = buf[i];
            periodic.push_back({{"base_root", p.base_index},
                                {"k", p.k},
                                {"time", number(p.time)},
                                {"residual", number(p.residual)},
                                {"verified", static_cast<bool>(p.verified)}});
            doc.table.rows.push_back({"periodic", i, nullptr, nullptr, nullptr, number(p.time),
                                      p.verified ? "verified" : "unverified", number(p.residual),
                                      p.base_index, nullptr, nullptr, nullptr, nullptr, p.k});
        }
    }

    json notes = json::array();
    for (size_t i = 0; i < nhs_match_note_count(report.get()); ++i) {
        notes.push_back(nhs_match_note(report.get(), i));
    }
    const bool defect = nhs_match_formula_defect(report.get()) != 0;
    doc.data = {{"candidates", std::move(candidates)},
                {"roots", std::move(roots)},
                {"periodic", std::move(periodic)},
                {"formula_defect", defect},
                {"theta_attained", nhs_match_root_count(report.get()) > 0},
                {"notes", std::move(notes)}};
    exit_code = defect ? kExitFailure : kExitOk;
    return doc;
}

Document cmd_verify(const RunConfig& c, int& exit_code) {
    if (!c.suite) throw UsageError("verify needs --suite");
    static const std::map<std::string, nhs_suite> suites{{"fock", NHS_SUITE_FOCK},
                                                         {"parity", NHS_SUITE_PARITY},
                                                         {"duality", NHS_SUITE_DUALITY},
                                                         {"limits", NHS_SUITE_LIMITS},
                                                         {"matching", NHS_SUITE_MATCHING}};
    const auto it = suites.find(*c.suite);
    if (it == suites.end()) throw UsageError("unknown suite '" + *c.suite + "'");

    nhs_summary* raw = nullptr;
    check(nhs_verify(it->second, c.dim, &raw));
    const SummaryPtr summary(raw);

    Document doc;
    doc.meta = {{"command", "verify"}, {"suite", *c.suite}, {"dim", c.dim}};
    doc.table.header = {"name", "passed", "deviation", "tolerance"};
    json records = json::array();
    for (size_t i = 0; i < nhs_summary_record_count(summary.get()); ++i) {
        nhs_case_record r{};
        check(nhs_summary_record(summary.get(), i, &r));
        records.push_back({{"name", r.name},
                           {"passed", static_cast<bool>(r.passed)},
                           {"deviation", number(r.deviation)},
                           {"tolerance", number(r.tolerance)}});
        doc.table.rows.push_back(
            {r.name, static_cast<bool>(r.passed), number(r.deviation), number(r.tolerance)});
    }
    const int run = nhs_summary_run(summary.get());
    const int passed = nhs_summary_passed(summary.get());
    doc.data = {{"suite", nhs_summary_suite(summary.get())},
                {"cases_run", run},
                {"cases_passed", passed},
                {"worst_deviation", number(nhs_summary_worst(summary.get()))},
                {"worst_case", nhs_summary_worst_case(summary.get())},
                {"records", std::move(records)}};
    std::cerr << "verify " << *c.suite << ": " << passed << "/" << run
              << " passed, worst deviation/tolerance " << nhs_summary_worst(summary.get()) << " ("
              << nhs_summary_worst_case(summary.get()) << ")\n";
    exit_code = passed == run ? kExitOk : kExitFailure;
    return doc;
}

Document cmd_limit(const RunConfig& c, int& exit_code) {
    const double t = c.t.value_or(1.0);
    nhs_limit_report* raw = nullptr;
    check(nhs_limit_report_create(family_of(c), variant_of(c), c.kappa, t,
                                  c.tau_ladder.empty() ? nullptr : c.tau_ladder.data(),
                                  c.tau_ladder.size(), &raw));
    const LimitPtr report(raw);

    int degree = 0;
    double coefficient = 0.0;
    int has_order = 0;
    double order = 0.0;
    check(nhs_limit_polynomial(report.get(), &degree, &coefficient));
    check(nhs_limit_order(report.get(), &has_order, &order));
    const bool exact = nhs_limit_exact(report.get()) != 0;
    const bool confirmed = nhs_limit_polynomial_confirmed(report.get()) != 0;

    Document doc;
    doc.meta = {{"command", "limit"},
                {"family", c.family.value_or("")},
                {"variant", c.variant.value_or("")},
                {"kappa", number(c.kappa)},
                {"t", number(t)}};
    doc.table.header = {"tau", "value", "limit", "deviation"};
    json samples = json::array();
    for (size_t i = 0; i < nhs_limit_sample_count(report.get()); ++i) {
        nhs_limit_sample s{};
        check(nhs_limit_get_sample(report.get(), i, &s));
        samples.push_back({{"tau", number(s.tau)},
                           {"value", number(s.value)},
                           {"limit", number(s.limit)},
                           {"deviation", number(s.deviation)}});
        doc.table.rows.push_back(
            {number(s.tau), number(s.value), number(s.limit), number(s.deviation)});
    }
    const bool order_ok = exact || (has_order && order >= 1.8 && order <= 2.2);
    doc.data = {{"polynomial", {{"degree", degree}, {"coefficient", number(coefficient)}}},
                {"polynomial_confirmed", confirmed},
                {"exact", exact},
                {"order", has_order ? number(order) : json(nullptr)},
                {"order_within_bounds", order_ok},
                {"samples", std::move(samples)}};
    exit_code = (order_ok && confirmed) ? kExitOk : kExitFailure;
    return doc;
}

RunConfig resolve_config(const Flags& flags) {
    RunConfig c;
    std::string path = flags.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("NHSPEC_CONFIG"); env && *env) path = env;
    }
    if (!path.empty()) c = load_config_file(path);

    // Flags share the config file's key names and parsing.
    nlohmann::json overrides = nlohmann::json::object();
    for (const auto& [key, text] : flags.values) {
        if (key == "family" || key == "variant" || key == "output_format" ||
            key == "output_path" || key == "suite") {
            overrides[key] = text;
        } else if (key == "t_grid" || key == "k_range") {
            overrides[key] = text;
        } else if (key == "window") {
            const auto w = parse_window(text);
            overrides[key] = {w.first, w.second};
        } else if (key == "tau_ladder") {
            overrides[key] = parse_list(text);
        } else if (key == "n_max" || key == "dim" || key == "grid_points") {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != text.size() || text.empty()) {
                throw UsageError("--" + key + " expects an integer, got '" + text + "'");
            }
            overrides[key] = v;
        } else {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(text, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != text.size() || text.empty()) {
                throw UsageError("--" + key + " expects a number, got '" + text + "'");
            }
            overrides[key] = v;
        }
    }
    if (flags.canonical) overrides["canonical"] = true;
    apply_json(c, overrides);
    if (c.output_format != "csv" && c.output_format != "json") {
        throw UsageError("output format must be csv or json, got '" + c.output_format + "'");
    }
    return c;
}

void add_value_flag(CLI::App* sub, Flags& flags, const std::string& flag, const std::string& key,
                    const std::string& help) {
    sub->add_option_function<std::string>(
           flag, [&flags, key](const std::string& v) { flags.values[key] = v; }, help)
        ->allow_extra_args(false);
}

void add_common(CLI::App* sub, Flags& flags) {
    add_value_flag(sub, flags, "--format", "output_format", "csv (default) or json");
    add_value_flag(sub, flags, "--output,-o", "output_path", "write to a file instead of stdout");
    sub->add_option("--config", flags.config_path, "JSON config file (same keys as flags)");
}

void add_model_flags(CLI::App* sub, Flags& flags) {
    add_value_flag(sub, flags, "--family", "family", "k1..k6");
    add_value_flag(sub, flags, "--variant", "variant", "plus (hyperbolic) or minus (trigonometric)");
    add_value_flag(sub, flags, "--kappa", "kappa", "deformation parameter (> 0)");
    add_value_flag(sub, flags, "--tau", "tau", "cosmological time scale (> 0)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-dependent disc-area quanta of twisted Newton-Hooke space-times"};
    app.require_subcommand(1);
    Flags flags;

    auto* eval = app.add_subcommand("eval", "evaluate f(t) and the area quantum 2*pi*f(t)");
    add_model_flags(eval, flags);
    add_value_flag(eval, flags, "--t", "t", "time");
    add_value_flag(eval, flags, "--t-grid", "t_grid", "lo:hi:count, endpoints included");
    add_common(eval, flags);

    auto* spectrum = app.add_subcommand("spectrum", "disc-area levels s_n at one instant");
    add_model_flags(spectrum, flags);
    add_value_flag(spectrum, flags, "--t", "t", "time");
    add_value_flag(spectrum, flags, "--theta", "theta", "canonical deformation parameter");
    add_value_flag(spectrum, flags, "--n-max", "n_max", "highest level (default 10)");
    spectrum->add_flag("--canonical", flags.canonical, "constant-theta reference spectrum");
    add_common(spectrum, flags);

    auto* match = app.add_subcommand("match", "closed-form matching times vs numeric roots");
    add_model_flags(match, flags);
    add_value_flag(match, flags, "--theta", "theta", "canonical deformation parameter");
    add_value_flag(match, flags, "--window", "window", "lo:hi (default -pi*tau:pi*tau)");
    add_value_flag(match, flags, "--tol", "tol", "root tolerance on t (default 1e-12)");
    add_value_flag(match, flags, "--grid-points", "grid_points", "sampling grid (default 4096)");
    add_value_flag(match, flags, "--k-range", "k_range", "lo:hi periodic copies (minus variant)");
    add_common(match, flags);

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    add_value_flag(verify, flags, "--suite", "suite", "fock | parity | duality | limits | matching");
    add_value_flag(verify, flags, "--dim", "dim", "truncation dimension for fock (default 64)");
    add_common(verify, flags);

    auto* limit = app.add_subcommand("limit", "approach to the tau -> infinity polynomial");
    add_model_flags(limit, flags);
    add_value_flag(limit, flags, "--t", "t", "time (default 1)");
    add_value_flag(limit, flags, "--tau-ladder", "tau_ladder", "comma separated taus");
    add_common(limit, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const RunConfig config = resolve_config(flags);
        int exit_code = kExitOk;
        Document doc;
        if (eval->parsed()) doc = cmd_eval(config);
        else if (spectrum->parsed()) doc = cmd_spectrum(config);
        else if (match->parsed()) doc = cmd_match(config, exit_code);
        else if (verify->parsed()) doc = cmd_verify(config, exit_code);
        else doc = cmd_limit(config, exit_code);

        if (config.output_path) {
            std::ofstream out(*config.output_path);
            if (!out) throw UsageError("cannot open output file '" + *config.output_path + "'");
            write_document(out, doc, config.output_format);
        } else {
            write_document(std::cout, doc, config.output_format);
        }
        return exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
}
