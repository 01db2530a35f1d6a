#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "otto/asymptotics.hpp"
#include "otto/cycle.hpp"
#include "otto/errors.hpp"
#include "otto/figures.hpp"
#include "otto/search.hpp"
#include "otto/spectrum.hpp"
#include "otto/sweep.hpp"
#include "otto/table_io.hpp"

namespace otto::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct Globals {
    std::string out_path;
    std::optional<Format> format;
    int precision = io::kDefaultPrecision;
    double rel_tol = thermo::TruncationPolicy{}.rel_tol;
    std::int64_t n_max = thermo::TruncationPolicy{}.n_max;
    unsigned threads = 0;

    thermo::TruncationPolicy policy() const { return {rel_tol, n_max}; }
};

struct CycleArgs {
    double lambda_cold = 0.0;
    double lambda_hot = 0.0;
    double t_hot = 0.0;
    double t_cold = 0.0;
};

struct SmallArgs {
    double lambda = 0.0;
    double epsilon = 0.0;
    double theta = 0.0;
    double t_ref = 0.0;
};

struct LargeArgs {
    double lambda = 0.0;
    double epsilon = 0.0;
    double t_hot = 0.0;
    double t_cold = 0.0;
};

struct SweepArgs {
    std::vector<std::string> axes;
    std::vector<std::string> fixed;
    std::vector<std::string> quantities;
};

struct SearchArgs {
    double lambda_cold = 0.0;
    double t_hot = 0.0;
    double t_cold = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double tol = 1e-5;
    std::size_t prescan = 100;
};

double parse_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw DomainError("cannot parse " + what + " from '" + s + "'");
    }
    return v;
}

sweep::Parameter parse_parameter_or_throw(const std::string& s) {
    if (auto p = sweep::parse_parameter(s)) {
        return *p;
    }
    throw DomainError("unknown sweep parameter '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

// NAME:LO:HI:COUNT or NAME=V1,V2,...
sweep::Axis parse_axis(const std::string& text) {
    if (auto eq = text.find('='); eq != std::string::npos) {
        const auto p = parse_parameter_or_throw(text.substr(0, eq));
        std::vector<double> values;
        for (const auto& v : split(text.substr(eq + 1), ',')) {
            values.push_back(parse_double(v, "axis value"));
        }
        return sweep::Axis::list(p, std::move(values));
    }
    const auto parts = split(text, ':');
    if (parts.size() != 4) {
        throw DomainError("axis must be NAME:LO:HI:COUNT or NAME=V1,V2,..., got '" + text + "'");
    }
    const double count = parse_double(parts[3], "axis point count");
    if (count < 2 || count != static_cast<double>(static_cast<std::size_t>(count))) {
        throw DomainError("axis point count must be an integer >= 2");
    }
    return sweep::Axis::range(parse_parameter_or_throw(parts[0]), parse_double(parts[1], "axis lo"),
                              parse_double(parts[2], "axis hi"), static_cast<std::size_t>(count));
}

sweep::SweepSpec build_sweep_spec(const SweepArgs& a, const thermo::TruncationPolicy& policy) {
    sweep::SweepSpec spec;
    spec.policy = policy;
    for (const auto& axis : a.axes) {
        spec.axes.push_back(parse_axis(axis));
    }
    for (const auto& f : a.fixed) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) {
            throw DomainError("fixed parameter must be NAME=VALUE, got '" + f + "'");
        }
        spec.fixed[parse_parameter_or_throw(f.substr(0, eq))] = parse_double(f.substr(eq + 1), "fixed value");
    }
    for (const auto& q : a.quantities) {
        const auto parsed = sweep::parse_quantity(q);
        if (!parsed) {
            throw DomainError("unknown quantity '" + q + "'");
        }
        spec.quantities.push_back(*parsed);
    }
    spec.validate();
    return spec;
}

// Flat object -> one header row plus one data row.
void write_object_csv(std::ostream& out, const ordered_json& obj, int precision) {
    bool first = true;
    for (const auto& item : obj.items()) {
        out << (first ? "" : ",") << item.key();
        first = false;
    }
    out << '\n';
    first = true;
    for (const auto& item : obj.items()) {
        const auto& v = item.value();
        out << (first ? "" : ",");
        first = false;
        if (v.is_null()) {
            out << "NA";
        } else if (v.is_number_float()) {
            out << io::format_number(v.get<double>(), precision);
        } else if (v.is_string()) {
            out << v.get<std::string>();
        } else {
            out << v.dump();
        }
    }
    out << '\n';
}

void emit_object(std::ostream& out, const ordered_json& obj, Format format, int precision) {
    if (format == Format::Json) {
        out << obj.dump(2) << '\n';
    } else {
        write_object_csv(out, obj, precision);
    }
}

void emit_table(std::ostream& out, const sweep::SweepTable& table, Format format, int precision) {
    if (format == Format::Json) {
        out << io::to_json(table, precision).dump(2) << '\n';
    } else {
        io::write_csv(out, table, precision);
    }
}

ordered_json number(double v, int precision) { return io::round_to_precision(v, precision); }

ordered_json optional_number(const std::optional<double>& v, int precision) {
    return v ? number(*v, precision) : ordered_json(nullptr);
}

void add_outcome(ordered_json& j, const std::string& prefix, const cycle::CycleOutcome& o, int precision) {
    j[prefix + "q_hot"] = number(o.q_hot, precision);
    j[prefix + "q_cold_out"] = number(o.q_cold_out, precision);
    j[prefix + "work"] = number(o.work, precision);
    j[prefix + "efficiency"] = optional_number(o.efficiency, precision);
    j[prefix + "mode"] = cycle::to_string(o.mode);
}

void write_spectrum(std::ostream& out, double lambda, std::int64_t levels, Format format, int precision) {
    const spectrum::CurvedSpectrum s(lambda);
    const std::vector<std::string> columns{"n", "energy", "energy_derivative", "gap", "gap_ratio"};
    std::vector<std::vector<double>> rows;
    for (std::int64_t n = 0; n < levels; ++n) {
        rows.push_back({static_cast<double>(n), s.energy(n), s.energy_derivative(n), s.gap(n),
                        s.gap(n) / s.energy(0)});
    }
    if (format == Format::Json) {
        ordered_json j;
        j["lambda"] = number(lambda, precision);
        j["columns"] = columns;
        auto& rj = j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            auto row = ordered_json::array();
            row.push_back(static_cast<std::int64_t>(r[0]));
            for (std::size_t k = 1; k < r.size(); ++k) row.push_back(number(r[k], precision));
            rj.push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
        return;
    }
    for (std::size_t k = 0; k < columns.size(); ++k) {
        out << (k ? "," : "") << columns[k];
    }
    out << '\n';
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            out << (k ? "," : "") << io::format_number(r[k], precision);
        }
        out << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature-dependent quantum Otto cycle on a circle oscillator", "otto"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key = value file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Globals g;
    std::string format_name;
    app.add_option("--out", g.out_path, "Write data to this file instead of standard output");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", g.precision, "Significant digits for printed numbers")
        ->check(CLI::Range(1, 17));
    app.add_option("--rel-tol", g.rel_tol, "Relative tail tolerance for Boltzmann sums")
        ->envname("OTTO_REL_TOL");
    app.add_option("--n-max", g.n_max, "Cap on summed levels")->envname("OTTO_N_MAX");
    app.add_option("--threads", g.threads, "Sweep worker threads (0 = hardware concurrency)");

    // spectrum
    double spec_lambda = 0.0;
    std::int64_t spec_levels = 10;
    auto* sp = app.add_subcommand("spectrum", "Energy levels, gaps and curvature derivatives");
    sp->add_option("--lambda", spec_lambda, "Curvature lambda = 1/R^2")->capture_default_str();
    sp->add_option("--levels", spec_levels, "Number of levels")->capture_default_str()->check(CLI::Range(1, 1000000));

    // cycle
    CycleArgs ca;
    auto* cy = app.add_subcommand("cycle", "Evaluate one Otto cycle");
    cy->add_option("--lambda-cold", ca.lambda_cold, "Curvature at the cold bath")->required();
    cy->add_option("--lambda-hot", ca.lambda_hot, "Curvature at the hot bath")->required();
    cy->add_option("--t-hot", ca.t_hot, "Hot bath temperature")->required();
    cy->add_option("--t-cold", ca.t_cold, "Cold bath temperature")->required();

    // limits
    auto* lim = app.add_subcommand("limits", "Asymptotic estimates next to exact values");
    lim->require_subcommand(1);
    SmallArgs sa;
    auto* small = lim->add_subcommand("small", "Small-curvature expansion");
    small->add_option("--lambda", sa.lambda, "Hot-side curvature")->required();
    small->add_option("--epsilon", sa.epsilon, "Curvature difference")->required();
    small->add_option("--theta", sa.theta, "Temperature difference t_hot - t_cold")->required();
    small->add_option("--t-ref", sa.t_ref, "Expansion temperature, used as t_cold for the exact cycle")->required();
    LargeArgs la;
    auto* large = lim->add_subcommand("large", "Large-curvature theta-function forms");
    large->add_option("--lambda", la.lambda, "Hot-side curvature")->required();
    large->add_option("--epsilon", la.epsilon, "Curvature difference")->required();
    large->add_option("--t-hot", la.t_hot, "Hot bath temperature")->required();
    large->add_option("--t-cold", la.t_cold, "Cold bath temperature")->required();

    // sweep
    SweepArgs swa;
    auto* sw = app.add_subcommand("sweep", "Grid sweep to CSV");
    sw->add_option("--axis", swa.axes, "NAME:LO:HI:COUNT or NAME=V1,V2,... (one or two)")->required();
    sw->add_option("--fixed", swa.fixed, "NAME=VALUE for a parameter held fixed");
    sw->add_option("--quantity", swa.quantities, "Quantities to evaluate")->required()->delimiter(',');

    // figure
    std::string figure_id;
    auto* fig = app.add_subcommand("figure", "Dataset behind one figure");
    fig->add_option("id", figure_id, "fig2, fig4 .. fig11")->required();

    // transition / peak
    SearchArgs tr;
    auto* tra = app.add_subcommand("transition", "Curvature where the engine turns into a refrigerator");
    tra->add_option("--lambda-cold", tr.lambda_cold)->required();
    tra->add_option("--t-hot", tr.t_hot)->required();
    tra->add_option("--t-cold", tr.t_cold)->required();
    tra->add_option("--lo", tr.lo, "Bracket lower end for lambda_hot")->required();
    tra->add_option("--hi", tr.hi, "Bracket upper end for lambda_hot")->required();

    SearchArgs pk;
    auto* pea = app.add_subcommand("peak", "Curvature maximizing the extracted work");
    pea->add_option("--lambda-cold", pk.lambda_cold)->required();
    pea->add_option("--t-hot", pk.t_hot)->required();
    pea->add_option("--t-cold", pk.t_cold)->required();
    pea->add_option("--lo", pk.lo, "Search range lower end for lambda_hot")->required();
    pea->add_option("--hi", pk.hi, "Search range upper end for lambda_hot")->required();
    pea->add_option("--tol", pk.tol, "Golden-section tolerance")->capture_default_str();
    pea->add_option("--prescan", pk.prescan, "Pre-scan points")->capture_default_str();

    for (auto* sub : {sp, cy, lim, small, large, sw, fig, tra, pea}) {
        sub->configurable();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            out << (dynamic_cast<const CLI::CallForAllHelp*>(&e) ? app.help("", CLI::AppFormatMode::All)
                                                                 : app.help());
            return kOk;
        }
        err << "otto: " << e.what() << '\n';
        return kArgumentError;
    }

    const bool tabular = sp->parsed() || sw->parsed() || fig->parsed();
    const Format format = format_name.empty() ? (tabular ? Format::Csv : Format::Json)
                          : format_name == "json" ? Format::Json
                                                  : Format::Csv;
    const int precision = g.precision;

    std::ofstream file;
    std::ostringstream buffer;
    try {
        const auto policy = g.policy();
        policy.validate();

        if (sp->parsed()) {
            write_spectrum(buffer, spec_lambda, spec_levels, format, precision);
        } else if (cy->parsed()) {
            const cycle::OttoParams p{ca.lambda_cold, ca.lambda_hot, ca.t_cold, ca.t_hot, policy};
            emit_object(buffer, io::to_json(cycle::run_cycle(p), precision), format, precision);
        } else if (small->parsed()) {
            const asymptotics::LimitParams lp{sa.lambda, sa.epsilon, sa.theta, sa.t_ref};
            const auto est = asymptotics::small_curvature_estimate(lp, policy);
            const auto exact = cycle::run_cycle(
                {sa.lambda - sa.epsilon, sa.lambda, sa.t_ref, sa.t_ref + sa.theta, policy});
            ordered_json j;
            j["w_approx"] = number(est.w_approx, precision);
            j["q_hot_approx"] = number(est.q_hot_approx, precision);
            j["eta_s"] = number(est.eta_s, precision);
            j["eta_many_level"] = number(est.eta_many_level, precision);
            add_outcome(j, "exact_", exact, precision);
            emit_object(buffer, j, format, precision);
        } else if (large->parsed()) {
            const auto est = asymptotics::large_curvature_estimate(la.lambda, la.epsilon, la.t_hot, la.t_cold);
            const auto exact = cycle::run_cycle({la.lambda - la.epsilon, la.lambda, la.t_cold, la.t_hot, policy});
            ordered_json j;
            j["w_approx"] = number(est.w_approx, precision);
            j["q_hot_approx"] = number(est.q_hot_approx, precision);
            j["eta_l"] = number(est.eta_l, precision);
            add_outcome(j, "exact_", exact, precision);
            emit_object(buffer, j, format, precision);
        } else if (sw->parsed()) {
            const auto spec = build_sweep_spec(swa, policy);
            emit_table(buffer, sweep::sweep_grid(spec, g.threads), format, precision);
        } else if (fig->parsed()) {
            const auto id = sweep::parse_figure(figure_id);
            if (!id) {
                throw DomainError("unknown figure id '" + figure_id + "'");
            }
            emit_table(buffer, sweep::figure_dataset(*id, policy, g.threads), format, precision);
        } else if (tra->parsed()) {
            const auto r = sweep::find_mode_transition(tr.lambda_cold, tr.t_hot, tr.t_cold, {tr.lo, tr.hi}, policy);
            ordered_json j;
            j["lambda_hot"] = number(r.lambda_hot, precision);
            j["q_hot_at_root"] = number(r.q_hot_at_root, precision);
            j["q_hot_lo"] = number(r.q_hot_lo, precision);
            j["q_hot_hi"] = number(r.q_hot_hi, precision);
            j["iterations"] = r.iterations;
            emit_object(buffer, j, format, precision);
        } else if (pea->parsed()) {
            const auto r = sweep::find_peak_work(pk.lambda_cold, pk.t_hot, pk.t_cold, {pk.lo, pk.hi}, policy,
                                                 pk.tol, pk.prescan);
            const auto& best = r.best();
            ordered_json j;
            j["lambda_hot_at_peak"] = number(best.lambda_hot, precision);
            j["peak_work"] = number(best.work, precision);
            j["interior"] = best.interior;
            j["unimodal"] = r.unimodal;
            j["n_candidates"] = r.candidates.size();
            if (format == Format::Json) {
                auto& cl = j["candidate_lambda_hot"] = ordered_json::array();
                auto& cw = j["candidate_work"] = ordered_json::array();
                for (const auto& c : r.candidates) {
                    cl.push_back(number(c.lambda_hot, precision));
                    cw.push_back(number(c.work, precision));
                }
            }
            emit_object(buffer, j, format, precision);
        }
    } catch (const DomainError& e) {
        err << "otto: invalid argument: " << e.what() << '\n';
        return kArgumentError;
    } catch (const BracketError& e) {
        err << "otto: bracket error: " << e.what() << '\n';
        return kBracketError;
    } catch (const TruncationError& e) {
        err << "otto: truncation failure: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        err << "otto: numerical failure: " << e.what() << '\n';
        return kNumericalError;
    }

    if (g.out_path.empty()) {
        out << buffer.str();
    } else {
        file.open(g.out_path);
        if (!file) {
            err << "otto: cannot open " << g.out_path << " for writing\n";
            return kArgumentError;
        }
        file << buffer.str();
    }
    return kOk;
}

}  // namespace otto::cli
