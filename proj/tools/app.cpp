#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermiwell/core.hpp"
#include "fermiwell/errors.hpp"
#include "fermiwell/hbs.hpp"
#include "fermiwell/oracle.hpp"
#include "fermiwell/reference_tables.hpp"
#include "fermiwell/semiclassical.hpp"
#include "fermiwell/spectrum.hpp"
#include "fermiwell/wavefunction.hpp"

namespace fermiwell::app {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";
constexpr const char* kKappaUnit = "MeV^-1 fm^-2";

struct CommonOptions
{
    double kappa2 = kNeutronKappa2;
    std::string format = "json";
    std::string out_path;
    int precision = 4;
};

//! A fully rendered command result plus the exit code it implies.
struct Rendered
{
    std::string text;
    int code = kSuccess;
};

class Formatter
{
public:
    explicit Formatter(int precision) : precision_(precision) {}

    double operator()(double v) const
    {
        if (precision_ >= 15 || !std::isfinite(v))
            return v;
        const double scale = std::pow(10.0, precision_);
        const double r = std::round(v * scale) / scale;
        return r == 0 ? 0.0 : r;
    }

    std::string text(double v) const
    {
        char buf[64];
        if (precision_ >= 15)
            std::snprintf(buf, sizeof buf, "%.17g", v);
        else
            std::snprintf(buf, sizeof buf, "%.*f", precision_, (*this)(v));
        return buf;
    }

private:
    int precision_;
};

json make_record(const std::string& command)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = json::object();
    j["results"] = json::object();
    j["units"] = json::object();
    return j;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json well_inputs(const WellParams& p, const Formatter& fmt)
{
    return {{"v0", fmt(p.v0)}, {"a", fmt(p.a)}, {"b", fmt(p.b)}, {"kappa2", p.kappa2}};
}

json well_units()
{
    return {{"v0", "MeV"}, {"a", "fm"}, {"b", "fm"}, {"kappa2", kKappaUnit}};
}

void require_json_or_csv(const CommonOptions& c, bool csv_allowed)
{
    if (c.format == "json")
        return;
    if (c.format == "csv" && csv_allowed)
        return;
    throw DomainError("unsupported --format '" + c.format + "' for this command");
}

// ---------------------------------------------------------------------------

Rendered cmd_info(const WellParams& p, const CommonOptions& c)
{
    require_json_or_csv(c, false);
    p.validate();
    const Formatter fmt(c.precision);
    const DimensionlessWell d = to_dimensionless(p);
    const double g = g_closed_form(d);
    const SquareWellReference sq = square_well_reference(p.v0, p.a, p.kappa2);
    const int floor_g = static_cast<int>(std::floor(g));

    json j = make_record("info");
    j["inputs"] = well_inputs(p, fmt);
    j["results"] = {
        {"alpha", fmt(d.alpha)},
        {"beta", fmt(d.beta)},
        {"u0", fmt(p.u0())},
        {"g", fmt(g)},
        {"g_quadrature", fmt(g_quadrature(p))},
        {"g_prime", fmt(sq.g_prime)},
        {"w", fmt(sq.w)},
        {"count_bracket", json::array({floor_g, floor_g + 1})},
    };
    j["units"] = well_units();
    j["units"].update({{"alpha", "1"}, {"beta", "1"}, {"u0", "MeV"}, {"g", "1"},
                       {"g_quadrature", "1"}, {"g_prime", "1"}, {"w", "1"},
                       {"count_bracket", "states"}});
    return {dump(j)};
}

Rendered cmd_spectrum(const WellParams& p, const std::string& method, const CommonOptions& c)
{
    require_json_or_csv(c, true);
    p.validate();
    const Formatter fmt(c.precision);
    const bool csv = c.format == "csv";

    json j = make_record("spectrum");
    j["inputs"] = well_inputs(p, fmt);
    j["inputs"]["method"] = method;
    j["units"] = well_units();
    j["units"].update({{"energy", "MeV"}, {"nodes", "count"}, {"f_value", "1"}, {"g", "1"}});

    std::ostringstream table;
    json levels = json::array();
    if (method == "exact")
    {
        const SpectrumReport r = solve_spectrum(p);
        table << "index,energy_MeV,parity,nodes\n";
        for (const EigenState& s : r.states)
        {
            levels.push_back({{"index", s.index}, {"energy", fmt(s.energy)},
                              {"parity", to_string(s.parity)}, {"nodes", s.nodes}});
            table << s.index << ',' << fmt.text(s.energy) << ',' << to_string(s.parity) << ','
                  << s.nodes << '\n';
        }
        j["results"] = {{"levels", levels},
                        {"count", r.count},
                        {"g", fmt(r.g_value)},
                        {"near_threshold", r.near_threshold},
                        {"count_rule_violated", r.count_rule_violated}};
    }
    else if (method == "wkb")
    {
        const auto wkb = wkb_spectrum(p);
        table << "index,energy_MeV,f_value\n";
        for (const WkbLevel& l : wkb)
        {
            levels.push_back({{"index", l.index}, {"energy", fmt(l.energy)},
                              {"f_value", fmt(l.f_value)}});
            table << l.index << ',' << fmt.text(l.energy) << ',' << fmt.text(l.f_value) << '\n';
        }
        j["results"] = {{"levels", levels},
                        {"count", static_cast<int>(wkb.size())},
                        {"g", fmt(g_closed_form(to_dimensionless(p)))}};
    }
    else if (method == "oracle")
    {
        const IntegratorConfig cfg = IntegratorConfig::for_well(p);
        const auto oracle = oracle_spectrum(p, cfg);
        table << "index,energy_MeV,parity,nodes\n";
        int index = 0;
        for (const OracleLevel& l : oracle)
        {
            levels.push_back({{"index", index}, {"energy", fmt(l.energy)},
                              {"parity", to_string(l.parity)}, {"nodes", l.nodes}});
            table << index << ',' << fmt.text(l.energy) << ',' << to_string(l.parity) << ','
                  << l.nodes << '\n';
            ++index;
        }
        j["results"] = {{"levels", levels},
                        {"count", static_cast<int>(oracle.size())},
                        {"zero_energy_count", count_via_zero_energy_nodes(p, cfg)}};
    }
    else
    {
        throw DomainError("unknown --method '" + method + "'");
    }
    return {csv ? table.str() : dump(j)};
}

Rendered cmd_hbs(double alpha, int n, const CommonOptions& c)
{
    require_json_or_csv(c, false);
    const Formatter fmt(c.precision);
    const HbsSolution s = solve_beta_n(alpha, n);
    const CriticalityReport crit = verify_criticality(alpha, s.beta_n, n, 1e-2, c.kappa2);

    json j = make_record("hbs");
    j["inputs"] = {{"alpha", fmt(alpha)}, {"n", n}, {"kappa2", c.kappa2}};
    j["results"] = {
        {"beta_n", fmt(s.beta_n)},
        {"g", fmt(s.g_value)},
        {"nodes", s.n},
        {"criticality",
         {{"delta", 0.01},
          {"count_below", crit.count_below},
          {"count_at", crit.count_at},
          {"at_near_threshold", crit.at_near_threshold},
          {"count_above", crit.count_above},
          {"ok", crit.ok}}},
    };
    j["units"] = {{"alpha", "1"}, {"n", "nodes"}, {"kappa2", kKappaUnit}, {"beta_n", "1"},
                  {"g", "1"}, {"nodes", "count"}, {"criticality", "states"}};
    return {dump(j), crit.ok ? kSuccess : kVerificationFailure};
}

Rendered cmd_hbs_scan(double alpha, int n_max, const CommonOptions& c)
{
    require_json_or_csv(c, true);
    const Formatter fmt(c.precision);
    const auto sols = solve_beta_scan(alpha, n_max);

    std::ostringstream table;
    table << "alpha,n,beta_n,g\n";
    json rows = json::array();
    for (const HbsSolution& s : sols)
    {
        rows.push_back({{"n", s.n}, {"beta_n", fmt(s.beta_n)}, {"g", fmt(s.g_value)}});
        table << fmt.text(alpha) << ',' << s.n << ',' << fmt.text(s.beta_n) << ','
              << fmt.text(s.g_value) << '\n';
    }
    json j = make_record("hbs-scan");
    j["inputs"] = {{"alpha", fmt(alpha)}, {"n_max", n_max}};
    j["results"] = {{"rows", rows}};
    j["units"] = {{"alpha", "1"}, {"n_max", "nodes"}, {"n", "nodes"}, {"beta_n", "1"}, {"g", "1"}};
    return {c.format == "csv" ? table.str() : dump(j)};
}

struct NuclearResult
{
    WellParams well;
    double g = 0;
    int s_wave = 0;
    int total = 0;
    int bracket_lo = 0;
};

NuclearResult nuclear_levels(int mass_number, double v0, double r0, double b, double kappa2)
{
    if (mass_number < 1)
        throw DomainError("mass number must be at least 1");
    NuclearResult r;
    r.well = {v0, r0 * std::cbrt(static_cast<double>(mass_number)), b, kappa2};
    r.well.validate();
    const SpectrumReport report = solve_spectrum(r.well);
    r.g = report.g_value;
    r.total = report.count;
    for (const EigenState& s : report.states)
    {
        if (s.parity == Parity::odd)
            ++r.s_wave;
    }
    r.bracket_lo = static_cast<int>(std::floor(r.g / 2));
    return r;
}

Rendered cmd_nuclear(int mass_number, double v0, double r0, double b, const CommonOptions& c)
{
    require_json_or_csv(c, false);
    const Formatter fmt(c.precision);
    const NuclearResult r = nuclear_levels(mass_number, v0, r0, b, c.kappa2);
    const bool within = r.s_wave == r.bracket_lo || r.s_wave == r.bracket_lo + 1;

    json j = make_record("nuclear");
    j["inputs"] = {{"mass_number", mass_number}, {"v0", fmt(v0)}, {"r0", fmt(r0)},
                   {"b", fmt(b)}, {"kappa2", c.kappa2}};
    j["results"] = {{"a", fmt(r.well.a)},
                    {"alpha", fmt(r.well.alpha())},
                    {"beta", fmt(to_dimensionless(r.well).beta)},
                    {"g", fmt(r.g)},
                    {"g_half", fmt(r.g / 2)},
                    {"s_wave_bracket", json::array({r.bracket_lo, r.bracket_lo + 1})},
                    {"s_wave_count", r.s_wave},
                    {"total_count", r.total},
                    {"within_bracket", within}};
    j["units"] = {{"mass_number", "nucleons"}, {"v0", "MeV"}, {"r0", "fm"}, {"b", "fm"},
                  {"kappa2", kKappaUnit}, {"a", "fm"}, {"alpha", "1"}, {"beta", "1"},
                  {"g", "1"}, {"g_half", "1"}, {"s_wave_bracket", "levels"},
                  {"s_wave_count", "levels"}, {"total_count", "states"}};
    return {dump(j)};
}

// ---------------------------------------------------------------------------

struct PlotOptions
{
    std::string kind = "potential";
    std::optional<double> v0, a, b, alpha, beta;
    std::optional<double> x_min, x_max;
    int points = 401;
    std::string parity = "auto";
};

std::vector<double> linspace(double lo, double hi, int points)
{
    std::vector<double> xs(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return xs;
}

Rendered cmd_plot_data(const PlotOptions& o, const CommonOptions& c)
{
    if (c.format != "json" && c.format != "tsv")
        throw DomainError("plot-data always writes TSV");
    if (o.points < 2)
        throw DomainError("--points must be at least 2");
    const Formatter fmt(c.precision);
    std::ostringstream tsv;

    if (o.kind == "potential")
    {
        const double v0 = o.v0.value_or(5.0);
        const double a = o.a.value_or(3.0);
        std::vector<double> bs = o.b ? std::vector<double>{*o.b} : std::vector<double>{0.1, 0.5, 1.0};
        std::vector<WellParams> wells;
        tsv << "# x_fm";
        for (double b : bs)
        {
            wells.push_back({v0, a, b, c.kappa2});
            wells.back().validate();
            tsv << "\tV_MeV_b" << b;
        }
        tsv << '\n';
        for (double x : linspace(o.x_min.value_or(-10.0), o.x_max.value_or(10.0), o.points))
        {
            tsv << fmt.text(x);
            for (const WellParams& w : wells)
                tsv << '\t' << fmt.text(potential(w, x));
            tsv << '\n';
        }
    }
    else if (o.kind == "eigenfunctions")
    {
        if (!o.v0 || !o.a || !o.b)
            throw DomainError("eigenfunctions plot needs --v0, --a and --b");
        const WellParams p{*o.v0, *o.a, *o.b, c.kappa2};
        p.validate();
        const SpectrumReport r = solve_spectrum(p);
        std::vector<double> norms;
        tsv << "# x_fm";
        for (const EigenState& s : r.states)
        {
            norms.push_back(l2_norm(p, s.energy));
            tsv << "\tpsi" << s.index << "_fm^-1/2";
        }
        tsv << '\n';
        const double reach = p.a + 8.0 * p.b;
        for (double x : linspace(o.x_min.value_or(-reach), o.x_max.value_or(reach), o.points))
        {
            tsv << fmt.text(x);
            for (std::size_t i = 0; i < r.states.size(); ++i)
            {
                const EigenState& s = r.states[i];
                double value = psi(p, s.energy, x).psi;
                if (s.parity == Parity::odd)
                    value = x > 0 ? value : (x < 0 ? -value : 0.0);
                tsv << '\t' << fmt.text(value / norms[i]);
            }
            tsv << '\n';
        }
    }
    else if (o.kind == "hbs")
    {
        if (!o.alpha || !o.beta)
            throw DomainError("hbs plot needs --alpha and --beta");
        const DimensionlessWell d{*o.alpha, *o.beta};
        d.validate();
        bool odd = o.parity == "odd";
        if (o.parity == "auto")
        {
            const WaveSample centre = psi_hbs(d, 0.0);
            odd = std::abs(centre.psi) < std::abs(centre.dpsi_dx);
        }
        else if (o.parity != "even" && o.parity != "odd")
        {
            throw DomainError("--parity must be even, odd or auto");
        }
        tsv << "# x_over_b\tpsi_star_" << (odd ? "odd" : "even") << '\n';
        const double reach = d.alpha + 10.0;
        for (double x : linspace(o.x_min.value_or(-reach), o.x_max.value_or(reach), o.points))
        {
            double value = psi_hbs(d, x).psi;
            if (odd)
                value = x > 0 ? value : (x < 0 ? -value : 0.0);
            tsv << fmt.text(x) << '\t' << fmt.text(value) << '\n';
        }
    }
    else
    {
        throw DomainError("unknown plot kind '" + o.kind + "'");
    }
    return {tsv.str()};
}

// ---------------------------------------------------------------------------

Rendered cmd_reproduce(int table, const CommonOptions& c)
{
    require_json_or_csv(c, false);
    const Formatter fmt(c.precision);
    json rows = json::array();
    bool all_pass = true;

    auto compare = [&](double published, double computed, double tol) {
        const double diff = std::abs(computed - published);
        return json{{"published", published},
                    {"computed", fmt(computed)},
                    {"abs_diff", fmt(diff)},
                    {"tolerance", tol},
                    {"pass", diff <= tol}};
    };
    auto compare_count = [](int published, int computed) {
        return json{{"published", published}, {"computed", computed}, {"pass", published == computed}};
    };

    if (table == 1)
    {
        for (const auto& row : reference::kEqualGWells)
        {
            const WellParams p{row.v0, row.a, row.b, c.kappa2};
            const SpectrumReport r = solve_spectrum(p);
            json g = compare(row.g, r.g_value, reference::kGTol);
            json n = compare_count(row.count, r.count);
            const bool pass = g["pass"].get<bool>() && n["pass"].get<bool>();
            all_pass = all_pass && pass;
            rows.push_back({{"v0", row.v0}, {"a", row.a}, {"b", row.b}, {"g", g}, {"count", n},
                            {"pass", pass}});
        }
    }
    else if (table == 2)
    {
        for (double alpha : {1.0, 2.0, 3.0, 4.0})
        {
            const auto sols = solve_beta_scan(alpha, 8);
            for (const auto& row : reference::kCriticalBeta)
            {
                if (row.alpha != alpha)
                    continue;
                const HbsSolution& s = sols[static_cast<std::size_t>(row.n - 1)];
                json beta = compare(row.beta_n, s.beta_n, reference::kBetaTol);
                json g = compare(row.g, s.g_value, reference::kGTol);
                const bool pass = beta["pass"].get<bool>() && g["pass"].get<bool>();
                all_pass = all_pass && pass;
                rows.push_back({{"alpha", alpha}, {"n", row.n}, {"beta_n", beta}, {"g", g},
                                {"pass", pass}});
            }
        }
    }
    else if (table == 3)
    {
        for (const auto& row : reference::kNuclei)
        {
            const NuclearResult r = nuclear_levels(row.mass_number, 50.0, 1.3, 0.65, c.kappa2);
            json g = compare(row.g, r.g, reference::kNuclearGTol);
            json n = compare_count(row.s_wave_levels, r.s_wave);
            const bool pass = g["pass"].get<bool>() && n["pass"].get<bool>();
            all_pass = all_pass && pass;
            rows.push_back({{"element", row.element}, {"mass_number", row.mass_number},
                            {"g", g}, {"s_wave_count", n},
                            {"s_wave_bracket", json::array({r.bracket_lo, r.bracket_lo + 1})},
                            {"pass", pass}});
        }
    }
    else
    {
        throw DomainError("--table must be 1, 2 or 3");
    }

    json j = make_record("reproduce");
    j["inputs"] = {{"table", table}, {"kappa2", c.kappa2}};
    j["results"] = {{"rows", rows}, {"all_pass", all_pass}};
    j["units"] = {{"v0", "MeV"}, {"a", "fm"}, {"b", "fm"}, {"kappa2", kKappaUnit},
                  {"g", "1"}, {"beta_n", "1"}, {"alpha", "1"}, {"count", "states"},
                  {"s_wave_count", "levels"}, {"mass_number", "nucleons"}};
    return {dump(j), all_pass ? kSuccess : kVerificationFailure};
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* sub, CommonOptions& c)
{
    sub->add_option("--kappa2", c.kappa2, "2m/hbar^2 [MeV^-1 fm^-2]")->capture_default_str();
    sub->add_option("--format", c.format, "json | csv (tabular commands) | tsv (plot-data)")
        ->capture_default_str();
    sub->add_option("--out", c.out_path, "write output to this file instead of stdout");
    sub->add_option("--precision", c.precision, "decimal places (>= 15 prints full precision)")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bound states, half-bound states and semiclassical counts of the symmetric Fermi well",
                 "fermiwell"};
    app.require_subcommand(1);

    CommonOptions common;
    WellParams well;
    std::string method = "exact";
    double alpha = 0;
    int n = 1;
    int mass_number = 0;
    double r0 = 1.3;
    int table = 0;
    PlotOptions plot;

    auto add_well = [&](CLI::App* sub, bool required) {
        auto* v0 = sub->add_option("--v0", well.v0, "well depth V0 [MeV]");
        auto* a = sub->add_option("--a", well.a, "half-width a [fm]");
        auto* b = sub->add_option("--b", well.b, "diffuseness b [fm]");
        if (required)
        {
            v0->required();
            a->required();
            b->required();
        }
    };

    auto* info = app.add_subcommand("info", "dimensionless parameters, G and the predicted count");
    add_well(info, true);
    add_common(info, common);

    auto* spectrum = app.add_subcommand("spectrum", "bound-state energies");
    add_well(spectrum, true);
    spectrum->add_option("--method", method, "exact | wkb | oracle")
        ->check(CLI::IsMember({"exact", "wkb", "oracle"}))
        ->capture_default_str();
    add_common(spectrum, common);

    auto* hbs = app.add_subcommand("hbs", "critical beta_n for an n-node half-bound state");
    hbs->add_option("--alpha", alpha, "a/b")->required();
    hbs->add_option("--n", n, "node count")->required();
    add_common(hbs, common);

    auto* hbs_scan = app.add_subcommand("hbs-scan", "beta_1 .. beta_n at fixed alpha");
    hbs_scan->add_option("--alpha", alpha, "a/b")->required();
    hbs_scan->add_option("--n", n, "largest node count")->required();
    add_common(hbs_scan, common);

    auto* nuclear = app.add_subcommand("nuclear", "s-wave neutron levels of a nucleus");
    nuclear->add_option("--mass,-A", mass_number, "mass number A")->required();
    well = {50.0, 0.0, 0.65, kNeutronKappa2};
    nuclear->add_option("--v0", well.v0, "well depth [MeV]")->capture_default_str();
    nuclear->add_option("--r0", r0, "radius parameter, a = r0 A^(1/3) [fm]")->capture_default_str();
    nuclear->add_option("--b", well.b, "diffuseness [fm]")->capture_default_str();
    add_common(nuclear, common);

    auto* plot_cmd = app.add_subcommand("plot-data", "TSV curves of the potential or wavefunctions");
    plot_cmd->add_option("--kind", plot.kind, "potential | eigenfunctions | hbs")
        ->check(CLI::IsMember({"potential", "eigenfunctions", "hbs"}))
        ->capture_default_str();
    plot_cmd->add_option("--v0", plot.v0, "well depth [MeV]");
    plot_cmd->add_option("--a", plot.a, "half-width [fm]");
    plot_cmd->add_option("--b", plot.b, "diffuseness [fm]");
    plot_cmd->add_option("--alpha", plot.alpha, "a/b (hbs)");
    plot_cmd->add_option("--beta", plot.beta, "b sqrt(kappa2 U0) (hbs)");
    plot_cmd->add_option("--xmin", plot.x_min, "left end (fm, or x/b for hbs)");
    plot_cmd->add_option("--xmax", plot.x_max, "right end (fm, or x/b for hbs)");
    plot_cmd->add_option("--points", plot.points, "samples")->capture_default_str();
    plot_cmd->add_option("--parity", plot.parity, "hbs extension: even | odd | auto")
        ->capture_default_str();
    add_common(plot_cmd, common);

    auto* reproduce = app.add_subcommand("reproduce", "recompute a published table and compare");
    reproduce->add_option("--table", table, "1, 2 or 3")->required();
    add_common(reproduce, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    Rendered rendered;
    try
    {
        if (info->parsed())
        {
            well.kappa2 = common.kappa2;
            rendered = cmd_info(well, common);
        }
        else if (spectrum->parsed())
        {
            well.kappa2 = common.kappa2;
            rendered = cmd_spectrum(well, method, common);
        }
        else if (hbs->parsed())
        {
            rendered = cmd_hbs(alpha, n, common);
        }
        else if (hbs_scan->parsed())
        {
            rendered = cmd_hbs_scan(alpha, n, common);
        }
        else if (nuclear->parsed())
        {
            rendered = cmd_nuclear(mass_number, well.v0, r0, well.b, common);
        }
        else if (plot_cmd->parsed())
        {
            rendered = cmd_plot_data(plot, common);
        }
        else if (reproduce->parsed())
        {
            rendered = cmd_reproduce(table, common);
        }
    }
    catch (const DomainError& e)
    {
        err << "fermiwell: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const VerificationError& e)
    {
        err << "fermiwell: verification failed: " << e.what() << '\n';
        return kVerificationFailure;
    }
    catch (const std::exception& e)
    {
        err << "fermiwell: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }

    if (common.out_path.empty())
    {
        out << rendered.text;
    }
    else
    {
        std::ofstream file(common.out_path, std::ios::binary);
        if (!file)
        {
            err << "fermiwell: cannot open " << common.out_path << '\n';
            return kUsageError;
        }
        file << rendered.text;
    }
    return rendered.code;
}

} // namespace fermiwell::app
