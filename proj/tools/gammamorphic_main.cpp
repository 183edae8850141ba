// Batch front end: evaluate any function of the family, emit value tables
// over grids, run the identity verification suite, print the constants.
// Users are scripts and CI, so everything is flag-driven and every number
// is printed in shortest round-trip decimal form.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammamorphic/barnes_g.hpp"
#include "gammamorphic/double_sine.hpp"
#include "gammamorphic/identity_report.hpp"
#include "gammamorphic/kinkelin.hpp"
#include "gammamorphic/multi_gamma.hpp"
#include "gammamorphic/special_base.hpp"
#include "gammamorphic/two_period.hpp"
#include "gammamorphic/types.hpp"

namespace {

using namespace gammamorphic;

// Flag-level problems: reported on stderr with exit status 2, the same
// class as malformed flags, so scripts can tell usage bugs from domain
// errors (exit 1).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& function_names() {
    static const std::vector<std::string> names = {
        "gamma", "barnes-g", "phi",         "kinkelin", "g2",
        "gn",    "kn",       "double-sine", "glaisher", "omega-tilde"};
    return names;
}

std::string fmt_d(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

cplx parse_cplx(const std::string& text) {
    const auto comma = text.find(',');
    const auto one = [](const std::string& s) {
        double v = 0.0;
        const char* b = s.data();
        const char* e = b + s.size();
        const auto res = std::from_chars(b, e, v);
        if (res.ec != std::errc{} || res.ptr != e)
            throw usage_error("cannot parse number '" + s + "'");
        return v;
    };
    if (comma == std::string::npos) return cplx(one(text));
    return {one(text.substr(0, comma)), one(text.substr(comma + 1))};
}

struct eval_options {
    std::string x_text;
    std::string alpha_text = "1";
    std::string omega1_text = "1";
    std::string omega2_text = "1";
    int n = 0;
    std::string route = "auto";
};

g_route parse_g_route(const std::string& r) {
    if (r == "auto") return g_route::auto_route;
    if (r == "series") return g_route::series;
    if (r == "weierstrass") return g_route::weierstrass;
    if (r == "asymptotic") return g_route::asymptotic;
    if (r == "integral") return g_route::integral;
    if (r == "euler-limit") return g_route::euler_limit;
    throw usage_error("barnes-g route must be one of auto, series, "
                      "weierstrass, asymptotic, integral, euler-limit");
}

omega_route parse_omega_route(const std::string& r) {
    if (r == "auto" || r == "zeta-series") return omega_route::zeta_series;
    if (r == "prelimit") return omega_route::prelimit;
    if (r == "integral-of-ln-k") return omega_route::integral_of_ln_k;
    throw usage_error("omega-tilde route must be one of zeta-series, "
                      "prelimit, integral-of-ln-k");
}

// The engine works in logs; the tool reports plain values.  exp() of the
// stored log, with the error bound scaled along.
value_with_error exp_of(const value_with_error& v) {
    if (v.value.real() > 709.0)
        throw overflow_policy_error(
            "value exceeds the binary64 range; log-scale value is " +
            fmt_d(v.value.real()));
    const cplx e = std::exp(v.value);
    return {e, std::abs(e) * (v.abs_error + 1e-16), v.route};
}

value_with_error eval_function(const std::string& fn, cplx x,
                               const eval_options& o) {
    if (fn == "gamma") return exp_of(log_gamma(x));
    if (fn == "barnes-g") return exp_of(log_g(x, parse_g_route(o.route)));
    if (fn == "phi") return phi(x);
    if (fn == "kinkelin") return exp_of(log_k(x));
    if (fn == "g2")
        return exp_of(log_g2(x, period_ratio{parse_cplx(o.alpha_text)}));
    if (fn == "gn" || fn == "kn") {
        if (o.n < 1)
            throw usage_error("eval " + fn + " needs --n >= 1");
        return exp_of(fn == "gn" ? log_gn(o.n, x) : log_kn(o.n, x));
    }
    if (fn == "double-sine") {
        const period_pair w{parse_cplx(o.omega1_text),
                            parse_cplx(o.omega2_text)};
        if (o.route == "auto" || o.route == "g-ratio")
            return exp_of(log_s2_gratio(x, w));
        if (o.route == "integral") {
            if (x.imag() != 0.0)
                throw usage_error(
                    "double-sine integral route takes a real --x");
            return exp_of(log_s2_integral(x.real(), w));
        }
        throw usage_error("double-sine route must be g-ratio or integral");
    }
    if (fn == "glaisher") return glaisher_constant();
    if (fn == "omega-tilde")
        return exp_of(omega_tilde(parse_omega_route(o.route)));
    throw usage_error("unknown function '" + fn + "'");
}

bool is_constant_function(const std::string& fn) {
    return fn == "glaisher" || fn == "omega-tilde";
}

// ---------------------------------------------------------------------------
// Tables.

struct table_row {
    cplx arg;
    value_with_error v;
};

std::string rows_to_csv(const std::vector<table_row>& rows) {
    std::string out = "arg_re,arg_im,value_re,value_im,abs_error,route\n";
    for (const auto& r : rows) {
        out += fmt_d(r.arg.real()) + ',' + fmt_d(r.arg.imag()) + ',' +
               fmt_d(r.v.value.real()) + ',' + fmt_d(r.v.value.imag()) +
               ',' + fmt_d(r.v.abs_error) + ',' + route_name(r.v.route) +
               '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<table_row>& rows) {
    // Hand-assembled so the numerals stay in shortest round-trip form.
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += std::string("  {\"arg_re\": ") + fmt_d(r.arg.real()) +
               ", \"arg_im\": " + fmt_d(r.arg.imag()) +
               ", \"value_re\": " + fmt_d(r.v.value.real()) +
               ", \"value_im\": " + fmt_d(r.v.value.imag()) +
               ", \"abs_error\": " + fmt_d(r.v.abs_error) +
               ", \"route\": \"" + route_name(r.v.route) + "\"}";
        out += i + 1 < rows.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::string rows_to_text(const std::vector<table_row>& rows) {
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"arg_re", "arg_im", "value_re", "value_im", "abs_error",
                     "route"});
    for (const auto& r : rows)
        cells.push_back({fmt_d(r.arg.real()), fmt_d(r.arg.imag()),
                         fmt_d(r.v.value.real()), fmt_d(r.v.value.imag()),
                         fmt_d(r.v.abs_error), route_name(r.v.route)});
    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 6; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 6; ++c) {
            out += row[c];
            if (c + 1 < 6)
                out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

struct run_manifest {
    std::string function;
    double re_start = 0.0, re_stop = 0.0;
    int re_count = 1;
    double im_start = 0.0, im_stop = 0.0;
    int im_count = 1;
    eval_options opts;
    std::string format = "csv";
    double tolerance = 0.0; // 0: no abs_error gate
    std::string out_path;   // empty: stdout
};

void validate_manifest(const run_manifest& m) {
    if (m.re_count < 1 || m.im_count < 1)
        throw usage_error("grid counts must be >= 1");
    if (m.format != "csv" && m.format != "json" && m.format != "text")
        throw usage_error("format must be one of csv, json, text");
    if (m.tolerance < 0.0)
        throw usage_error("tolerance must be positive");
    const auto& fns = function_names();
    if (std::find(fns.begin(), fns.end(), m.function) == fns.end())
        throw usage_error("unknown function '" + m.function + "'");
}

double grid_point(double start, double stop, int k, int count) {
    if (count == 1) return start;
    return start + (stop - start) * double(k) / double(count - 1);
}

run_manifest manifest_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open manifest '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("manifest '" + path + "': " + e.what());
    }
    run_manifest m;
    try {
        m.function = j.at("function").get<std::string>();
        const auto& g = j.at("grid");
        m.re_start = g.value("re_start", 0.0);
        m.re_stop = g.value("re_stop", m.re_start);
        m.re_count = g.value("re_count", 1);
        m.im_start = g.value("im_start", 0.0);
        m.im_stop = g.value("im_stop", m.im_start);
        m.im_count = g.value("im_count", 1);
        const auto ctext = [&j](const char* key, const std::string& fall) {
            if (!j.contains(key)) return fall;
            const auto& v = j.at(key);
            if (v.is_number()) return fmt_d(v.get<double>());
            if (v.is_array() && v.size() == 2)
                return fmt_d(v[0].get<double>()) + "," +
                       fmt_d(v[1].get<double>());
            return v.get<std::string>();
        };
        m.opts.alpha_text = ctext("alpha", "1");
        m.opts.omega1_text = ctext("omega1", "1");
        m.opts.omega2_text = ctext("omega2", "1");
        m.opts.n = j.value("n", 0);
        m.opts.route = j.value("route", std::string("auto"));
        m.format = j.value("format", std::string("csv"));
        m.tolerance = j.value("tolerance", 0.0);
        m.out_path = j.value("out", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("manifest '" + path + "': " + e.what());
    }
    return m;
}

// Evaluates the whole grid before writing anything, so a failure anywhere
// suppresses all output instead of leaving a truncated file behind.
int cmd_table(const run_manifest& m) {
    validate_manifest(m);
    std::vector<table_row> rows;
    rows.reserve(std::size_t(m.re_count) * std::size_t(m.im_count));
    for (int i = 0; i < m.im_count; ++i) {
        for (int k = 0; k < m.re_count; ++k) {
            const cplx x(grid_point(m.re_start, m.re_stop, k, m.re_count),
                         grid_point(m.im_start, m.im_stop, i, m.im_count));
            try {
                table_row row{x, eval_function(m.function, x, m.opts)};
                if (m.tolerance > 0.0 && row.v.abs_error > m.tolerance)
                    throw non_convergence(
                        "abs_error " + fmt_d(row.v.abs_error) +
                        " exceeds the requested tolerance " +
                        fmt_d(m.tolerance));
                rows.push_back(row);
            } catch (const error& e) {
                std::cerr << error_kind(e) << " at arg = ("
                          << fmt_d(x.real()) << ", " << fmt_d(x.imag())
                          << "): " << e.what() << '\n';
                return 1;
            }
        }
    }
    const std::string body = m.format == "csv"    ? rows_to_csv(rows)
                             : m.format == "json" ? rows_to_json(rows)
                                                  : rows_to_text(rows);
    if (m.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(m.out_path);
        if (!out) throw usage_error("cannot write '" + m.out_path + "'");
        out << body;
    }
    return 0;
}

int cmd_eval(const std::string& fn, const eval_options& o,
             const std::string& format) {
    cplx x = 0.0;
    if (!o.x_text.empty())
        x = parse_cplx(o.x_text);
    else if (!is_constant_function(fn))
        throw usage_error("eval " + fn + " needs --x");
    const value_with_error v = eval_function(fn, x, o);
    const std::vector<table_row> rows{{x, v}};
    if (format == "csv") {
        std::cout << rows_to_csv(rows);
    } else if (format == "json") {
        std::cout << rows_to_json(rows);
    } else {
        std::cout << "value_re = " << fmt_d(v.value.real()) << '\n'
                  << "value_im = " << fmt_d(v.value.imag()) << '\n'
                  << "abs_error = " << fmt_d(v.abs_error) << '\n'
                  << "route = " << route_name(v.route) << '\n';
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& only,
               const std::string& density, bool as_json) {
    std::vector<identity_id> filter;
    for (const auto& name : only) {
        identity_id id{};
        if (!identity_from_name(name, id)) {
            std::cerr << "unknown identity '" << name
                      << "'; see --help for the full list\n";
            return 2;
        }
        filter.push_back(id);
    }
    const grid_density dens = density == "small"   ? grid_density::small
                              : density == "dense" ? grid_density::dense
                                                   : grid_density::standard;
    const suite_result res = run_suite(filter, dens);
    if (as_json) {
        std::cout << reports_to_json(res.reports);
    } else {
        std::cout << reports_to_table(res.reports) << '\n';
        std::cout << "total = " << res.total << '\n';
        for (const auto& [name, count] : res.status_counts)
            std::cout << name << " = " << count << '\n';
        std::cout << "verified failures = " << res.verified_failures << '\n';
    }
    return res.verified_failures == 0 ? 0 : 1;
}

int cmd_constants(const std::string& format) {
    struct named {
        const char* name;
        value_with_error v;
    };
    const value_with_error lnw = omega_tilde(omega_route::zeta_series);
    const std::vector<named> rows = {
        {"euler-gamma", {cplx(euler_gamma()), 0.0, route_tag::closed_form}},
        {"glaisher", glaisher_constant()},
        {"omega-tilde", exp_of(lnw)},
        {"ln-omega-tilde", lnw},
    };
    if (format == "json") {
        std::string out = "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += std::string("  {\"name\": \"") + rows[i].name +
                   "\", \"value\": " + fmt_d(rows[i].v.value.real()) +
                   ", \"abs_error\": " + fmt_d(rows[i].v.abs_error) +
                   ", \"route\": \"" + route_name(rows[i].v.route) + "\"}";
            out += i + 1 < rows.size() ? ",\n" : "\n";
        }
        std::cout << out << "]\n";
    } else if (format == "csv") {
        std::cout << "name,value,abs_error,route\n";
        for (const auto& r : rows)
            std::cout << r.name << ',' << fmt_d(r.v.value.real()) << ','
                      << fmt_d(r.v.abs_error) << ','
                      << route_name(r.v.route) << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << r.name << " = " << fmt_d(r.v.value.real())
                      << "  (abs_error " << fmt_d(r.v.abs_error)
                      << ", route " << route_name(r.v.route) << ")\n";
    }
    return 0;
}

std::string help_footer() {
    std::string out = "Functions:\n ";
    for (const auto& fn : function_names()) out += " " + fn;
    out += "\n\nIdentities (for verify --only):\n ";
    for (identity_id id : all_identity_ids())
        out += std::string(" ") + identity_name(id);
    out += "\n\nEnvironment:\n  GAMMAMORPHIC_MAX_QUAD_DEPTH  quadrature "
           "refinement depth limit (default 12)\n";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double gamma function family: evaluation, tables, "
                 "verification, constants"};
    app.footer(help_footer());
    app.require_subcommand(1);

    std::string fn, format = "text", manifest_path, density = "standard";
    eval_options opts;
    run_manifest man;
    std::vector<std::string> only;
    bool as_json = false;

    auto add_common = [&opts](CLI::App* c) {
        c->add_option("--alpha", opts.alpha_text,
                      "period ratio for g2, re[,im]");
        c->add_option("--omega1", opts.omega1_text,
                      "first period for double-sine, re[,im]");
        c->add_option("--omega2", opts.omega2_text,
                      "second period for double-sine, re[,im]");
        c->add_option("--n", opts.n, "order for gn/kn");
        c->add_option("--route", opts.route, "evaluation route");
    };

    CLI::App* ev = app.add_subcommand("eval", "evaluate one function value");
    ev->add_option("fn", fn, "function name")->required();
    ev->add_option("--x", opts.x_text, "argument, re[,im]");
    add_common(ev);
    ev->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* tb = app.add_subcommand("table", "evaluate over a grid");
    tb->add_option("--fn", man.function, "function name");
    tb->add_option("--re-start", man.re_start, "grid start, real part");
    tb->add_option("--re-stop", man.re_stop, "grid stop, real part");
    tb->add_option("--re-count", man.re_count, "grid points, real axis");
    tb->add_option("--im-start", man.im_start, "grid start, imag part");
    tb->add_option("--im-stop", man.im_stop, "grid stop, imag part");
    tb->add_option("--im-count", man.im_count, "grid points, imag axis");
    add_common(tb);
    tb->add_option("--format", man.format, "csv, json, or text");
    tb->add_option("--tolerance", man.tolerance,
                   "greatest acceptable abs_error per row");
    tb->add_option("--out", man.out_path, "write to file instead of stdout");
    tb->add_option("--manifest", manifest_path,
                   "JSON file carrying the whole run description");

    CLI::App* vf =
        app.add_subcommand("verify", "run the identity verification suite");
    vf->add_option("--only", only, "identity names to run")->delimiter(',');
    vf->add_option("--density", density, "grid density")
        ->check(CLI::IsMember({"small", "standard", "dense"}));
    vf->add_flag("--json", as_json, "emit the JSON report array");

    CLI::App* ct = app.add_subcommand("constants", "print the constants");
    ct->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(fn, opts, format);
        if (tb->parsed()) {
            if (!manifest_path.empty()) {
                return cmd_table(manifest_from_file(manifest_path));
            }
            man.opts = opts;
            return cmd_table(man);
        }
        if (vf->parsed()) return cmd_verify(only, density, as_json);
        return cmd_constants(format);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        std::cerr << error_kind(e) << ": " << e.what() << '\n';
        return 1;
    }
}
