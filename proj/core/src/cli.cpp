#include "cardinal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "cardinal/generating_functions.hpp"
#include "cardinal/registry.hpp"
#include "cardinal/table.hpp"
#include "render.hpp"

namespace cardinal {
namespace {

std::string json_escape(const std::string& s) {
    std::string o;
    o.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '"': o += "\\\""; break;
            case '\\': o += "\\\\"; break;
            case '\n': o += "\\n"; break;
            case '\t': o += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    o += buf;
                } else {
                    o += ch;
                }
        }
    }
    return o;
}

long parse_long(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + " wants an integer, got '" + text + "'");
    }
}

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& items) {
    std::map<std::string, std::string> kv;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("parameter '" + item + "' is not of the form key=value");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

int do_table(std::ostream& out, const std::string& family, long max_n, std::optional<long> p,
             const std::string& format) {
    const Family fam = parse_family(family);
    if (format == "csv")
        out << family_table_csv(fam, max_n, p);
    else
        out << family_table_json(fam, max_n, p);
    return 0;
}

int do_eval(std::ostream& out, long degree, const std::string& x_text) {
    out << render(bspline_eval(degree, parse_rational(x_text))) << "\n";
    return 0;
}

int do_expand(std::ostream& out, const std::string& gf_name,
              const std::vector<std::string>& param_items, int order) {
    const GfKind kind = parse_gf_kind(gf_name);
    GfParams gp;
    for (const auto& [k, v] : parse_kv(param_items)) {
        if (k == "c")
            gp.c = parse_long(v, "parameter c");
        else if (k == "d")
            gp.d = parse_long(v, "parameter d");
        else if (k == "p")
            gp.p = parse_long(v, "parameter p");
        else if (k == "rho")
            gp.rho = parse_rational(v);
        else if (k == "phi")
            gp.phi = parse_rational(v);
        else
            throw UsageError("unknown generating function parameter '" + k + "'");
    }
    const GfSeries series = gf_expand(kind, gp, order);

    Json doc;
    doc["gf"] = gf_kind_name(kind);
    doc["convention"] =
        std::visit([](const auto& s) { return std::string(series_kind_name(s.kind())); }, series);
    doc["order"] = order;
    Json params = Json::object();
    if (gp.c) params["c"] = *gp.c;
    if (gp.d) params["d"] = *gp.d;
    if (gp.p) params["p"] = *gp.p;
    if (gp.rho) params["rho"] = render(*gp.rho);
    if (gp.phi) params["phi"] = render(*gp.phi);
    doc["params"] = params;
    doc["coefficients"] = std::visit(
        [](const auto& s) {
            Json arr = Json::array();
            for (int n = 0; n <= s.order(); ++n) arr.push_back(json_of(s.entry(n)));
            return arr;
        },
        series);
    out << doc.dump(2) << "\n";
    return 0;
}

// Floats cross the CLI as %.17g tokens (always valid JSON numbers), so the
// output bytes do not depend on the JSON library's shortest-round-trip choice.
int do_series(std::ostream& out, const std::string& identity,
              const std::vector<std::string>& param_items, int terms, std::optional<double> tol) {
    auto kv = parse_kv(param_items);
    auto take = [&kv, &identity](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw UsageError("series " + identity + " needs parameter '" + key + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    std::ostringstream body;
    bool converged = false;
    if (identity == "apostol-euler") {
        const long m = parse_long(take("m"), "parameter m");
        const Rational rho = parse_rational(take("rho"));
        if (!kv.empty()) throw UsageError("series apostol-euler takes parameters m, rho only");
        const ApostolEulerSeriesReport r =
            apostol_euler_series(m, rho, tol.value_or(1e-12), terms);
        converged = r.converged;
        body << "{\n"
             << "  \"identity\": \"apostol-euler\",\n"
             << "  \"params\": {\n"
             << "    \"m\": " << r.m << ",\n"
             << "    \"rho\": \"" << render(r.rho) << "\"\n"
             << "  },\n"
             << "  \"terms_used\": " << r.terms_used << ",\n"
             << "  \"value\": \"" << render(r.value) << "\",\n"
             << "  \"target\": \"" << render(r.target) << "\",\n"
             << "  \"abs_error\": " << render_double(r.abs_error) << ",\n"
             << "  \"tol\": " << render_double(r.tol) << ",\n"
             << "  \"converged\": " << (r.converged ? "true" : "false") << "\n"
             << "}\n";
    } else {
        const long p = parse_long(take("p"), "parameter p");
        const Rational omega = parse_rational(take("omega"));
        const Rational y = parse_rational(take("y"));
        if (!kv.empty())
            throw UsageError("series " + identity + " takes parameters p, omega, y only");
        const SeriesEvalReport r =
            identity == "sr" ? laplace_series_check(p, omega, y, terms, tol.value_or(1e-10))
                             : bernstein_series_check(p, omega, y, terms, tol.value_or(1e-9));
        converged = r.converged;
        body << "{\n"
             << "  \"identity\": \"" << r.identity << "\",\n"
             << "  \"params\": {\n"
             << "    \"p\": " << r.p << ",\n"
             << "    \"omega\": \"" << render(r.omega) << "\",\n"
             << "    \"y\": \"" << render(r.y) << "\"\n"
             << "  },\n"
             << "  \"terms_used\": " << r.terms_used << ",\n"
             << "  \"lhs\": " << render_double(r.lhs) << ",\n"
             << "  \"rhs\": " << render_double(r.rhs) << ",\n"
             << "  \"abs_error\": " << render_double(r.abs_error) << ",\n"
             << "  \"tol\": " << render_double(r.tol) << ",\n"
             << "  \"converged\": " << (r.converged ? "true" : "false") << "\n"
             << "}\n";
    }
    out << body.str();
    return converged ? 0 : 1;
}

void verify_text(std::ostream& out, const std::vector<Report>& reports) {
    long pass = 0, fail = 0, skipped = 0;
    for (const auto& r : reports) {
        switch (r.status) {
            case CaseStatus::pass: ++pass; break;
            case CaseStatus::fail: ++fail; break;
            case CaseStatus::skipped_domain: ++skipped; break;
        }
        out << "[" << case_status_name(r.status) << "] " << r.id << " (" << r.params << ")";
        if (r.status == CaseStatus::fail) out << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (r.abs_error) out << " abs_error=" << render_double(*r.abs_error);
        out << "\n";
    }
    out << reports.size() << " reports: " << pass << " pass, " << fail << " fail, " << skipped
        << " skipped-domain\n";
}

void verify_json(std::ostream& out, const std::vector<Report>& reports) {
    out << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
        const Report& r = reports[i];
        out << (i ? ",\n  " : "\n  ");
        out << "{\n    \"id\": \"" << json_escape(r.id) << "\",\n"
            << "    \"params\": \"" << json_escape(r.params) << "\",\n"
            << "    \"status\": \"" << case_status_name(r.status) << "\",\n";
        if (!r.lhs.empty() || !r.rhs.empty()) {
            out << "    \"lhs\": \"" << json_escape(r.lhs) << "\",\n"
                << "    \"rhs\": \"" << json_escape(r.rhs) << "\",\n";
        }
        if (r.abs_error) out << "    \"abs_error\": " << render_double(*r.abs_error) << ",\n";
        out << "    \"elapsed_ms\": " << r.elapsed_ms << "\n  }";
    }
    out << (reports.empty() ? "]" : "\n]") << "\n";
}

int do_verify(std::ostream& out, const std::string& filter, long max_n,
              const std::string& format) {
    const std::vector<Report> reports = run_suite(filter, max_n);
    if (format == "text")
        verify_text(out, reports);
    else
        verify_json(out, reports);
    return exit_code_for(reports);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact uniform B-spline segments and the special-number families around them"};
    app.name("cardinal");
    app.require_subcommand(1);

    auto* table_cmd = app.add_subcommand("table", "print one family as CSV or JSON rows");
    std::string family;
    long table_max_n = 0;
    long table_p = 0;
    std::string table_format = "csv";
    table_cmd->add_option("--family", family,
                          "stirling2|array|eulerian|frobenius|apostol-bernoulli|apostol-euler|"
                          "geometric|bspline")
        ->required();
    table_cmd->add_option("--max-n", table_max_n, "largest row index")->required();
    auto* table_p_opt = table_cmd->add_option("--p", table_p, "column parameter (array, bspline)");
    table_cmd->add_option("--format", table_format, "csv (default) or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a spline at a rational point");
    bool eval_spline = false;
    long eval_degree = 0;
    std::string eval_x;
    eval_cmd->add_flag("--spline", eval_spline, "uniform B-spline value")->required();
    eval_cmd->add_option("--degree", eval_degree, "spline degree")->required();
    eval_cmd->add_option("--x", eval_x, "evaluation point, a rational like 3/2")->required();

    auto* expand_cmd = app.add_subcommand("expand", "expand a registered generating function");
    std::string gf_name;
    std::vector<std::string> gf_param_items;
    int expand_order = 0;
    expand_cmd->add_option("--gf", gf_name, "generating function name")->required();
    expand_cmd->add_option("--param", gf_param_items, "key=value (c, d, p, rho, phi); repeatable");
    expand_cmd->add_option("--order", expand_order, "highest stored order")->required();

    auto* series_cmd = app.add_subcommand("series", "evaluate a truncated series check");
    std::string series_identity;
    std::vector<std::string> series_param_items;
    int series_terms = 80;
    double series_tol = 0;
    series_cmd->add_option("--identity", series_identity, "sr, bernstein or apostol-euler")
        ->required()
        ->check(CLI::IsMember({"sr", "bernstein", "apostol-euler"}));
    series_cmd->add_option("--params", series_param_items,
                           "key=value (p, omega, y or m, rho); repeatable");
    series_cmd->add_option("--terms", series_terms, "truncation length (default 80)");
    auto* series_tol_opt =
        series_cmd->add_option("--tol", series_tol, "tolerance (default per identity)");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
    std::string verify_filter = "*";
    long verify_max_n = 8;
    std::string verify_format = "text";
    verify_cmd->add_option("--filter", verify_filter, "glob over case ids (default *)");
    verify_cmd->add_option("--max-n", verify_max_n, "parameter range cap (default 8)");
    verify_cmd->add_option("--report", verify_format, "text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (table_cmd->parsed())
            return do_table(out, family, table_max_n,
                            table_p_opt->count() ? std::optional<long>(table_p) : std::nullopt,
                            table_format);
        if (eval_cmd->parsed()) return do_eval(out, eval_degree, eval_x);
        if (expand_cmd->parsed()) return do_expand(out, gf_name, gf_param_items, expand_order);
        if (series_cmd->parsed())
            return do_series(out, series_identity, series_param_items, series_terms,
                             series_tol_opt->count() ? std::optional<double>(series_tol)
                                                     : std::nullopt);
        if (verify_cmd->parsed()) return do_verify(out, verify_filter, verify_max_n, verify_format);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: require_subcommand guarantees a dispatch
}

} // namespace cardinal
