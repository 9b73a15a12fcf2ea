#include "cardinal/table.hpp"

#include <variant>

#include "cardinal/spline.hpp"
#include "render.hpp"

namespace cardinal {
namespace {

using Cell = std::variant<BigInt, Rational, PolyQ, RatFunc>;

std::vector<Cell> family_row(Family f, long n, const std::optional<long>& p) {
    std::vector<Cell> row;
    switch (f) {
        case Family::stirling2:
            for (long c = 0; c <= n; ++c) row.emplace_back(stirling2(n, c));
            break;
        case Family::array:
            row.emplace_back(array_poly(p.value_or(1), n));
            break;
        case Family::eulerian:
            for (const BigInt& a : eulerian_row(n).a) row.emplace_back(a);
            break;
        case Family::frobenius:
            row.emplace_back(frobenius_number(n));
            break;
        case Family::apostol_bernoulli:
            row.emplace_back(apostol_bernoulli_number(n));
            break;
        case Family::apostol_euler:
            row.emplace_back(apostol_euler_number(n));
            break;
        case Family::geometric:
            row.emplace_back(geometric_poly(n));
            break;
        case Family::bspline:
            if (p) {
                row.emplace_back(bspline_segment(n, *p).poly);
            } else {
                for (long q = 0; q <= n; ++q) row.emplace_back(bspline_segment(n, q).poly);
            }
            break;
    }
    return row;
}

void validate(Family f, long max_n, const std::optional<long>& p) {
    if (max_n < 0) throw UsageError("max-n must be >= 0");
    const bool takes_p = f == Family::array || f == Family::bspline;
    if (p && !takes_p)
        throw UsageError(std::string("--p is not meaningful for family '") + family_name(f) +
                         "' (only array and bspline take it)");
    if (p && f == Family::array && *p < 0) throw UsageError("array column must be >= 0");
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::stirling2: return "stirling2";
        case Family::array: return "array";
        case Family::eulerian: return "eulerian";
        case Family::frobenius: return "frobenius";
        case Family::apostol_bernoulli: return "apostol-bernoulli";
        case Family::apostol_euler: return "apostol-euler";
        case Family::geometric: return "geometric";
        case Family::bspline: return "bspline";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (Family f : all_families())
        if (name == family_name(f)) return f;
    std::string known;
    for (Family f : all_families()) {
        if (!known.empty()) known += ", ";
        known += family_name(f);
    }
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
}

std::vector<Family> all_families() {
    return {Family::stirling2,      Family::array,         Family::eulerian,
            Family::frobenius,      Family::apostol_bernoulli, Family::apostol_euler,
            Family::geometric,      Family::bspline};
}

std::string family_table_csv(Family f, long max_n, std::optional<long> p) {
    validate(f, max_n, p);
    std::string out = "n,values\n";
    for (long n = 0; n <= max_n; ++n) {
        out += std::to_string(n);
        for (const Cell& c : family_row(f, n, p)) {
            out += ",";
            out += std::visit([](const auto& v) { return csv_cell(v); }, c);
        }
        out += "\n";
    }
    return out;
}

std::string family_table_json(Family f, long max_n, std::optional<long> p) {
    validate(f, max_n, p);
    Json doc = Json::object();
    doc["family"] = family_name(f);
    doc["max_n"] = max_n;
    if (p) doc["p"] = *p;
    Json rows = Json::array();
    for (long n = 0; n <= max_n; ++n) {
        Json row = Json::object();
        row["n"] = n;
        Json values = Json::array();
        for (const Cell& c : family_row(f, n, p))
            values.push_back(std::visit([](const auto& v) { return json_of(v); }, c));
        row["values"] = values;
        rows.push_back(row);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

} // namespace cardinal
