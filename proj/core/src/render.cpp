#include "render.hpp"

namespace cardinal {

Json json_of(const Rational& q) { return Json(render(q)); }

Json json_of(const BigInt& n) { return Json(render(n)); }

Json json_of(const PolyQ& f) {
    Json a = Json::array();
    for (const Rational& c : f.coeffs()) a.push_back(render(c));
    return a;
}

Json json_of(const RatFunc& f) {
    Json o = Json::object();
    o["num"] = json_of(f.num());
    o["den"] = json_of(f.den());
    return o;
}

Json json_of(const BiPoly& f) {
    Json a = Json::array();
    for (const RatFunc& c : f.coeffs()) a.push_back(json_of(c));
    return a;
}

std::string csv_cell(const BigInt& n) { return render(n); }

std::string csv_cell(const Rational& q) { return render(q); }

std::string csv_cell(const PolyQ& f) {
    std::string s = "[";
    const auto& cs = f.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ";";
        s += render(cs[i]);
    }
    if (cs.empty()) s += "0";
    return s + "]";
}

std::string csv_cell(const RatFunc& f) { return csv_cell(f.num()) + "/" + csv_cell(f.den()); }

std::string csv_cell(const BiPoly& f) {
    std::string s = "[";
    const auto& cs = f.coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ";";
        s += csv_cell(cs[i]);
    }
    if (cs.empty()) s += "0";
    return s + "]";
}

namespace {

std::string var_suffix(Sym s) {
    return s == Sym::none ? std::string() : std::string(" in ") + sym_name(s);
}

} // namespace

std::string witness(const Rational& q) { return render(q); }

std::string witness(const PolyQ& f) { return csv_cell(f) + var_suffix(f.sym()); }

std::string witness(const RatFunc& f) { return csv_cell(f) + var_suffix(f.sym()); }

std::string witness(const BiPoly& f) { return csv_cell(f) + var_suffix(f.sym()); }

} // namespace cardinal
