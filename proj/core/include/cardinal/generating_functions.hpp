#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cardinal/power_series.hpp"

namespace cardinal {

// Registered generating functions. Symbolic expansions keep the parameter
// (rho or phi) as an indeterminate; supplying a rational rho/phi specializes
// the expansion, with pole values rejected.
enum class GfKind {
    stirling2,                 // (e^t - 1)^c, egf entries c! S2(n,c)
    array,                     // e^{t omega} (e^t - 1)^c
    apostol_bernoulli_numbers, // t / (rho e^t - 1)
    apostol_bernoulli_polys,   // t e^{t omega} / (rho e^t - 1)
    frobenius_numbers,         // (1 - phi) / (e^t - phi)
    frobenius_polys,           // (1 - phi) e^{t omega} / (e^t - phi)
    apostol_euler_numbers,     // 1 / (rho e^t + 1), entries E_n(rho)/2
    apostol_euler_polys,       // e^{t omega} / (rho e^t + 1)
    eulerian,                  // 1 / (1 - rho e^{t(1-rho)}), entries A_n(rho)/(1-rho)
    bernstein,                 // (omega t)^d e^{t(1-omega)}, entries d! B_d^n(omega)
    goldman,                   // ordinary series whose t^n coefficient is the degree-n segment
};

const char* gf_kind_name(GfKind k);
GfKind parse_gf_kind(const std::string& name);
std::vector<GfKind> all_gf_kinds();

struct GfParams {
    std::optional<long> c;        // stirling2, array
    std::optional<long> d;        // bernstein
    std::optional<long> p;        // goldman
    std::optional<Rational> rho;  // optional specialization
    std::optional<Rational> phi;  // optional specialization
};

using GfSeries = std::variant<PowerSeries<Rational>, PowerSeries<PolyQ>,
                              PowerSeries<RatFunc>, PowerSeries<BiPoly>>;

GfSeries gf_expand(GfKind kind, const GfParams& params, int order);
GfSeries gf_expand(const std::string& kind, const GfParams& params, int order);

// Typed symbolic expanders.
PowerSeries<Rational> gf_stirling2(long c, int order);
PowerSeries<PolyQ> gf_array(long c, int order);
PowerSeries<RatFunc> gf_apostol_bernoulli_numbers(int order);
PowerSeries<BiPoly> gf_apostol_bernoulli_polys(int order);
PowerSeries<RatFunc> gf_frobenius_numbers(int order);
PowerSeries<BiPoly> gf_frobenius_polys(int order);
PowerSeries<RatFunc> gf_apostol_euler_numbers(int order);
PowerSeries<BiPoly> gf_apostol_euler_polys(int order);
PowerSeries<RatFunc> gf_eulerian(int order);
PowerSeries<PolyQ> gf_bernstein(long d, int order);
PowerSeries<PolyQ> gf_goldman(long p, int order);

} // namespace cardinal
