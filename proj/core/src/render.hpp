#pragma once

// Internal canonical-rendering helpers shared by table, registry and cli.
// Not installed: the JSON dependency stays out of the public headers.

#include <json.hpp>

#include "cardinal/ratfunc.hpp"

namespace cardinal {

using Json = nlohmann::ordered_json;

// Rationals render as "a/b" strings (never floats), polynomials as coefficient
// arrays lowest-degree-first, rational functions as {num, den}.
Json json_of(const Rational& q);
Json json_of(const BigInt& n);
Json json_of(const PolyQ& f);
Json json_of(const RatFunc& f);
Json json_of(const BiPoly& f);

// CSV cells: scalars plain, polynomials "[c0;c1;...]", rational functions
// "[num]/[den]"; semicolons keep the comma free for the column separator.
std::string csv_cell(const BigInt& n);
std::string csv_cell(const Rational& q);
std::string csv_cell(const PolyQ& f);
std::string csv_cell(const RatFunc& f);
std::string csv_cell(const BiPoly& f);

// One-line human form used in failure witnesses: "[c0;c1;...]" etc., with the
// indeterminate named when the value has one.
std::string witness(const Rational& q);
std::string witness(const PolyQ& f);
std::string witness(const RatFunc& f);
std::string witness(const BiPoly& f);

} // namespace cardinal
