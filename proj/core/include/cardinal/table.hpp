#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cardinal {

// Families exposed by the table surface. Each row n carries the family's
// objects for that index, canonically rendered.
enum class Family {
    stirling2,
    array,
    eulerian,
    frobenius,
    apostol_bernoulli,
    apostol_euler,
    geometric,
    bspline,
};

const char* family_name(Family f);
Family parse_family(const std::string& name);
std::vector<Family> all_families();

// CSV with header "n,values" and one (ragged) row per n = 0..max_n. The p
// argument selects the Stirling column for `array` and the segment for
// `bspline`; other families reject it.
std::string family_table_csv(Family f, long max_n, std::optional<long> p);

// Same data as {"family", "max_n", "p"?, "rows": [{"n", "values"}...]}.
std::string family_table_json(Family f, long max_n, std::optional<long> p);

} // namespace cardinal
