#pragma once

#include "geowsum/complex_hp.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace geowsum {

// One golden reference row:
//   id | operation | params... | expected_re | expected_im | match_digits | source
struct GoldenEntry {
    std::string id;
    std::string operation;
    std::vector<std::string> params;
    std::string expected_re;
    std::string expected_im;
    unsigned match_digits = 0;
    std::string source;
};

std::vector<GoldenEntry> parse_manifest(std::istream& in, const std::string& origin);
std::vector<GoldenEntry> load_manifest(const std::string& path);

struct EntryOutcome {
    bool pass = false;
    std::string computed_re;
    std::string computed_im;
    std::string detail;  // human-readable mismatch description (empty on pass)
};

// Dispatches the entry's operation name over the library. Unknown names and
// wrong arity raise ParseError.
Complex evaluate_operation(const std::string& operation, const std::vector<std::string>& params,
                           const PrecisionContext& ctx);

EntryOutcome check_entry(const GoldenEntry& entry, const PrecisionContext& ctx);

// True when the first `digits` significant decimal digits of `computed`,
// truncated toward zero, equal the expected decimal string's leading digits
// (same truncation, no rounding on either side). expected "0" instead
// accepts |computed| <= 10^(1-digits) * max(1, other_scale).
bool digits_match(const Real& computed, const std::string& expected, unsigned digits,
                  const Real& other_scale, const PrecisionContext& ctx);

}  // namespace geowsum
