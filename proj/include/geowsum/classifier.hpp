#pragma once

#include "geowsum/branch_sums.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geowsum {

enum class Verdict { Converges, Diverges, Inconclusive };

std::string to_string(Verdict v);

struct TrendSample {
    BranchIndex branch;
    Complex value;  // branch sum at this index
    Real distance;  // |value - a/(1-r)|
};

struct TrendReport {
    Verdict verdict;
    std::optional<Complex> limit;  // a/(1-r); present iff verdict == Converges
    std::vector<TrendSample> samples;
    std::string rationale;
};

// Default magnitude tiers 0, 1, 10, 10^3, 10^6; each tier t expands to the
// branch pair (t, -t-1), giving the schedule
// {0, -1, 1, -2, 10, -11, 1000, -1001, 1000000, -1000001}.
std::vector<BranchIndex> default_tier_schedule();

// Trend diagnosis. The statistic per tier is the worse (larger) distance
// |sum - a/(1-r)| of the tier's branch pair: for |r| < 1 it shrinks as the
// tier grows, for |r| > 1 it grows, strictly in both cases for real r.
// Converges needs a strict decrease across every tier step plus at least a
// halving overall; Diverges needs a strict increase plus at least a doubling
// overall; |r| within [0.95, 1.05] is never decided (Inconclusive).
TrendReport classify_series(const GeoSeries& series, const PrecisionContext& ctx);
TrendReport classify_series(const GeoSeries& series, const std::vector<BranchIndex>& tiers,
                            const PrecisionContext& ctx);

// Branch sum at one large index, documented as the extrapolated limit
// candidate. Requires |n_big| >= 1000.
Complex limit_estimate(const GeoSeries& series, BranchIndex n_big, const PrecisionContext& ctx);

}  // namespace geowsum
