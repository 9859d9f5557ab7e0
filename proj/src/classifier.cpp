#include "geowsum/classifier.hpp"

#include <cstdlib>

namespace geowsum {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Converges: return "Converges";
        case Verdict::Diverges: return "Diverges";
        default: return "Inconclusive";
    }
}

std::vector<BranchIndex> default_tier_schedule() {
    return {0, 1, 10, 1000, 1000000};
}

TrendReport classify_series(const GeoSeries& series, const PrecisionContext& ctx) {
    return classify_series(series, default_tier_schedule(), ctx);
}

TrendReport classify_series(const GeoSeries& series, const std::vector<BranchIndex>& tiers,
                            const PrecisionContext& ctx) {
    ScopedWorkingPrecision scope(ctx);
    if (tiers.empty()) {
        throw DomainError("classification needs a nonempty tier schedule");
    }
    TrendReport report;
    const Complex a = make_complex(ctx, to_working(ctx, series.a.re), to_working(ctx, series.a.im));
    const Complex r = make_complex(ctx, to_working(ctx, series.r.re), to_working(ctx, series.r.im));
    const Complex one = make_complex(ctx, 1);

    if (is_zero(a)) {
        report.verdict = Verdict::Converges;
        report.limit = make_complex(ctx);
        report.rationale = "every term is zero";
        return report;
    }
    if (is_zero(r)) {
        report.verdict = Verdict::Converges;
        report.limit = a;
        report.rationale = "ratio 0: the series degenerates to its first term";
        return report;
    }
    const Real mod_r = cabs(r);
    const Real band_lo = make_real(ctx, 95) / 100;
    const Real band_hi = make_real(ctx, 105) / 100;
    if (mod_r >= band_lo && mod_r <= band_hi) {
        report.verdict = Verdict::Inconclusive;
        report.rationale = "|r| lies in the indeterminate band [0.95, 1.05]; no verdict is forced there";
        return report;
    }

    const Complex candidate = a / (one - r);
    std::vector<Real> tier_distance;
    tier_distance.reserve(tiers.size());
    for (BranchIndex t : tiers) {
        const BranchIndex pair[2] = {t, -t - 1};
        Real worst = make_real(ctx);
        for (BranchIndex n : pair) {
            TrendSample s;
            s.branch = n;
            s.value = geo_sum_branch(series, n, ctx).value;
            s.distance = cabs(s.value - candidate);
            if (s.distance > worst) worst = s.distance;
            report.samples.push_back(s);
        }
        tier_distance.push_back(worst);
    }

    bool strictly_down = true;
    bool strictly_up = true;
    for (std::size_t i = 1; i < tier_distance.size(); ++i) {
        if (!(tier_distance[i] < tier_distance[i - 1])) strictly_down = false;
        if (!(tier_distance[i] > tier_distance[i - 1])) strictly_up = false;
    }
    const Real& first = tier_distance.front();
    const Real& last = tier_distance.back();

    if (strictly_down && last * 2 <= first) {
        report.verdict = Verdict::Converges;
        report.limit = candidate;
        report.rationale =
            "distance to a/(1-r) shrinks strictly across every tier and at least halves overall";
    } else if (strictly_up && last >= first * 2) {
        report.verdict = Verdict::Diverges;
        report.rationale =
            "distance to a/(1-r) grows strictly across every tier and at least doubles overall";
    } else {
        report.verdict = Verdict::Inconclusive;
        report.rationale = "distance trend across the tiers is not strictly monotone";
    }
    return report;
}

Complex limit_estimate(const GeoSeries& series, BranchIndex n_big, const PrecisionContext& ctx) {
    if (std::llabs(n_big) < 1000) {
        throw DomainError("limit estimates require |n| >= 1000");
    }
    return geo_sum_branch(series, n_big, ctx).value;
}

}  // namespace geowsum
