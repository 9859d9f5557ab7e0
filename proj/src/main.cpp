// Command-line front end: evaluate branch-indexed sums at chosen precision,
// emit text/JSON/CSV, and run the golden-manifest reproduction harness.

#include "geowsum/branch_sums.hpp"
#include "geowsum/classifier.hpp"
#include "geowsum/format.hpp"
#include "geowsum/lambert_w.hpp"
#include "geowsum/manifest.hpp"
#include "geowsum/precision.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using geowsum::BranchIndex;
using geowsum::Complex;
using geowsum::PrecisionContext;
using geowsum::Real;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitParse = 4;

// Parses one item of a --branches list: either a single integer or an
// inclusive range "start..stop..step" (step optional, defaults toward stop).
void expand_branch_item(const std::string& item, std::vector<BranchIndex>& out) {
    auto parse_int = [&](const std::string& text) -> BranchIndex {
        size_t pos = 0;
        BranchIndex v = 0;
        try {
            v = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw geowsum::ParseError("invalid branch index: '" + item + "'");
        }
        if (pos != text.size()) {
            throw geowsum::ParseError("invalid branch index: '" + item + "'");
        }
        return v;
    };
    size_t dots = item.find("..");
    if (dots == std::string::npos) {
        out.push_back(parse_int(item));
        return;
    }
    std::string rest = item.substr(dots + 2);
    size_t dots2 = rest.find("..");
    BranchIndex start = parse_int(item.substr(0, dots));
    BranchIndex stop = 0;
    BranchIndex step = 0;
    if (dots2 == std::string::npos) {
        stop = parse_int(rest);
        step = stop >= start ? 1 : -1;
    } else {
        stop = parse_int(rest.substr(0, dots2));
        step = parse_int(rest.substr(dots2 + 2));
    }
    if (step == 0) throw geowsum::ParseError("branch range step must be nonzero: '" + item + "'");
    if ((step > 0 && stop < start) || (step < 0 && stop > start)) {
        throw geowsum::ParseError("branch range never reaches its stop: '" + item + "'");
    }
    for (BranchIndex v = start; step > 0 ? v <= stop : v >= stop; v += step) {
        out.push_back(v);
        if (out.size() > 2000000) {
            throw geowsum::ParseError("branch range too large: '" + item + "'");
        }
    }
}

std::vector<BranchIndex> expand_branches(const std::string& list) {
    std::vector<BranchIndex> out;
    std::string cur;
    std::istringstream is(list);
    while (std::getline(is, cur, ',')) {
        if (!cur.empty()) expand_branch_item(cur, out);
    }
    if (out.empty()) throw geowsum::ParseError("empty branch list");
    return out;
}

int run_w(const std::string& z_text, BranchIndex n, const PrecisionContext& ctx) {
    geowsum::ScopedWorkingPrecision guard(ctx);
    Complex z = geowsum::parse_complex(z_text, ctx);
    geowsum::WValue w = geowsum::lambert_w(z, n, ctx);
    std::cout << "W_" << n << "(" << geowsum::format_complex(z, 20) << ") = "
              << geowsum::format_complex(w.w, ctx.digits) << "\n";
    std::cout << "residual |W e^W - z| = " << geowsum::format_real(w.residual, 3) << "\n";
    return kExitOk;
}

int run_geosum(const std::string& a_text, const std::string& r_text,
               const std::vector<BranchIndex>& branches, bool as_json, bool as_csv,
               const PrecisionContext& ctx) {
    geowsum::ScopedWorkingPrecision guard(ctx);
    geowsum::GeoSeries series{
        geowsum::make_complex(ctx, geowsum::parse_real(a_text, ctx)),
        geowsum::make_complex(ctx, geowsum::parse_real(r_text, ctx))};
    std::vector<geowsum::BranchSum> rows;
    rows.reserve(branches.size());
    for (BranchIndex n : branches) rows.push_back(geowsum::geo_sum_branch(series, n, ctx));
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const geowsum::BranchSum& row : rows) {
            arr.push_back({{"branch", row.branch},
                           {"re", geowsum::format_real(row.value.re, ctx.digits)},
                           {"im", geowsum::format_real(row.value.im, ctx.digits)}});
        }
        std::cout << arr.dump(2) << "\n";
    } else if (as_csv) {
        std::cout << "branch,re,im\n";
        for (const geowsum::BranchSum& row : rows) {
            std::cout << row.branch << "," << geowsum::format_real(row.value.re, ctx.digits)
                      << "," << geowsum::format_real(row.value.im, ctx.digits) << "\n";
        }
    } else {
        for (const geowsum::BranchSum& row : rows) {
            std::cout << "n = " << row.branch << ": "
                      << geowsum::format_complex(row.value, ctx.digits) << "\n";
        }
    }
    return kExitOk;
}

int run_classify(const std::string& a_text, const std::string& r_text,
                 const PrecisionContext& ctx) {
    geowsum::ScopedWorkingPrecision guard(ctx);
    geowsum::GeoSeries series{
        geowsum::make_complex(ctx, geowsum::parse_real(a_text, ctx)),
        geowsum::make_complex(ctx, geowsum::parse_real(r_text, ctx))};
    geowsum::TrendReport report = geowsum::classify_series(series, ctx);
    if (report.verdict == geowsum::Verdict::Converges && report.limit) {
        std::cout << "Converges -> " << geowsum::format_complex(*report.limit, ctx.digits)
                  << "\n";
    } else {
        std::cout << geowsum::to_string(report.verdict) << "\n";
    }
    for (const geowsum::TrendSample& s : report.samples) {
        std::cout << "  n = " << s.branch << ": value = "
                  << geowsum::format_complex(s.value, 12)
                  << ", |value - a/(1-r)| = " << geowsum::format_real(s.distance, 4) << "\n";
    }
    std::cout << "rationale: " << report.rationale << "\n";
    return kExitOk;
}

int run_reproduce(const std::string& manifest_path, const std::string& report_path,
                  const PrecisionContext& ctx) {
    std::vector<geowsum::GoldenEntry> entries = geowsum::load_manifest(manifest_path);
    std::ostringstream report;
    size_t passed = 0;
    for (const geowsum::GoldenEntry& entry : entries) {
        std::string line;
        try {
            geowsum::EntryOutcome outcome = geowsum::check_entry(entry, ctx);
            if (outcome.pass) {
                ++passed;
                line = "PASS " + entry.id;
            } else {
                line = "FAIL " + entry.id + ": " + outcome.detail;
            }
        } catch (const geowsum::DomainError& e) {
            line = "FAIL " + entry.id + ": domain error: " + e.what();
        } catch (const geowsum::ConvergenceError& e) {
            line = "FAIL " + entry.id + ": convergence failure: " + e.what();
        }
        std::cout << line << "\n";
        report << line << "\n";
    }
    std::ostringstream summary;
    summary << "passed " << passed << "/" << entries.size();
    std::cout << summary.str() << "\n";
    report << summary.str() << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw geowsum::ParseError("cannot open report file: " + report_path);
        out << report.str();
    }
    return passed == entries.size() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"branch-indexed exact sums via the multi-branch Lambert W"};
    app.require_subcommand(1);

    long long prec = 80;
    auto add_prec = [&prec](CLI::App* sub) {
        sub->add_option("--prec", prec, "significant digits of working precision (>= 30)")
            ->envname("GEOWSUM_PREC");
    };

    CLI::App* cmd_w = app.add_subcommand("w", "evaluate the Lambert W function on one branch");
    std::string z_text;
    long long n_single = 0;
    cmd_w->add_option("--z", z_text, "argument (decimal, 'a+bi', or pi/e/log2/sqrt2)")
        ->required();
    cmd_w->add_option("--n", n_single, "branch index");
    add_prec(cmd_w);

    CLI::App* cmd_geosum =
        app.add_subcommand("geosum", "closed-form branch sum of a geometric series");
    std::string a_text = "1";
    std::string r_text;
    long long branch_single = 0;
    std::string branches_text;
    bool as_json = false;
    bool as_csv = false;
    cmd_geosum->add_option("--a", a_text, "first term");
    cmd_geosum->add_option("--r", r_text, "common ratio")->required();
    CLI::Option* opt_branch = cmd_geosum->add_option("--branch", branch_single, "branch index");
    CLI::Option* opt_branches = cmd_geosum->add_option(
        "--branches", branches_text, "comma list of indices; ranges as start..stop..step");
    opt_branches->excludes(opt_branch);
    CLI::Option* opt_json = cmd_geosum->add_flag("--json", as_json, "emit a JSON array");
    cmd_geosum->add_flag("--csv", as_csv, "emit CSV rows")->excludes(opt_json);
    add_prec(cmd_geosum);

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "trend diagnosis across magnitude tiers");
    std::string ca_text = "1";
    std::string cr_text;
    cmd_classify->add_option("--a", ca_text, "first term");
    cmd_classify->add_option("--r", cr_text, "common ratio")->required();
    add_prec(cmd_classify);

    CLI::App* cmd_reproduce =
        app.add_subcommand("reproduce", "check golden manifests digit-for-digit");
    std::string manifest_path;
    std::string report_path;
    cmd_reproduce->add_option("--manifest", manifest_path, "golden manifest file")->required();
    cmd_reproduce->add_option("--report", report_path, "also write the outcome lines here");
    add_prec(cmd_reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (prec < 30 || prec > 1000000) {
            throw geowsum::ParseError("--prec must lie in [30, 1000000]");
        }
        PrecisionContext ctx = geowsum::make_context(static_cast<unsigned>(prec));
        if (cmd_w->parsed()) return run_w(z_text, n_single, ctx);
        if (cmd_geosum->parsed()) {
            std::vector<BranchIndex> branches;
            if (opt_branches->count() > 0) {
                branches = expand_branches(branches_text);
            } else {
                branches.push_back(branch_single);
            }
            return run_geosum(a_text, r_text, branches, as_json, as_csv, ctx);
        }
        if (cmd_classify->parsed()) return run_classify(ca_text, cr_text, ctx);
        if (cmd_reproduce->parsed()) return run_reproduce(manifest_path, report_path, ctx);
    } catch (const geowsum::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const geowsum::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const geowsum::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
