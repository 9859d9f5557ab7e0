#include "geowsum/manifest.hpp"

#include "geowsum/branch_sums.hpp"
#include "geowsum/format.hpp"
#include "geowsum/zeta_eta.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace geowsum {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

[[noreturn]] void fail(const std::string& origin, size_t lineno, const std::string& why) {
    std::ostringstream os;
    os << origin << ":" << lineno << ": " << why;
    throw ParseError(os.str());
}

long long parse_branch_index(const std::string& text, const std::string& what) {
    std::string s = trim(text);
    size_t pos = 0;
    long long n = 0;
    try {
        n = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + ": '" + text + "'");
    }
    if (pos != s.size()) throw ParseError("invalid " + what + ": '" + text + "'");
    return n;
}

unsigned long parse_unsigned(const std::string& text, const std::string& what) {
    long long n = parse_branch_index(text, what);
    if (n <= 0) throw ParseError(what + " must be positive, got '" + text + "'");
    return static_cast<unsigned long>(n);
}

// Textual decomposition of a decimal literal (optional sign, optional
// point, optional e-exponent) into sign/digits/exp10 with the same
// convention as truncate_digits: value = 0.<digits> * 10^exp10. Trailing
// zeros are kept -- they are printed digits and count toward the prefix.
DigitParts decimal_string_parts(const std::string& text) {
    std::string s = trim(text);
    DigitParts p;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        p.negative = s[i] == '-';
        ++i;
    }
    std::string int_part;
    std::string frac_part;
    bool saw_digit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        int_part += s[i];
        saw_digit = true;
        ++i;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            frac_part += s[i];
            saw_digit = true;
            ++i;
        }
    }
    long exp = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::string tail = s.substr(i + 1);
        exp = static_cast<long>(parse_branch_index(tail, "exponent"));
        i = s.size();
    }
    if (!saw_digit || i != s.size()) {
        throw ParseError("invalid decimal literal: '" + text + "'");
    }
    std::string all = int_part + frac_part;
    long exp10 = static_cast<long>(int_part.size()) + exp;
    size_t first = all.find_first_not_of('0');
    if (first == std::string::npos) {
        p.zero = true;
        p.negative = false;
        p.digits = "0";
        return p;
    }
    exp10 -= static_cast<long>(first);
    p.digits = all.substr(first);
    p.exp10 = exp10;
    return p;
}

Real parse_param_real(const std::string& text, const PrecisionContext& ctx,
                      const std::string& what) {
    try {
        return parse_real(text, ctx);
    } catch (const ParseError&) {
        throw ParseError("invalid " + what + ": '" + text + "'");
    }
}

void require_arity(const std::string& operation, const std::vector<std::string>& params,
                   size_t want) {
    if (params.size() != want) {
        std::ostringstream os;
        os << "operation '" << operation << "' takes " << want << " parameter(s), got "
           << params.size();
        throw ParseError(os.str());
    }
}

}  // namespace

std::vector<GoldenEntry> parse_manifest(std::istream& in, const std::string& origin) {
    std::vector<GoldenEntry> entries;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> f = split_fields(line);
        if (f.size() < 7) {
            fail(origin, lineno, "expected at least 7 '|'-separated fields, got " +
                                     std::to_string(f.size()));
        }
        GoldenEntry e;
        e.id = f[0];
        e.operation = f[1];
        for (size_t i = 2; i + 4 < f.size(); ++i) e.params.push_back(f[i]);
        e.expected_re = f[f.size() - 4];
        e.expected_im = f[f.size() - 3];
        e.source = f[f.size() - 1];
        if (e.id.empty()) fail(origin, lineno, "empty id field");
        if (e.operation.empty()) fail(origin, lineno, "empty operation field");
        if (e.expected_re.empty() || e.expected_im.empty()) {
            fail(origin, lineno, "empty expected-value field");
        }
        if (e.source.empty()) fail(origin, lineno, "empty source field");
        try {
            e.match_digits = static_cast<unsigned>(
                parse_unsigned(f[f.size() - 2], "match_digits"));
        } catch (const ParseError& ex) {
            fail(origin, lineno, ex.what());
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<GoldenEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open manifest: " + path);
    return parse_manifest(in, path);
}

Complex evaluate_operation(const std::string& operation, const std::vector<std::string>& params,
                           const PrecisionContext& ctx) {
    if (operation == "geo_sum") {
        require_arity(operation, params, 3);
        GeoSeries series{make_complex(ctx, parse_param_real(params[0], ctx, "first term")),
                         make_complex(ctx, parse_param_real(params[1], ctx, "ratio"))};
        BranchIndex n = parse_branch_index(params[2], "branch index");
        return geo_sum_branch(series, n, ctx).value;
    }
    if (operation == "combined_phi") {
        require_arity(operation, params, 1);
        return combined_phi_series(parse_branch_index(params[0], "branch index"), ctx);
    }
    if (operation == "harmonic") {
        require_arity(operation, params, 1);
        return harmonic_branch(parse_branch_index(params[0], "branch index"), ctx);
    }
    if (operation == "harmonic_companion") {
        require_arity(operation, params, 1);
        return harmonic_reciprocal_sum(parse_branch_index(params[0], "branch index"), 1, ctx)
            .companion;
    }
    if (operation == "euler_error") {
        require_arity(operation, params, 3);
        unsigned long p = parse_unsigned(params[0], "prime");
        long long s = parse_branch_index(params[1], "exponent");
        Complex sc = make_complex(ctx, s);
        return euler_error_term(p, sc, parse_branch_index(params[2], "branch index"), ctx);
    }
    if (operation == "zeta_ratio") {
        require_arity(operation, params, 2);
        Complex s = make_complex(ctx, parse_param_real(params[0], ctx, "s (real part)"),
                                 parse_param_real(params[1], ctx, "s (imaginary part)"));
        return zeta_ratio(s, ctx);
    }
    if (operation == "zeta_ratio_root") {
        require_arity(operation, params, 2);
        Complex s = make_complex(ctx, parse_param_real(params[0], ctx, "s (real part)"),
                                 parse_param_real(params[1], ctx, "s (imaginary part)"));
        return zeta_ratio_root(s, ctx);
    }
    throw ParseError("unknown operation: '" + operation + "'");
}

bool digits_match(const Real& computed, const std::string& expected, unsigned digits,
                  const Real& other_scale, const PrecisionContext& ctx) {
    DigitParts want = decimal_string_parts(expected);
    if (want.zero) {
        // A literal zero asserts the component vanishes at this accuracy,
        // scaled by the magnitude of the partner component.
        std::string bound = "1e" + std::to_string(1 - static_cast<long>(digits));
        Real thresh = make_real(ctx, bound.c_str());
        Real scale = other_scale > 1 ? to_working(ctx, other_scale) : make_real(ctx, 1);
        return abs(computed) <= thresh * scale;
    }
    if (want.digits.size() < digits) {
        throw ParseError("expected value '" + expected + "' has only " +
                         std::to_string(want.digits.size()) + " significant digits; " +
                         std::to_string(digits) + " requested");
    }
    DigitParts got = truncate_digits(computed, digits);
    if (got.zero) return false;
    return got.negative == want.negative && got.exp10 == want.exp10 &&
           want.digits.compare(0, digits, got.digits) == 0;
}

EntryOutcome check_entry(const GoldenEntry& entry, const PrecisionContext& ctx) {
    ScopedWorkingPrecision guard(ctx);
    EntryOutcome out;
    Complex z = evaluate_operation(entry.operation, entry.params, ctx);
    out.computed_re = format_real(z.re, entry.match_digits + 2);
    out.computed_im = format_real(z.im, entry.match_digits + 2);
    bool re_ok = digits_match(z.re, entry.expected_re, entry.match_digits, abs(z.im), ctx);
    bool im_ok = digits_match(z.im, entry.expected_im, entry.match_digits, abs(z.re), ctx);
    out.pass = re_ok && im_ok;
    if (!out.pass) {
        std::ostringstream os;
        if (!re_ok) {
            os << "real part: computed " << out.computed_re << ", expected "
               << entry.expected_re;
        }
        if (!im_ok) {
            if (!re_ok) os << "; ";
            os << "imaginary part: computed " << out.computed_im << ", expected "
               << entry.expected_im;
        }
        os << " (first " << entry.match_digits << " digits)";
        out.detail = os.str();
    }
    return out;
}

}  // namespace geowsum
