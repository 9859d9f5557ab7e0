#include "geowsum/format.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace geowsum {

namespace {

// Digits of |x| in the given rounding mode; exp10 per mpfr convention:
// value = 0.<digits> * 10^exp10.
DigitParts get_parts(const Real& x, unsigned digits, mpfr_rnd_t rnd) {
    DigitParts p;
    if (x.is_zero()) {
        p.zero = true;
        p.digits.assign(digits, '0');
        return p;
    }
    p.negative = x < 0;
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, x.backend().data(), rnd);
    std::string s(raw);
    mpfr_free_str(raw);
    if (!s.empty() && s[0] == '-') s.erase(0, 1);
    p.digits = s;
    p.exp10 = static_cast<long>(e);
    return p;
}

bool is_symbol_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

Real parse_symbol(const std::string& name, const PrecisionContext& ctx, bool& ok) {
    ok = true;
    if (name == "pi") return const_pi(ctx);
    if (name == "e") return const_e(ctx);
    if (name == "log2") return const_log2(ctx);
    if (name == "sqrt2") return sqrt(make_real(ctx, 2));
    ok = false;
    return make_real(ctx);
}

}  // namespace

std::string format_real(const Real& x, unsigned digits) {
    if (mpfr_nan_p(x.backend().data())) return "nan";
    if (mpfr_inf_p(x.backend().data())) return x < 0 ? "-inf" : "inf";
    if (x.is_zero()) return "0";
    DigitParts p = get_parts(x, digits, MPFR_RNDN);
    std::string out = p.negative ? "-" : "";
    long e = p.exp10;
    const std::string& d = p.digits;
    if (e >= -5 && e <= static_cast<long>(digits)) {
        if (e <= 0) {
            out += "0.";
            out.append(static_cast<size_t>(-e), '0');
            out += d;
        } else {
            out += d.substr(0, static_cast<size_t>(e));
            if (static_cast<size_t>(e) < d.size()) {
                out += '.';
                out += d.substr(static_cast<size_t>(e));
            }
        }
    } else {
        out += d.substr(0, 1);
        if (d.size() > 1) {
            out += '.';
            out += d.substr(1);
        }
        long se = e - 1;
        out += 'e';
        if (se >= 0) out += '+';
        out += std::to_string(se);
    }
    return out;
}

std::string format_complex(const Complex& z, unsigned digits) {
    std::string out = format_real(z.re, digits);
    if (z.im.is_zero() || z.im > 0) {
        out += " + " + format_real(z.im, digits) + "i";
    } else {
        out += " - " + format_real(-z.im, digits) + "i";
    }
    return out;
}

Real parse_real(const std::string& text, const PrecisionContext& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    std::string lower;
    for (char c : body) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!lower.empty() && std::all_of(lower.begin(), lower.end(), is_symbol_char)) {
        bool ok = false;
        Real v = parse_symbol(lower, ctx, ok);
        if (ok) return negative ? Real(-v) : v;
    }

    Real r = make_real(ctx);
    if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0) {
        throw ParseError("not a decimal number: '" + text + "'");
    }
    return r;
}

Complex parse_complex(const std::string& text, const PrecisionContext& ctx) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");

    if (s.back() != 'i' && s.back() != 'I') {
        return make_complex(ctx, parse_real(s, ctx));
    }

    std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that is neither leading nor an exponent sign.
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if (body[k] != '+' && body[k] != '-') continue;
        char prev = body[k - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = k;
        break;
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        re_part = "0";
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return make_complex(ctx, parse_real(re_part, ctx), parse_real(im_part, ctx));
}

DigitParts truncate_digits(const Real& x, unsigned digits) {
    return get_parts(x, digits, MPFR_RNDZ);
}

}  // namespace geowsum
