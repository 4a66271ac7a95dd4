#include "twofold/rational.hpp"

#include "twofold/errors.hpp"

#include <cctype>

namespace twofold {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InvalidArgumentError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    auto slash = s.find('/');
    auto point = s.find('.');
    Rat value;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidArgumentError("malformed rational literal: " + std::string(text));
        Int d{std::string(den)};
        if (d == 0) throw InvalidArgumentError("zero denominator in: " + std::string(text));
        value = Rat(Int{std::string(num)}, d);
    } else if (point != std::string_view::npos) {
        std::string_view whole = s.substr(0, point);
        std::string_view frac = s.substr(point + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw InvalidArgumentError("malformed rational literal: " + std::string(text));
        Int w = whole.empty() ? Int{0} : Int{std::string(whole)};
        Int f = frac.empty() ? Int{0} : Int{std::string(frac)};
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rat(w * scale + f, scale);
    } else {
        if (!all_digits(s)) throw InvalidArgumentError("malformed rational literal: " + std::string(text));
        value = Rat(Int{std::string(s)});
    }
    return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_approx(const Rat& value, int digits) {
    Int num = numerator(value);
    Int den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;

    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // Round half away from zero at the last digit.
    Int scaled = (num * scale * 2 + den) / (den * 2);
    Int whole = scaled / scale;
    Int frac = scaled % scale;

    std::string out = whole.str();
    if (frac != 0) {
        std::string f = frac.str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        out += "." + f;
    }
    if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError();
    Rat sum = 0;
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

RatVec primitive_integer_direction(const RatVec& v) {
    Int lcm_den = 1;
    for (const Rat& r : v) lcm_den = lcm(lcm_den, denominator(r));
    Int gcd_num = 0;
    for (const Rat& r : v) gcd_num = gcd(gcd_num, Int(numerator(r) * (lcm_den / denominator(r))));
    if (gcd_num == 0) return v;  // zero vector
    RatVec out;
    out.reserve(v.size());
    for (const Rat& r : v) out.emplace_back(Rat(r * lcm_den / gcd_num));
    return out;
}

}  // namespace twofold
