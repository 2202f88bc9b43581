#include "cacd/rational.hpp"

#include <charconv>
#include <cstdlib>

#include "cacd/errors.hpp"

namespace cacd {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("invalid integer literal: '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw InputError("empty rational literal");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t num = parse_int(text.substr(0, slash));
        std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        return Rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 15)
            throw InputError("invalid decimal literal: '" + std::string(text) + "'");
        bool negative = !head.empty() && head.front() == '-';
        std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t part = parse_int(frac);
        if (part < 0) throw InputError("invalid decimal literal: '" + std::string(text) + "'");
        std::int64_t num = std::abs(whole) * den + part;
        return Rat(negative || whole < 0 ? -num : num, den);
    }
    return Rat(parse_int(text));
}

std::string rational_string(const Rat& value) {
    std::string out = std::to_string(value.numerator());
    if (value.denominator() != 1) {
        out += '/';
        out += std::to_string(value.denominator());
    }
    return out;
}

double rational_double(const Rat& value) {
    return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

Rat mod_positive(const Rat& x, const Rat& modulus) {
    if (modulus <= Rat(0)) throw PreconditionError("modulus must be positive");
    Rat r = x;
    while (r < Rat(0)) r += modulus;
    while (r >= modulus) r -= modulus;
    return r;
}

}  // namespace cacd
