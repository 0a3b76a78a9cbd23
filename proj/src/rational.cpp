#include "monolab/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace monolab {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t out = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

Rational pow2(int e) {
    if (e < -62 || e > 62) throw std::invalid_argument("pow2 exponent out of range");
    if (e >= 0) return Rational(std::int64_t{1} << e);
    return Rational(1, std::int64_t{1} << -e);
}

}  // namespace monolab
