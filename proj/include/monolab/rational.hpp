#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace monolab {

// Exact arithmetic for masses, distances, and error bounds. All quantities in
// this library stay far below the int64 range at desk scale.
using Rational = boost::rational<std::int64_t>;

// Renders in lowest terms as "p/q", e.g. "0/1", "1/4", "97/1".
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

// 2^e for e in [-62, 62].
Rational pow2(int e);

}  // namespace monolab
