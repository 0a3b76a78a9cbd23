#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monolab/errors.hpp"

namespace monolab {

// Largest packed point size; explicit value tables must stay materializable.
inline constexpr int kMaxPointBits = 24;

// The hypergrid [n]^d under the coordinate-wise partial order. n is a power
// of two, ell = log2(n), m = d*ell. n == 2 is the boolean hypercube.
struct DomainParams {
    int n = 0;
    int d = 0;
    int ell = 0;
    int m = 0;

    static DomainParams make(int n, int d);
    static DomainParams cube(int m) { return make(2, m); }

    bool is_cube() const { return n == 2; }
    std::uint32_t point_count() const { return std::uint32_t{1} << m; }

    friend bool operator==(const DomainParams&, const DomainParams&) = default;
};

// A point of {0,1}^m packed into a word. Bit index 1 is the least significant
// bit, so the packed word *is* val(x). Immutable value type.
class BitPoint {
public:
    BitPoint(std::uint32_t word, int m);

    // bits[0] = x_1 (least significant).
    static BitPoint from_bits(const std::vector<int>& bits);

    // Little-endian bitstring "x1x2...xm", e.g. "0110" -> x_2 = x_3 = 1.
    static BitPoint parse(std::string_view text);

    int size() const { return m_; }
    std::uint32_t word() const { return word_; }

    int bit(int i) const;  // i in [1, m]
    BitPoint with_bit_flipped(int i) const;
    std::vector<int> bits() const;
    std::string str() const;

    friend bool operator==(const BitPoint&, const BitPoint&) = default;
    friend auto operator<=>(const BitPoint&, const BitPoint&) = default;

private:
    std::uint32_t word_;
    int m_;
};

struct GridPoint {
    std::vector<std::int32_t> coords;  // each in [0, n)

    // Comma-separated decimal coordinates, e.g. "3,1".
    static GridPoint parse(std::string_view text);
    std::string str() const;
    int dimension() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// val(x) = sum_i 2^{i-1} x_i; a bijection onto [0, 2^m).
std::uint64_t val(const BitPoint& x);

// Concatenates the binary representations of the coordinates, y_1 in the
// least significant block. Bijection [n]^d -> {0,1}^{d*ell}.
BitPoint phi(const GridPoint& y, const DomainParams& p);
GridPoint phi_inverse(const BitPoint& x, const DomainParams& p);

bool grid_leq(const GridPoint& u, const GridPoint& v);
bool cube_leq(const BitPoint& x, const BitPoint& y);

}  // namespace monolab
