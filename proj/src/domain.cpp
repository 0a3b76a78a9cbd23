#include "monolab/domain.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace monolab {

DomainParams DomainParams::make(int n, int d) {
    if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n))) {
        throw std::invalid_argument("side length n must be a power of two >= 2");
    }
    if (d < 1) throw std::invalid_argument("dimension d must be positive");
    const int ell = std::countr_zero(static_cast<unsigned>(n));
    const int m = d * ell;
    if (m > kMaxPointBits) {
        throw CapacityError("domain needs " + std::to_string(m) + " bits, supported max is " +
                            std::to_string(kMaxPointBits));
    }
    return DomainParams{n, d, ell, m};
}

BitPoint::BitPoint(std::uint32_t word, int m) : word_(word), m_(m) {
    if (m < 1 || m > kMaxPointBits) {
        throw std::invalid_argument("point size m must be in [1, " + std::to_string(kMaxPointBits) + "]");
    }
    if (m < 32 && (word >> m) != 0) {
        throw std::invalid_argument("word has bits above position m");
    }
}

BitPoint BitPoint::from_bits(const std::vector<int>& bits) {
    std::uint32_t word = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("bit entries must be 0 or 1");
        word |= static_cast<std::uint32_t>(bits[i]) << i;
    }
    return BitPoint(word, static_cast<int>(bits.size()));
}

BitPoint BitPoint::parse(std::string_view text) {
    std::uint32_t word = 0;
    if (text.empty()) throw std::invalid_argument("empty bitstring");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            word |= std::uint32_t{1} << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("bitstring may contain only '0'/'1': '" + std::string(text) + "'");
        }
    }
    return BitPoint(word, static_cast<int>(text.size()));
}

int BitPoint::bit(int i) const {
    if (i < 1 || i > m_) throw std::invalid_argument("bit index out of range");
    return static_cast<int>((word_ >> (i - 1)) & 1u);
}

BitPoint BitPoint::with_bit_flipped(int i) const {
    if (i < 1 || i > m_) throw std::invalid_argument("bit index out of range");
    return BitPoint(word_ ^ (std::uint32_t{1} << (i - 1)), m_);
}

std::vector<int> BitPoint::bits() const {
    std::vector<int> out(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>((word_ >> i) & 1u);
    return out;
}

std::string BitPoint::str() const {
    std::string out(static_cast<std::size_t>(m_), '0');
    for (int i = 0; i < m_; ++i) {
        if ((word_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

GridPoint GridPoint::parse(std::string_view text) {
    GridPoint y;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view piece = text.substr(pos, comma - pos);
        std::int32_t coord = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), coord);
        if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("bad grid coordinate: '" + std::string(piece) + "'");
        }
        y.coords.push_back(coord);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return y;
}

std::string GridPoint::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out;
}

std::uint64_t val(const BitPoint& x) {
    return x.word();
}

BitPoint phi(const GridPoint& y, const DomainParams& p) {
    if (y.dimension() != p.d) throw std::invalid_argument("grid point dimension mismatch");
    std::uint32_t word = 0;
    for (int t = 0; t < p.d; ++t) {
        const std::int32_t c = y.coords[static_cast<std::size_t>(t)];
        if (c < 0 || c >= p.n) {
            throw std::invalid_argument("coordinate " + std::to_string(c) + " outside [0, " +
                                        std::to_string(p.n) + ")");
        }
        word |= static_cast<std::uint32_t>(c) << (t * p.ell);
    }
    return BitPoint(word, p.m);
}

GridPoint phi_inverse(const BitPoint& x, const DomainParams& p) {
    if (x.size() != p.m) throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                                     " bits, domain needs " + std::to_string(p.m));
    GridPoint y;
    y.coords.resize(static_cast<std::size_t>(p.d));
    const std::uint32_t mask = (std::uint32_t{1} << p.ell) - 1;
    for (int t = 0; t < p.d; ++t) {
        y.coords[static_cast<std::size_t>(t)] = static_cast<std::int32_t>((x.word() >> (t * p.ell)) & mask);
    }
    return y;
}

bool grid_leq(const GridPoint& u, const GridPoint& v) {
    if (u.dimension() != v.dimension()) throw std::invalid_argument("grid point dimension mismatch");
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        if (u.coords[i] > v.coords[i]) return false;
    }
    return true;
}

bool cube_leq(const BitPoint& x, const BitPoint& y) {
    if (x.size() != y.size()) throw std::invalid_argument("point size mismatch");
    return (x.word() & ~y.word()) == 0;
}

}  // namespace monolab
