#include "monolab/capture.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace monolab {

namespace {

constexpr std::int64_t kMaxEnumeratedPairs = std::int64_t{1} << 20;

}  // namespace

QuerySet QuerySet::from_points(std::vector<BitPoint> points) {
    QuerySet qs;
    if (points.empty()) return qs;
    const int m = points.front().size();
    for (const BitPoint& pt : points) {
        if (pt.size() != m) throw std::invalid_argument("query set mixes point sizes");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    qs.points_ = std::move(points);
    return qs;
}

QuerySet QuerySet::parse_lines(std::istream& is) {
    std::vector<BitPoint> pts;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        pts.push_back(BitPoint::parse(line));
    }
    return from_points(std::move(pts));
}

void QuerySet::write_lines(std::ostream& os) const {
    for (const BitPoint& pt : points_) os << pt.str() << '\n';
}

int capture_coordinate(const BitPoint& x, const BitPoint& y) {
    if (x.size() != y.size()) throw std::invalid_argument("point size mismatch");
    const std::uint32_t diff = x.word() ^ y.word();
    if (diff == 0) throw std::invalid_argument("capture needs two distinct points");
    return std::bit_width(diff);
}

std::vector<int> captured_set(const QuerySet& ys) {
    std::vector<char> hit(ys.empty() ? 0 : static_cast<std::size_t>(ys.m()) + 1, 0);
    const auto& pts = ys.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            hit[static_cast<std::size_t>(capture_coordinate(pts[i], pts[j]))] = 1;
        }
    }
    std::vector<int> out;
    for (std::size_t c = 1; c < hit.size(); ++c) {
        if (hit[c]) out.push_back(static_cast<int>(c));
    }
    return out;
}

CaptureReport analyze(const QuerySet& xs, const FamilyParams& p) {
    if (!xs.empty() && xs.m() != p.m) throw std::invalid_argument("query set m does not match family m");
    std::map<std::int64_t, std::vector<BitPoint>> blocks;
    for (const BitPoint& pt : xs.points()) blocks[block_index(pt, p)].push_back(pt);

    CaptureReport report;
    report.params = p;
    std::int64_t captured_total = 0;
    for (auto& [k, pts] : blocks) {
        BlockCaptureStats stats;
        stats.k = k;
        stats.queries_in_block = static_cast<int>(pts.size());
        std::vector<int> captured = captured_set(QuerySet::from_points(pts));
        // same-block pairs only differ below m'+1, but clamp regardless
        captured.erase(std::remove_if(captured.begin(), captured.end(),
                                      [&](int c) { return c > p.m_prime; }),
                       captured.end());
        captured_total += static_cast<std::int64_t>(captured.size());
        stats.captured = std::move(captured);
        report.per_block.push_back(std::move(stats));
    }
    report.indistinguishable_count = static_cast<std::int64_t>(p.m_prime) * p.block_count - captured_total;
    report.error_lower_bound =
        std::min(p.perturbed_mass() * report.indistinguishable_count, Rational(1, 2));
    return report;
}

std::vector<std::pair<int, std::int64_t>> uncaptured_pairs(const CaptureReport& r) {
    const FamilyParams& p = r.params;
    if (p.perturbed_count() > kMaxEnumeratedPairs) {
        throw CapacityError("too many (j, k) pairs to enumerate");
    }
    std::map<std::int64_t, const BlockCaptureStats*> by_block;
    for (const auto& stats : r.per_block) by_block[stats.k] = &stats;
    std::vector<std::pair<int, std::int64_t>> out;
    for (int j = 1; j <= p.m_prime; ++j) {
        for (std::int64_t k = 1; k <= p.block_count; ++k) {
            const auto it = by_block.find(k);
            const bool captured =
                it != by_block.end() &&
                std::binary_search(it->second->captured.begin(), it->second->captured.end(), j);
            if (!captured) out.emplace_back(j, k);
        }
    }
    return out;
}

std::vector<std::pair<int, std::int64_t>> indistinguishable_exact(const QuerySet& xs,
                                                                  const FamilyParams& p) {
    if (!xs.empty() && xs.m() != p.m) throw std::invalid_argument("query set m does not match family m");
    if (p.perturbed_count() > kMaxEnumeratedPairs) {
        throw CapacityError("too many (j, k) pairs to enumerate");
    }
    const auto& pts = xs.points();  // sorted by val, so base order is the index order
    std::vector<std::pair<int, std::int64_t>> out;
    for (int j = 1; j <= p.m_prime; ++j) {
        for (std::int64_t k = 1; k <= p.block_count; ++k) {
            const HardFunction g = HardFunction::perturbed(p, j, k);
            std::vector<std::int64_t> values;
            values.reserve(pts.size());
            for (const BitPoint& pt : pts) values.push_back(evaluate(g, pt));
            bool same_order = true;
            for (std::size_t a = 0; a < values.size() && same_order; ++a) {
                for (std::size_t b = a + 1; b < values.size(); ++b) {
                    if (!(values[a] < values[b])) {
                        same_order = false;
                        break;
                    }
                }
            }
            if (same_order) out.emplace_back(j, k);
        }
    }
    return out;
}

QueryBoundValues query_lower_bound(int n, int d, int log_inv_eps) {
    if (n < 2 || !std::has_single_bit(static_cast<unsigned>(n))) {
        throw std::invalid_argument("side length n must be a power of two >= 2");
    }
    if (d < 1) throw std::invalid_argument("dimension d must be positive");
    const int ell = std::countr_zero(static_cast<unsigned>(n));
    const FamilyParams p = FamilyParams::make(d * ell, log_inv_eps);
    QueryBoundValues out;
    // dividing by 8 eps = multiplying by 2^{a-3}
    out.display_form = Rational(p.m - p.log_inv_eps) * pow2(p.log_inv_eps - 3);
    out.mprime_form = Rational(p.m_prime) * pow2(p.log_inv_eps - 3);
    return out;
}

}  // namespace monolab
