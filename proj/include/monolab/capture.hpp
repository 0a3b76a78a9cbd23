#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "monolab/domain.hpp"
#include "monolab/hard_family.hpp"
#include "monolab/rational.hpp"

namespace monolab {

// Deduplicated query points sharing one m, sorted by val.
class QuerySet {
public:
    QuerySet() = default;
    static QuerySet from_points(std::vector<BitPoint> points);

    // Newline-separated bitstrings; blank lines ignored.
    static QuerySet parse_lines(std::istream& is);
    void write_lines(std::ostream& os) const;

    const std::vector<BitPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    int m() const { return points_.empty() ? 0 : points_.front().size(); }

private:
    std::vector<BitPoint> points_;
};

// The largest index at which x and y differ. Requires x != y.
int capture_coordinate(const BitPoint& x, const BitPoint& y);

// Union of capture_coordinate over all pairs; sorted, empty when |Y| <= 1.
std::vector<int> captured_set(const QuerySet& ys);

struct BlockCaptureStats {
    std::int64_t k = 0;
    int queries_in_block = 0;
    std::vector<int> captured;  // subset of [1, m'], sorted
};

struct CaptureReport {
    FamilyParams params;
    std::vector<BlockCaptureStats> per_block;  // occupied blocks only, ascending k
    std::int64_t indistinguishable_count = 0;  // sum over all blocks of m' - |captured|
    Rational error_lower_bound;                // min(eps/m' * count, 1/2)
};

// Partitions X by block, captures per block (pairs spanning two blocks count
// for neither), and counts the (j, k) a comparison-based distinguisher cannot
// tell from the base function.
CaptureReport analyze(const QuerySet& xs, const FamilyParams& p);

// The (j, k) pairs analyze leaves uncaptured, lexicographic.
std::vector<std::pair<int, std::int64_t>> uncaptured_pairs(const CaptureReport& r);

// Definitional check, independent of capture counting: the (j, k) whose
// g_{j,k} orders X exactly as the base function does.
std::vector<std::pair<int, std::int64_t>> indistinguishable_exact(const QuerySet& xs,
                                                                  const FamilyParams& p);

struct QueryBoundValues {
    Rational display_form;  // (d log n - log(1/eps)) / (8 eps)
    Rational mprime_form;   // m' / (8 eps); exceeds display_form by 1/(8 eps)
};
QueryBoundValues query_lower_bound(int n, int d, int log_inv_eps);

}  // namespace monolab
