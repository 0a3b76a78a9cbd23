#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "monolab/capture.hpp"
#include "monolab/domain.hpp"
#include "monolab/hard_family.hpp"
#include "monolab/rational.hpp"

namespace monolab {

enum class Verdict { Accept, Reject };

const char* to_cstr(Verdict v);
Verdict verdict_from_string(std::string_view s);

// Wraps an evaluator with query accounting. Every call counts, repeats
// included; the log is the transcript of (point, value) in query order.
template <class Point>
class QueryOracle {
public:
    using Eval = std::function<std::int64_t(const Point&)>;
    explicit QueryOracle(Eval eval) : eval_(std::move(eval)) {}

    std::int64_t query(const Point& p) {
        const std::int64_t v = eval_(p);
        log_.emplace_back(p, v);
        return v;
    }

    int query_count() const { return static_cast<int>(log_.size()); }
    const std::vector<std::pair<Point, std::int64_t>>& log() const { return log_; }

private:
    Eval eval_;
    std::vector<std::pair<Point, std::int64_t>> log_;
};

using BitOracle = QueryOracle<BitPoint>;
using GridOracle = QueryOracle<GridPoint>;

BitOracle make_oracle(const HardFunction& h);
GridOracle make_oracle(const LiftedFunction& f);

// Deterministic adaptive comparison-based distinguisher. An internal node at
// depth s queries its point and branches on the rank (0..s) of the answer
// among the s distinct values seen on the path; leaves carry verdicts.
class ComparisonTree {
public:
    struct Node {
        std::optional<BitPoint> point;   // internal nodes
        std::optional<Verdict> verdict;  // leaves
        std::vector<int> children;       // s+1 entries at depth s
        bool is_leaf() const { return verdict.has_value(); }
    };

    ComparisonTree(std::vector<Node> nodes, int root);
    static ComparisonTree single_leaf(Verdict v);

    const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    int root() const { return root_; }
    std::size_t node_count() const { return nodes_.size(); }
    int depth() const { return depth_; }
    int m() const { return m_; }  // 0 for a bare leaf

private:
    void validate();

    std::vector<Node> nodes_;
    int root_;
    int depth_ = 0;
    int m_ = 0;
};

struct Transcript {
    std::vector<std::pair<BitPoint, std::int64_t>> queries;
    std::vector<int> branches;
    Verdict verdict = Verdict::Accept;
};

// Walks the tree against the oracle. Throws ContractError if the oracle
// returns the same value for two distinct points.
Transcript run_tree(const ComparisonTree& tree, BitOracle& oracle);

// Queries a fixed list upfront; answers leaf_verdict when the observed value
// order realizes base_pattern, Reject otherwise.
struct NonAdaptiveDistinguisher {
    std::vector<BitPoint> points;
    std::vector<int> base_pattern;  // rank of the base value of points[i] among all
    Verdict leaf_verdict = Verdict::Accept;

    Verdict decide(const std::vector<std::int64_t>& values) const;
    Verdict run(BitOracle& oracle) const;
    int query_count() const { return static_cast<int>(points.size()); }
};

// Follows the unique root-to-leaf path consistent with the base total order;
// rejects anything that deviates from it. Never worse than the tree against
// the hard distribution.
NonAdaptiveDistinguisher derive_non_adaptive(const ComparisonTree& tree, const FamilyParams& p);

// Probability mass of support entries the distinguisher misclassifies.
Rational exact_error(const ComparisonTree& tree, const FamilyParams& p);
Rational exact_error(const NonAdaptiveDistinguisher& dist, const FamilyParams& p);

// Best verdict policy for a fixed query set: Reject off the base pattern; on
// it, accept iff the base mass outweighs the indistinguishable perturbed mass.
std::pair<NonAdaptiveDistinguisher, Rational> induced_optimal(const QuerySet& xs,
                                                              const FamilyParams& p);

struct BestDistinguisher {
    NonAdaptiveDistinguisher dist;
    Rational error;
};

// Exhaustive minimum of induced_optimal over all query sets of size <= budget.
// Capacity-guarded: the number of candidate sets must stay enumerable.
BestDistinguisher best_distinguisher_exhaustive(const FamilyParams& p, int budget);

// One-sided hypergrid tester: budget rounds of (dimension, point, power-of-two
// gap), rejecting on any pair ordered against the grid order. Rounds whose
// shifted point falls outside the grid are consumed without queries.
Verdict pair_tester(GridOracle& oracle, const DomainParams& dom, std::int64_t budget,
                    std::mt19937_64& rng);

ComparisonTree random_tree(int m, int max_depth, std::mt19937_64& rng, double leaf_prob = 0.25);

struct MonteCarloResult {
    int trials = 0;
    int wrong = 0;
    double estimate = 0.0;
    double ci_low = 0.0;   // 95% Wilson score interval
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

// Samples functions from the hard distribution and counts wrong verdicts.
// Each trial draws from its own stream, so results are schedule-independent;
// trials run on several threads.
MonteCarloResult monte_carlo_error(
    const FamilyParams& p, int trials, std::uint64_t seed,
    const std::function<Verdict(const HardFunction&, std::mt19937_64&)>& run_once, int threads = 0);

void wilson_interval(int wrong, int trials, double& lo, double& hi);

}  // namespace monolab
