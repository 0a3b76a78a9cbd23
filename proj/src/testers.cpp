#include "monolab/testers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "monolab/rng_util.hpp"

namespace monolab {

namespace {

constexpr std::uint64_t kMaxSearchSets = 4'000'000;

std::vector<int> ranks_of(const std::vector<std::uint64_t>& vals) {
    std::vector<int> ranks(vals.size(), 0);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (vals[j] < vals[i]) ++ranks[i];
        }
    }
    return ranks;
}

}  // namespace

const char* to_cstr(Verdict v) {
    return v == Verdict::Accept ? "accept" : "reject";
}

Verdict verdict_from_string(std::string_view s) {
    if (s == "accept") return Verdict::Accept;
    if (s == "reject") return Verdict::Reject;
    throw std::invalid_argument("verdict must be 'accept' or 'reject'");
}

BitOracle make_oracle(const HardFunction& h) {
    return BitOracle([h](const BitPoint& x) { return evaluate(h, x); });
}

GridOracle make_oracle(const LiftedFunction& f) {
    return GridOracle([f](const GridPoint& y) { return f(y); });
}

ComparisonTree::ComparisonTree(std::vector<Node> nodes, int root) : nodes_(std::move(nodes)), root_(root) {
    validate();
}

ComparisonTree ComparisonTree::single_leaf(Verdict v) {
    Node leaf;
    leaf.verdict = v;
    return ComparisonTree({leaf}, 0);
}

void ComparisonTree::validate() {
    if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size()) {
        throw std::invalid_argument("tree root index out of range");
    }
    std::vector<char> visited(nodes_.size(), 0);
    std::vector<std::uint32_t> path;
    depth_ = 0;
    m_ = 0;

    // iterative DFS carrying the path depth; recursion depth stays tiny anyway
    const std::function<void(int, int)> walk = [&](int id, int depth) {
        if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
            throw std::invalid_argument("tree child index out of range");
        }
        if (visited[static_cast<std::size_t>(id)]) {
            throw std::invalid_argument("tree nodes must not be shared");
        }
        visited[static_cast<std::size_t>(id)] = 1;
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        if (node.is_leaf()) {
            if (node.point.has_value() || !node.children.empty()) {
                throw std::invalid_argument("leaf carries a query or children");
            }
            depth_ = std::max(depth_, depth);
            return;
        }
        if (!node.point.has_value()) throw std::invalid_argument("internal node missing its query point");
        if (node.children.size() != static_cast<std::size_t>(depth) + 1) {
            throw std::invalid_argument("node at depth " + std::to_string(depth) + " must have " +
                                        std::to_string(depth + 1) + " children");
        }
        if (m_ == 0) m_ = node.point->size();
        if (node.point->size() != m_) throw std::invalid_argument("tree mixes point sizes");
        const std::uint32_t w = node.point->word();
        if (std::find(path.begin(), path.end(), w) != path.end()) {
            throw std::invalid_argument("point repeats on a root-to-leaf path");
        }
        path.push_back(w);
        for (int child : node.children) walk(child, depth + 1);
        path.pop_back();
    };
    walk(root_, 0);
}

Transcript run_tree(const ComparisonTree& tree, BitOracle& oracle) {
    Transcript t;
    std::vector<std::int64_t> sorted_vals;
    int cur = tree.root();
    for (;;) {
        const ComparisonTree::Node& node = tree.node(cur);
        if (node.is_leaf()) {
            t.verdict = *node.verdict;
            return t;
        }
        const std::int64_t v = oracle.query(*node.point);
        t.queries.emplace_back(*node.point, v);
        const auto it = std::lower_bound(sorted_vals.begin(), sorted_vals.end(), v);
        if (it != sorted_vals.end() && *it == v) {
            throw ContractError("oracle returned the same value for two distinct points");
        }
        const int rank = static_cast<int>(it - sorted_vals.begin());
        sorted_vals.insert(it, v);
        t.branches.push_back(rank);
        cur = node.children[static_cast<std::size_t>(rank)];
    }
}

Verdict NonAdaptiveDistinguisher::decide(const std::vector<std::int64_t>& values) const {
    if (values.size() != points.size()) throw std::invalid_argument("value count does not match query count");
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] == values[j]) {
                throw ContractError("oracle returned the same value for two distinct points");
            }
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        int rank = 0;
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j] < values[i]) ++rank;
        }
        if (rank != base_pattern[i]) return Verdict::Reject;
    }
    return leaf_verdict;
}

Verdict NonAdaptiveDistinguisher::run(BitOracle& oracle) const {
    std::vector<std::int64_t> values;
    values.reserve(points.size());
    for (const BitPoint& pt : points) values.push_back(oracle.query(pt));
    return decide(values);
}

NonAdaptiveDistinguisher derive_non_adaptive(const ComparisonTree& tree, const FamilyParams& p) {
    if (tree.m() != 0 && tree.m() != p.m) throw std::invalid_argument("tree points do not match family m");
    NonAdaptiveDistinguisher d;
    std::vector<std::uint64_t> vals;
    int cur = tree.root();
    for (;;) {
        const ComparisonTree::Node& node = tree.node(cur);
        if (node.is_leaf()) {
            d.leaf_verdict = *node.verdict;
            break;
        }
        const std::uint64_t v = val(*node.point);
        int rank = 0;
        for (std::uint64_t seen : vals) {
            if (seen < v) ++rank;
        }
        d.points.push_back(*node.point);
        vals.push_back(v);
        cur = node.children[static_cast<std::size_t>(rank)];
    }
    d.base_pattern = ranks_of(vals);
    return d;
}

namespace {

bool wrong_verdict(const HardFunction& h, Verdict v) {
    return h.is_base() ? v == Verdict::Reject : v == Verdict::Accept;
}

}  // namespace

Rational exact_error(const ComparisonTree& tree, const FamilyParams& p) {
    if (tree.m() != 0 && tree.m() != p.m) throw std::invalid_argument("tree points do not match family m");
    Rational err(0);
    for (const auto& [h, mass] : support(p).entries) {
        BitOracle oracle = make_oracle(h);
        if (wrong_verdict(h, run_tree(tree, oracle).verdict)) err += mass;
    }
    return err;
}

Rational exact_error(const NonAdaptiveDistinguisher& dist, const FamilyParams& p) {
    if (!dist.points.empty() && dist.points.front().size() != p.m) {
        throw std::invalid_argument("distinguisher points do not match family m");
    }
    Rational err(0);
    for (const auto& [h, mass] : support(p).entries) {
        BitOracle oracle = make_oracle(h);
        if (wrong_verdict(h, dist.run(oracle))) err += mass;
    }
    return err;
}

std::pair<NonAdaptiveDistinguisher, Rational> induced_optimal(const QuerySet& xs, const FamilyParams& p) {
    const auto indist = indistinguishable_exact(xs, p);
    const Rational accept_error = p.perturbed_mass() * static_cast<std::int64_t>(indist.size());
    const Rational reject_error(1, 2);

    NonAdaptiveDistinguisher d;
    d.points = xs.points();
    d.base_pattern.resize(d.points.size());
    // points are sorted by val, so the base pattern is the identity
    for (std::size_t i = 0; i < d.points.size(); ++i) d.base_pattern[i] = static_cast<int>(i);
    d.leaf_verdict = accept_error <= reject_error ? Verdict::Accept : Verdict::Reject;
    return {d, std::min(accept_error, reject_error)};
}

BestDistinguisher best_distinguisher_exhaustive(const FamilyParams& p, int budget) {
    if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
    if (p.m > kMaxPointBits) throw CapacityError("family too wide for exhaustive search");
    const std::uint64_t n = std::uint64_t{1} << p.m;

    long double sets = 0, binom = 1;
    for (int s = 0; s <= budget && static_cast<std::uint64_t>(s) <= n; ++s) {
        sets += binom;
        binom = binom * static_cast<long double>(n - static_cast<std::uint64_t>(s)) / (s + 1);
        if (sets > static_cast<long double>(kMaxSearchSets)) {
            throw CapacityError("exhaustive search over ~" + std::to_string(static_cast<double>(sets)) +
                                " query sets exceeds desk scale");
        }
    }

    BestDistinguisher best{NonAdaptiveDistinguisher{}, Rational(1)};
    bool first = true;
    for (int size = 0; size <= budget && static_cast<std::uint64_t>(size) <= n; ++size) {
        std::vector<std::uint32_t> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
        for (;;) {
            std::vector<BitPoint> pts;
            pts.reserve(idx.size());
            for (std::uint32_t w : idx) pts.emplace_back(w, p.m);
            auto [dist, err] = induced_optimal(QuerySet::from_points(std::move(pts)), p);
            if (first || err < best.error) {
                best = {std::move(dist), err};
                first = false;
                if (best.error == Rational(0)) return best;
            }
            // next lexicographic combination
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 static_cast<std::uint32_t>(n) - static_cast<std::uint32_t>(size - i)) {
                --i;
            }
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < size; ++t) {
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
    }
    return best;
}

Verdict pair_tester(GridOracle& oracle, const DomainParams& dom, std::int64_t budget,
                    std::mt19937_64& rng) {
    if (budget < 1) throw std::invalid_argument("pair tester budget must be >= 1");
    GridPoint y;
    y.coords.resize(static_cast<std::size_t>(dom.d));
    for (std::int64_t round = 0; round < budget; ++round) {
        const int dim = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(dom.d)));
        for (int t = 0; t < dom.d; ++t) {
            y.coords[static_cast<std::size_t>(t)] =
                static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(dom.n)));
        }
        const std::int32_t gap =
            std::int32_t{1} << static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(dom.ell)));
        if (y.coords[static_cast<std::size_t>(dim)] + gap >= dom.n) continue;
        GridPoint upper = y;
        upper.coords[static_cast<std::size_t>(dim)] += gap;
        if (oracle.query(y) > oracle.query(upper)) return Verdict::Reject;
    }
    return Verdict::Accept;
}

ComparisonTree random_tree(int m, int max_depth, std::mt19937_64& rng, double leaf_prob) {
    if (m < 1 || m > kMaxPointBits) throw std::invalid_argument("tree point size out of range");
    if (max_depth < 0) throw std::invalid_argument("max depth must be nonnegative");
    if (max_depth == 0) {
        return ComparisonTree::single_leaf(uniform_below(rng, 2) ? Verdict::Reject : Verdict::Accept);
    }
    const std::uint64_t domain = std::uint64_t{1} << m;
    const std::uint64_t leaf_threshold =
        static_cast<std::uint64_t>(std::clamp(leaf_prob, 0.0, 1.0) * 1048576.0);

    std::vector<ComparisonTree::Node> nodes;
    std::vector<std::uint32_t> used;  // sorted path points

    const std::function<int(int)> build = [&](int depth) -> int {
        const bool must_leaf = depth >= max_depth || static_cast<std::uint64_t>(depth) >= domain;
        if (must_leaf || (depth > 0 && uniform_below(rng, 1048576) < leaf_threshold)) {
            ComparisonTree::Node leaf;
            leaf.verdict = uniform_below(rng, 2) ? Verdict::Reject : Verdict::Accept;
            nodes.push_back(std::move(leaf));
            return static_cast<int>(nodes.size()) - 1;
        }
        // the r-th word not already on the path
        std::uint32_t word = static_cast<std::uint32_t>(uniform_below(rng, domain - used.size()));
        for (std::uint32_t u : used) {
            if (u <= word) ++word;
        }
        const auto pos = std::lower_bound(used.begin(), used.end(), word);
        used.insert(pos, word);
        std::vector<int> children;
        children.reserve(static_cast<std::size_t>(depth) + 1);
        for (int rank = 0; rank <= depth; ++rank) children.push_back(build(depth + 1));
        used.erase(std::lower_bound(used.begin(), used.end(), word));

        ComparisonTree::Node node;
        node.point = BitPoint(word, m);
        node.children = std::move(children);
        nodes.push_back(std::move(node));
        return static_cast<int>(nodes.size()) - 1;
    };
    const int root = build(0);
    return ComparisonTree(std::move(nodes), root);
}

void wilson_interval(int wrong, int trials, double& lo, double& hi) {
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(wrong) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

MonteCarloResult monte_carlo_error(
    const FamilyParams& p, int trials, std::uint64_t seed,
    const std::function<Verdict(const HardFunction&, std::mt19937_64&)>& run_once, int threads) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    unsigned nthreads = threads > 0 ? static_cast<unsigned>(threads)
                                    : std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(trials));

    std::vector<int> wrong_by(nthreads, 0);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            int wrong = 0;
            for (int i = static_cast<int>(t); i < trials; i += static_cast<int>(nthreads)) {
                std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
                const HardFunction h = sample(p, rng);
                if (wrong_verdict(h, run_once(h, rng))) ++wrong;
            }
            wrong_by[t] = wrong;
        });
    }
    for (auto& th : pool) th.join();

    MonteCarloResult out;
    out.trials = trials;
    out.seed = seed;
    for (int w : wrong_by) out.wrong += w;
    out.estimate = static_cast<double>(out.wrong) / trials;
    wilson_interval(out.wrong, trials, out.ci_low, out.ci_high);
    return out;
}

}  // namespace monolab
