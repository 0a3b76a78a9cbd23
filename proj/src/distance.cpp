#include "monolab/distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace monolab {

namespace {

constexpr int kMaxViolationBits = 16;
constexpr std::size_t kMaxCoverVertices = std::size_t{1} << 12;

// Exact minimum vertex cover on the compacted endpoint graph. Branches on a
// maximum-degree vertex (take it / take all its neighbours), forces the
// neighbour of any degree-1 vertex, and prunes with a greedy matching bound.
class CoverSolver {
public:
    CoverSolver(int n, std::vector<std::pair<int, int>> edges)
        : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)), covered_(static_cast<std::size_t>(n), 0) {
        for (const auto& [a, b] : edges_) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    std::vector<int> solve() {
        best_.clear();
        {
            // endpoints of a maximal matching: a valid starting cover
            std::vector<char> used(static_cast<std::size_t>(n_), 0);
            for (const auto& [a, b] : edges_) {
                if (!used[static_cast<std::size_t>(a)] && !used[static_cast<std::size_t>(b)]) {
                    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
                    best_.push_back(a);
                    best_.push_back(b);
                }
            }
        }
        dfs();
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    int alive_degree(int v) const {
        int deg = 0;
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (!covered_[static_cast<std::size_t>(u)]) ++deg;
        }
        return deg;
    }

    int matching_bound() const {
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        int size = 0;
        for (const auto& [a, b] : edges_) {
            if (covered_[static_cast<std::size_t>(a)] || covered_[static_cast<std::size_t>(b)]) continue;
            if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
            ++size;
        }
        return size;
    }

    void take(int v) {
        covered_[static_cast<std::size_t>(v)] = 1;
        cur_.push_back(v);
    }

    void untake(std::size_t down_to) {
        while (cur_.size() > down_to) {
            covered_[static_cast<std::size_t>(cur_.back())] = 0;
            cur_.pop_back();
        }
    }

    void dfs() {
        if (cur_.size() >= best_.size()) return;
        int pick = -1, pick_deg = 0, forced = -1;
        for (int v = 0; v < n_; ++v) {
            if (covered_[static_cast<std::size_t>(v)]) continue;
            const int deg = alive_degree(v);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
            if (deg == 1 && forced == -1) forced = v;
        }
        if (pick == -1) {
            best_ = cur_;
            return;
        }
        if (cur_.size() + static_cast<std::size_t>(matching_bound()) >= best_.size()) return;
        if (forced != -1) {
            // the single alive neighbour can always replace the leaf itself
            for (int u : adj_[static_cast<std::size_t>(forced)]) {
                if (!covered_[static_cast<std::size_t>(u)]) {
                    const std::size_t mark = cur_.size();
                    take(u);
                    dfs();
                    untake(mark);
                    return;
                }
            }
        }
        const std::size_t mark = cur_.size();
        take(pick);
        dfs();
        untake(mark);
        // a cover avoiding pick must contain every alive neighbour
        for (int u : adj_[static_cast<std::size_t>(pick)]) {
            if (!covered_[static_cast<std::size_t>(u)]) take(u);
        }
        dfs();
        untake(mark);
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> covered_;
    std::vector<int> cur_;
    std::vector<int> best_;
};

}  // namespace

ViolationGraph violations(const FunctionTable& f) {
    const DomainParams& dom = f.domain();
    if (dom.m > kMaxViolationBits) {
        throw CapacityError("violation graph over " + std::to_string(dom.m) + "-bit domain exceeds desk scale");
    }
    ViolationGraph g{dom, {}};
    const auto& values = f.values();
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        const std::int64_t fv = values[v];
        for_each_predecessor(dom, v, [&](std::uint32_t u) {
            if (values[u] > fv) g.edges.emplace_back(u, v);
        });
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<std::uint32_t> min_vertex_cover(const ViolationGraph& g) {
    if (g.edges.empty()) return {};
    // compact to the endpoint set
    std::vector<std::uint32_t> words;
    words.reserve(g.edges.size() * 2);
    for (const auto& [u, v] : g.edges) {
        words.push_back(u);
        words.push_back(v);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() > kMaxCoverVertices) {
        throw CapacityError("vertex cover search over " + std::to_string(words.size()) + " vertices");
    }
    std::unordered_map<std::uint32_t, int> id;
    id.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) id[words[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) edges.emplace_back(id[u], id[v]);

    CoverSolver solver(static_cast<int>(words.size()), std::move(edges));
    std::vector<std::uint32_t> cover;
    for (int i : solver.solve()) cover.push_back(words[static_cast<std::size_t>(i)]);
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> maximal_matching(const ViolationGraph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matching;
    std::unordered_map<std::uint32_t, char> used;
    for (const auto& [u, v] : g.edges) {
        if (used.count(u) || used.count(v)) continue;
        used[u] = used[v] = 1;
        matching.emplace_back(u, v);
    }
    return matching;
}

FunctionTable repair(const FunctionTable& f, const std::vector<std::uint32_t>& cover) {
    const DomainParams& dom = f.domain();
    std::vector<char> in_cover(f.size(), 0);
    for (std::uint32_t w : cover) {
        if (w >= f.size()) throw std::invalid_argument("cover point outside domain");
        in_cover[w] = 1;
    }
    const ViolationGraph g = violations(f);
    for (const auto& [u, v] : g.edges) {
        if (!in_cover[u] && !in_cover[v]) {
            throw ContractError("cover misses violated pair (" + BitPoint(u, dom.m).str() + ", " +
                                BitPoint(v, dom.m).str() + ")");
        }
    }
    // increasing val order is a linear extension of both cube and grid orders
    std::vector<std::int64_t> values = f.values();
    for (std::uint32_t w = 0; w < f.size(); ++w) {
        if (!in_cover[w]) continue;
        std::int64_t best = 0;
        for_each_predecessor(dom, w, [&](std::uint32_t u) { best = std::max(best, values[u]); });
        values[w] = best;
    }
    return FunctionTable(dom, std::move(values));
}

DistanceCertificate distance_to_monotone(const FunctionTable& f) {
    const ViolationGraph g = violations(f);
    DistanceCertificate c;
    c.dom = f.domain();
    c.cover = min_vertex_cover(g);
    c.matching = maximal_matching(g);
    c.distance = Rational(static_cast<std::int64_t>(c.cover.size()), static_cast<std::int64_t>(f.size()));
    return c;
}

bool certificate_valid(const DistanceCertificate& c, const FunctionTable& f, std::string* why) {
    const auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (!(c.dom == f.domain())) return fail("certificate domain differs from table domain");
    if (c.matching.size() > c.cover.size()) return fail("matching larger than cover");
    if (c.distance != Rational(static_cast<std::int64_t>(c.cover.size()), static_cast<std::int64_t>(f.size()))) {
        return fail("distance is not |cover| / |domain|");
    }
    const ViolationGraph g = violations(f);
    std::vector<char> in_cover(f.size(), 0);
    for (std::uint32_t w : c.cover) {
        if (w >= f.size()) return fail("cover point outside domain");
        in_cover[w] = 1;
    }
    for (const auto& [u, v] : g.edges) {
        if (!in_cover[u] && !in_cover[v]) return fail("cover misses a violated pair");
    }
    std::vector<char> touched(f.size(), 0);
    for (const auto& [u, v] : c.matching) {
        if (u >= f.size() || v >= f.size()) return fail("matching point outside domain");
        if (!std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(u, v))) {
            return fail("matching pair is not a violated comparable pair");
        }
        if (touched[u] || touched[v]) return fail("matching pairs share a point");
        touched[u] = touched[v] = 1;
    }
    if (why) why->clear();
    return true;
}

std::vector<std::pair<BitPoint, BitPoint>> witness_matching(const HardFunction& h) {
    if (h.is_base()) throw std::invalid_argument("witness matching needs a perturbed function");
    const FamilyParams& p = h.params();
    const int j = h.j();
    const std::uint32_t lo = static_cast<std::uint32_t>(h.k() - 1) << p.m_prime;
    const std::uint32_t hi = static_cast<std::uint32_t>(h.k()) << p.m_prime;
    const std::uint32_t jbit = std::uint32_t{1} << (j - 1);
    std::vector<std::pair<BitPoint, BitPoint>> pairs;
    pairs.reserve(std::size_t{1} << (p.m_prime - 1));
    for (std::uint32_t w = lo; w < hi; ++w) {
        if ((w & jbit) == 0) pairs.emplace_back(BitPoint(w, p.m), BitPoint(w | jbit, p.m));
    }
    return pairs;
}

std::vector<std::pair<GridPoint, GridPoint>> witness_matching_lifted(const HardFunction& h,
                                                                     const DomainParams& dom) {
    if (dom.m != h.params().m) throw std::invalid_argument("domain m does not match function m");
    std::vector<std::pair<GridPoint, GridPoint>> out;
    for (const auto& [a, b] : witness_matching(h)) {
        out.emplace_back(phi_inverse(a, dom), phi_inverse(b, dom));
    }
    return out;
}

}  // namespace monolab
