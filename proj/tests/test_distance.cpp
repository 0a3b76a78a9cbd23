#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "monolab/distance.hpp"
#include "monolab/json_io.hpp"
#include "monolab/rng_util.hpp"

using namespace monolab;

namespace {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Independent oracle for the exact distance: the points kept unchanged must
// contain no violated pair, and any such set extends to a monotone function,
// so min changes = |D| - max consistent subset. Enumerate all subsets.
std::size_t oracle_min_changes(const FunctionTable& f) {
    const std::uint32_t n = f.size();
    REQUIRE(n <= 16);
    std::vector<Edge> bad;
    for (std::uint32_t v = 0; v < n; ++v) {
        for_each_predecessor(f.domain(), v, [&](std::uint32_t u) {
            if (f.value_at(u) > f.value_at(v)) bad.emplace_back(u, v);
        });
    }
    std::size_t best_kept = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : bad) {
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) best_kept = std::max<std::size_t>(best_kept, static_cast<std::size_t>(std::popcount(mask)));
    }
    return n - best_kept;
}

// Brute-force minimum vertex cover size over subsets of the endpoint set.
std::size_t oracle_cover_size(const std::vector<Edge>& edges) {
    std::vector<std::uint32_t> verts;
    for (const auto& [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    REQUIRE(verts.size() <= 16);
    std::size_t best = verts.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << verts.size()); ++mask) {
        std::set<std::uint32_t> chosen;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (mask >> i & 1) chosen.insert(verts[i]);
        }
        bool covers = true;
        for (const auto& [u, v] : edges) {
            if (!chosen.count(u) && !chosen.count(v)) {
                covers = false;
                break;
            }
        }
        if (covers) best = std::min(best, chosen.size());
    }
    return best;
}

FunctionTable random_table(const DomainParams& dom, std::mt19937_64& rng, int value_range) {
    std::vector<std::int64_t> values(dom.point_count());
    for (auto& v : values) {
        v = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(value_range))) -
            value_range / 2;
    }
    return FunctionTable(dom, std::move(values));
}

}  // namespace

TEST_SUITE_BEGIN("distance");

TEST_CASE("tables materialize hard functions and round trip through csv") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const HardFunction g21 = HardFunction::perturbed(p, 2, 1);
    const FunctionTable t = FunctionTable::from_hard(g21);
    for (std::uint32_t w = 0; w < 16; ++w) CHECK(t.value_at(w) == evaluate(g21, BitPoint(w, 4)));

    std::stringstream buf;
    t.write_csv(buf);
    const FunctionTable back = FunctionTable::read_csv(buf);
    CHECK(back.values() == t.values());
    CHECK(back.domain() == t.domain());
}

TEST_CASE("csv parsing rejects malformed tables") {
    const auto parse = [](const std::string& text) {
        std::stringstream ss(text);
        return FunctionTable::read_csv(ss);
    };
    CHECK_THROWS_AS(parse(""), std::invalid_argument);
    CHECK_THROWS_AS(parse("00,1\n01,2\n10,3\n"), std::invalid_argument);        // missing 11
    CHECK_THROWS_AS(parse("0,1\n1,2\n0,9\n"), std::invalid_argument);           // duplicate point
    CHECK_THROWS_AS(parse("0,1\n11,2\n"), std::invalid_argument);               // mixed sizes
    CHECK_THROWS_AS(parse("0,x\n1,2\n"), std::invalid_argument);                // bad value
    CHECK(parse("point,value\n0,5\n1,7\n").value_at(0) == 5);
}

TEST_CASE("violation graph of the base function is empty") {
    CHECK(violations(FunctionTable::from_hard(HardFunction::base(FamilyParams::make(4, 2)))).empty());
}

TEST_CASE("violation graph of g_{2,1} at m = 4 is the expected matching") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const ViolationGraph g = violations(FunctionTable::from_hard(HardFunction::perturbed(p, 2, 1)));
    const std::vector<Edge> expect = {{0, 2}, {1, 3}, {4, 6}, {5, 7}};
    CHECK(g.edges == expect);
}

TEST_CASE("negated base violates every comparable pair at m = 2") {
    std::vector<std::int64_t> values = {0, -2, -4, -6};
    const ViolationGraph g = violations(FunctionTable(DomainParams::cube(2), std::move(values)));
    const std::vector<Edge> expect = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(g.edges == expect);
}

TEST_CASE("violations use the grid order for lifted domains") {
    const DomainParams line = DomainParams::make(4, 1);
    const FunctionTable f(line, {0, 5, 3, 4});
    const ViolationGraph g = violations(f);
    const std::vector<Edge> expect = {{1, 2}, {1, 3}};
    CHECK(g.edges == expect);

    const DomainParams dom = DomainParams::make(4, 2);
    const FamilyParams p = FamilyParams::make(4, 2);
    CHECK(violations(FunctionTable::from_lifted(HardFunction::base(p), dom)).empty());
}

TEST_CASE("min vertex cover on canonical shapes") {
    const DomainParams dom = DomainParams::cube(4);
    CHECK(min_vertex_cover(ViolationGraph{dom, {}}).empty());

    const ViolationGraph matching{dom, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}};
    CHECK(min_vertex_cover(matching).size() == 4);

    const ViolationGraph path{dom, {{0, 1}, {1, 2}}};
    const auto cover = min_vertex_cover(path);
    CHECK(cover == std::vector<std::uint32_t>{1});

    const ViolationGraph star{dom, {{0, 1}, {0, 2}, {0, 3}}};
    CHECK(min_vertex_cover(star) == std::vector<std::uint32_t>{0});
}

TEST_CASE("min vertex cover matches brute force on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<Edge> edges;
        const int verts = 4 + static_cast<int>(uniform_below(rng, 9));
        const int want = 1 + static_cast<int>(uniform_below(rng, 14));
        while (static_cast<int>(edges.size()) < want) {
            const auto a = static_cast<std::uint32_t>(uniform_below(rng, static_cast<std::uint64_t>(verts)));
            const auto b = static_cast<std::uint32_t>(uniform_below(rng, static_cast<std::uint64_t>(verts)));
            if (a == b) continue;
            edges.insert({std::min(a, b), std::max(a, b)});
        }
        const ViolationGraph g{DomainParams::cube(4), {edges.begin(), edges.end()}};
        const auto cover = min_vertex_cover(g);
        for (const auto& [u, v] : g.edges) {
            CHECK((std::count(cover.begin(), cover.end(), u) || std::count(cover.begin(), cover.end(), v)));
        }
        CHECK(cover.size() == oracle_cover_size(g.edges));
    }
}

TEST_CASE("matching never exceeds cover and is disjoint") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        const FunctionTable f = random_table(DomainParams::cube(5), rng, 12);
        const ViolationGraph g = violations(f);
        const auto matching = maximal_matching(g);
        const auto cover = min_vertex_cover(g);
        CHECK(matching.size() <= cover.size());
        std::set<std::uint32_t> touched;
        for (const auto& [u, v] : matching) {
            CHECK(!touched.count(u));
            CHECK(!touched.count(v));
            touched.insert(u);
            touched.insert(v);
        }
    }
}

TEST_CASE("repair leaves a monotone function alone") {
    const FunctionTable base = FunctionTable::from_hard(HardFunction::base(FamilyParams::make(4, 2)));
    CHECK(repair(base, {}).values() == base.values());
}

TEST_CASE("repair of g_{2,1} over its perturbed points") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, 2, 1));
    const std::vector<std::uint32_t> cover = {2, 3, 6, 7};
    const FunctionTable fixed = repair(f, cover);
    CHECK(violations(fixed).empty());
    // exactly the cover points change; max-of-predecessors flattens rather
    // than restoring the base values
    const std::vector<std::int64_t> expect = {0, 2, 0,  2,  8,  10, 8,  10,
                                              16, 18, 20, 22, 24, 26, 28, 30};
    CHECK(fixed.values() == expect);
    int diff = 0;
    for (std::uint32_t w = 0; w < 16; ++w) diff += fixed.value_at(w) != f.value_at(w);
    CHECK(diff == 4);
}

TEST_CASE("repair demands a genuine cover") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, 2, 1));
    CHECK_THROWS_AS(repair(f, {2, 3, 6}), ContractError);
    CHECK_THROWS_AS(repair(f, {99}), std::invalid_argument);
}

TEST_CASE("repair always yields a monotone table touching only the cover") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const bool grid = trial % 3 == 0;
        const DomainParams dom = grid ? DomainParams::make(4, 2) : DomainParams::cube(6);
        const FunctionTable f = random_table(dom, rng, 10);
        const auto cover = min_vertex_cover(violations(f));
        const FunctionTable fixed = repair(f, cover);
        CHECK(violations(fixed).empty());
        for (std::uint32_t w = 0; w < f.size(); ++w) {
            if (fixed.value_at(w) != f.value_at(w)) {
                CHECK(std::count(cover.begin(), cover.end(), w) == 1);
            }
        }
    }
}

TEST_CASE("distance of the base is zero") {
    const DistanceCertificate c =
        distance_to_monotone(FunctionTable::from_hard(HardFunction::base(FamilyParams::make(4, 2))));
    CHECK(c.distance == Rational(0));
    CHECK(to_string(c.distance) == "0/1");
}

TEST_CASE("every g at m=4 eps=1/4 sits at distance exactly 1/4") {
    const FamilyParams p = FamilyParams::make(4, 2);
    for (int j = 1; j <= p.m_prime; ++j) {
        for (std::int64_t k = 1; k <= p.block_count; ++k) {
            const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, j, k));
            const DistanceCertificate c = distance_to_monotone(f);
            CHECK(c.distance == Rational(1, 4));
            CHECK(c.cover.size() == 4);
            CHECK(c.matching.size() == 4);
            CHECK(certificate_valid(c, f));
        }
    }
}

TEST_CASE("a g at m=8 eps=1/8 sits at distance exactly 1/8") {
    const FamilyParams p = FamilyParams::make(8, 3);
    const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, 4, 2));
    const DistanceCertificate c = distance_to_monotone(f);
    CHECK(c.distance == Rational(1, 8));
    CHECK(c.cover.size() == 32);
    CHECK(c.matching.size() == 32);
}

TEST_CASE("distance agrees with the exhaustive relabeling oracle") {
    std::mt19937_64 rng(77);
    const std::vector<std::int64_t> negated = {0, -2, -4, -6};
    CHECK(oracle_min_changes(FunctionTable(DomainParams::cube(2), negated)) == 2);
    for (int trial = 0; trial < 60; ++trial) {
        const DomainParams dom = trial % 2 ? DomainParams::cube(3) : DomainParams::cube(2);
        const FunctionTable f = random_table(dom, rng, 6);
        const DistanceCertificate c = distance_to_monotone(f);
        CHECK(c.cover.size() == oracle_min_changes(f));
        CHECK(certificate_valid(c, f));
    }
    // same cross-check on a genuine grid domain
    for (int trial = 0; trial < 20; ++trial) {
        const FunctionTable f = random_table(DomainParams::make(4, 2), rng, 6);
        CHECK(distance_to_monotone(f).cover.size() == oracle_min_changes(f));
    }
}

TEST_CASE("certificate self-check rejects tampering") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, 2, 1));
    const DistanceCertificate good = distance_to_monotone(f);
    std::string why;

    DistanceCertificate c = good;
    c.distance = Rational(1, 8);
    CHECK_FALSE(certificate_valid(c, f, &why));
    CHECK(!why.empty());

    c = good;
    c.cover.pop_back();
    CHECK_FALSE(certificate_valid(c, f));

    c = good;
    c.matching.push_back(c.matching.front());
    CHECK_FALSE(certificate_valid(c, f));

    c = good;
    c.matching[0] = {0, 1};  // comparable but not violated
    CHECK_FALSE(certificate_valid(c, f));
}

TEST_CASE("witness matching of g_{2,1} at m = 4") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const auto pairs = witness_matching(HardFunction::perturbed(p, 2, 1));
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == std::make_pair(BitPoint(0, 4), BitPoint(2, 4)));
    const auto contains = std::count(pairs.begin(), pairs.end(),
                                     std::make_pair(BitPoint::parse("0010"), BitPoint::parse("0110")));
    CHECK(contains == 1);
    CHECK_THROWS_AS(witness_matching(HardFunction::base(p)), std::invalid_argument);
}

TEST_CASE("witness matching has size eps 2^m of disjoint violated pairs") {
    for (const auto& [m, a] : std::vector<std::pair<int, int>>{{4, 2}, {8, 3}, {12, 2}, {12, 5}}) {
        const FamilyParams p = FamilyParams::make(m, a);
        for (int j = 1; j <= p.m_prime; j += std::max(1, p.m_prime / 3)) {
            for (std::int64_t k = 1; k <= p.block_count; k += std::max<std::int64_t>(1, p.block_count / 2)) {
                const HardFunction g = HardFunction::perturbed(p, j, k);
                const auto pairs = witness_matching(g);
                CHECK(pairs.size() == std::size_t{1} << (m - a));  // eps 2^m
                std::set<std::uint32_t> seen;
                for (const auto& [x, y] : pairs) {
                    CHECK(cube_leq(x, y));
                    CHECK(evaluate(g, x) > evaluate(g, y));
                    CHECK(block_index(x, p) == k);
                    CHECK(block_index(y, p) == k);
                    CHECK(!seen.count(x.word()));
                    CHECK(!seen.count(y.word()));
                    seen.insert(x.word());
                    seen.insert(y.word());
                }
            }
        }
    }
}

TEST_CASE("witness matching coincides with the violation graph for each g") {
    const FamilyParams p = FamilyParams::make(8, 3);
    const HardFunction g = HardFunction::perturbed(p, 3, 2);
    const ViolationGraph vg = violations(FunctionTable::from_hard(g));
    std::vector<Edge> expect;
    for (const auto& [x, y] : witness_matching(g)) expect.emplace_back(x.word(), y.word());
    std::sort(expect.begin(), expect.end());
    CHECK(vg.edges == expect);
}

TEST_CASE("lifted witness pairs are grid-comparable") {
    const DomainParams dom = DomainParams::make(4, 2);
    const FamilyParams p = FamilyParams::make(4, 2);
    for (int j = 1; j <= p.m_prime; ++j) {
        for (std::int64_t k = 1; k <= p.block_count; ++k) {
            for (const auto& [u, v] : witness_matching_lifted(HardFunction::perturbed(p, j, k), dom)) {
                CHECK(grid_leq(u, v));
                CHECK_FALSE(u == v);
            }
        }
    }
}

TEST_CASE("certificate json round trip") {
    const FamilyParams p = FamilyParams::make(4, 2);
    const FunctionTable f = FunctionTable::from_hard(HardFunction::perturbed(p, 3, 2));
    const DistanceCertificate c = distance_to_monotone(f);
    const DistanceCertificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back.distance == c.distance);
    CHECK(back.cover == c.cover);
    CHECK(back.matching == c.matching);
    CHECK(certificate_valid(back, f));
}

TEST_SUITE_END();
