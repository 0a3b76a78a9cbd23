#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monolab/function_table.hpp"
#include "monolab/rational.hpp"

namespace monolab {

// One edge per comparable pair ordered inconsistently by f: u < v in the
// domain order but f(u) > f(v). Edges sorted by (u, v) word.
struct ViolationGraph {
    DomainParams dom;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    bool empty() const { return edges.empty(); }
};

ViolationGraph violations(const FunctionTable& f);

// Exact minimum vertex cover, branch and bound with a greedy-matching lower
// bound. Only the size is deterministic across internals; the set is some
// minimum cover. Returns sorted point words.
std::vector<std::uint32_t> min_vertex_cover(const ViolationGraph& g);

// Greedy maximal matching in canonical edge order; the lower-bound side of a
// certificate.
std::vector<std::pair<std::uint32_t, std::uint32_t>> maximal_matching(const ViolationGraph& g);

// Monotone table equal to f outside the cover. Cover points are reassigned in
// increasing val order to the max of their predecessors' values (0 if none).
// Throws ContractError when the cover misses a violated pair.
FunctionTable repair(const FunctionTable& f, const std::vector<std::uint32_t>& cover);

struct DistanceCertificate {
    DomainParams dom;
    Rational distance;                                          // |cover| / |domain|
    std::vector<std::uint32_t> cover;                           // changes that suffice
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matching;  // changes that are necessary
};

DistanceCertificate distance_to_monotone(const FunctionTable& f);

// Re-derives nothing: checks the stated certificate against the table.
// cover touches every violated pair, matching is a disjoint set of violated
// pairs, |matching| <= |cover|, and distance = |cover| / |domain|.
bool certificate_valid(const DistanceCertificate& c, const FunctionTable& f,
                       std::string* why = nullptr);

// The explicit matching {(x, x xor e_j) : x in S_k, x_j = 0} for a perturbed
// function; every pair is a violation and the pairs are vertex-disjoint.
std::vector<std::pair<BitPoint, BitPoint>> witness_matching(const HardFunction& h);
std::vector<std::pair<GridPoint, GridPoint>> witness_matching_lifted(const HardFunction& h,
                                                                     const DomainParams& dom);

}  // namespace monolab
