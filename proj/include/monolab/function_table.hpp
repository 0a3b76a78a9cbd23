#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "monolab/domain.hpp"
#include "monolab/hard_family.hpp"

namespace monolab {

// Materialized f over a full domain, indexed by the packed point word. For a
// hypergrid the index of y is val(phi(y)); phi is a bijection, so the same
// storage serves both domains and only the comparability relation differs.
class FunctionTable {
public:
    FunctionTable(DomainParams dom, std::vector<std::int64_t> values);

    static FunctionTable from_hard(const HardFunction& h);
    static FunctionTable from_lifted(const HardFunction& h, const DomainParams& dom);

    const DomainParams& domain() const { return dom_; }
    std::uint32_t size() const { return dom_.point_count(); }
    std::int64_t value_at(std::uint32_t word) const { return values_[word]; }
    const std::vector<std::int64_t>& values() const { return values_; }

    // Same values reinterpreted over [n]^d (the lift view of a cube table).
    FunctionTable as_grid(const DomainParams& dom) const;

    // CSV rows "point,value" with a "point,value" header, point as bitstring.
    void write_csv(std::ostream& os) const;
    static FunctionTable read_csv(std::istream& is);

private:
    DomainParams dom_;
    std::vector<std::int64_t> values_;
};

// u precedes v strictly in the domain order; fn(u_word) for each.
template <class Fn>
void for_each_predecessor(const DomainParams& dom, std::uint32_t v, Fn&& fn) {
    if (dom.is_cube()) {
        if (v == 0) return;
        for (std::uint32_t s = (v - 1) & v;; s = (s - 1) & v) {
            fn(s);
            if (s == 0) break;
        }
        return;
    }
    // Odometer over per-coordinate digits u_t in [0, v_t].
    const std::uint32_t mask = (std::uint32_t{1} << dom.ell) - 1;
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(dom.d), 0);
    std::vector<std::uint32_t> limit(static_cast<std::size_t>(dom.d));
    for (int t = 0; t < dom.d; ++t) limit[static_cast<std::size_t>(t)] = (v >> (t * dom.ell)) & mask;
    for (;;) {
        std::uint32_t u = 0;
        for (int t = 0; t < dom.d; ++t) u |= digit[static_cast<std::size_t>(t)] << (t * dom.ell);
        if (u != v) fn(u);
        int t = 0;
        while (t < dom.d && digit[static_cast<std::size_t>(t)] == limit[static_cast<std::size_t>(t)]) {
            digit[static_cast<std::size_t>(t)] = 0;
            ++t;
        }
        if (t == dom.d) break;
        ++digit[static_cast<std::size_t>(t)];
    }
}

}  // namespace monolab
