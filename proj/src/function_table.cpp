#include "monolab/function_table.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace monolab {

namespace {

constexpr int kMaxTableBits = 20;

void check_table_scale(const DomainParams& dom) {
    if (dom.m > kMaxTableBits) {
        throw CapacityError("value table over " + std::to_string(dom.m) + " bits exceeds desk scale");
    }
}

}  // namespace

FunctionTable::FunctionTable(DomainParams dom, std::vector<std::int64_t> values)
    : dom_(dom), values_(std::move(values)) {
    check_table_scale(dom_);
    if (values_.size() != dom_.point_count()) {
        throw std::invalid_argument("table has " + std::to_string(values_.size()) + " entries, domain has " +
                                    std::to_string(dom_.point_count()) + " points");
    }
}

FunctionTable FunctionTable::from_hard(const HardFunction& h) {
    const DomainParams dom = DomainParams::cube(h.params().m);
    check_table_scale(dom);
    std::vector<std::int64_t> values(dom.point_count());
    for (std::uint32_t w = 0; w < dom.point_count(); ++w) {
        values[w] = evaluate(h, BitPoint(w, dom.m));
    }
    return FunctionTable(dom, std::move(values));
}

FunctionTable FunctionTable::from_lifted(const HardFunction& h, const DomainParams& dom) {
    // f~(y) = f(phi(y)) and storage is indexed by val(phi(y)), so the values
    // match the cube table; only the order relation changes.
    return from_hard(lift_to_hypergrid(h, dom).h).as_grid(dom);
}

FunctionTable FunctionTable::as_grid(const DomainParams& dom) const {
    if (dom.m != dom_.m) throw std::invalid_argument("grid view must keep m = " + std::to_string(dom_.m));
    return FunctionTable(dom, values_);
}

void FunctionTable::write_csv(std::ostream& os) const {
    os << "point,value\n";
    for (std::uint32_t w = 0; w < size(); ++w) {
        os << BitPoint(w, dom_.m).str() << ',' << values_[w] << '\n';
    }
}

FunctionTable FunctionTable::read_csv(std::istream& is) {
    std::string line;
    int m = 0;
    std::vector<std::int64_t> values;
    std::vector<char> seen;
    bool first = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line == "point,value") {
            first = false;
            continue;
        }
        first = false;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("table row missing comma: '" + line + "'");
        const BitPoint pt = BitPoint::parse(line.substr(0, comma));
        std::int64_t value = 0;
        const char* b = line.data() + comma + 1;
        const char* e = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(b, e, value);
        if (ec != std::errc{} || ptr != e) throw std::invalid_argument("bad table value in '" + line + "'");
        if (m == 0) {
            m = pt.size();
            if (m > kMaxTableBits) throw CapacityError("table points too wide");
            values.assign(std::size_t{1} << m, 0);
            seen.assign(std::size_t{1} << m, 0);
        } else if (pt.size() != m) {
            throw std::invalid_argument("table mixes point sizes");
        }
        if (seen[pt.word()]) throw std::invalid_argument("duplicate table point " + pt.str());
        seen[pt.word()] = 1;
        values[pt.word()] = value;
    }
    if (m == 0) throw std::invalid_argument("empty value table");
    for (std::size_t w = 0; w < seen.size(); ++w) {
        if (!seen[w]) {
            throw std::invalid_argument("table missing point " + BitPoint(static_cast<std::uint32_t>(w), m).str());
        }
    }
    return FunctionTable(DomainParams::cube(m), std::move(values));
}

}  // namespace monolab
