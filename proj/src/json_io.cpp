#include "monolab/json_io.hpp"

#include <stdexcept>

namespace monolab {

namespace {

std::string epsilon_string(const FamilyParams& p) {
    return to_string(p.epsilon());
}

FamilyParams params_from_json(const Json& j) {
    return FamilyParams::make(j.at("m").get<int>(), parse_epsilon(j.at("epsilon").get<std::string>()));
}

}  // namespace

Json descriptor_to_json(const HardFunction& h) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["m"] = h.params().m;
    j["epsilon"] = epsilon_string(h.params());
    if (h.is_base()) {
        j["kind"] = "base";
    } else {
        j["kind"] = Json{{"j", h.j()}, {"k", h.k()}};
    }
    return j;
}

HardFunction descriptor_from_json(const Json& j) {
    const FamilyParams p = params_from_json(j);
    const Json& kind = j.at("kind");
    if (kind.is_string() && kind.get<std::string>() == "base") return HardFunction::base(p);
    if (kind.is_object()) {
        return HardFunction::perturbed(p, kind.at("j").get<int>(), kind.at("k").get<std::int64_t>());
    }
    throw std::invalid_argument("descriptor kind must be \"base\" or {\"j\", \"k\"}");
}

Json certificate_to_json(const DistanceCertificate& c) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["domain"] = Json{{"n", c.dom.n}, {"d", c.dom.d}, {"m", c.dom.m}};
    j["distance"] = to_string(c.distance);
    j["coverSize"] = c.cover.size();
    j["matchingSize"] = c.matching.size();
    Json cover = Json::array();
    for (std::uint32_t w : c.cover) cover.push_back(BitPoint(w, c.dom.m).str());
    j["cover"] = std::move(cover);
    Json matching = Json::array();
    for (const auto& [u, v] : c.matching) {
        matching.push_back(Json::array({BitPoint(u, c.dom.m).str(), BitPoint(v, c.dom.m).str()}));
    }
    j["matching"] = std::move(matching);
    return j;
}

DistanceCertificate certificate_from_json(const Json& j) {
    DistanceCertificate c;
    const Json& dom = j.at("domain");
    c.dom = DomainParams::make(dom.at("n").get<int>(), dom.at("d").get<int>());
    if (c.dom.m != dom.at("m").get<int>()) throw std::invalid_argument("certificate domain m mismatch");
    c.distance = parse_rational(j.at("distance").get<std::string>());
    for (const auto& pt : j.at("cover")) {
        c.cover.push_back(BitPoint::parse(pt.get<std::string>()).word());
    }
    for (const auto& pair : j.at("matching")) {
        c.matching.emplace_back(BitPoint::parse(pair.at(0).get<std::string>()).word(),
                                BitPoint::parse(pair.at(1).get<std::string>()).word());
    }
    if (j.at("coverSize").get<std::size_t>() != c.cover.size() ||
        j.at("matchingSize").get<std::size_t>() != c.matching.size()) {
        throw std::invalid_argument("certificate size fields disagree with the listed sets");
    }
    return c;
}

Json capture_report_to_json(const CaptureReport& r) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["m"] = r.params.m;
    j["epsilon"] = epsilon_string(r.params);
    j["mPrime"] = r.params.m_prime;
    j["blockCount"] = r.params.block_count;
    Json blocks = Json::array();
    for (const auto& stats : r.per_block) {
        blocks.push_back(Json{{"k", stats.k},
                              {"queriesInBlock", stats.queries_in_block},
                              {"capturedCoords", stats.captured}});
    }
    j["perBlock"] = std::move(blocks);  // blocks without queries are implicit
    j["indistinguishableCount"] = r.indistinguishable_count;
    j["errorLowerBound"] = to_string(r.error_lower_bound);
    return j;
}

namespace {

Json tree_node_to_json(const ComparisonTree& t, int id) {
    const ComparisonTree::Node& node = t.node(id);
    if (node.is_leaf()) return Json{{"verdict", to_cstr(*node.verdict)}};
    Json children = Json::array();
    for (int child : node.children) children.push_back(tree_node_to_json(t, child));
    return Json{{"query", node.point->str()}, {"children", std::move(children)}};
}

int tree_node_from_json(const Json& j, std::vector<ComparisonTree::Node>& nodes) {
    ComparisonTree::Node node;
    if (j.contains("verdict")) {
        node.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    } else {
        node.point = BitPoint::parse(j.at("query").get<std::string>());
        for (const auto& child : j.at("children")) {
            node.children.push_back(tree_node_from_json(child, nodes));
        }
    }
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

Json tree_to_json(const ComparisonTree& t) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["m"] = t.m();
    j["root"] = tree_node_to_json(t, t.root());
    return j;
}

ComparisonTree tree_from_json(const Json& j) {
    std::vector<ComparisonTree::Node> nodes;
    const int root = tree_node_from_json(j.at("root"), nodes);
    return ComparisonTree(std::move(nodes), root);
}

Json nonadaptive_to_json(const NonAdaptiveDistinguisher& d, int m) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["m"] = d.points.empty() ? m : d.points.front().size();
    Json points = Json::array();
    for (const BitPoint& pt : d.points) points.push_back(pt.str());
    j["points"] = std::move(points);
    j["pattern"] = d.base_pattern;
    j["leafVerdict"] = to_cstr(d.leaf_verdict);
    return j;
}

NonAdaptiveDistinguisher nonadaptive_from_json(const Json& j) {
    NonAdaptiveDistinguisher d;
    for (const auto& pt : j.at("points")) d.points.push_back(BitPoint::parse(pt.get<std::string>()));
    d.base_pattern = j.at("pattern").get<std::vector<int>>();
    d.leaf_verdict = verdict_from_string(j.at("leafVerdict").get<std::string>());
    if (d.base_pattern.size() != d.points.size()) {
        throw std::invalid_argument("pattern length must equal query count");
    }
    return d;
}

}  // namespace monolab
