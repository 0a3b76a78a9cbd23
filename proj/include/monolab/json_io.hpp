#pragma once

#include "json.hpp"

#include "monolab/capture.hpp"
#include "monolab/distance.hpp"
#include "monolab/hard_family.hpp"
#include "monolab/testers.hpp"

namespace monolab {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "monolab 0.1.0";

using Json = nlohmann::json;

Json descriptor_to_json(const HardFunction& h);
HardFunction descriptor_from_json(const Json& j);

Json certificate_to_json(const DistanceCertificate& c);
DistanceCertificate certificate_from_json(const Json& j);

Json capture_report_to_json(const CaptureReport& r);

Json tree_to_json(const ComparisonTree& t);
ComparisonTree tree_from_json(const Json& j);

Json nonadaptive_to_json(const NonAdaptiveDistinguisher& d, int m);
NonAdaptiveDistinguisher nonadaptive_from_json(const Json& j);

}  // namespace monolab
