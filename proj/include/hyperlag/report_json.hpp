#pragma once

#include <string>

#include "json.hpp"

#include "hyperlag/certify.hpp"
#include "hyperlag/closedform.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/optimize.hpp"
#include "hyperlag/surd.hpp"

namespace hyperlag {

using Json = nlohmann::ordered_json;

/// {"p": "num/den", "q": "num/den", "d": radicand, "float": value}.
void to_json(Json& j, const Surd& s);
void to_json(Json& j, const CheckStep& step);
/// {"kind","k","t","s","c","seed","parts":[[lo,hi],...]}; absent optionals are null.
void to_json(Json& j, const ConstructionMetadata& m);
void to_json(Json& j, const OptimizationResult& r);
void to_json(Json& j, const StationarityReport& r);
void to_json(Json& j, const CaseVerdict& v);
void to_json(Json& j, const CertificateParameters& p);
void to_json(Json& j, const CertificateReport& r);
void to_json(Json& j, const DensityGainReport& r);
void to_json(Json& j, const BoundChainReport& r);

Json rational_json(const Rational& q);

/// Parses a sidecar written by to_json(ConstructionMetadata). Throws
/// std::invalid_argument on missing or mistyped fields.
ConstructionMetadata metadata_from_json(const Json& j);

void write_json_file(const std::string& path, const Json& j);

}  // namespace hyperlag
