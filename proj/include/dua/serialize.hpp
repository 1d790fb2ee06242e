#pragma once

#include "dua/embed.hpp"
#include "dua/gwa.hpp"
#include "dua/maps.hpp"
#include "dua/structure.hpp"

#include <json.hpp>

namespace dua {

using Json = nlohmann::json;

// Canonically ordered [{u, du, d, t, coeff}] array.
Json element_json(const Element& a);

Json twist_json(const TwistCertificate& tw);
Json center_json(const CenterDescription& desc);
Json growth_json(const GrowthReport& rep);
Json families_json(const std::vector<NormalFamily>& fams);
Json confluence_json(const ConfluenceReport& rep);
Json theta_json(const ThetaReport& rep);
Json gwa_json(const GwaReport& rep);
Json iso_json(const IsoResult& res);
Json skew_json(const SkewLaurentElem& e);

// Wraps a payload with the schema version tag.
Json versioned(Json payload);

} // namespace dua
