#pragma once

#include <json.hpp>

#include "orbicurve/abelian.hpp"
#include "orbicurve/covers.hpp"
#include "orbicurve/fixtures.hpp"
#include "orbicurve/isomorphism.hpp"
#include "orbicurve/serre.hpp"
#include "orbicurve/signature.hpp"
#include "orbicurve/wallpaper.hpp"

namespace orbicurve {

using Json = nlohmann::ordered_json;

Json to_json(const Signature& s);
/// Accepts {"g": int, "r": int, "m": [int...]} and canonicalizes. Throws
/// MalformedSignature on a bad shape or bad values.
Signature signature_from_json(const Json& j);
Signature parse_signature_json(const std::string& text);

Json to_json(const AbelianGroup& a);
AbelianGroup abelian_from_json(const Json& j);

Json order_json(const GroupOrder& o);
Json to_json(const IsoVerdict& v);
Json to_json(const SerreVerdict& v);
Json to_json(const CoverReport& c);
Json to_json(const KernelCheck& k);
Json to_json(const Check& c);
Json to_json(const SuiteReport& r);
Json to_json(const ExampleReport& r);
Json to_json(const TriangleRep& rep, const TriangleReport& report);

}  // namespace orbicurve
