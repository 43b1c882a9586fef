#pragma once

#include <json.hpp>

#include "mmx/duality.hpp"
#include "mmx/homology.hpp"
#include "mmx/module.hpp"
#include "mmx/structure.hpp"

namespace mmx {

// Key order is part of the output contract, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& n);

Json to_json(const CanonicalModule& m);
Json to_json(const SupportSet& s);
Json to_json(const RingMarker& r);
Json to_json(const ExtNat& n);
Json to_json(const Classification& c);
Json to_json(const HomologyResult& r);

/// Compact serialization; invalid UTF-8 in details is replaced, never thrown.
std::string dump(const Json& j);

}  // namespace mmx
