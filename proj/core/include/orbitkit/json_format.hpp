#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace orbitkit {

/// Serializes with every floating-point value written as %.17g, so output
/// round-trips and is byte-stable. Non-finite values become null. Object
/// keys keep the insertion order of nlohmann::ordered_json.
[[nodiscard]] std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

}  // namespace orbitkit
