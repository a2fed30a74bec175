#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "orbitkit/lie_algebra.hpp"

namespace orbitkit {

// JSON algebra file:
//   { "name": str, "dim": n, "basis": [str, ...], "c": [[i, j, k, value], ...] }
// with only i < j entries; the loader antisymmetrizes. Writing preserves the
// entry order and every value bit-for-bit.

[[nodiscard]] LieAlgebra algebra_from_json(std::string_view text, AlgebraOptions options = {});
[[nodiscard]] LieAlgebra load_algebra_file(const std::filesystem::path& path,
                                           AlgebraOptions options = {});
[[nodiscard]] std::string algebra_to_json(const LieAlgebra& alg);

/// Catalog name, or a path to a JSON file when no catalog entry matches.
[[nodiscard]] LieAlgebra resolve_algebra(std::string_view name_or_path);

}  // namespace orbitkit
