#include "orbitkit/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/json_format.hpp"

namespace orbitkit {

LieAlgebra algebra_from_json(std::string_view text, AlgebraOptions options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  try {
    const std::string name = doc.value("name", std::string{});
    const int dim = doc.at("dim").get<int>();
    auto labels = doc.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != dim) {
      throw ParseError("algebra file: 'basis' has " + std::to_string(labels.size()) +
                       " labels but 'dim' is " + std::to_string(dim));
    }
    std::vector<StructureEntry> entries;
    for (const auto& row : doc.at("c")) {
      if (!row.is_array() || row.size() != 4) {
        throw ParseError("algebra file: every 'c' entry must be [i, j, k, value]");
      }
      entries.push_back(
          {row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<double>()});
    }
    return LieAlgebra(name, std::move(labels), std::move(entries), options);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra file: ") + e.what());
  }
}

LieAlgebra load_algebra_file(const std::filesystem::path& path, AlgebraOptions options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str(), options);
}

std::string algebra_to_json(const LieAlgebra& alg) {
  nlohmann::ordered_json doc;
  doc["name"] = alg.name();
  doc["dim"] = alg.dim();
  doc["basis"] = alg.basis_labels();
  auto c = nlohmann::ordered_json::array();
  for (const auto& e : alg.entries()) c.push_back({e.i, e.j, e.k, e.value});
  doc["c"] = std::move(c);
  return dump_json(doc, 2);
}

LieAlgebra resolve_algebra(std::string_view name_or_path) {
  try {
    return catalog_load(name_or_path);
  } catch (const UnknownAlgebra&) {
    const std::filesystem::path path(name_or_path);
    if (std::filesystem::exists(path)) return load_algebra_file(path);
    throw UnknownAlgebra("'" + std::string(name_or_path) +
                         "' is neither a catalog algebra nor an existing file");
  }
}

}  // namespace orbitkit
