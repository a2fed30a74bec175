#pragma once

#include <nlohmann/json.hpp>

#include "orbitkit/orbit_geometry.hpp"
#include "orbitkit/scalar_product.hpp"
#include "orbitkit/spectral.hpp"

namespace orbitkit::cli {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const Vector& v);
[[nodiscard]] Json to_json(const Matrix& m);
[[nodiscard]] Json to_json(Complex z);
[[nodiscard]] Json to_json(const Signature& s);
[[nodiscard]] Json to_json(const SkewClassification& c);
[[nodiscard]] Json to_json(const OrbitStructureReport& r);
[[nodiscard]] Json to_json(const ScalarProduct& p);

/// Envelope shared by every subcommand.
struct ReportEnvelope {
  explicit ReportEnvelope(std::string command_) : command(std::move(command_)) {}

  std::string command;
  Json inputs = Json::object();
  Json payload = Json::object();
  /// Named residuals; the summary records their count and maximum.
  std::vector<std::pair<std::string, double>> residuals;

  [[nodiscard]] Json to_json() const;
};

}  // namespace orbitkit::cli
