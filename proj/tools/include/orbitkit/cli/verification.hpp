#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orbitkit/cli/report_json.hpp"
#include "orbitkit/lie_algebra.hpp"

namespace orbitkit::cli {

struct CriterionResult {
  CriterionResult(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  int id = 0;
  std::string title;
  bool passed = true;
  /// Measured value against its threshold, in evaluation order.
  struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = true;
  };
  std::vector<Check> checks;
  std::vector<std::string> failures;

  void check_le(const std::string& name, double value, double threshold);
  void check(const std::string& name, bool ok, const std::string& detail = {});
};

/// Random skew-symmetric element for su2, so3, su3 (Gaussian), sl2r
/// (conjugate of a multiple of e - f) or sl2c_real (conjugate of an element
/// of the compact form su(2) spanned by ih, e - f, ie + if).
[[nodiscard]] Element sample_skew_element(const LieAlgebra& alg, std::mt19937_64& rng);

/// Criteria 1 to 9 over the catalog. Criterion 10 (determinism) is
/// evaluated by run_acceptance by repeating the others.
[[nodiscard]] std::vector<CriterionResult> run_property_criteria(std::uint64_t seed);

/// All ten criteria.
[[nodiscard]] std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

[[nodiscard]] Json to_json(const CriterionResult& c);

/// "[PASS] 3 spectral decomposition invariants" style line.
[[nodiscard]] std::string summary_line(const CriterionResult& c);

}  // namespace orbitkit::cli
