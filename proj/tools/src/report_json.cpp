#include "orbitkit/cli/report_json.hpp"

#include "orbitkit/cli/cli.hpp"

namespace orbitkit::cli {

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

Json to_json(const SkewClassification& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["is_skew"] = c.is_skew();
  Json eig = Json::array();
  for (const auto& z : c.eigenvalues) eig.push_back(to_json(z));
  j["eigenvalues"] = std::move(eig);
  Json clusters = Json::array();
  for (const auto& cl : c.clusters) {
    Json e;
    e["center"] = to_json(cl.center);
    e["mu"] = cl.mean_abs_imag;
    e["algebraic"] = cl.algebraic;
    e["geometric"] = cl.geometric;
    clusters.push_back(std::move(e));
  }
  j["clusters"] = std::move(clusters);
  j["offending"] = c.offending ? to_json(*c.offending) : Json(nullptr);
  j["tol"] = c.tol;
  return j;
}

Json to_json(const OrbitStructureReport& r) {
  Json j;
  j["classification"] = to_json(r.classification);
  j["kernel_dim"] = r.kernel_dim;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(Json{{"mu", b.mu}, {"dim", b.dim}});
  j["blocks"] = std::move(blocks);
  j["J"] = r.j ? to_json(*r.j) : Json(nullptr);
  j["omega"] = r.omega ? to_json(*r.omega) : Json(nullptr);
  j["metric"] = r.metric ? to_json(*r.metric) : Json(nullptr);
  j["signature"] = r.signature ? to_json(*r.signature) : Json(nullptr);
  j["is_kaehler"] = r.is_kaehler;
  Json res = Json::object();
  for (const auto& [name, value] : r.residuals) res[name] = value;
  j["residuals"] = std::move(res);
  Json errors = Json::array();
  for (const auto& [kind, message] : r.errors) {
    errors.push_back(Json{{"kind", kind}, {"message", message}});
  }
  j["errors"] = std::move(errors);
  j["warnings"] = r.warnings;
  j["tolerances"] = Json{{"spectral", r.tol.spectral},
                         {"equivariance", r.tol.equivariance},
                         {"invariance", r.tol.invariance},
                         {"degeneracy", r.tol.degeneracy}};
  return j;
}

Json to_json(const ScalarProduct& p) {
  Json j;
  j["gram"] = to_json(p.gram());
  j["degenerate"] = p.is_degenerate();
  return j;
}

Json ReportEnvelope::to_json() const {
  Json j;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["payload"] = payload;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& [name, value] : residuals) {
    if (value >= worst) {
      worst = value;
      worst_name = name;
    }
  }
  Json summary;
  summary["count"] = residuals.size();
  summary["max"] = residuals.empty() ? Json(nullptr) : Json(worst);
  summary["max_name"] = residuals.empty() ? Json(nullptr) : Json(worst_name);
  j["residual_summary"] = std::move(summary);
  return j;
}

}  // namespace orbitkit::cli
