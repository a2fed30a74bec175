#include "orbitkit/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "orbitkit/algebra_io.hpp"
#include "orbitkit/catalog.hpp"
#include "orbitkit/cli/oracles.hpp"
#include "orbitkit/cli/report_json.hpp"
#include "orbitkit/cli/verification.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/haar.hpp"
#include "orbitkit/invariant_products.hpp"
#include "orbitkit/json_format.hpp"
#include "orbitkit/nijenhuis.hpp"
#include "orbitkit/orbit_geometry.hpp"
#include "orbitkit/poisson.hpp"
#include "orbitkit/spectral.hpp"

namespace orbitkit::cli {
namespace {

/// Bad user input: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_csv(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError(what + ": empty entry in '" + text + "'");
    const std::string token = item.substr(first, last - first + 1);
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw UsageError(what + ": '" + token + "' is not a finite real number");
    }
    out.push_back(v);
  }
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw UsageError(what + ": expected comma-separated reals, got '" + text + "'");
  }
  return out;
}

Vector parse_vector(const std::string& text, int dim, const std::string& what) {
  const auto xs = parse_csv(text, what);
  if (static_cast<int>(xs.size()) != dim) {
    throw UsageError(what + " has " + std::to_string(xs.size()) + " coordinates, algebra has dim " +
                     std::to_string(dim));
  }
  return Eigen::Map<const Vector>(xs.data(), dim);
}

LieAlgebra load_algebra(const std::string& spec) {
  try {
    return resolve_algebra(spec);
  } catch (const UnknownAlgebra& e) {
    throw UsageError(e.what());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

ScalarProduct load_product(const LieAlgebra& alg, const std::string& spec) {
  if (spec == "killing") return killing_form(alg);
  if (spec.rfind("diag:", 0) == 0) {
    return ScalarProduct(Matrix(parse_vector(spec.substr(5), alg.dim(), "--product diag").asDiagonal()));
  }
  std::ifstream in(spec);
  if (!in) throw UsageError("--product: '" + spec + "' is not killing, diag:..., or a readable file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    const auto rows = doc.at("gram").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n != alg.dim()) throw UsageError("--product file: gram size does not match algebra dim");
    Matrix g(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != n) {
        throw UsageError("--product file: gram is not square");
      }
      for (Eigen::Index c = 0; c < n; ++c) g(r, c) = rows[r][c];
    }
    return ScalarProduct(g);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("--product file: ") + e.what());
  }
}

EquivariantMap parse_map(const std::string& spec) {
  if (spec == "identity") return EquivariantMap::identity();
  if (spec.rfind("scale:", 0) == 0) {
    const auto xs = parse_csv(spec.substr(6), "--s scale");
    if (xs.size() != 1) throw UsageError("--s scale: expected a single number");
    return EquivariantMap::scaled(xs[0]);
  }
  throw UsageError("--s: expected identity or scale:<c>, got '" + spec + "'");
}

double default_tolerance() {
  const char* env = std::getenv("ORBITKIT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string("ORBITKIT_TOL: '") + env + "' is not a positive number");
  }
  return v;
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void print_residuals(std::ostream& err, const std::vector<std::pair<std::string, double>>& rs) {
  for (const auto& [name, value] : rs) {
    err << "  " << std::left << std::setw(28) << name << fmt(value) << "\n";
  }
}

void print_matrix(std::ostream& err, const std::string& title, const Matrix& m) {
  err << title << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    err << "  ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) err << std::right << std::setw(12) << fmt(m(r, c));
    err << "\n";
  }
}

struct Options {
  std::string algebra;
  std::string element;
  std::string alpha;
  std::string product = "killing";
  std::string s = "identity";
  std::optional<double> tol;
  std::int64_t samples = -1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool pretty = false;
};

Json base_inputs(const Options& o, double tol) {
  Json in;
  in["algebra"] = o.algebra;
  in["tolerance"] = tol;
  return in;
}

int cmd_classify(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const auto alg = load_algebra(o.algebra);
  const Vector w = parse_vector(o.element, alg.dim(), "--element");
  const auto c = classify_skew(alg, w, tol);
  ReportEnvelope env("classify");
  env.inputs = base_inputs(o, tol);
  env.inputs["element"] = to_json(w);
  env.payload = to_json(c);
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    err << "verdict: " << to_string(c.verdict) << "\n";
    err << "eigenvalues:\n";
    for (const auto& z : c.eigenvalues) err << "  " << fmt(z.real()) << " " << (z.imag() < 0 ? "-" : "+") << " " << fmt(std::abs(z.imag())) << "i\n";
  }
  return kSuccess;
}

int cmd_orbit(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const auto alg = load_algebra(o.algebra);
  const Vector w = parse_vector(o.element, alg.dim(), "--element");
  const auto p = load_product(alg, o.product);
  const auto s = parse_map(o.s);
  OrbitReportOptions options;
  options.tol.spectral = tol;
  options.seed = o.seed;
  const auto r = orbit_report(alg, p, s, w, options);
  ReportEnvelope env("orbit");
  env.inputs = base_inputs(o, tol);
  env.inputs["element"] = to_json(w);
  env.inputs["product"] = o.product;
  env.inputs["s"] = s.describe();
  env.inputs["seed"] = o.seed;
  env.payload = to_json(r);
  env.residuals = r.residuals;
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    err << "verdict: " << to_string(r.classification.verdict) << "  kernel dim " << r.kernel_dim << "\n";
    for (const auto& b : r.blocks) err << "  block mu=" << fmt(b.mu) << " dim " << b.dim << "\n";
    if (r.signature) {
      err << "signature: (" << r.signature->positive << ", " << r.signature->negative << ", "
          << r.signature->zero << ")  kaehler: " << (r.is_kaehler ? "yes" : "no") << "\n";
    }
    if (r.metric) print_matrix(err, "metric:", *r.metric);
    err << "residuals:\n";
    print_residuals(err, r.residuals);
    for (const auto& [kind, msg] : r.errors) err << "error: " << kind << ": " << msg << "\n";
  }
  if (!r.errors.empty()) {
    Json errors = Json::array();
    for (const auto& [kind, msg] : r.errors) errors.push_back(Json{{"kind", kind}, {"message", msg}});
    err << dump_json(Json{{"errors", errors}}) << "\n";
    return kFailed;
  }
  return kSuccess;
}

Element random_block_element(const EigenBlock& b, std::mt19937_64& rng) {
  return b.basis * oracle::gaussian(rng, b.dim());
}

int cmd_nijenhuis(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const auto alg = load_algebra(o.algebra);
  const Vector w = parse_vector(o.element, alg.dim(), "--element");
  const std::int64_t samples = o.samples < 0 ? 32 : o.samples;
  const auto d = decompose(alg, w, tol);
  const auto j = canonical_J(d);
  std::mt19937_64 rng(o.seed);
  Json pairs = Json::array();
  std::vector<std::pair<std::string, double>> residuals;
  double worst = 0.0;
  const auto& blocks = d.blocks();
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a; b < blocks.size(); ++b) {
      double pair_worst = 0.0;
      for (std::int64_t k = 0; k < samples; ++k) {
        const Element u = random_block_element(blocks[a], rng);
        const Element v = random_block_element(blocks[b], rng);
        pair_worst = std::max(pair_worst, nijenhuis_orbit(alg, d, j, u, v).norm());
      }
      worst = std::max(worst, pair_worst);
      pairs.push_back(Json{{"lambda", blocks[a].mu}, {"mu", blocks[b].mu}, {"max_norm", pair_worst}});
    }
  }
  const double sweep = nijenhuis_sweep(alg, d, j);
  residuals.emplace_back("nijenhuis_sampled", worst);
  residuals.emplace_back("nijenhuis_basis_sweep", sweep);
  ReportEnvelope env("nijenhuis");
  env.inputs = base_inputs(o, tol);
  env.inputs["element"] = to_json(w);
  env.inputs["samples"] = samples;
  env.inputs["seed"] = o.seed;
  env.payload["block_pairs"] = std::move(pairs);
  env.payload["max_residual"] = std::max(worst, sweep);
  env.residuals = residuals;
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    err << "Nijenhuis tensor over " << blocks.size() << " block(s)\n";
    print_residuals(err, residuals);
  }
  return kSuccess;
}

int cmd_average(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const auto alg = load_algebra(o.algebra);
  const auto p0 = load_product(alg, o.product);
  const std::int64_t samples = o.samples < 0 ? 100000 : o.samples;
  if (samples <= 0) throw UsageError("--samples must be positive");
  const auto sampler = HaarSampler::for_algebra(alg);
  const auto avg = haar_average(alg, p0, sampler, samples, o.seed, o.threads);
  const double before = invariance_residual(alg, p0);
  const double after = invariance_residual(alg, avg);
  ReportEnvelope env("average");
  env.inputs = base_inputs(o, tol);
  env.inputs["product"] = o.product;
  env.inputs["samples"] = samples;
  env.inputs["seed"] = o.seed;
  env.payload["input"] = to_json(p0);
  env.payload["averaged"] = to_json(avg);
  env.payload["input_invariance_residual"] = before;
  env.payload["invariance_residual"] = after;
  env.payload["monte_carlo_scale"] = 5.0 / std::sqrt(static_cast<double>(samples));
  env.residuals = {{"invariance_residual", after}};
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    print_matrix(err, "averaged gram:", avg.gram());
    err << "invariance residual: " << fmt(before) << " -> " << fmt(after) << "\n";
  }
  return kSuccess;
}

int cmd_poisson(const Options& o, double tol, std::ostream& out, std::ostream& err) {
  const auto alg = load_algebra(o.algebra);
  const DualVector alpha{parse_vector(o.alpha, alg.dim(), "--alpha")};
  const std::int64_t samples = o.samples < 0 ? 16 : o.samples;
  std::mt19937_64 rng(o.seed);
  const int n = alg.dim();
  double jacobi = 0.0, antisymmetry = 0.0, consistency = 0.0, invariance = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    const Element u = oracle::gaussian(rng, n);
    const Element v = oracle::gaussian(rng, n);
    const Element q = oracle::gaussian(rng, n);
    const auto fu = PoissonFunction::linear(u);
    const auto fv = PoissonFunction::linear(v);
    jacobi = std::max(jacobi, jacobi_poisson_residual(alg, u, v, q, alpha));
    const double uv = lie_poisson(alg, fu, fv, alpha);
    antisymmetry = std::max(antisymmetry, std::abs(uv + lie_poisson(alg, fv, fu, alpha)));
    consistency = std::max(consistency, std::abs(uv - kks(alg, alpha, u, v)));
    invariance = std::max(invariance, kks_invariance_residual(alg, alpha, u, v, 0.5 * q, 0.5));
  }
  const auto leaf = leaf_tangent_residual(alg, alpha);
  std::vector<std::pair<std::string, double>> residuals{
      {"jacobi", jacobi},           {"antisymmetry", antisymmetry},
      {"kks_consistency", consistency}, {"leaf_tangent", leaf.residual},
      {"kks_invariance", invariance}};
  ReportEnvelope env("poisson-check");
  env.inputs = base_inputs(o, tol);
  env.inputs["alpha"] = to_json(alpha.coeffs);
  env.inputs["samples"] = samples;
  env.inputs["seed"] = o.seed;
  env.payload["bivector"] = to_json(poisson_bivector(alg, alpha));
  env.payload["leaf_dim"] = leaf.span_dim;
  Json res = Json::object();
  for (const auto& [name, value] : residuals) res[name] = value;
  env.payload["residuals"] = std::move(res);
  env.residuals = residuals;
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    err << "coadjoint orbit dimension: " << leaf.span_dim << "\n";
    print_residuals(err, residuals);
  }
  return kSuccess;
}

int cmd_verify_all(const Options& o, std::ostream& out, std::ostream& err) {
  const auto results = run_acceptance(o.seed);
  bool all = true;
  Json criteria = Json::array();
  ReportEnvelope env("verify-all");
  for (const auto& r : results) {
    all = all && r.passed;
    criteria.push_back(to_json(r));
    for (const auto& c : r.checks) {
      if (c.threshold > 0.0) env.residuals.emplace_back(std::to_string(r.id) + "." + c.name, c.value);
    }
  }
  env.inputs["seed"] = o.seed;
  env.payload["all_passed"] = all;
  env.payload["criteria"] = std::move(criteria);
  out << dump_json(env.to_json()) << "\n";
  if (o.pretty) {
    for (const auto& r : results) err << summary_line(r) << "\n";
  }
  return all ? kSuccess : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"orbitkit: semi-Kaehler structures on (co)adjoint orbits", "orbitkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;
  double tol_flag = 0.0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol_flag, "Spectral tolerance (default ORBITKIT_TOL or 1e-9)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--pretty", o.pretty, "Human-readable tables on stderr");
  };

  auto* classify = app.add_subcommand("classify", "Skew-symmetry classification of ad_w");
  classify->add_option("--algebra", o.algebra, "Catalog name or algebra JSON file")->required();
  classify->add_option("--element", o.element, "Comma-separated coordinates")->required();
  add_common(classify);

  auto* orbit = app.add_subcommand("orbit", "Full orbit structure report");
  orbit->add_option("--algebra", o.algebra, "Catalog name or algebra JSON file")->required();
  orbit->add_option("--element", o.element, "Comma-separated coordinates")->required();
  orbit->add_option("--product", o.product, "killing, diag:a,b,..., or a JSON file with \"gram\"");
  orbit->add_option("--s", o.s, "identity or scale:c");
  orbit->add_option("--seed", o.seed, "Seed for sampled residuals");
  add_common(orbit);

  auto* nij = app.add_subcommand("nijenhuis", "Orbit Nijenhuis tensor over sampled block pairs");
  nij->add_option("--algebra", o.algebra, "Catalog name or algebra JSON file")->required();
  nij->add_option("--element", o.element, "Comma-separated coordinates")->required();
  nij->add_option("--samples", o.samples, "Samples per block pair (default 32)")
      ->check(CLI::NonNegativeNumber);
  nij->add_option("--seed", o.seed, "Sampling seed");
  add_common(nij);

  auto* avg = app.add_subcommand("average", "Haar average of a scalar product");
  avg->add_option("--algebra", o.algebra, "su2, so3 or su3")->required();
  avg->add_option("--product", o.product, "killing, diag:a,b,..., or a JSON file with \"gram\"")
      ->required();
  avg->add_option("--samples", o.samples, "Number of Haar samples (default 100000)");
  avg->add_option("--seed", o.seed, "Sampling seed");
  avg->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  add_common(avg);

  auto* pc = app.add_subcommand("poisson-check", "Lie-Poisson and KKS residuals at alpha");
  pc->add_option("--algebra", o.algebra, "Catalog name or algebra JSON file")->required();
  pc->add_option("--alpha", o.alpha, "Comma-separated dual coordinates")->required();
  pc->add_option("--samples", o.samples, "Random linear triples (default 16)")
      ->check(CLI::NonNegativeNumber);
  pc->add_option("--seed", o.seed, "Sampling seed");
  add_common(pc);

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite over the catalog");
  verify->add_option("--seed", o.seed, "Seed for every sampled check");
  verify->add_flag("--pretty", o.pretty, "One pass/fail line per criterion on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << dump_json(error_json("UsageError", e.what())) << "\n";
    return kUsage;
  }

  try {
    const double tol = tol_flag > 0.0 ? tol_flag : default_tolerance();
    if (classify->parsed()) return cmd_classify(o, tol, out, err);
    if (orbit->parsed()) return cmd_orbit(o, tol, out, err);
    if (nij->parsed()) return cmd_nijenhuis(o, tol, out, err);
    if (avg->parsed()) return cmd_average(o, tol, out, err);
    if (pc->parsed()) return cmd_poisson(o, tol, out, err);
    if (verify->parsed()) return cmd_verify_all(o, out, err);
  } catch (const UsageError& e) {
    err << dump_json(error_json("UsageError", e.what())) << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << dump_json(error_json(e.kind(), e.what())) << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << dump_json(error_json("InternalError", e.what())) << "\n";
    return kFailed;
  }
  err << dump_json(error_json("UsageError", "no subcommand")) << "\n";
  return kUsage;
}

}  // namespace orbitkit::cli
