#include "liemetric/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "liemetric/acceptance.hpp"
#include "liemetric/errors.hpp"
#include "liemetric/homogeneous_go.hpp"
#include "liemetric/io.hpp"
#include "liemetric/metrizability.hpp"
#include "liemetric/spray_geometry.hpp"

namespace liemetric {

namespace {

using nlohmann::json;

LieAlgebra require_algebra(const RunConfig& config) {
  if (!config.input) throw ParseError("command '" + config.command + "' needs an algebra");
  return load_algebra(*config.input);
}

// Writes to --out when given, otherwise to `fallback`.
template <typename Writer>
void emit(const RunConfig& config, std::ostream& fallback, Writer&& write) {
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) throw ParseError("cannot open output file '" + *config.output_path + "'");
    write(file);
  } else {
    write(fallback);
  }
}

json flatten(const Matrix& m) {
  json row = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
  }
  return row;
}

int run_check(const RunConfig& config, std::ostream& out) {
  const LieAlgebra algebra = require_algebra(config);
  const RepResiduals rep = rep_residuals(algebra);
  const double jacobi = jacobi_residual(algebra);
  json doc;
  doc["algebra"] = *config.input;
  doc["dim"] = algebra.dim();
  doc["jacobi_residual"] = jacobi;
  doc["has_rep"] = algebra.has_rep();
  doc["closure_residual"] = rep.closure;
  doc["consistency_residual"] = rep.consistency;
  doc["jacobi_ok"] = jacobi <= 1e-12 * std::max(1.0, algebra.max_abs_constant());
  out << dump_document(doc);
  return exit_code::kOk;
}

int run_metrize(const RunConfig& config, std::ostream& out) {
  const LieAlgebra algebra = require_algebra(config);
  const FeasibilityReport report = invariant_metrizability(algebra, {config.seed});
  emit(config, out, [&](std::ostream& o) { o << dump_document(report_to_json(report)); });
  return report.status == Verdict::Undetermined ? exit_code::kUndetermined : exit_code::kOk;
}

int run_geodesic(const RunConfig& config, std::ostream& out) {
  const LieAlgebra algebra = require_algebra(config);
  if (!algebra.has_rep()) throw MissingRep("geodesic needs a matrix representation");
  if (static_cast<int>(config.alpha.size()) != algebra.dim()) {
    throw ParseError("--alpha needs " + std::to_string(algebra.dim()) + " components");
  }
  const AlgebraElement alpha = Eigen::Map<const Vector>(config.alpha.data(), algebra.dim());
  const int m = algebra.rep()->size;
  const GroupPoint x0{Matrix::Identity(m, m)};
  const GeodesicTrajectory trajectory =
      integrate_canonical_sode(x0, algebra.rep()->of(alpha), config.t_end, config.steps);
  if (config.format == OutputFormat::Csv) {
    emit(config, out, [&](std::ostream& o) { write_trajectory_csv(o, trajectory); });
  } else {
    const Matrix exact = exp_orbit(algebra, x0, alpha, config.t_end).matrix;
    json doc;
    doc["t_end"] = config.t_end;
    doc["steps"] = config.steps;
    doc["endpoint"] = flatten(trajectory.points.back().matrix);
    doc["exp_orbit_error"] = (trajectory.points.back().matrix - exact).cwiseAbs().maxCoeff();
    emit(config, out, [&](std::ostream& o) { o << dump_document(doc); });
  }
  return exit_code::kOk;
}

int run_go_demo(const RunConfig& config, std::ostream& out) {
  if (config.v.size() != 2) throw ParseError("--v needs 2 components");
  const Vec2 v(config.v[0], config.v[1]);
  const auto states = go_geodesic_ode(config.kappa, {Vec2::Zero(), v}, config.t_end, config.steps);
  json verdict = report_to_json(go_invariant_metrizability(config.kappa));
  verdict["final_position"] = {states.back().position(0), states.back().position(1)};
  verdict["final_velocity"] = {states.back().velocity(0), states.back().velocity(1)};
  if (config.format == OutputFormat::Report) {
    emit(config, out, [&](std::ostream& o) { o << dump_document(verdict); });
    return exit_code::kOk;
  }
  emit(config, out, [&](std::ostream& o) { write_go_csv(o, states, config.t_end); });
  if (config.output_path) out << dump_document(verdict);
  return exit_code::kOk;
}

int run_verify_command(const RunConfig& config, std::ostream& out) {
  const auto results = run_verify(config.seed);
  const std::string text = format_results(results);
  emit(config, out, [&](std::ostream& o) { o << text; });
  for (const auto& r : results) {
    if (!r.passed) return exit_code::kInputError;
  }
  return exit_code::kOk;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = std::min(text.find(',', start), text.size());
    std::string token = text.substr(start, end - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
      throw ParseError("malformed real list '" + text + "'");
    }
    values.push_back(value);
    start = end + 1;
  }
  return values;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.steps < 1) throw InvalidArgument("--steps must be >= 1");
    if (!std::isfinite(config.t_end)) throw InvalidArgument("--t-end must be finite");
    if (config.command == "check") return run_check(config, out);
    if (config.command == "metrize") return run_metrize(config, out);
    if (config.command == "geodesic") return run_geodesic(config, out);
    if (config.command == "go-demo") return run_go_demo(config, out);
    if (config.command == "verify") return run_verify_command(config, out);
    throw UnknownCommand("'" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInputError;
  }
}

}  // namespace liemetric
