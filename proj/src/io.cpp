#include "liemetric/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "liemetric/errors.hpp"

namespace liemetric {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key, const std::string& path) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError("missing field '" + path + key + "'");
  }
  return doc.at(key);
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError("field '" + path + "' must be an integer");
  return v.get<int>();
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError("field '" + path + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError("field '" + path + "' must be finite");
  return d;
}

json flatten(const Matrix& m) {
  json row = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
  }
  return row;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");

  const int dim = as_int(require_field(doc, "dim", ""), "dim");
  if (dim < 1) throw ParseError("field 'dim' must be positive");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || static_cast<int>(l.size()) != dim) {
      throw ParseError("field 'labels' must be an array of " + std::to_string(dim) + " strings");
    }
    for (size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) {
        throw ParseError("field 'labels[" + std::to_string(i) + "]' must be a string");
      }
      labels.push_back(l[i].get<std::string>());
    }
  }

  const json& brackets = require_field(doc, "brackets", "");
  if (!brackets.is_array()) throw ParseError("field 'brackets' must be an array");
  std::vector<BracketEntry> entries;
  for (size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "brackets[" + std::to_string(b) + "].";
    const json& rec = brackets[b];
    BracketEntry e{};
    e.i = as_int(require_field(rec, "i", path), path + "i");
    e.j = as_int(require_field(rec, "j", path), path + "j");
    e.k = as_int(require_field(rec, "k", path), path + "k");
    e.value = as_real(require_field(rec, "value", path), path + "value");
    for (const auto& [idx, name] : {std::pair{e.i, "i"}, {e.j, "j"}, {e.k, "k"}}) {
      if (idx < 1 || idx > dim) {
        throw ParseError("field '" + path + name + "' = " + std::to_string(idx) +
                         " is outside 1.." + std::to_string(dim));
      }
    }
    if (e.i == e.j && e.value != 0.0) {
      throw ParseError("field '" + path + "value': [e_i, e_i] must vanish");
    }
    --e.i;
    --e.j;
    --e.k;
    if (e.i > e.j) {
      std::swap(e.i, e.j);
      e.value = -e.value;
    }
    entries.push_back(e);
  }

  std::optional<MatrixRep> rep;
  if (doc.contains("rep") && !doc.at("rep").is_null()) {
    const json& r = doc.at("rep");
    if (!r.is_array() || static_cast<int>(r.size()) != dim) {
      throw ParseError("field 'rep' must be an array of " + std::to_string(dim) + " matrices");
    }
    MatrixRep parsed;
    for (size_t i = 0; i < r.size(); ++i) {
      const std::string path = "rep[" + std::to_string(i) + "]";
      if (!r[i].is_array() || r[i].empty()) throw ParseError("field '" + path + "' must be a non-empty array");
      const auto m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r[i].size()))));
      if (static_cast<size_t>(m * m) != r[i].size()) {
        throw ParseError("field '" + path + "' has " + std::to_string(r[i].size()) +
                         " entries, not a square count");
      }
      if (i == 0) parsed.size = m;
      if (m != parsed.size) throw ParseError("field '" + path + "' has a different size");
      Matrix e(m, m);
      for (int k = 0; k < m * m; ++k) {
        e(k / m, k % m) = as_real(r[i][static_cast<size_t>(k)], path + "[" + std::to_string(k) + "]");
      }
      parsed.basis.push_back(std::move(e));
    }
    rep = std::move(parsed);
  }

  try {
    return from_brackets(dim, entries, std::move(labels), std::move(rep));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

LieAlgebra load_algebra(const std::string& name_or_path) {
  try {
    return catalog(name_or_path);
  } catch (const UnknownName&) {
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw ParseError("'" + name_or_path + "' is neither a catalog name nor a readable file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

json algebra_to_json(const LieAlgebra& algebra) {
  json doc;
  const int n = algebra.dim();
  doc["dim"] = n;
  doc["labels"] = algebra.labels();
  json brackets = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = algebra.c(i, j, k);
        if (v != 0.0) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", v}});
      }
    }
  }
  doc["brackets"] = brackets;
  if (algebra.has_rep()) {
    json rep = json::array();
    for (const auto& e : algebra.rep()->basis) rep.push_back(flatten(e));
    doc["rep"] = rep;
  }
  return doc;
}

json report_to_json(const FeasibilityReport& report) {
  json doc;
  doc["status"] = to_string(report.status);
  doc["witness"] = report.witness ? flatten(report.witness->matrix()) : json(nullptr);
  doc["certificate"] = report.certificate ? vector_json(*report.certificate) : json(nullptr);
  doc["lambda_min_achieved"] = report.lambda_min_achieved;
  doc["subspace_dim"] = report.subspace_dim;
  doc["iterations"] = report.iterations;
  doc["seed"] = report.seed;
  return doc;
}

json report_to_json(const GoMetrizabilityReport& report) {
  json doc;
  doc["status"] = to_string(report.verdict);
  doc["kappa"] = report.kappa;
  doc["max_residual"] = report.max_residual;
  doc["samples"] = report.samples;
  return doc;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace liemetric
