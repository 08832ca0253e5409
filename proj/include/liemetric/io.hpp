#ifndef LIEMETRIC_IO_HPP
#define LIEMETRIC_IO_HPP

#include <json.hpp>
#include <string>
#include <string_view>

#include "liemetric/homogeneous_go.hpp"
#include "liemetric/lie_algebra.hpp"
#include "liemetric/metrizability.hpp"

namespace liemetric {

// Algebra documents are JSON:
//
//   {
//     "dim": 3,
//     "labels": ["e1", "e2", "e3"],
//     "brackets": [{"i": 1, "j": 2, "k": 3, "value": 1.0}],
//     "rep": [[0,1,0, 0,0,0, 0,0,0], ...]      (optional)
//   }
//
// Bracket indices are 1-based; only i < j is needed (i > j entries are
// accepted and antisymmetrized). Each `rep` entry is one m x m basis matrix
// flattened row-major, one per basis element, in basis order.

/// Parses an algebra document. ParseError carries the line/column of a
/// syntax error or the path of the offending field.
LieAlgebra parse_algebra(std::string_view text);

/// Catalog name or path to an algebra document.
LieAlgebra load_algebra(const std::string& name_or_path);

nlohmann::json algebra_to_json(const LieAlgebra& algebra);

/// status, witness (row-major), certificate, lambda_min_achieved,
/// subspace_dim, iterations, seed. Absent witness/certificate are null.
nlohmann::json report_to_json(const FeasibilityReport& report);

nlohmann::json report_to_json(const GoMetrizabilityReport& report);

/// Two-space indented dump followed by a newline.
std::string dump_document(const nlohmann::json& doc);

}  // namespace liemetric

#endif  // LIEMETRIC_IO_HPP
