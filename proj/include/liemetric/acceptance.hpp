#ifndef LIEMETRIC_ACCEPTANCE_HPP
#define LIEMETRIC_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liemetric/sampling.hpp"

namespace liemetric {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(std::uint64_t seed)> run;
};

/// Criteria 1-12: verdicts, residual bounds, integrator oracles and the
/// homogeneous-space example, each with its tolerance fixed in code.
std::vector<Criterion> acceptance_criteria();

/// Runs criteria 1-12, then criterion 13, which reruns 1-12 and compares the
/// two rendered reports byte for byte.
std::vector<CriterionResult> run_verify(std::uint64_t seed = kDefaultSeed);

/// One "[PASS]/[FAIL] NN name: detail" line per criterion.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace liemetric

#endif  // LIEMETRIC_ACCEPTANCE_HPP
