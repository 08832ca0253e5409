#ifndef LIEMETRIC_CLI_HPP
#define LIEMETRIC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liemetric/sampling.hpp"

namespace liemetric {

enum class OutputFormat { Csv, Report };

struct RunConfig {
  std::string command;                 // check | metrize | geodesic | go-demo | verify
  std::optional<std::string> input;    // catalog name or algebra file
  std::uint64_t seed = kDefaultSeed;
  int steps = 1000;
  double t_end = 1.0;
  double kappa = 0.0;
  std::vector<double> alpha;           // geodesic initial fiber coordinate
  std::vector<double> v{1.0, 0.0};     // go-demo initial velocity
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::Csv;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUndetermined = 2;
}  // namespace exit_code

/// Executes one command. Documents go to `out`, diagnostics to `err`.
/// `verify` returns kInputError when any criterion fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "1,2.5,-3" -> {1, 2.5, -3}; ParseError on malformed input.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace liemetric

#endif  // LIEMETRIC_CLI_HPP
