#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localh/rational.hpp"

namespace localh::cli {

enum class OutputFormat { JsonLines, Csv, Pretty };

/// One command per invocation; selectors and overrides mirror the CLI flags.
struct RunConfig {
  std::string command;  // xi | local-h | certify | ms-test | chebyshev |
                        // narayana-check | transfer-check
  std::optional<std::string> type;
  std::optional<int> rank;
  std::optional<std::pair<int, int>> ranks;
  std::optional<int> param;
  int depth = 30;
  long precision_bits = 128;
  OutputFormat format = OutputFormat::Pretty;
  bool show_roots = false;
  bool timings = false;  // default off: keeps output byte-identical across runs
  std::optional<std::string> seq_name;
  std::optional<std::vector<Rational>> explicit_seq;
  std::optional<int> cheb_n;
  std::optional<std::string> out_path;
};

/// Exit code contract: 0 = all checks passed, 1 = a mathematical check
/// failed, 2 = usage or validation error (diagnostic on err).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument
std::pair<int, int> parse_range(const std::string& s);  // "A..B"

}  // namespace localh::cli
