#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partid/report.hpp"

namespace partid::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_io = 3,
  exit_bad_partition = 4,
};

enum class Command { verify, table, enumerate, map };
enum class Format { json, csv, text };

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

struct RunConfig {
  Command command = Command::verify;
  Range n_range{1, 20};
  Range m_range{1, 6};
  std::vector<IdentityId> identities;  // empty: command default
  std::vector<int> signs{1, -1};
  unsigned z_samples = 4;
  unsigned points = 4;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  Format format = Format::json;
  std::optional<std::string> output_path;
  bool timing = false;

  // enumerate
  bool decorated = false;
  bool weights = false;

  // map
  std::string parts;
  bool inverse = false;
};

/// "a..b" or "a".
std::optional<Range> parse_range(std::string const& s);

/// Comma-separated tags or group names; throws std::invalid_argument on an
/// unknown name.
std::vector<IdentityId> parse_identities(std::string const& s);

/// Builds every report a verify/table run would emit, in output order.
std::vector<IdentityReport> run_checks(RunConfig const& config);

int run(RunConfig const& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; returns the process exit code.
int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace partid::cli
