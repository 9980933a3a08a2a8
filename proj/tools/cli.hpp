#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toric/soliton.hpp"

namespace toric::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kHypothesisFails = 3,
  kInconclusive = 4,
};

int exit_code(Conclusion c) noexcept;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string catalog;
  int grid = 20;
  std::optional<double> tol;  // command-specific default when unset
  double margin = 1e-3;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t points = 0;  // > 0 switches the grid for seeded random points
  std::vector<double> a;
  bool from_soliton = false;

  /// Throws Error(BadParams) when a field is out of range.
  void validate() const;
};

/// Runs one command; args exclude the program name. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
