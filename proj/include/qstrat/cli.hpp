#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qstrat {

struct JobSpec {
  std::string command;                 // elab, limit, poincare, strata, steenrod-check, classical, toric
  std::vector<std::string> arguments;  // positional: classical/toric subcommand and its operand
  std::string group;
  std::string space = "point";
  std::uint32_t ell = 2;
  int degree = 12;
  bool subdivide = false;
  bool reduced = false;
  int fit_max = 24;
  unsigned threads = 1;
};

/// Runs one job, writing JSON to `out` and error JSON to `err`. Exit codes:
/// 0 ok, 1 failed check, 2 invalid input, 3 Unfitted or BoundTooSmall.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qstrat
