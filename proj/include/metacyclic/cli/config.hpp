#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "metacyclic/context.hpp"
#include "metacyclic/harborth.hpp"

namespace metacyclic::cli {

enum ExitCode : int {
  kExitConsistent = 0,
  kExitDiscrepancy = 1,
  kExitBudget = 2,
  kExitInvalidInput = 3,
};

enum class Command {
  Exponent,
  Harborth,
  Classify,
  CountFailing,
  FullProduct,
  Weighted,
  Egz,
  LemmaCheck,
  ReproducePaper,
};

std::string to_string(Command command);
Command parse_command(std::string_view name);

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat format);

/// Bad flags or values; maps to exit code 3.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer list from "4", "2..8", "2,4,6" or mixtures such as "2..4,8".
/// Sorted, duplicates removed. Throws UsageError when empty or malformed.
std::vector<int> parse_int_list(std::string_view text);

enum class MFilter { All, Even, Odd, Explicit };

/// --m: all (m in [0, n)), even, odd, or an explicit list; explicit values
/// outside [0, n) are skipped for that n.
struct MSelection {
  MFilter filter = MFilter::All;
  std::vector<int> values;

  std::vector<int> values_for(int n) const;
};

MSelection parse_m_selection(std::string_view text);

struct RunConfig {
  Command command = Command::Exponent;
  std::vector<int> n_values;  // empty: the command's default grid
  MSelection m;
  Method method = Method::Both;
  std::uint64_t budget = kDefaultOpBudget;
  int workers = 1;
  OutputFormat output = OutputFormat::Text;
  std::string out_path;            // empty: standard output
  std::vector<std::string> only;   // reproduce-paper claim groups
  bool verify = false;             // count-failing: also enumerate
  std::string subset;              // classify: a single subset instead of all
  std::optional<int> k_max;        // egz: search limit, default 3n

  /// Throws UsageError unless budget > 0, workers >= 1, every n in [2, 32].
  void validate() const;
};

/// Default budget: METACYCLIC_BUDGET when set to a positive integer, else
/// kDefaultOpBudget.
std::uint64_t default_budget();

struct ParseOutcome {
  std::optional<RunConfig> config;  // set when the command should run
  int exit_code = kExitConsistent;
  std::string message;              // help or error text
};

ParseOutcome parse_command_line(int argc, const char* const* argv);

}  // namespace metacyclic::cli
