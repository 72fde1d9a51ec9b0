#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metacyclic/cli/config.hpp"
#include "metacyclic/cli/report.hpp"
#include "metacyclic/context.hpp"

namespace metacyclic::cli {

/// Runs one analysis command over its (n, m) grid. Budget overruns are
/// recorded per claim; malformed requests throw UsageError.
Report execute(const RunConfig& config, const Context& ctx);

/// Claim groups accepted by --only, in manifest order.
const std::vector<std::string>& claim_groups();

/// Every acceptance check as a PASS/FAIL manifest keyed by claim id. --n
/// restricts the grids, --only selects claim groups.
Report reproduce_paper(const RunConfig& config, const Context& ctx);

/// Executes, writes the rendered report to config.out_path or `out`, and
/// returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and runs; usage problems go to `err` with exit code 3.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace metacyclic::cli
