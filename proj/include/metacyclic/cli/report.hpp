#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "metacyclic/cli/config.hpp"

namespace metacyclic::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Status {
  Pass,            // agrees with the stated result
  Fail,            // disagrees: a discrepancy
  Finding,         // disagrees with an unverified remark or a conjecture
  Info,            // computed, nothing claimed
  BudgetExceeded,  // not computed within the budget or size caps
};

std::string to_string(Status status);

/// One claim-keyed result.
struct Record {
  std::string claim;
  Status status = Status::Info;
  Json fields = Json::object();
};

struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<Record> records;
  Json extra = Json::object();     // appended to the JSON document
  std::optional<std::string> csv;  // replaces the generic CSV table

  bool any(Status status) const noexcept;
};

/// 1 if any record failed, else 2 if any exceeded the budget, else 0.
int exit_code(const Report& report) noexcept;

/// Deterministic rendering: JSON document with schema_version, CSV with one
/// row per record, or "claim: STATUS key=value ..." lines.
std::string render(const Report& report, OutputFormat format);

}  // namespace metacyclic::cli
