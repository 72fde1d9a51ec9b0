#include "metacyclic/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace metacyclic::cli {

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (const auto& item : value) out += (out.empty() ? "" : " ") + scalar_text(item);
    return out;
  }
  return value.dump();
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Report& report) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = report.command;
  doc["config"] = report.config;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json item;
    item["claim"] = r.claim;
    item["status"] = to_string(r.status);
    for (const auto& [key, value] : r.fields.items()) item[key] = value;
    records.push_back(std::move(item));
  }
  doc["records"] = std::move(records);
  for (const auto& [key, value] : report.extra.items()) doc[key] = value;
  Json summary;
  for (Status s : {Status::Pass, Status::Fail, Status::Finding, Status::Info, Status::BudgetExceeded})
    summary[to_string(s)] = std::count_if(report.records.begin(), report.records.end(),
                                          [s](const Record& r) { return r.status == s; });
  summary["exit_code"] = exit_code(report);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
  if (report.csv) return *report.csv;
  std::vector<std::string> columns;
  for (const auto& r : report.records)
    for (const auto& [key, value] : r.fields.items())
      if (value.is_primitive() || value.is_array())
        if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::ostringstream out;
  out << "claim,status";
  for (const auto& c : columns) out << ',' << csv_cell(c);
  out << '\n';
  for (const auto& r : report.records) {
    out << csv_cell(r.claim) << ',' << to_string(r.status);
    for (const auto& c : columns) {
      out << ',';
      if (r.fields.contains(c)) out << csv_cell(scalar_text(r.fields[c]));
    }
    out << '\n';
  }
  return out.str();
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << r.claim << ": " << to_string(r.status);
    for (const auto& [key, value] : r.fields.items()) {
      if (value.is_object()) {
        out << ' ' << key << '=' << value.dump();
      } else {
        out << ' ' << key << '=' << (value.is_string() && value.get<std::string>().find(' ') != std::string::npos
                                         ? '"' + scalar_text(value) + '"'
                                         : value.is_array() ? '[' + scalar_text(value) + ']' : scalar_text(value));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Finding: return "FINDING";
    case Status::Info: return "INFO";
    case Status::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "INFO";
}

bool Report::any(Status status) const noexcept {
  return std::any_of(records.begin(), records.end(), [status](const Record& r) { return r.status == status; });
}

int exit_code(const Report& report) noexcept {
  if (report.any(Status::Fail)) return kExitDiscrepancy;
  if (report.any(Status::BudgetExceeded)) return kExitBudget;
  return kExitConsistent;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return render_json(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Text: return render_text(report);
  }
  return render_text(report);
}

}  // namespace metacyclic::cli
