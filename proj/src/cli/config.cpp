#include "metacyclic/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <thread>

#include "CLI11.hpp"

namespace metacyclic::cli {

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Exponent, "exponent"},         {Command::Harborth, "harborth"},
    {Command::Classify, "classify"},         {Command::CountFailing, "count-failing"},
    {Command::FullProduct, "full-product"},  {Command::Weighted, "weighted"},
    {Command::Egz, "egz"},                   {Command::LemmaCheck, "lemma-check"},
    {Command::ReproducePaper, "reproduce-paper"},
};

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw UsageError("not an integer: '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(Command command) {
  for (const auto& c : kCommands)
    if (c.command == command) return c.name;
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (const auto& c : kCommands)
    if (name == c.name) return c.command;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
  }
  return "text";
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) throw UsageError("empty item in integer list");
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(trim(item.substr(0, dots)));
    const int hi = parse_int(trim(item.substr(dots + 2)));
    if (hi < lo) throw UsageError("empty range '" + std::string(item) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> MSelection::values_for(int n) const {
  std::vector<int> out;
  for (int m = 0; m < n; ++m) {
    switch (filter) {
      case MFilter::All: out.push_back(m); break;
      case MFilter::Even:
        if (m % 2 == 0) out.push_back(m);
        break;
      case MFilter::Odd:
        if (m % 2 == 1) out.push_back(m);
        break;
      case MFilter::Explicit:
        if (std::binary_search(values.begin(), values.end(), m)) out.push_back(m);
        break;
    }
  }
  return out;
}

MSelection parse_m_selection(std::string_view text) {
  text = trim(text);
  if (text == "all") return {};
  if (text == "even") return {MFilter::Even, {}};
  if (text == "odd") return {MFilter::Odd, {}};
  return {MFilter::Explicit, parse_int_list(text)};
}

void RunConfig::validate() const {
  if (budget == 0) throw UsageError("--budget must be positive");
  if (workers < 1) throw UsageError("--workers must be at least 1");
  for (int n : n_values)
    if (n < 2 || n > kMaxBitsetN) throw UsageError("--n values must lie in [2, 32], got " + std::to_string(n));
  if (m.filter == MFilter::Explicit)
    for (int v : m.values)
      if (v < 0) throw UsageError("--m values must be non-negative");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("METACYCLIC_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultOpBudget;
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Zero-product constants of the metacyclic groups H_{n,m} = <x, y | x^n, y^2 = x^m, yx = x^-1 y>",
               "metacyclic"};
  std::vector<std::string> names;
  for (const auto& c : kCommands) names.emplace_back(c.name);

  std::string command;
  std::string n_text;
  std::string m_text = "all";
  std::string method = "both";
  std::string output = "text";
  RunConfig config;
  config.budget = default_budget();
  config.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int k_max = 0;

  app.add_option("command", command, "One of: exponent, harborth, classify, count-failing, full-product, weighted, "
                                     "egz, lemma-check, reproduce-paper")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--n", n_text, "n values: 4, 2..8 or 2,4,6");
  app.add_option("--m", m_text, "m values: all, even, odd, or a list/range (default all)");
  app.add_option("--method", method, "harborth: formula, brute or both (default both)")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  app.add_option("--budget", config.budget, "Maximum primitive operations (default $METACYCLIC_BUDGET or 2e10)");
  app.add_option("--workers", config.workers, "Worker threads");
  app.add_option("--output", output, "json, csv or text (default text)")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", config.out_path, "Write the report to this file instead of standard output");
  app.add_option("--only", config.only, "reproduce-paper: claim groups to run (comma separated)")->delimiter(',');
  app.add_flag("--verify", config.verify, "count-failing: also count by exhaustive enumeration");
  app.add_option("--subset", config.subset, "classify: one subset, e.g. \"1, x^2, y, x^2*y\"");
  app.add_option("--k-max", k_max, "egz: largest sequence length searched (default 3n)");

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      outcome.message = app.help();
      return outcome;
    }
    outcome.exit_code = kExitInvalidInput;
    outcome.message = std::string(e.what()) + "\n\n" + app.help();
    return outcome;
  }

  try {
    config.command = parse_command(command);
    if (!n_text.empty()) config.n_values = parse_int_list(n_text);
    config.m = parse_m_selection(m_text);
    config.method = method == "formula" ? Method::ClosedForm : method == "brute" ? Method::BruteForce : Method::Both;
    config.output = output == "json" ? OutputFormat::Json : output == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    if (app.count("--k-max") > 0) config.k_max = k_max;
    config.validate();
  } catch (const UsageError& e) {
    outcome.exit_code = kExitInvalidInput;
    outcome.message = std::string(e.what()) + "\n\n" + app.help();
    return outcome;
  }
  outcome.config = std::move(config);
  return outcome;
}

}  // namespace metacyclic::cli
