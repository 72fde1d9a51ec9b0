#include "metacyclic/cli/run.hpp"

#include <fstream>
#include <numeric>
#include <ostream>

#include "metacyclic/egz.hpp"
#include "metacyclic/harborth.hpp"
#include "metacyclic/lemma_lab.hpp"

namespace metacyclic::cli {

namespace {

std::string cell(const char* prefix, int n, int m) {
  return std::string(prefix) + "_n" + std::to_string(n) + "_m" + std::to_string(m);
}

bool both_even(int n, int m) { return n % 2 == 0 && m % 2 == 0; }

std::vector<int> n_grid(const RunConfig& config, std::vector<int> fallback) {
  return config.n_values.empty() ? fallback : config.n_values;
}

template <class Keep>
std::vector<std::pair<int, int>> grid(const RunConfig& config, const std::vector<int>& fallback, Keep keep) {
  std::vector<std::pair<int, int>> cells;
  for (int n : n_grid(config, fallback))
    for (int m : config.m.values_for(n))
      if (keep(n, m)) cells.emplace_back(n, m);
  if (cells.empty())
    throw UsageError(to_string(config.command) + ": no (n, m) pair in the requested grid is applicable");
  return cells;
}

std::vector<std::pair<int, int>> grid(const RunConfig& config, const std::vector<int>& fallback) {
  return grid(config, fallback, [](int, int) { return true; });
}

/// Runs fn, turning a budget overrun into a BUDGET_EXCEEDED record.
template <class Fn>
void guarded(Report& report, const std::string& claim, Fn&& fn) {
  try {
    fn();
  } catch (const BudgetExceeded& e) {
    report.records.push_back({claim, Status::BudgetExceeded, Json{{"error", e.what()}}});
  }
}

Json base_fields(const GroupParams& g) {
  return Json{{"n", g.n()}, {"m", g.m()}, {"exp", exponent(g)}};
}

int iterated_order(const GroupParams& g, Element e) {
  Element acc = e;
  int k = 1;
  while (!(acc == kIdentity)) {
    acc = multiply(g, acc, e);
    ++k;
  }
  return k;
}

void run_exponent(const RunConfig& config, Report& report) {
  for (auto [n, m] : grid(config, {2, 3, 4, 5, 6, 7, 8})) {
    const GroupParams g(n, m);
    int lcm = 1;
    for (int i = 0; i < g.order(); ++i) lcm = std::lcm(lcm, iterated_order(g, element_from_index(g, i)));
    Json f = base_fields(g);
    f["lcm_of_orders"] = lcm;
    f["is_group"] = is_group(g);
    report.records.push_back({cell("exponent", n, m), lcm == exponent(g) ? Status::Pass : Status::Fail, f});
  }
}

Json per_k_json(const HarborthResult& r) {
  Json out = Json::object();
  for (const auto& [k, status] : r.per_k_status) {
    Json item{{"all_pass", status.all_pass}};
    if (status.first_failing) item["first_failing"] = status.first_failing->to_string();
    out[std::to_string(k)] = std::move(item);
  }
  return out;
}

void run_harborth(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {2, 3, 4, 5, 6, 7, 8})) {
    const GroupParams g(n, m);
    const std::string claim = cell("main_theorem", n, m);
    guarded(report, claim, [&] {
      const HarborthResult r = harborth(g, config.method, ctx);
      Json f = base_fields(g);
      f["g_closed"] = r.closed_form ? Json(*r.closed_form) : Json();
      f["g_brute"] = r.brute_force ? Json(*r.brute_force) : Json();
      Status status = Status::Info;
      if (config.method == Method::Both) {
        f["agree"] = !r.discrepancy();
        status = r.discrepancy() ? Status::Fail : Status::Pass;
      }
      if (config.method != Method::ClosedForm) f["per_k"] = per_k_json(r);
      report.records.push_back({claim, status, f});
    });
  }
}

Json tally_json(const ClassificationTally& t) {
  Json per_form = Json::object();
  for (const auto& [code, count] : t.per_form) per_form[to_string(code)] = count;
  Json f{{"size", t.size},
         {"total", t.total},
         {"failing_by_search", t.failing_by_search},
         {"failing_by_form", t.failing_by_form},
         {"mismatches", t.mismatches},
         {"per_form", per_form}};
  f["first_mismatch"] = t.first_mismatch ? Json(t.first_mismatch->to_string()) : Json();
  return f;
}

void run_classify(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {2, 4, 6, 8}, both_even)) {
    const GroupParams g(n, m);
    if (!config.subset.empty()) {
      Subset s(g, 0);
      try {
        s = Subset::parse(g, config.subset);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--subset: ") + e.what());
      }
      if (s.size() != n && s.size() != n + 1)
        throw UsageError("--subset must have n or n+1 elements for n = " + std::to_string(n));
      const std::string claim = cell("classification", n, m) + "_subset";
      guarded(report, claim, [&] {
        const FailureForm form = s.size() == n ? classify_size_n(s) : classify_size_n_plus_1(s);
        const bool passes = subset_passes(s, ctx);
        Json f = base_fields(g);
        f["subset"] = s.to_string();
        f["form"] = to_string(form.code);
        f["witness"] = form.witness ? Json(form.witness->to_string()) : Json();
        f["passes"] = passes;
        report.records.push_back({claim, form.fails() == !passes ? Status::Pass : Status::Fail, f});
      });
      continue;
    }
    for (int size : {n, n + 1}) {
      const std::string claim = cell("classification", n, m) + (size == n ? "_size_n" : "_size_n1");
      guarded(report, claim, [&] {
        const ClassificationTally t = classify_exhaustive(g, size, ctx);
        Json f = base_fields(g);
        for (const auto& [key, value] : tally_json(t).items()) f[key] = value;
        report.records.push_back({claim, t.mismatches == 0 ? Status::Pass : Status::Fail, f});
      });
    }
  }
}

void run_count_failing(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {2, 4, 6, 8}, both_even)) {
    const GroupParams g(n, m);
    const std::string claim = cell("count_failing", n, m);
    guarded(report, claim, [&] {
      const FailingFraction frac = failing_fraction_report(g, n, ctx);
      Json f = base_fields(g);
      f["formula"] = frac.count;
      f["total"] = frac.total;
      f["fraction"] = std::to_string(frac.numerator) + "/" + std::to_string(frac.denominator);
      f["ratio"] = frac.ratio;
      Status status = Status::Info;
      if (config.verify) {
        const ClassificationTally t = classify_exhaustive(g, n, ctx);
        f["enumerated"] = t.failing_by_search;
        f["agree"] = t.failing_by_search == frac.count;
        status = t.failing_by_search == frac.count ? Status::Pass : Status::Fail;
      }
      report.records.push_back({claim, status, f});
    });
  }
}

void run_full_product(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {4, 6, 8}, [](int n, int m) { return n >= 4 && both_even(n, m); })) {
    const GroupParams g(n, m);
    const std::string claim = cell("full_product", n, m);
    guarded(report, claim, [&] {
      const auto bad = full_product_counterexample(g, ctx);
      Json f = base_fields(g);
      f["all_full"] = !bad;
      f["counterexample"] = bad ? Json(bad->to_string()) : Json();
      report.records.push_back({claim, bad ? Status::Fail : Status::Pass, f});
    });
  }
}

void run_weighted(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {6, 8})) {
    const GroupParams g(n, m);
    const std::string claim = cell("weighted", n, m);
    guarded(report, claim, [&] {
      const HarborthResult r = weighted_harborth_bruteforce(g, ctx);
      const int unweighted = harborth_closed_form(g);
      Json f = base_fields(g);
      f["g_pm"] = r.g;
      f["g_closed"] = unweighted;
      Status status = r.g <= unweighted ? Status::Info : Status::Fail;
      if (n >= 6 && both_even(n, m)) {
        f["predicted"] = n + 2;
        if (status != Status::Fail) status = r.g == n + 2 ? Status::Pass : Status::Fail;
      }
      f["per_k"] = per_k_json(r);
      report.records.push_back({claim, status, f});
    });
  }
}

Json egz_fields(const GroupParams& g, const EgzResult& r) {
  Json f = base_fields(g);
  f["s_value_or_bound"] = r.value ? Json(*r.value) : Json("> " + std::to_string(r.k_max));
  f["witness"] = r.witness ? Json(r.witness->to_string()) : Json();
  f["budget_used"] = r.nodes;
  return f;
}

void run_egz(const RunConfig& config, const Context& ctx, Report& report) {
  for (auto [n, m] : grid(config, {3, 4})) {
    const GroupParams g(n, m);
    const std::string claim = cell("egz", n, m);
    guarded(report, claim, [&] {
      const bool conjectured = n >= 4 && both_even(n, m);
      if (conjectured && !config.k_max) {
        const ConjectureCheck c = check_egz_conjecture(g, ctx);
        Json f = egz_fields(g, c.result);
        f["predicted"] = c.predicted;
        f["conjecture"] = to_string(c.status);
        f["witness_verified"] = c.witness_verified;
        Status status = Status::Pass;
        if (c.status == ConjectureStatus::Refuted) status = c.witness_verified ? Status::Finding : Status::Fail;
        report.records.push_back({claim, status, f});
        return;
      }
      const EgzResult r = egz_bruteforce(g, config.k_max.value_or(3 * n), ctx);
      Json f = egz_fields(g, r);
      Status status = Status::Info;
      if (m == 0 && n % 2 == 1) {
        f["predicted"] = 3 * n;
        if (r.value) status = *r.value == 3 * n ? Status::Pass : Status::Fail;
        else if (r.k_max >= 3 * n) status = Status::Fail;
      }
      report.records.push_back({claim, status, f});
    });
  }
}

void run_lemma_check(const RunConfig& config, const Context& ctx, Report& report) {
  const auto ns = n_grid(config, {2, 12});
  LemmaSuiteOptions options;
  options.min_n = ns.front();
  options.max_n = ns.back();
  const std::string prefix = "lemma22";
  guarded(report, prefix, [&] {
    const LemmaSuiteReport r = run_lemma_suite(options, ctx);
    auto add = [&](const char* name, std::uint64_t checked, std::uint64_t bad, Status on_bad) {
      report.records.push_back({prefix + "_" + name, bad == 0 ? Status::Pass : on_bad,
                                Json{{"n_min", options.min_n}, {"n_max", options.max_n}, {"checked", checked},
                                     {"mismatches", bad}}});
    };
    add("bound", r.cases, r.bound_violations, Status::Fail);
    add("characterization", r.characterization_checked, r.characterization_mismatches, Status::Fail);
    add("small_t", r.small_t_checked, r.small_t_mismatches, Status::Fail);
    add("remark2_forms", r.equality_instances, r.equality_form_failures, Status::Fail);
    add("remark4_obstructions", r.obstruction_pairs, r.obstruction_failures, Status::Fail);
    add("m_translation", r.translation_checked, r.translation_failures, Status::Fail);
    add("remark5_signed", r.pm_checked, r.pm_mismatches, Status::Finding);

    Json discrepancies = Json::array();
    for (const auto& d : r.discrepancies) {
      Json item{{"check", d.check},        {"n", d.n},
                {"m", d.m},                {"t", d.t},
                {"alphas", d.alphas},      {"bound", d.bound},
                {"achieved", d.achieved},  {"predicted_equality", d.predicted_equality},
                {"actual_equality", d.actual_equality}};
      item["remark2_ok"] = d.remark2_ok ? Json(*d.remark2_ok) : Json();
      discrepancies.push_back(std::move(item));
    }
    report.extra["discrepancies"] = std::move(discrepancies);
    report.csv = discrepancies_csv(r.discrepancies);
  });
}

Json config_json(const RunConfig& config) {
  Json out{{"command", to_string(config.command)},
           {"n", config.n_values},
           {"method", to_string(config.method)},
           {"budget", config.budget},
           {"output", to_string(config.output)}};
  switch (config.m.filter) {
    case MFilter::All: out["m"] = "all"; break;
    case MFilter::Even: out["m"] = "even"; break;
    case MFilter::Odd: out["m"] = "odd"; break;
    case MFilter::Explicit: out["m"] = config.m.values; break;
  }
  if (!config.only.empty()) out["only"] = config.only;
  if (config.verify) out["verify"] = true;
  if (!config.subset.empty()) out["subset"] = config.subset;
  if (config.k_max) out["k_max"] = *config.k_max;
  return out;
}

}  // namespace

Report execute(const RunConfig& config, const Context& ctx) {
  if (config.command == Command::ReproducePaper) return reproduce_paper(config, ctx);
  Report report;
  report.command = to_string(config.command);
  report.config = config_json(config);
  switch (config.command) {
    case Command::Exponent: run_exponent(config, report); break;
    case Command::Harborth: run_harborth(config, ctx, report); break;
    case Command::Classify: run_classify(config, ctx, report); break;
    case Command::CountFailing: run_count_failing(config, ctx, report); break;
    case Command::FullProduct: run_full_product(config, ctx, report); break;
    case Command::Weighted: run_weighted(config, ctx, report); break;
    case Command::Egz: run_egz(config, ctx, report); break;
    case Command::LemmaCheck: run_lemma_check(config, ctx, report); break;
    case Command::ReproducePaper: break;
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Context ctx(config.budget, config.workers);
  Report report;
  try {
    report = execute(config, ctx);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  const std::string text = render(report, config.output);
  if (config.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out_path << '\n';
      return kExitInvalidInput;
    }
    file << text;
  }
  return exit_code(report);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_command_line(argc, argv);
  if (!parsed.config) {
    (parsed.exit_code == kExitConsistent ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace metacyclic::cli
