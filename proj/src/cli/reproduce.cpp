#include <algorithm>
#include <cmath>
#include <map>

#include "metacyclic/cli/run.hpp"
#include "metacyclic/combinatorics.hpp"
#include "metacyclic/egz.hpp"
#include "metacyclic/harborth.hpp"
#include "metacyclic/lemma_lab.hpp"
#include "metacyclic/products.hpp"

namespace metacyclic::cli {

namespace {

class Manifest {
 public:
  Manifest(const RunConfig& config, const Context& ctx, Report& report)
      : config_(config), ctx_(ctx), report_(report) {}

  bool wants(const std::string& group) const {
    return config_.only.empty() || std::find(config_.only.begin(), config_.only.end(), group) != config_.only.end();
  }

  bool n_allowed(int n) const {
    return config_.n_values.empty() ||
           std::binary_search(config_.n_values.begin(), config_.n_values.end(), n);
  }

  std::vector<int> ns(int lo, int hi) const {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n)
      if (n_allowed(n)) out.push_back(n);
    return out;
  }

  void add(std::string claim, bool ok, Json fields = Json::object()) {
    report_.records.push_back({std::move(claim), ok ? Status::Pass : Status::Fail, std::move(fields)});
  }

  template <class Fn>
  void guarded(const std::string& claim, Fn&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      report_.records.push_back({claim, Status::BudgetExceeded, Json{{"error", e.what()}}});
    }
  }

  int brute_harborth(const GroupParams& g) {
    const auto key = std::make_pair(g.n(), g.m());
    if (auto it = harborth_.find(key); it != harborth_.end()) return it->second;
    const int value = harborth_bruteforce(g, ctx_).g;
    harborth_.emplace(key, value);
    return value;
  }

  const ClassificationTally& tally(const GroupParams& g, int size) {
    const auto key = std::make_tuple(g.n(), g.m(), size);
    if (auto it = tallies_.find(key); it != tallies_.end()) return it->second;
    return tallies_.emplace(key, classify_exhaustive(g, size, ctx_)).first->second;
  }

  void main_theorem() {
    for (int n : ns(2, 8))
      for (int m = 0; m < n; ++m) {
        const std::string claim = "main_theorem_n" + std::to_string(n) + "_m" + std::to_string(m);
        guarded(claim, [&] {
          const GroupParams g(n, m);
          const int brute = brute_harborth(g);
          const int closed = harborth_closed_form(g);
          add(claim, brute == closed, Json{{"g_closed", closed}, {"g_brute", brute}});
        });
      }
  }

  void dihedral() {
    for (int n : ns(3, 8)) {
      const std::string claim = "dihedral_n" + std::to_string(n);
      guarded(claim, [&] {
        const int brute = brute_harborth(GroupParams(n, 0));
        const int quoted = n % 2 == 0 ? n + 2 : 2 * n + 1;
        add(claim, brute == quoted, Json{{"quoted", quoted}, {"g_brute", brute}});
      });
    }
  }

  void classification() {
    for (int n : {2, 4, 6, 8}) {
      if (!n_allowed(n)) continue;
      for (int m = 0; m < n; m += 2)
        for (int size : {n, n + 1}) {
          const std::string claim = "classification_n" + std::to_string(n) + "_m" + std::to_string(m) +
                                    (size == n ? "_size_n" : "_size_n1");
          guarded(claim, [&] {
            const auto& t = tally(GroupParams(n, m), size);
            Json f{{"subsets", t.total}, {"failing", t.failing_by_search}, {"mismatches", t.mismatches}};
            if (t.first_mismatch) f["first_mismatch"] = t.first_mismatch->to_string();
            add(claim, t.mismatches == 0, f);
          });
        }
    }
  }

  void count_failing() {
    for (int n : {2, 4, 6, 8}) {
      if (!n_allowed(n)) continue;
      for (int m = 0; m < n; m += 2) {
        const std::string claim = "count_failing_n" + std::to_string(n) + "_m" + std::to_string(m);
        guarded(claim, [&] {
          const GroupParams g(n, m);
          const std::uint64_t formula = count_failing_size_n(g);
          const std::uint64_t enumerated = tally(g, n).failing_by_search;
          add(claim, formula == enumerated, Json{{"formula", formula}, {"enumerated", enumerated}});
        });
      }
    }
    Json ratios = Json::array();
    double last_gap = 1.0;
    bool monotone = true;
    for (int n : {4, 8, 12}) {
      const GroupParams g(n, 0);
      const double ratio = static_cast<double>(count_failing_size_n(g)) / static_cast<double>(binomial(2 * n, n));
      const double gap = std::abs(0.75 - ratio);
      monotone = monotone && gap < last_gap;
      last_gap = gap;
      ratios.push_back(Json{{"n", n}, {"ratio", ratio}});
    }
    add("count_failing_trend", monotone, Json{{"limit", 0.75}, {"ratios", ratios}});
  }

  void size_n1_bound() {
    for (int n : {4, 6, 8}) {
      if (!n_allowed(n)) continue;
      for (int m = 0; m < n; m += 2) {
        const std::string claim = "size_n1_bound_n" + std::to_string(n) + "_m" + std::to_string(m);
        guarded(claim, [&] {
          const auto& t = tally(GroupParams(n, m), n + 1);
          const double ratio = static_cast<double>(t.failing_by_search) / static_cast<double>(t.total);
          const double bound = 2.0 * std::sqrt(static_cast<double>(n) / std::ldexp(1.0, n));
          add(claim, ratio <= bound, Json{{"ratio", ratio}, {"bound", bound}});
        });
      }
    }
  }

  void lemma22() {
    const auto range = ns(2, 12);
    if (range.empty()) return;
    guarded("lemma22", [&] {
      LemmaSuiteOptions options;
      options.min_n = range.front();
      options.max_n = range.back();
      const LemmaSuiteReport r = run_lemma_suite(options, ctx_);
      auto entry = [&](const char* name, std::uint64_t checked, std::uint64_t bad) {
        add(std::string("lemma22_") + name, bad == 0, Json{{"checked", checked}, {"mismatches", bad}});
      };
      entry("bound", r.cases, r.bound_violations);
      entry("characterization", r.characterization_checked, r.characterization_mismatches);
      entry("small_t", r.small_t_checked, r.small_t_mismatches);
      entry("remark2_forms", r.equality_instances, r.equality_form_failures);
      entry("remark4_obstructions", r.obstruction_pairs, r.obstruction_failures);
      entry("m_translation", r.translation_checked, r.translation_failures);
      report_.records.push_back({"lemma22_remark5_signed", r.pm_mismatches == 0 ? Status::Pass : Status::Finding,
                                 Json{{"checked", r.pm_checked}, {"mismatches", r.pm_mismatches}}});
    });
  }

  void full_product() {
    for (int n : {4, 6, 8}) {
      if (!n_allowed(n)) continue;
      for (int m = 0; m < n; m += 2) {
        const std::string claim = "full_product_n" + std::to_string(n) + "_m" + std::to_string(m);
        guarded(claim, [&] {
          const auto bad = full_product_counterexample(GroupParams(n, m), ctx_);
          Json f = Json::object();
          if (bad) f["counterexample"] = bad->to_string();
          add(claim, !bad, f);
        });
      }
    }
  }

  void weighted() {
    for (auto [n, m] : {std::pair{6, 0}, {6, 2}, {6, 4}, {8, 0}, {8, 2}}) {
      if (!n_allowed(n)) continue;
      const std::string claim = "weighted_n" + std::to_string(n) + "_m" + std::to_string(m);
      guarded(claim, [&] {
        const int value = weighted_harborth_bruteforce(GroupParams(n, m), ctx_).g;
        add(claim, value == n + 2, Json{{"g_pm", value}, {"predicted", n + 2}});
      });
    }
    const std::pair<int, const char*> witnesses[] = {
        {6, "1, x, x^2, x^3, x^4, x^5, y"},
        {8, "1, x, x^2, x^3, x^4, x^5, y, x^2*y, x^4*y"},
    };
    for (const auto& [n, text] : witnesses) {
      if (!n_allowed(n)) continue;
      const std::string claim = "weighted_witness_n" + std::to_string(n) + "_m0";
      guarded(claim, [&] {
        const Subset s = Subset::parse(GroupParams(n, 0), text);
        add(claim, !weighted_subset_passes(s, ctx_), Json{{"subset", s.to_string()}});
      });
    }
  }

  void egz() {
    if (n_allowed(3)) {
      guarded("egz_n3_m0", [&] {
        const EgzResult r = egz_bruteforce(GroupParams(3, 0), 9, ctx_);
        add("egz_n3_m0", r.value == 9, Json{{"s", r.value ? Json(*r.value) : Json()}, {"predicted", 9}});
      });
    }
    if (n_allowed(4)) {
      guarded("egz_conjecture_n4_m2", [&] {
        const ConjectureCheck c = check_egz_conjecture(GroupParams(4, 2), ctx_);
        Json f{{"conjecture", to_string(c.status)}, {"predicted", c.predicted}};
        f["s"] = c.result.value ? Json(*c.result.value) : Json();
        if (c.status == ConjectureStatus::Refuted && c.result.witness) {
          f["witness"] = c.result.witness->to_string();
          f["witness_verified"] = c.witness_verified;
        }
        add("egz_conjecture_n4_m2", c.status == ConjectureStatus::Confirmed || c.witness_verified, f);
      });
    }
  }

  void oracle() {
    for (int n : ns(2, 8)) {
      const std::string claim = "oracle_equivalence_n" + std::to_string(n);
      guarded(claim, [&] {
        std::uint64_t checked = 0;
        std::uint64_t mismatches = 0;
        for (int m = 0; m < n; ++m) {
          const GroupParams g(n, m);
          for (int size = 0; size <= std::min(6, 2 * n); ++size) {
            for (std::uint64_t mask = first_combination(size);; mask = next_combination(mask, 2 * n)) {
              const Subset s(g, mask);
              for (int k = 0; k <= size; ++k) {
                ++checked;
                if (!product_set(s, k, ctx_).same_members(product_set_oracle(s, k))) ++mismatches;
              }
              if (size == 0 || next_combination(mask, 2 * n) == 0) break;
            }
          }
        }
        add(claim, mismatches == 0, Json{{"checked", checked}, {"mismatches", mismatches}});
      });
    }
  }

 private:
  const RunConfig& config_;
  const Context& ctx_;
  Report& report_;
  std::map<std::pair<int, int>, int> harborth_;
  std::map<std::tuple<int, int, int>, ClassificationTally> tallies_;
};

}  // namespace

const std::vector<std::string>& claim_groups() {
  static const std::vector<std::string> groups{"main_theorem", "dihedral",     "classification", "count_failing",
                                               "size_n1_bound", "lemma22",     "full_product",   "weighted",
                                               "egz",           "oracle"};
  return groups;
}

Report reproduce_paper(const RunConfig& config, const Context& ctx) {
  for (const auto& name : config.only)
    if (std::find(claim_groups().begin(), claim_groups().end(), name) == claim_groups().end())
      throw UsageError("--only: unknown claim group '" + name + "'");
  Report report;
  report.command = "reproduce-paper";
  report.config = Json{{"n", config.n_values}, {"only", config.only}, {"budget", config.budget}};
  Manifest manifest(config, ctx, report);
  if (manifest.wants("main_theorem")) manifest.main_theorem();
  if (manifest.wants("dihedral")) manifest.dihedral();
  if (manifest.wants("classification")) manifest.classification();
  if (manifest.wants("count_failing")) manifest.count_failing();
  if (manifest.wants("size_n1_bound")) manifest.size_n1_bound();
  if (manifest.wants("lemma22")) manifest.lemma22();
  if (manifest.wants("full_product")) manifest.full_product();
  if (manifest.wants("weighted")) manifest.weighted();
  if (manifest.wants("egz")) manifest.egz();
  if (manifest.wants("oracle")) manifest.oracle();
  return report;
}

}  // namespace metacyclic::cli
