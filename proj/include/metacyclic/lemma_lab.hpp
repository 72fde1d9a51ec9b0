#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metacyclic/context.hpp"
#include "metacyclic/group.hpp"
#include "metacyclic/subset.hpp"

namespace metacyclic {

/// The three parity cases of the y-product lower bound.
enum class ParityCase { NOdd, NEvenTEven, NEvenTOdd };

std::string to_string(ParityCase c);

ParityCase parity_case(int n, int t) noexcept;

/// Finer tag by the argument actually used: 1 n odd t even, 2 n odd t odd,
/// 3 n even t even, 4 n even t odd.
int proof_case(int n, int t) noexcept;

/// t for n odd, ceil(t/2) for n even.
int lemma_bound(int n, int t) noexcept;

/// Range of t where equality is characterized by progressions: t >= 4 for n
/// odd, t >= 2 for n and t even, t >= 5 for n even and t odd.
bool in_characterized_range(int n, int t) noexcept;

/// Whether the sorted residues form {b + k d : 0 <= k < t} with d = n/t, or for
/// n even and t odd, {b + k d : 0 <= k <= t} minus one term with d = n/(t+1),
/// always with 0 <= b < d. Returns the offset b when they do.
std::optional<int> progression_offset(int n, std::span<const int> residues);

/// Predicted equality: the progression test inside the characterized range,
/// the small-t facts below it (t = 1 always; n odd with t = 2, 3 always; n
/// even with t = 3 iff n/2 is a pairwise difference). t = 0 is never equal.
bool predicted_equality(int n, std::span<const int> alphas);

struct LemmaCase {
  ParityCase parity = ParityCase::NOdd;
  int proof_case = 0;
  int n = 0;
  int m = 0;
  int t = 0;
  std::vector<int> alphas;
  int bound = 0;
  int achieved = 0;
  bool equality = false;
  bool predicted_equality = false;
  bool in_range = false;
};

/// |Pi_t| for the y-terms x^alpha y, compared with the case bound. Throws
/// std::invalid_argument unless alphas are sorted, distinct and in [0, n).
LemmaCase check_bound(const GroupParams& g, std::span<const int> alphas);

/// The explicit product set expected at equality, as residues of x (with y
/// when t is odd): {alpha + k n/t} for n odd, {alpha + 2kn/t} for n and t even,
/// {alpha + 2kn/(t+1)} for n even and t odd, where alpha is the upper-half
/// sum minus the lower-half sum plus floor(t/2) m.
ProductSet equality_form(const GroupParams& g, std::span<const int> alphas);

/// True iff Pi_t equals equality_form. Throws std::invalid_argument when t is
/// outside the characterized range or the bound is not attained.
bool check_equality_form(const GroupParams& g, std::span<const int> alphas);

/// Whether the bound may be attained at (n, t) by divisibility: t in {2, 3} or
/// t | n for n odd, t | n for n and t even, t = 3 or (t+1) | n for n even and
/// t odd. t = 1 always attains.
bool divisibility_allows(int n, int t) noexcept;

struct ObstructionReport {
  int n = 0;
  int t = 0;
  bool allowed = false;            // divisibility_allows(n, t)
  std::uint64_t sets = 0;          // alpha-sets examined, C(n, t)
  std::uint64_t achievers = 0;     // alpha-sets attaining the bound
  std::optional<std::vector<int>> first_achiever;

  /// The obstruction holds when divisibility allows or nothing attains.
  bool holds() const noexcept { return allowed || achievers == 0; }
};

/// Exhaustive over all t-subsets of [0, n). Throws BudgetExceeded past the
/// lemma enumeration cap.
ObstructionReport obstruction_report(const GroupParams& g, int t, const Context& ctx = Context::defaults());

bool check_divisibility_obstruction(const GroupParams& g, int t, const Context& ctx = Context::defaults());

struct PmEqualityCase {
  int n = 0;
  int s = 0;
  std::vector<int> betas;
  int bound = 0;
  int achieved = 0;  // |Pi^{+-}_s|
  bool equality = false;
  /// Progression with the offset restricted to b = 0 (n odd), b in {0, n/(2s)}
  /// (n and s even) or b in {0, n/(2(s+1))} (n even, s odd).
  bool predicted_equality = false;
  bool in_range = false;

  bool agrees() const noexcept { return !in_range || equality == predicted_equality; }
};

PmEqualityCase pm_equality_case(const GroupParams& g, std::span<const int> betas);

/// True iff, inside the characterized range, the signed set attains the bound
/// exactly when the restricted progression condition holds. Outside the range
/// there is no claim and the result is true.
bool check_pm_equality(const GroupParams& g, std::span<const int> betas);

/// One machine-readable disagreement found by the suite.
struct LemmaDiscrepancy {
  std::string check;  // bound, characterization, equality_form, obstruction, translation, pm_equality
  int n = 0;
  int m = 0;
  int t = 0;
  std::vector<int> alphas;
  int bound = 0;
  int achieved = 0;
  bool predicted_equality = false;
  bool actual_equality = false;
  std::optional<bool> remark2_ok;
};

struct LemmaSuiteOptions {
  int min_n = 2;
  int max_n = 12;
  /// Additional m values checked against the brute-force oracle (translation
  /// by floor(t/2) m), for n up to translation_max_n and t up to
  /// translation_max_t.
  int translation_max_n = 8;
  int translation_max_t = 6;
};

struct LemmaSuiteReport {
  std::uint64_t cases = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t characterization_checked = 0;
  std::uint64_t characterization_mismatches = 0;
  std::uint64_t equality_instances = 0;
  std::uint64_t equality_form_failures = 0;
  std::uint64_t obstruction_pairs = 0;
  std::uint64_t obstruction_failures = 0;
  std::uint64_t small_t_checked = 0;
  std::uint64_t small_t_mismatches = 0;
  std::uint64_t translation_checked = 0;
  std::uint64_t translation_failures = 0;
  std::uint64_t pm_checked = 0;
  std::uint64_t pm_mismatches = 0;  // findings, not failures
  std::vector<LemmaDiscrepancy> discrepancies;

  /// Everything except the signed-set hypothesis verified.
  bool consistent() const noexcept {
    return bound_violations == 0 && characterization_mismatches == 0 && equality_form_failures == 0 &&
           obstruction_failures == 0 && small_t_mismatches == 0 && translation_failures == 0;
  }
};

/// Runs every check at m = 0 for each n in range, over every t and every
/// alpha-set (and every beta-set for the signed variant), plus the m
/// translation spot checks.
LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& options = {}, const Context& ctx = Context::defaults());

/// CSV with header n,m,t,alphas,bound,achieved,predicted_equality,
/// actual_equality,remark2_ok,check. Alphas are space separated.
std::string discrepancies_csv(const std::vector<LemmaDiscrepancy>& records);

}  // namespace metacyclic
