#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "metacyclic/context.hpp"
#include "metacyclic/group.hpp"
#include "metacyclic/subset.hpp"

namespace metacyclic {

/// Which characterization of a failing subset applies. SizeN* are the five
/// forms for |S| = n, SizeN1* the three forms for |S| = n + 1 (n, m even).
enum class FormCode {
  None,
  SizeNForm1,
  SizeNForm2,
  SizeNForm3,
  SizeNForm4,
  SizeNForm5,
  SizeN1Form1,
  SizeN1Form2,
  SizeN1Form3,
};

std::string to_string(FormCode code);

struct FailureForm {
  FormCode code = FormCode::None;
  /// For SizeN1Form3: the n-subset matching form 3, 4 or 5 of the size-n list.
  std::optional<Subset> witness;

  bool fails() const noexcept { return code != FormCode::None; }
};

enum class Method { ClosedForm, BruteForce, Both };

std::string to_string(Method method);

struct KStatus {
  bool all_pass = false;
  std::optional<Subset> first_failing;  // colex-first failing k-subset
};

struct HarborthResult {
  int g = 0;
  Method method = Method::BruteForce;
  std::map<int, KStatus> per_k_status;  // brute force only
  std::optional<int> closed_form;
  std::optional<int> brute_force;

  /// Both methods ran and disagree.
  bool discrepancy() const noexcept { return closed_form && brute_force && *closed_form != *brute_force; }
};

/// True iff S contains exp(G) distinct elements with an ordering whose product
/// is 1. Throws std::invalid_argument if |S| < exp(G).
bool subset_passes(const Subset& s, const Context& ctx = Context::defaults());

/// As subset_passes, but each chosen element may be replaced by its inverse.
bool weighted_subset_passes(const Subset& s, const Context& ctx = Context::defaults());

/// Five-case value of the Harborth constant.
int harborth_closed_form(const GroupParams& g) noexcept;

struct BruteForceOptions {
  /// Keep evaluating every k up to |G| instead of stopping at the first k
  /// where all subsets pass.
  bool scan_all_k = false;
};

/// Smallest k >= exp(G) such that every k-subset passes, |G| + 1 if none.
HarborthResult harborth_bruteforce(const GroupParams& g, const Context& ctx = Context::defaults(),
                                   BruteForceOptions options = {});

/// Plus-minus weighted analogue of harborth_bruteforce.
HarborthResult weighted_harborth_bruteforce(const GroupParams& g, const Context& ctx = Context::defaults(),
                                            BruteForceOptions options = {});

/// Closed form, brute force, or both (with agreement recorded in the result).
HarborthResult harborth(const GroupParams& g, Method method, const Context& ctx = Context::defaults());

/// Requires n, m even and |S| = n; std::invalid_argument otherwise. Forms are
/// tested in listing order and the lowest matching one is reported.
FailureForm classify_size_n(const Subset& s);

/// Requires n, m even and |S| = n + 1.
FailureForm classify_size_n_plus_1(const Subset& s);

/// Closed-form number of failing n-subsets (n, m even), exact.
std::uint64_t count_failing_size_n(const GroupParams& g);

struct FailingFraction {
  int size = 0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  std::uint64_t numerator = 0;  // count/total in lowest terms
  std::uint64_t denominator = 1;
  double ratio = 0.0;
};

/// size must be n (closed-form count) or n + 1 (exhaustive count).
FailingFraction failing_fraction_report(const GroupParams& g, int size,
                                        const Context& ctx = Context::defaults());

/// Result of classifying every subset of one size and comparing against the
/// brute-force pass/fail verdict.
struct ClassificationTally {
  int size = 0;
  std::uint64_t total = 0;
  std::uint64_t failing_by_search = 0;
  std::uint64_t failing_by_form = 0;
  std::uint64_t mismatches = 0;
  std::map<FormCode, std::uint64_t> per_form;
  std::optional<Subset> first_mismatch;
};

ClassificationTally classify_exhaustive(const GroupParams& g, int size,
                                        const Context& ctx = Context::defaults());

/// Colex-first (n+2)-subset S with Pi_n(S) != H_{n,m}, if any. Requires
/// n >= 4 even and m even.
std::optional<Subset> full_product_counterexample(const GroupParams& g,
                                                  const Context& ctx = Context::defaults());

/// True iff Pi_n(S) is the whole group for every subset S of size n + 2.
bool full_product_check(const GroupParams& g, const Context& ctx = Context::defaults());

}  // namespace metacyclic
