#include "metacyclic/harborth.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metacyclic/combinatorics.hpp"
#include "metacyclic/parallel.hpp"
#include "metacyclic/products.hpp"
#include "metacyclic/residues.hpp"

namespace metacyclic {

namespace {

__extension__ using u128 = unsigned __int128;

bool both_even(const GroupParams& g) { return g.n() % 2 == 0 && g.m() % 2 == 0; }

void require_both_even(const GroupParams& g, const char* what) {
  if (!both_even(g))
    throw std::invalid_argument(std::string(what) + " requires n and m even, got H_{" +
                                std::to_string(g.n()) + "," + std::to_string(g.m()) + "}");
}

std::uint64_t even_residues(int n) {
  std::uint64_t mask = 0;
  for (int r = 0; r < n; r += 2) mask |= std::uint64_t{1} << r;
  return mask;
}

long long sum_of(std::uint64_t mask) {
  long long s = 0;
  while (mask != 0) {
    s += std::countr_zero(mask);
    mask &= mask - 1;
  }
  return s;
}

/// Residue masks of S with the largest member dropped (for the "first t-1" sums).
std::uint64_t drop_largest(std::uint64_t mask) {
  if (mask == 0) return 0;
  return mask & ~(std::uint64_t{1} << (63 - std::countl_zero(mask)));
}

bool same_parity(std::uint64_t mask, int n) {
  const std::uint64_t even = even_residues(n);
  return (mask & ~even) == 0 || (mask & even) == 0;
}

bool passes_impl(const Subset& s, const Context& ctx, bool weighted) {
  const GroupParams& g = s.group();
  const int e = exponent(g);
  if (s.size() < e)
    throw std::invalid_argument("subset of size " + std::to_string(s.size()) +
                                " is smaller than exp(G) = " + std::to_string(e));
  const bool completed = for_each_submask_of_size(s.bits(), e, [&](std::uint64_t sub) {
    ctx.charge(1);
    const Subset chosen(g, sub);
    const auto betas = chosen.betas();
    const auto alphas = chosen.alphas();
    return !ordered_products(g, betas, alphas, weighted).contains_identity();
  });
  return !completed;
}

HarborthResult bruteforce_impl(const GroupParams& g, const Context& ctx, BruteForceOptions options,
                               bool weighted) {
  ctx.require_n_within(g.n(), ctx.limits().harborth_max_n, "Harborth brute force");
  const int order = g.order();
  HarborthResult result;
  result.method = Method::BruteForce;
  std::optional<int> first_passing;
  for (int k = exponent(g); k <= order; ++k) {
    auto failing = find_first_combination(ctx.workers(), order, k, [&](std::uint64_t mask) {
      return !passes_impl(Subset(g, mask), ctx, weighted);
    });
    KStatus status;
    status.all_pass = !failing.has_value();
    if (failing) status.first_failing = Subset(g, *failing);
    result.per_k_status.emplace(k, status);
    if (status.all_pass && !first_passing) {
      first_passing = k;
      if (!options.scan_all_k) break;
    }
  }
  result.g = first_passing.value_or(order + 1);
  result.brute_force = result.g;
  return result;
}

}  // namespace

std::string to_string(FormCode code) {
  switch (code) {
    case FormCode::None: return "NONE";
    case FormCode::SizeNForm1: return "SIZE_N_FORM_1";
    case FormCode::SizeNForm2: return "SIZE_N_FORM_2";
    case FormCode::SizeNForm3: return "SIZE_N_FORM_3";
    case FormCode::SizeNForm4: return "SIZE_N_FORM_4";
    case FormCode::SizeNForm5: return "SIZE_N_FORM_5";
    case FormCode::SizeN1Form1: return "SIZE_N1_FORM_1";
    case FormCode::SizeN1Form2: return "SIZE_N1_FORM_2";
    case FormCode::SizeN1Form3: return "SIZE_N1_FORM_3";
  }
  return "UNKNOWN";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::ClosedForm: return "closed_form";
    case Method::BruteForce: return "brute_force";
    case Method::Both: return "both";
  }
  return "unknown";
}

bool subset_passes(const Subset& s, const Context& ctx) { return passes_impl(s, ctx, false); }

bool weighted_subset_passes(const Subset& s, const Context& ctx) { return passes_impl(s, ctx, true); }

int harborth_closed_form(const GroupParams& g) noexcept {
  const int n = g.n();
  const bool m_even = g.m() % 2 == 0;
  if (n % 2 == 1) return 2 * n + 1;
  if (!m_even) return n % 4 == 0 ? 2 * n : 2 * n + 1;
  return n == 2 ? 5 : n + 2;
}

HarborthResult harborth_bruteforce(const GroupParams& g, const Context& ctx, BruteForceOptions options) {
  return bruteforce_impl(g, ctx, options, false);
}

HarborthResult weighted_harborth_bruteforce(const GroupParams& g, const Context& ctx,
                                            BruteForceOptions options) {
  return bruteforce_impl(g, ctx, options, true);
}

HarborthResult harborth(const GroupParams& g, Method method, const Context& ctx) {
  HarborthResult result;
  if (method != Method::ClosedForm) result = harborth_bruteforce(g, ctx);
  result.method = method;
  if (method != Method::BruteForce) {
    result.closed_form = harborth_closed_form(g);
    if (method == Method::ClosedForm) result.g = *result.closed_form;
  }
  return result;
}

FailureForm classify_size_n(const Subset& s) {
  const GroupParams& g = s.group();
  require_both_even(g, "classify_size_n");
  const int n = g.n();
  if (s.size() != n) throw std::invalid_argument("classify_size_n requires |S| = n");
  const int sx = s.x_count();
  const int ty = s.y_count();
  const long long total = sum_of(s.x_residues()) + sum_of(s.y_residues());

  if (sx % 2 == 1 && ty % 2 == 1) return {FormCode::SizeNForm1, std::nullopt};
  if (sx % 2 == 0 && ty % 2 == 0 && total % 2 == 1) return {FormCode::SizeNForm2, std::nullopt};
  if (n % 4 == 0 && sx == n) return {FormCode::SizeNForm3, std::nullopt};
  if (n % 8 == 4) {
    const std::uint64_t even = even_residues(n);
    const std::uint64_t odd = residues::full(n) & ~even;
    const std::uint64_t x = s.x_residues();
    const std::uint64_t y = s.y_residues();
    const bool y_is_class = y == even || y == odd;
    if (g.m() % 4 == 2 && x == even && y_is_class) return {FormCode::SizeNForm4, std::nullopt};
    if (g.m() % 4 == 0 && x == odd && y_is_class) return {FormCode::SizeNForm5, std::nullopt};
  }
  return {};
}

FailureForm classify_size_n_plus_1(const Subset& s) {
  const GroupParams& g = s.group();
  require_both_even(g, "classify_size_n_plus_1");
  const int n = g.n();
  if (s.size() != n + 1) throw std::invalid_argument("classify_size_n_plus_1 requires |S| = n + 1");
  const int sx = s.x_count();
  const int ty = s.y_count();
  const std::uint64_t x = s.x_residues();
  const std::uint64_t y = s.y_residues();

  // The omitted term is the one with the largest exponent.
  if (sx % 2 == 0 && ty % 2 == 1 && same_parity(y, n) && (sum_of(x) + sum_of(drop_largest(y))) % 2 == 1)
    return {FormCode::SizeN1Form1, std::nullopt};
  if (sx % 2 == 1 && ty % 2 == 0 && same_parity(x, n) && (sum_of(drop_largest(x)) + sum_of(y)) % 2 == 1)
    return {FormCode::SizeN1Form2, std::nullopt};
  for (Element h : s.elements()) {
    const Subset rest = s.without(h);
    const FormCode c = classify_size_n(rest).code;
    if (c == FormCode::SizeNForm3 || c == FormCode::SizeNForm4 || c == FormCode::SizeNForm5)
      return {FormCode::SizeN1Form3, rest};
  }
  return {};
}

std::uint64_t count_failing_size_n(const GroupParams& g) {
  require_both_even(g, "count_failing_size_n");
  const int n = g.n();
  const u128 central = binomial(2 * n, n);
  const u128 half = binomial(n, n / 2);
  u128 numerator = 0;
  u128 extra = 0;
  if (n % 4 == 2) {
    numerator = 3 * (central + half);
  } else {
    numerator = 3 * (central - half);
    extra = n % 8 == 0 ? 1 : 3;
  }
  if (numerator % 4 != 0) throw std::logic_error("failing-subset count is not an integer");
  return static_cast<std::uint64_t>(numerator / 4 + extra);
}

FailingFraction failing_fraction_report(const GroupParams& g, int size, const Context& ctx) {
  require_both_even(g, "failing_fraction_report");
  const int n = g.n();
  FailingFraction f;
  f.size = size;
  f.total = binomial(2 * n, size);
  if (size == n) {
    f.count = count_failing_size_n(g);
  } else if (size == n + 1) {
    ctx.require_n_within(n, ctx.limits().classify_max_n, "size n+1 failing-subset");
    f.count = reduce_combinations(
        ctx.workers(), 2 * n, size,
        [&](std::uint64_t mask) -> std::uint64_t { return subset_passes(Subset(g, mask), ctx) ? 0 : 1; },
        std::uint64_t{0}, [](std::uint64_t a, std::uint64_t b) { return a + b; });
  } else {
    throw std::invalid_argument("failing_fraction_report: size must be n or n+1");
  }
  const std::uint64_t d = std::gcd(f.count, f.total);
  f.numerator = d == 0 ? 0 : f.count / d;
  f.denominator = d == 0 ? 1 : f.total / d;
  f.ratio = static_cast<double>(f.count) / static_cast<double>(f.total);
  return f;
}

ClassificationTally classify_exhaustive(const GroupParams& g, int size, const Context& ctx) {
  require_both_even(g, "classify_exhaustive");
  const int n = g.n();
  if (size != n && size != n + 1) throw std::invalid_argument("classify_exhaustive: size must be n or n+1");
  ctx.require_n_within(n, ctx.limits().classify_max_n, "classification");

  auto one = [&](std::uint64_t mask) {
    const Subset s(g, mask);
    const FormCode code = (size == n ? classify_size_n(s) : classify_size_n_plus_1(s)).code;
    const bool fails = !subset_passes(s, ctx);
    ClassificationTally t;
    t.total = 1;
    t.per_form[code] = 1;
    t.failing_by_search = fails ? 1 : 0;
    t.failing_by_form = code != FormCode::None ? 1 : 0;
    if (fails != (code != FormCode::None)) {
      t.mismatches = 1;
      t.first_mismatch = s;
    }
    return t;
  };
  auto merge = [](ClassificationTally a, ClassificationTally b) {
    a.total += b.total;
    a.failing_by_search += b.failing_by_search;
    a.failing_by_form += b.failing_by_form;
    a.mismatches += b.mismatches;
    for (const auto& [code, count] : b.per_form) a.per_form[code] += count;
    if (!a.first_mismatch) a.first_mismatch = b.first_mismatch;
    return a;
  };
  ClassificationTally tally = reduce_combinations(ctx.workers(), 2 * n, size, one, ClassificationTally{}, merge);
  tally.size = size;
  return tally;
}

std::optional<Subset> full_product_counterexample(const GroupParams& g, const Context& ctx) {
  require_both_even(g, "full_product_check");
  const int n = g.n();
  if (n < 4) throw std::invalid_argument("full_product_check requires n >= 4");
  ctx.require_n_within(n, ctx.limits().harborth_max_n, "full-product");
  auto bad = find_first_combination(ctx.workers(), 2 * n, n + 2, [&](std::uint64_t mask) {
    return !product_set(Subset(g, mask), n, ctx).is_whole_group();
  });
  if (!bad) return std::nullopt;
  return Subset(g, *bad);
}

bool full_product_check(const GroupParams& g, const Context& ctx) {
  return !full_product_counterexample(g, ctx).has_value();
}

}  // namespace metacyclic
