#include "metacyclic/lemma_lab.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metacyclic/combinatorics.hpp"
#include "metacyclic/parallel.hpp"
#include "metacyclic/products.hpp"
#include "metacyclic/residues.hpp"

namespace metacyclic {

namespace {

std::vector<int> residues_of(std::uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

void require_sorted_residues(int n, std::span<const int> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= n)
      throw std::invalid_argument(std::string(what) + ": exponent " + std::to_string(values[i]) + " outside [0, " +
                                  std::to_string(n) + ")");
    if (i > 0 && values[i] <= values[i - 1])
      throw std::invalid_argument(std::string(what) + ": exponents must be sorted and distinct");
  }
}

std::uint64_t y_bits(int n, std::span<const int> alphas) {
  std::uint64_t bits = 0;
  for (int a : alphas) bits |= std::uint64_t{1} << (n + a);
  return bits;
}

std::vector<int> m_spot_values(int n) {
  std::vector<int> ms;
  for (int m : {1, 2, n - 1})
    if (m >= 1 && m < n && std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
  return ms;
}

LemmaDiscrepancy record(const char* check, const LemmaCase& c) {
  LemmaDiscrepancy d;
  d.check = check;
  d.n = c.n;
  d.m = c.m;
  d.t = c.t;
  d.alphas = c.alphas;
  d.bound = c.bound;
  d.achieved = c.achieved;
  d.predicted_equality = c.predicted_equality;
  d.actual_equality = c.equality;
  return d;
}

LemmaSuiteReport merge(LemmaSuiteReport a, LemmaSuiteReport b) {
  a.cases += b.cases;
  a.bound_violations += b.bound_violations;
  a.characterization_checked += b.characterization_checked;
  a.characterization_mismatches += b.characterization_mismatches;
  a.equality_instances += b.equality_instances;
  a.equality_form_failures += b.equality_form_failures;
  a.obstruction_pairs += b.obstruction_pairs;
  a.obstruction_failures += b.obstruction_failures;
  a.small_t_checked += b.small_t_checked;
  a.small_t_mismatches += b.small_t_mismatches;
  a.translation_checked += b.translation_checked;
  a.translation_failures += b.translation_failures;
  a.pm_checked += b.pm_checked;
  a.pm_mismatches += b.pm_mismatches;
  for (auto& d : b.discrepancies) a.discrepancies.push_back(std::move(d));
  return a;
}

LemmaSuiteReport suite_for_n(int n, const LemmaSuiteOptions& options, const Context& ctx) {
  ctx.require_n_within(n, ctx.limits().lemma_max_n, "lemma harness");
  const GroupParams g(n, 0);
  LemmaSuiteReport rep;
  for (int t = 1; t <= n; ++t) {
    const bool allowed = divisibility_allows(n, t);
    if (!allowed) ++rep.obstruction_pairs;
    std::optional<LemmaCase> first_achiever;
    for (std::uint64_t mask = first_combination(t); mask != 0; mask = next_combination(mask, n)) {
      ctx.charge(1);
      const auto alphas = residues_of(mask);
      const LemmaCase c = check_bound(g, alphas);
      ++rep.cases;
      if (c.achieved < c.bound) {
        ++rep.bound_violations;
        rep.discrepancies.push_back(record("bound", c));
      }
      if (c.in_range) {
        ++rep.characterization_checked;
        if (c.equality != c.predicted_equality) {
          ++rep.characterization_mismatches;
          rep.discrepancies.push_back(record("characterization", c));
        }
      } else {
        ++rep.small_t_checked;
        if (c.equality != c.predicted_equality) {
          ++rep.small_t_mismatches;
          rep.discrepancies.push_back(record("small_t", c));
        }
      }
      if (c.in_range && c.equality) {
        ++rep.equality_instances;
        bool ok = false;
        try {
          ok = check_equality_form(g, alphas);
        } catch (const std::invalid_argument&) {
          ok = false;
        }
        if (!ok) {
          ++rep.equality_form_failures;
          auto d = record("equality_form", c);
          d.remark2_ok = false;
          rep.discrepancies.push_back(std::move(d));
        }
      }
      if (c.equality && !first_achiever) first_achiever = c;

      const PmEqualityCase pm = pm_equality_case(g, alphas);
      if (pm.in_range) {
        ++rep.pm_checked;
        if (!pm.agrees()) {
          ++rep.pm_mismatches;
          LemmaDiscrepancy d;
          d.check = "pm_equality";
          d.n = n;
          d.t = pm.s;
          d.alphas = pm.betas;
          d.bound = pm.bound;
          d.achieved = pm.achieved;
          d.predicted_equality = pm.predicted_equality;
          d.actual_equality = pm.equality;
          rep.discrepancies.push_back(std::move(d));
        }
      }
      if (mask == residues::full(n)) break;
    }
    if (!allowed && first_achiever) {
      ++rep.obstruction_failures;
      rep.discrepancies.push_back(record("obstruction", *first_achiever));
    }
  }

  if (n <= options.translation_max_n) {
    for (int m : m_spot_values(n)) {
      const GroupParams gm(n, m);
      for (int t = 1; t <= std::min(n, options.translation_max_t); ++t) {
        for (std::uint64_t mask = first_combination(t); mask != 0; mask = next_combination(mask, n)) {
          ctx.charge(1);
          const auto alphas = residues_of(mask);
          const std::uint64_t base = y_products_fast(g, alphas, t).bits();
          const std::uint64_t base_res = t % 2 == 0 ? base & residues::full(n) : base >> n;
          const auto shifted =
              ProductSet::from_residues(gm, t, residues::translate(base_res, static_cast<long long>(t / 2) * m, n), t % 2);
          const auto oracle = product_set_oracle(Subset(gm, y_bits(n, alphas)), t);
          ++rep.translation_checked;
          if (!oracle.same_members(shifted)) {
            ++rep.translation_failures;
            LemmaCase c = check_bound(gm, alphas);
            rep.discrepancies.push_back(record("translation", c));
          }
          if (mask == residues::full(n)) break;
        }
      }
    }
  }
  return rep;
}

}  // namespace

std::string to_string(ParityCase c) {
  switch (c) {
    case ParityCase::NOdd: return "N_ODD";
    case ParityCase::NEvenTEven: return "N_EVEN_T_EVEN";
    case ParityCase::NEvenTOdd: return "N_EVEN_T_ODD";
  }
  return "UNKNOWN";
}

ParityCase parity_case(int n, int t) noexcept {
  if (n % 2 == 1) return ParityCase::NOdd;
  return t % 2 == 0 ? ParityCase::NEvenTEven : ParityCase::NEvenTOdd;
}

int proof_case(int n, int t) noexcept {
  if (n % 2 == 1) return t % 2 == 0 ? 1 : 2;
  return t % 2 == 0 ? 3 : 4;
}

int lemma_bound(int n, int t) noexcept { return n % 2 == 1 ? t : (t + 1) / 2; }

bool in_characterized_range(int n, int t) noexcept {
  switch (parity_case(n, t)) {
    case ParityCase::NOdd: return t >= 4;
    case ParityCase::NEvenTEven: return t >= 2;
    case ParityCase::NEvenTOdd: return t >= 5;
  }
  return false;
}

std::optional<int> progression_offset(int n, std::span<const int> residues) {
  const int t = static_cast<int>(residues.size());
  if (t == 0) return std::nullopt;
  const bool missing_one = n % 2 == 0 && t % 2 == 1;
  const int slots = missing_one ? t + 1 : t;
  if (n % slots != 0) return std::nullopt;
  const int d = n / slots;
  const int b = residues[0] % d;
  for (int r : residues)
    if (r % d != b) return std::nullopt;
  return b;
}

bool predicted_equality(int n, std::span<const int> alphas) {
  const int t = static_cast<int>(alphas.size());
  if (t == 0) return false;
  if (t == 1) return true;
  if (in_characterized_range(n, t)) return progression_offset(n, alphas).has_value();
  if (n % 2 == 1) return true;  // t = 2 or 3
  // n even, t = 3
  const int half = n / 2;
  return alphas[1] - alphas[0] == half || alphas[2] - alphas[0] == half || alphas[2] - alphas[1] == half;
}

LemmaCase check_bound(const GroupParams& g, std::span<const int> alphas) {
  const int n = g.n();
  require_sorted_residues(n, alphas, "check_bound");
  LemmaCase c;
  c.n = n;
  c.m = g.m();
  c.t = static_cast<int>(alphas.size());
  c.parity = parity_case(n, c.t);
  c.proof_case = proof_case(n, c.t);
  c.alphas.assign(alphas.begin(), alphas.end());
  c.bound = lemma_bound(n, c.t);
  c.achieved = y_products_fast(g, alphas, c.t).size();
  c.equality = c.achieved == c.bound;
  c.predicted_equality = predicted_equality(n, alphas);
  c.in_range = in_characterized_range(n, c.t);
  return c;
}

ProductSet equality_form(const GroupParams& g, std::span<const int> alphas) {
  const int n = g.n();
  require_sorted_residues(n, alphas, "equality_form");
  const int t = static_cast<int>(alphas.size());
  if (t == 0) throw std::invalid_argument("equality_form: t must be positive");
  const int lower = t / 2;
  long long alpha = static_cast<long long>(lower) * g.m();
  for (int i = 0; i < t; ++i) alpha += i < lower ? -alphas[i] : alphas[i];

  int terms = 0;
  int step = 0;
  switch (parity_case(n, t)) {
    case ParityCase::NOdd:
      if (n % t != 0) throw std::invalid_argument("equality_form: t must divide n");
      terms = t;
      step = n / t;
      break;
    case ParityCase::NEvenTEven:
      if (n % t != 0) throw std::invalid_argument("equality_form: t must divide n");
      terms = t / 2;
      step = 2 * n / t;
      break;
    case ParityCase::NEvenTOdd:
      if (n % (t + 1) != 0) throw std::invalid_argument("equality_form: t+1 must divide n");
      terms = (t + 1) / 2;
      step = 2 * n / (t + 1);
      break;
  }
  std::uint64_t res = 0;
  for (int k = 0; k < terms; ++k) res |= residues::translate(1, alpha + static_cast<long long>(k) * step, n);
  return ProductSet::from_residues(g, t, res, t % 2);
}

bool check_equality_form(const GroupParams& g, std::span<const int> alphas) {
  const LemmaCase c = check_bound(g, alphas);
  if (!c.in_range)
    throw std::invalid_argument("check_equality_form: t = " + std::to_string(c.t) +
                                " is outside the characterized range for n = " + std::to_string(c.n));
  if (!c.equality) throw std::invalid_argument("check_equality_form: the bound is not attained");
  return y_products_fast(g, alphas, c.t).same_members(equality_form(g, alphas));
}

bool divisibility_allows(int n, int t) noexcept {
  if (t <= 0) return false;
  if (t == 1) return true;
  switch (parity_case(n, t)) {
    case ParityCase::NOdd: return t == 2 || t == 3 || n % t == 0;
    case ParityCase::NEvenTEven: return n % t == 0;
    case ParityCase::NEvenTOdd: return t == 3 || n % (t + 1) == 0;
  }
  return false;
}

ObstructionReport obstruction_report(const GroupParams& g, int t, const Context& ctx) {
  const int n = g.n();
  if (t < 1 || t > n) throw std::invalid_argument("obstruction_report: t must lie in [1, n]");
  ctx.require_n_within(n, ctx.limits().lemma_max_n, "lemma harness");
  ObstructionReport rep;
  rep.n = n;
  rep.t = t;
  rep.allowed = divisibility_allows(n, t);
  for (std::uint64_t mask = first_combination(t); mask != 0; mask = next_combination(mask, n)) {
    ctx.charge(1);
    const auto alphas = residues_of(mask);
    ++rep.sets;
    if (y_products_fast(g, alphas, t).size() == lemma_bound(n, t)) {
      ++rep.achievers;
      if (!rep.first_achiever) rep.first_achiever = alphas;
    }
    if (mask == residues::full(n)) break;
  }
  return rep;
}

bool check_divisibility_obstruction(const GroupParams& g, int t, const Context& ctx) {
  return obstruction_report(g, t, ctx).holds();
}

PmEqualityCase pm_equality_case(const GroupParams& g, std::span<const int> betas) {
  const int n = g.n();
  require_sorted_residues(n, betas, "pm_equality_case");
  PmEqualityCase c;
  c.n = n;
  c.s = static_cast<int>(betas.size());
  c.betas.assign(betas.begin(), betas.end());
  c.bound = lemma_bound(n, c.s);
  c.achieved = signed_products(g, betas).size();
  c.equality = c.achieved == c.bound;
  c.in_range = c.s > 0 && in_characterized_range(n, c.s);
  if (const auto b = progression_offset(n, betas)) {
    int alt = 0;
    switch (parity_case(n, c.s)) {
      case ParityCase::NOdd: alt = 0; break;
      case ParityCase::NEvenTEven: alt = n % (2 * c.s) == 0 ? n / (2 * c.s) : 0; break;
      case ParityCase::NEvenTOdd: alt = n % (2 * (c.s + 1)) == 0 ? n / (2 * (c.s + 1)) : 0; break;
    }
    c.predicted_equality = *b == 0 || *b == alt;
  }
  return c;
}

bool check_pm_equality(const GroupParams& g, std::span<const int> betas) {
  return pm_equality_case(g, betas).agrees();
}

LemmaSuiteReport run_lemma_suite(const LemmaSuiteOptions& options, const Context& ctx) {
  if (options.min_n < 2 || options.max_n < options.min_n)
    throw std::invalid_argument("run_lemma_suite: need 2 <= min_n <= max_n");
  const auto count = static_cast<std::uint64_t>(options.max_n - options.min_n + 1);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    LemmaSuiteReport rep;
    for (std::uint64_t i = begin; i < end; ++i)
      rep = merge(std::move(rep), suite_for_n(options.min_n + static_cast<int>(i), options, ctx));
    return rep;
  };
  return parallel_reduce(ctx.workers(), count, chunk, LemmaSuiteReport{}, merge);
}

std::string discrepancies_csv(const std::vector<LemmaDiscrepancy>& records) {
  std::ostringstream out;
  out << "n,m,t,alphas,bound,achieved,predicted_equality,actual_equality,remark2_ok,check\n";
  for (const auto& d : records) {
    std::string alphas;
    for (int a : d.alphas) alphas += (alphas.empty() ? "" : " ") + std::to_string(a);
    out << d.n << ',' << d.m << ',' << d.t << ',' << alphas << ',' << d.bound << ',' << d.achieved << ','
        << (d.predicted_equality ? "true" : "false") << ',' << (d.actual_equality ? "true" : "false") << ','
        << (d.remark2_ok ? (*d.remark2_ok ? "true" : "false") : "") << ',' << d.check << '\n';
  }
  return out.str();
}

}  // namespace metacyclic
