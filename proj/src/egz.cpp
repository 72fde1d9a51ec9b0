#include "metacyclic/egz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "metacyclic/parallel.hpp"
#include "metacyclic/products.hpp"
#include "metacyclic/residues.hpp"

namespace metacyclic {

namespace {

int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Depth-first walk over multiplicity vectors of a fixed length in
/// lexicographic order. A prefix that already contains a zero-product
/// subsequence passes for every completion, so its subtree is skipped.
class FailingSequenceSearch {
 public:
  FailingSequenceSearch(const GroupParams& g, int exp, int length, const Context& ctx)
      : g_(g), exp_(exp), length_(length), ctx_(ctx), counts_(g.order(), 0) {}

  /// Search with the first multiplicity fixed to `first`.
  std::optional<std::vector<int>> run_with_first(int first) {
    ZeroProductTracker tracker(g_, exp_);
    const Element e0 = element_from_index(g_, 0);
    for (int i = 0; i < first; ++i) tracker.add(e0);
    visit();
    counts_.assign(g_.order(), 0);
    counts_[0] = first;
    if (descend(1, length_ - first, tracker)) return counts_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void visit() {
    ++nodes_;
    ctx_.charge(1);
  }

  bool descend(int type, int remaining, const ZeroProductTracker& tracker) {
    if (tracker.found()) return false;
    const Element e = element_from_index(g_, type);
    if (type == g_.order() - 1) {
      ZeroProductTracker last = tracker;
      for (int i = 0; i < remaining; ++i) last.add(e);
      visit();
      if (last.found()) return false;
      counts_[type] = remaining;
      return true;
    }
    ZeroProductTracker current = tracker;
    for (int c = 0; c <= remaining; ++c) {
      if (c > 0) current.add(e);
      visit();
      if (current.found()) break;  // larger multiplicities only add terms
      counts_[type] = c;
      if (descend(type + 1, remaining - c, current)) return true;
    }
    counts_[type] = 0;
    return false;
  }

  const GroupParams& g_;
  int exp_;
  int length_;
  const Context& ctx_;
  std::vector<int> counts_;
  std::uint64_t nodes_ = 0;
};

struct SearchOutcome {
  bool found = false;
  std::vector<int> witness;
  std::uint64_t nodes = 0;
};

SearchOutcome search_failing(const GroupParams& g, int length, const Context& ctx) {
  const int exp = exponent(g);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    SearchOutcome out;
    for (std::uint64_t first = begin; first < end; ++first) {
      FailingSequenceSearch search(g, exp, length, ctx);
      auto hit = search.run_with_first(static_cast<int>(first));
      out.nodes += search.nodes();
      if (hit) {
        out.found = true;
        out.witness = std::move(*hit);
        break;
      }
    }
    return out;
  };
  // Fold in order of the first multiplicity so the lexicographically first
  // witness is reported. Chunks after a hit still run; their node counts are
  // dropped so the total is schedule independent.
  auto combine = [](SearchOutcome acc, SearchOutcome next) {
    if (acc.found) return acc;
    acc.nodes += next.nodes;
    acc.found = next.found;
    acc.witness = std::move(next.witness);
    return acc;
  };
  return parallel_reduce(ctx.workers(), static_cast<std::uint64_t>(length) + 1, chunk, SearchOutcome{}, combine);
}

void require_searchable(const GroupParams& g, const Context& ctx) {
  if (g.order() > ctx.limits().egz_max_order)
    throw BudgetExceeded("EGZ search limited to |G| <= " + std::to_string(ctx.limits().egz_max_order) +
                         ", got |G| = " + std::to_string(g.order()));
}

void sub_multisets(const std::vector<int>& counts, int type, int remaining, std::vector<int>& chosen,
                   const std::function<bool(const std::vector<int>&)>& fn, bool& stop) {
  if (stop) return;
  if (type == static_cast<int>(counts.size())) {
    if (remaining == 0 && fn(chosen)) stop = true;
    return;
  }
  const int top = std::min(counts[type], remaining);
  for (int c = 0; c <= top && !stop; ++c) {
    chosen[type] = c;
    sub_multisets(counts, type + 1, remaining - c, chosen, fn, stop);
  }
  chosen[type] = 0;
}

}  // namespace

Sequence::Sequence(const GroupParams& g, std::vector<int> multiplicities) : g_(g), counts_(std::move(multiplicities)) {
  if (static_cast<int>(counts_.size()) != g.order())
    throw std::invalid_argument("sequence needs one multiplicity per group element");
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("negative multiplicity");
    length_ += c;
  }
}

Sequence Sequence::from_elements(const GroupParams& g, std::span<const Element> elements) {
  std::vector<int> counts(g.order(), 0);
  for (Element e : elements) {
    if (!is_valid(g, e)) throw std::invalid_argument("element not in normal form");
    ++counts[index_of(g, e)];
  }
  return Sequence(g, std::move(counts));
}

int Sequence::count(Element e) const noexcept { return is_valid(g_, e) ? counts_[index_of(g_, e)] : 0; }

std::vector<Element> Sequence::elements() const {
  std::vector<Element> out;
  out.reserve(length_);
  for (int i = 0; i < g_.order(); ++i)
    for (int c = 0; c < counts_[i]; ++c) out.push_back(element_from_index(g_, i));
  return out;
}

std::string Sequence::to_string() const {
  std::string s;
  for (int i = 0; i < g_.order(); ++i) {
    if (counts_[i] == 0) continue;
    if (!s.empty()) s += ", ";
    s += metacyclic::to_string(element_from_index(g_, i));
    if (counts_[i] > 1) s += " (x" + std::to_string(counts_[i]) + ")";
  }
  return "[" + s + "]";
}

ZeroProductTracker::ZeroProductTracker(const GroupParams& g, int k)
    : n_(g.n()), m_(g.m()), k_(k), plain_(k + 1, 0), mixed_(static_cast<std::size_t>(k + 1) * (2 * k + 1) * 2, 0) {
  if (k < 0) throw std::invalid_argument("negative subsequence length");
  if (g.n() > 64) throw std::invalid_argument("residue sets support n <= 64");
  plain_[0] = 1;
  mixed(0, 0, 0) = 1;
}

std::uint64_t& ZeroProductTracker::mixed(int used, int balance, int has_y) noexcept {
  return mixed_[(static_cast<std::size_t>(used) * (2 * k_ + 1) + (balance + k_)) * 2 + has_y];
}

void ZeroProductTracker::add(Element e) {
  if (e.eps == 0) {
    const int plus = mod(e.a, n_);
    const int minus = mod(-e.a, n_);
    for (int c = k_ - 1; c >= 0; --c) {
      plain_[c + 1] |= residues::rotate(plain_[c], plus, n_);
      for (int d = -c; d <= c; ++d)
        for (int h = 0; h < 2; ++h) {
          const std::uint64_t cur = mixed(c, d, h);
          if (cur != 0) mixed(c + 1, d, h) |= residues::rotate(cur, plus, n_) | residues::rotate(cur, minus, n_);
        }
    }
    return;
  }
  // With an even number t of y-terms and t/2 of each sign, the product is
  // sum(+-beta) + sum_plus(alpha) + sum_minus(m - alpha).
  const int plus = mod(e.a, n_);
  const int minus = mod(static_cast<long long>(m_) - e.a, n_);
  for (int c = k_ - 1; c >= 0; --c) {
    for (int d = -c; d <= c; ++d)
      for (int h = 0; h < 2; ++h) {
        const std::uint64_t cur = mixed(c, d, h);
        if (cur == 0) continue;
        mixed(c + 1, d + 1, 1) |= residues::rotate(cur, plus, n_);
        mixed(c + 1, d - 1, 1) |= residues::rotate(cur, minus, n_);
      }
  }
}

bool ZeroProductTracker::found() const noexcept {
  if (plain_[k_] & 1u) return true;
  return mixed_[(static_cast<std::size_t>(k_) * (2 * k_ + 1) + k_) * 2 + 1] & 1u;
}

bool sequence_has_zero_product(const Sequence& seq, int k, const Context& ctx) {
  if (k < 0 || k > seq.length())
    throw std::invalid_argument("subsequence length " + std::to_string(k) + " exceeds sequence length " +
                                std::to_string(seq.length()));
  const GroupParams& g = seq.group();
  const int n = g.n();
  std::vector<int> chosen(g.order(), 0);
  bool found = false;
  sub_multisets(
      seq.multiplicities(), 0, k, chosen,
      [&](const std::vector<int>& pick) {
        ctx.charge(1);
        std::vector<int> betas;
        std::vector<int> alphas;
        for (int i = 0; i < g.order(); ++i)
          for (int c = 0; c < pick[i]; ++c) (i < n ? betas : alphas).push_back(i % n);
        return ordered_products(g, betas, alphas).contains_identity();
      },
      found);
  return found;
}

bool has_zero_product_subsequence(const Sequence& seq, int k) {
  if (k < 0 || k > seq.length())
    throw std::invalid_argument("subsequence length exceeds sequence length");
  ZeroProductTracker tracker(seq.group(), k);
  for (Element e : seq.elements()) {
    tracker.add(e);
    if (tracker.found()) return true;
  }
  return tracker.found();
}

bool zero_product_by_permutations(const Sequence& seq, int k, std::uint64_t max_multiplications) {
  if (k < 0 || k > seq.length()) throw std::invalid_argument("subsequence length exceeds sequence length");
  const GroupParams& g = seq.group();
  std::vector<int> chosen(g.order(), 0);
  std::uint64_t spent = 0;
  bool found = false;
  sub_multisets(
      seq.multiplicities(), 0, k, chosen,
      [&](const std::vector<int>& pick) {
        std::vector<int> terms;
        for (int i = 0; i < g.order(); ++i)
          for (int c = 0; c < pick[i]; ++c) terms.push_back(i);
        do {
          Element acc = kIdentity;
          for (int idx : terms) acc = multiply(g, acc, element_from_index(g, idx));
          spent += terms.size();
          if (spent > max_multiplications) throw BudgetExceeded("permutation oracle budget exceeded");
          if (acc == kIdentity) return true;
        } while (std::next_permutation(terms.begin(), terms.end()));
        return false;
      },
      found);
  return found;
}

std::optional<Sequence> egz_witness_lower(const GroupParams& g, int k, const Context& ctx) {
  const int exp = exponent(g);
  if (k < exp)
    throw std::invalid_argument("sequence length " + std::to_string(k) + " is below exp(G) = " + std::to_string(exp));
  require_searchable(g, ctx);
  auto found = search_failing(g, k, ctx);
  if (!found.found) return std::nullopt;
  return Sequence(g, std::move(found.witness));
}

EgzResult egz_bruteforce(const GroupParams& g, int k_max, const Context& ctx) {
  require_searchable(g, ctx);
  EgzResult result;
  result.exp = exponent(g);
  result.k_max = k_max;
  for (int k = result.exp; k <= k_max; ++k) {
    auto found = search_failing(g, k, ctx);
    result.nodes += found.nodes;
    if (!found.found) {
      result.value = k;
      return result;
    }
    result.witness = Sequence(g, std::move(found.witness));
  }
  return result;
}

std::string to_string(ConjectureStatus status) {
  switch (status) {
    case ConjectureStatus::Confirmed: return "CONFIRMED";
    case ConjectureStatus::Refuted: return "REFUTED";
    case ConjectureStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

ConjectureCheck check_egz_conjecture(const GroupParams& g, const Context& ctx) {
  ConjectureCheck check;
  check.predicted = 3 * g.n();
  check.result = egz_bruteforce(g, check.predicted, ctx);
  const bool applicable = g.n() >= 4 && g.n() % 2 == 0 && g.m() % 2 == 0;
  if (!applicable) return check;
  if (check.result.value == check.predicted) {
    check.status = ConjectureStatus::Confirmed;
  } else {
    check.status = ConjectureStatus::Refuted;
    // The witness is the longest failing sequence found: length 3n when the
    // value exceeds 3n, length s - 1 when it falls short.
    if (check.result.witness)
      check.witness_verified = !zero_product_by_permutations(*check.result.witness, check.result.exp);
  }
  return check;
}

}  // namespace metacyclic
