#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "metacyclic/combinatorics.hpp"

namespace metacyclic {

/// Splits [0, count) into contiguous chunks, evaluates fn(begin, end) for
/// each chunk on up to `workers` threads and folds the chunk results in
/// chunk order. The chunking depends only on `count`, so the folded value is
/// the same for every worker count. The first exception in chunk order is
/// rethrown after all workers have joined.
template <class T, class ChunkFn, class Combine>
T parallel_reduce(int workers, std::uint64_t count, ChunkFn&& fn, T init, Combine&& combine) {
  if (count == 0) return init;
  const std::uint64_t chunks = std::min<std::uint64_t>(count, 64);
  auto bounds = [&](std::uint64_t c) { return count * c / chunks; };

  std::vector<std::optional<T>> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      try {
        results[c].emplace(fn(bounds(c), bounds(c + 1)));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::uint64_t>(std::max(workers, 1), chunks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  for (std::uint64_t c = 0; c < chunks; ++c)
    if (errors[c]) std::rethrow_exception(errors[c]);
  T acc = std::move(init);
  for (std::uint64_t c = 0; c < chunks; ++c) acc = combine(std::move(acc), std::move(*results[c]));
  return acc;
}

/// Lowest index in [0, count) for which pred holds, or nullopt. Workers skip
/// indices above the best hit found so far, so the answer is deterministic.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(int workers, std::uint64_t count, Pred&& pred) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNone};
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> int {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i > best.load(std::memory_order_relaxed)) break;
      if (pred(i)) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
    return 0;
  };
  parallel_reduce(workers, count, chunk, 0, [](int a, int) { return a; });
  const std::uint64_t hit = best.load();
  if (hit == kNone) return std::nullopt;
  return hit;
}


/// Colex-first k-subset of {0..width-1} (as a bitmask) satisfying pred, or
/// nullopt. The rank space is split across workers; each chunk unranks its
/// first subset and then steps with next_combination.
template <class Pred>
std::optional<std::uint64_t> find_first_combination(int workers, int width, int k, Pred&& pred) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  const std::uint64_t total = binomial(width, k);
  std::atomic<std::uint64_t> best_rank{kNone};
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::uint64_t> {
    std::uint64_t mask = colex_unrank(begin, k, width);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (rank > best_rank.load(std::memory_order_relaxed)) break;
      if (pred(mask)) {
        std::uint64_t cur = best_rank.load();
        while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
        }
        return mask;
      }
      if (rank + 1 < end) mask = k == 0 ? 0 : next_combination(mask, width);
    }
    return std::nullopt;
  };
  // Chunks are folded in order, so the first chunk with a hit wins.
  return parallel_reduce(
      workers, total, chunk, std::optional<std::uint64_t>{},
      [](std::optional<std::uint64_t> acc, std::optional<std::uint64_t> next) { return acc ? acc : next; });
}

/// Folds fn(mask) over every k-subset of {0..width-1}, in colex chunks.
template <class T, class Fn, class Combine>
T reduce_combinations(int workers, int width, int k, Fn&& fn, T init, Combine&& combine) {
  const std::uint64_t total = binomial(width, k);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> T {
    T acc{};
    std::uint64_t mask = colex_unrank(begin, k, width);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      acc = combine(std::move(acc), fn(mask));
      if (rank + 1 < end) mask = k == 0 ? 0 : next_combination(mask, width);
    }
    return acc;
  };
  return parallel_reduce(workers, total, chunk, std::move(init), combine);
}

}  // namespace metacyclic
