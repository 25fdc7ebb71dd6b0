#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "symqe/verdict.hpp"

namespace symqe::detail {

// Runs eval(i) for i = 0, 1, ... and stops at the first record whose
// `passed` is false. Returns that index. Records up to and including it are
// appended to *trace when trace is non-null. The parallel path reports the
// same index and the same trace as the sequential one.
template <class Record, class Eval>
std::optional<std::size_t> scan_checks(std::size_t count, const Eval& eval, const DecideOptions& options,
                                       std::vector<TraceRecord>* trace) {
  unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  if (!options.parallel || workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      Record rec = eval(i);
      const bool passed = rec.passed;
      if (trace) trace->emplace_back(std::move(rec));
      if (!passed) return i;
    }
    return std::nullopt;
  }

  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{count};
  std::vector<std::optional<Record>> slots(trace ? count : 0);

  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= first_fail.load()) return;
      Record rec = eval(i);
      const bool passed = rec.passed;
      if (trace) slots[i] = std::move(rec);
      if (!passed) {
        std::size_t seen = first_fail.load();
        while (i < seen && !first_fail.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  const std::size_t fail = first_fail.load();
  if (trace) {
    const std::size_t end = fail == count ? count : fail + 1;
    for (std::size_t i = 0; i < end; ++i) trace->emplace_back(std::move(*slots[i]));
  }
  if (fail == count) return std::nullopt;
  return fail;
}

}  // namespace symqe::detail
