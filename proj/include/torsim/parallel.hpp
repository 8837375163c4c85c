#pragma once

/**
 * @file parallel.hpp
 * @brief Deterministic fan-out of independent jobs over worker threads.
 *
 * Results are stored by index, so the output never depends on scheduling.
 * The worker count is capped by the TORSIM_THREADS environment variable.
 */

#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "torsim/errors.hpp"

namespace torsim {

inline std::size_t worker_count() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("TORSIM_THREADS");
  if (!env || !*env) return hw;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 6)
    throw InputError("TORSIM_THREADS must be a positive integer, got '" + s + "'");
  std::size_t n = std::stoul(s);
  if (n == 0) throw InputError("TORSIM_THREADS must be a positive integer, got '0'");
  return n;
}

/// Applies f to 0..n-1 and returns the results in index order. If any call
/// throws, the exception with the smallest index is rethrown.
template <class F>
auto parallel_map(std::size_t n, F&& f, std::size_t threads = worker_count()) {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace torsim
