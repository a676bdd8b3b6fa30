#pragma once

#include <omp.h>

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

namespace vatwist::kernels {

/// Every data-parallel kernel has a serial reference path selected by this
/// flag. The two paths must produce identical results.
enum class Exec { Serial, Parallel };

/// Calls body(i) for i in [0, n). Iterations must write disjoint state.
template <class Body>
void for_each_index(std::size_t n, Body&& body, Exec exec = Exec::Parallel) {
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    return;
  }
  // Exceptions must not escape an OpenMP region; the first one (by index)
  // is rethrown after the loop.
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Smallest i in [0, n) with pred(i) true. The parallel path returns the
/// same index as the serial one.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Pred&& pred, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i < best && pred(static_cast<std::size_t>(i))) best = i;
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return static_cast<std::size_t>(best);
}

/// out[i] = f(i), evaluated in parallel with results in index order.
template <class T, class F>
std::vector<T> map_indices(std::size_t n, F&& f, Exec exec = Exec::Parallel) {
  std::vector<T> out(n);
  for_each_index(n, [&](std::size_t i) { out[i] = f(i); }, exec);
  return out;
}

}  // namespace vatwist::kernels
