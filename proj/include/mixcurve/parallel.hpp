#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace mixcurve {

enum class Execution { Serial, Parallel };

/// out[i] = f(i) for i in [0, n). The serial loop is the reference; the
/// OpenMP loop must produce identical output. If any f(i) throws, the
/// exception of the lowest failing index is rethrown after the loop.
template <typename T, typename F>
std::vector<T> index_map(std::size_t n, F&& f, Execution exec) {
  std::vector<T> out(n);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = f(k);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace mixcurve
