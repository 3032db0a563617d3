// Execution policy for the data-parallel kernels. Every kernel taking an
// Exec has a plain serial path that doubles as its test reference.
#pragma once

#include <cstddef>
#include <exception>

namespace sperner {

enum class Exec { serial, parallel };

int worker_count();

/// Runs body(i) for i in [0, n). Bodies must write only to per-index slots.
/// The first exception thrown by any body is rethrown after the loop.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(sperner_for_each_error)
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace sperner
