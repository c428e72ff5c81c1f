#pragma once

// Loop helper for independent work items. Exec::Serial is the reference path
// kept for tests and benchmarks; Exec::Parallel fans out with OpenMP.

#include <exception>

namespace cellcat {

enum class Exec { Serial, Parallel };

template <class Body>
void for_each_index(int n, Exec exec, Body&& body) {
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(cellcat_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cellcat
