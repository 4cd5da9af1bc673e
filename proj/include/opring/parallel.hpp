#pragma once

#include <cstddef>

namespace opring::par {

// Runtime switch between the OpenMP kernels and their serial reference
// implementations.  Defaults to parallel when compiled with OpenMP.
bool enabled();
void set_enabled(bool on);

// Scoped override, used by tests and the benchmark driver.
class Guard {
 public:
  explicit Guard(bool on) : prev_(enabled()) { set_enabled(on); }
  ~Guard() { set_enabled(prev_); }
  Guard(const Guard&) = delete;
  Guard& operator=(const Guard&) = delete;

 private:
  bool prev_;
};

template <class F>
void for_range(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace opring::par
