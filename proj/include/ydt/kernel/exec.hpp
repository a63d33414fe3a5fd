#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace ydt::kernel {

enum class ExecPolicy { serial, parallel };

/// Process-wide default used by the parallel kernels. The parallel path
/// produces bit-identical results; only throughput differs.
ExecPolicy default_policy() noexcept;
void set_default_policy(ExecPolicy policy) noexcept;

/// Sets the OpenMP team size (0 keeps the runtime default) and selects the
/// serial policy when n == 1.
void set_threads(int n);
int max_threads() noexcept;

/// Runs body(i) for i in [0, n). Iterations must be independent. The first
/// exception thrown (lowest index wins when several throw) is rethrown on
/// the calling thread.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    ExecPolicy policy = default_policy());

}  // namespace ydt::kernel
