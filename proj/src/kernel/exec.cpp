#include "ydt/kernel/exec.hpp"

#include <atomic>
#include <limits>
#include <mutex>

#include <omp.h>

namespace ydt::kernel {

namespace {
std::atomic<ExecPolicy> g_policy{ExecPolicy::parallel};
}

ExecPolicy default_policy() noexcept { return g_policy.load(std::memory_order_relaxed); }

void set_default_policy(ExecPolicy policy) noexcept { g_policy.store(policy, std::memory_order_relaxed); }

void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
    set_default_policy(n == 1 ? ExecPolicy::serial : ExecPolicy::parallel);
}

int max_threads() noexcept { return omp_get_max_threads(); }

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, ExecPolicy policy) {
    if (policy == ExecPolicy::serial || n < 2 || omp_in_parallel()) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::size_t error_index = std::numeric_limits<std::size_t>::max();
    std::mutex error_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (static_cast<std::size_t>(i) < error_index) {
                error_index = static_cast<std::size_t>(i);
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace ydt::kernel
