#include "ydt/kernel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <set>

#include <omp.h>

namespace ydt {

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

const CheckResult* Report::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::string tuple_text(const std::vector<std::size_t>& tuple, const Shape& legs,
                       const std::vector<std::vector<std::string>>& basis_labels,
                       const std::vector<std::string>& leg_names) {
    std::string s = "(";
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k) s += ", ";
        if (k < leg_names.size() && !leg_names[k].empty()) s += leg_names[k] + "=";
        if (k < basis_labels.size() && tuple[k] < basis_labels[k].size()) {
            s += basis_labels[k][tuple[k]];
        } else {
            s += (k < legs.size() ? legs[k].space.name() : std::string("?")) + "#" + std::to_string(tuple[k]);
        }
    }
    return s + ")";
}

namespace kernel {

namespace {
std::mutex g_config_mutex;
VerifyConfig g_config;

CheckResult make_result(const Identity& identity, std::size_t checked, std::optional<std::size_t> failing_flat) {
    CheckResult r;
    r.id = identity.id;
    r.anchor = identity.anchor;
    r.tuples_checked = checked;
    if (failing_flat) {
        r.passed = false;
        r.counterexample = unflatten(*failing_flat, identity.inputs);
        r.counterexample_text = tuple_text(r.counterexample, identity.inputs, identity.basis_labels, identity.leg_names);
    }
    return r;
}

bool holds_at(const Identity& identity, std::size_t flat) {
    SparseTensor in = SparseTensor::basis(identity.inputs, flat);
    return identity.lhs.run_sparse(in) == identity.rhs.run_sparse(in);
}

}  // namespace

VerifyConfig verify_config() {
    std::lock_guard lock(g_config_mutex);
    return g_config;
}

void set_verify_config(const VerifyConfig& config) {
    std::lock_guard lock(g_config_mutex);
    g_config = config;
}

std::vector<std::size_t> tuple_schedule(std::size_t total) {
    const VerifyConfig cfg = verify_config();
    if (cfg.sample > 0 && total > cfg.sample) {
        std::mt19937_64 rng(cfg.seed ^ total);
        std::set<std::size_t> chosen;
        // Floyd's algorithm: sample distinct indices without a full shuffle
        for (std::size_t j = total - cfg.sample; j < total; ++j) {
            std::uniform_int_distribution<std::size_t> dist(0, j);
            std::size_t t = dist(rng);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        return {chosen.begin(), chosen.end()};
    }
    if (cfg.max_tuples > 0 && total > cfg.max_tuples)
        throw BudgetError("check needs " + std::to_string(total) + " basis tuples, budget is " +
                          std::to_string(cfg.max_tuples) + " (use sampling to opt in)");
    std::vector<std::size_t> all(total);
    for (std::size_t i = 0; i < total; ++i) all[i] = i;
    return all;
}

CheckResult verify(const Identity& identity, ExecPolicy policy) {
    return policy == ExecPolicy::parallel ? verify_parallel(identity) : verify_serial(identity);
}

CheckResult verify_serial(const Identity& identity) {
    const auto schedule = tuple_schedule(volume(identity.inputs));
    for (std::size_t k = 0; k < schedule.size(); ++k)
        if (!holds_at(identity, schedule[k])) return make_result(identity, k + 1, schedule[k]);
    return make_result(identity, schedule.size(), std::nullopt);
}

CheckResult verify_parallel(const Identity& identity) {
    const auto schedule = tuple_schedule(volume(identity.inputs));
    const auto n = static_cast<long long>(schedule.size());
    constexpr auto none = std::numeric_limits<long long>::max();
    std::atomic<long long> first_fail{none};
    std::exception_ptr error;
    long long error_at = none;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 8) if (n > 8 && !omp_in_parallel())
    for (long long k = 0; k < n; ++k) {
        if (k > first_fail.load(std::memory_order_relaxed)) continue;
        try {
            if (!holds_at(identity, schedule[static_cast<std::size_t>(k)])) {
                long long cur = first_fail.load();
                while (k < cur && !first_fail.compare_exchange_weak(cur, k)) {
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (k < error_at) {
                error_at = k;
                error = std::current_exception();
            }
        }
    }
    const long long fail = first_fail.load();
    if (error && error_at < fail) std::rethrow_exception(error);
    if (fail == none) return make_result(identity, schedule.size(), std::nullopt);
    // the serial path reports how many tuples it visited; match it exactly
    return make_result(identity, static_cast<std::size_t>(fail) + 1, schedule[static_cast<std::size_t>(fail)]);
}

}  // namespace kernel

CheckResult compare_maps(std::string id, std::string anchor, const LinearMap& lhs, const LinearMap& rhs,
                         const std::vector<std::vector<std::string>>& basis_labels,
                         const std::vector<std::string>& leg_names) {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.tuples_checked = lhs.cols();
    if (auto col = first_difference(lhs, rhs)) {
        r.passed = false;
        r.tuples_checked = *col + 1;
        r.counterexample = unflatten(*col, lhs.in());
        r.counterexample_text = tuple_text(r.counterexample, lhs.in(), basis_labels, leg_names);
    }
    return r;
}

CheckResult fact(std::string id, std::string anchor, bool passed, std::string note) {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.passed = passed;
    r.tuples_checked = 1;
    r.note = std::move(note);
    if (!passed) r.counterexample_text = r.note.empty() ? "(whole object)" : r.note;
    return r;
}

LinearMap realize(const Plan& plan, const Shape& in, const Shape& out, kernel::ExecPolicy policy) {
    std::vector<Scalar> dense(volume(out) * volume(in));
    const std::size_t cols = volume(in);
    kernel::for_each_index(
        cols,
        [&](std::size_t c) {
            SparseTensor img = plan.run_sparse(SparseTensor::basis(in, c));
            if (img.legs != out)
                throw ShapeError("plan yields " + describe(img.legs) + ", expected " + describe(out));
            for (auto& [r, v] : img.entries) dense[r * cols + c] = std::move(v);
        },
        policy);
    return LinearMap(out, in, std::move(dense));
}

}  // namespace ydt
