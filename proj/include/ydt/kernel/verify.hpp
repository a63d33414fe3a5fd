#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ydt/kernel/exec.hpp"
#include "ydt/kernel/plan.hpp"

namespace ydt {

/// Outcome of one named identity check.
struct CheckResult {
    std::string id;
    std::string anchor;   // the identity being checked, in formula form
    bool passed = true;
    std::vector<std::size_t> counterexample;   // input basis tuple of the first failure
    std::string counterexample_text;           // same, with basis labels
    std::size_t tuples_checked = 0;
    std::string note;   // set for checks that are not identity comparisons
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& id) const;
    /// First failing check, if any.
    const CheckResult* first_failure() const;
    void append(const Report& other);
    void add(CheckResult r) { checks.push_back(std::move(r)); }
};

/// An equation between two plans over the same input legs, checked on every
/// basis tuple of the inputs.
struct Identity {
    std::string id;
    std::string anchor;
    Shape inputs;
    std::vector<std::vector<std::string>> basis_labels;   // optional, per input leg
    Plan lhs;
    Plan rhs;
    std::vector<std::string> leg_names;   // optional; counterexamples then read "(h=x, m=1)"
};

namespace kernel {

/// Sampling and budget knobs shared by every verification.
struct VerifyConfig {
    std::size_t sample = 0;                 // 0: exhaustive
    std::uint64_t seed = 0x5eed'cafe'f00dULL;
    std::size_t max_tuples = 0;             // 0: unlimited; otherwise refuse larger checks
};

VerifyConfig verify_config();
void set_verify_config(const VerifyConfig& config);

/// Raised when a check exceeds the tuple budget and sampling is off.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis tuples to visit for a check over `total` tuples (all of them, or
/// a sorted fixed-seed sample).
std::vector<std::size_t> tuple_schedule(std::size_t total);

CheckResult verify(const Identity& identity, ExecPolicy policy = default_policy());
CheckResult verify_parallel(const Identity& identity);
CheckResult verify_serial(const Identity& identity);

}  // namespace kernel

/// Checks `lhs == rhs` as maps, reporting the first differing input column.
CheckResult compare_maps(std::string id, std::string anchor, const LinearMap& lhs, const LinearMap& rhs,
                         const std::vector<std::vector<std::string>>& basis_labels = {},
                         const std::vector<std::string>& leg_names = {});

/// A check that is a plain boolean fact (e.g. a matrix is invertible).
CheckResult fact(std::string id, std::string anchor, bool passed, std::string note = {});

/// Evaluates `plan` on every input basis tensor to obtain its matrix.
LinearMap realize(const Plan& plan, const Shape& in, const Shape& out,
                  kernel::ExecPolicy policy = kernel::default_policy());

std::string tuple_text(const std::vector<std::size_t>& tuple, const Shape& legs,
                       const std::vector<std::vector<std::string>>& basis_labels,
                       const std::vector<std::string>& leg_names = {});

}  // namespace ydt
