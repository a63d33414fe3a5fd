#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ydt/kernel/exec.hpp"
#include "ydt/kernel/linear_map.hpp"
#include "ydt/kernel/tensor.hpp"

namespace ydt {

namespace kernel {

/// Applies `map` to the legs of `t` at `positions` (in the order of map.in()).
/// Untouched legs keep their relative order; the map's output legs are
/// appended at the end. The parallel and serial versions are bit-identical.
Tensor apply_map(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map,
                 ExecPolicy policy = default_policy());
Tensor apply_map_parallel(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map);
/// Reference implementation: walks every input coefficient by multi-index.
Tensor apply_map_serial(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map);

}  // namespace kernel

/// A deterministic sequence of tensor operations addressed by leg labels.
///
/// Sweedler-style expressions are written by naming every leg: applying Δ to
/// leg "h" with outputs {"h1", "h2"} is `apply(comul, {"h"}, {"h1", "h2"})`.
/// Labels are resolved to positions when the plan is built, so running a plan
/// is label-free. Leg spaces and sizes are checked when the plan runs.
class Plan {
public:
    explicit Plan(std::vector<std::string> inputs = {});

    /// Consumes the labelled legs, appends the map's outputs under new labels.
    Plan& apply(const LinearMap& map, const std::vector<std::string>& in, const std::vector<std::string>& out);
    Plan& permute(const std::vector<std::string>& order);
    /// Sums the two legs against `pairing` (a map with no outputs).
    Plan& contract_pair(const std::string& a, const std::string& b, const LinearMap& pairing);
    Plan& tensor_with(const Tensor& constant, const std::vector<std::string>& labels);
    /// Fuses adjacent-in-order legs into one leg of the given space (row-major).
    Plan& merge(const std::vector<std::string>& from, const std::string& to, SpaceId space);
    /// Splits one leg into several; dims must multiply to the original.
    Plan& split(const std::string& from, const std::vector<std::string>& to, const Shape& legs);
    /// Final leg order; every live label must appear exactly once.
    Plan& output(const std::vector<std::string>& order);

    const std::vector<std::string>& inputs() const noexcept { return inputs_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return steps_.size(); }

    Tensor run(const Tensor& input, kernel::ExecPolicy policy = kernel::ExecPolicy::serial) const;
    /// Same result as run(), computed on nonzero coefficients only.
    SparseTensor run_sparse(SparseTensor input) const;

private:
    struct ApplyStep {
        LinearMap map;
        std::vector<std::size_t> positions;
    };
    struct PermuteStep {
        std::vector<std::size_t> perm;
    };
    struct TensorStep {
        Tensor constant;
    };
    struct ReshapeStep {
        std::vector<std::size_t> positions;   // moved to the end, then replaced
        Shape legs;                           // empty when merging: computed from the inputs
        SpaceId merged_space;
    };
    using Step = std::variant<ApplyStep, PermuteStep, TensorStep, ReshapeStep>;

    std::vector<std::size_t> take(const std::vector<std::string>& labels, const char* what);
    void add(Step step, std::string description);

    std::vector<std::string> inputs_;
    std::vector<std::string> labels_;
    std::vector<Step> steps_;
    std::vector<std::string> descriptions_;
};

/// Executes `plan` on `input`; the empty plan is the identity.
Tensor contract(const Plan& plan, const Tensor& input);

}  // namespace ydt
