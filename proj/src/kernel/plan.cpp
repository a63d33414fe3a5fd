#include "ydt/kernel/plan.hpp"

#include <algorithm>

namespace ydt {

namespace kernel {

// Shared by the dense and sparse paths.
void check_legs(const Shape& legs, std::span<const std::size_t> positions, const LinearMap& map) {
    if (positions.size() != map.in().size())
        throw ShapeError("map takes " + std::to_string(map.in().size()) + " legs, " +
                         std::to_string(positions.size()) + " given");
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (positions[k] >= legs.size()) throw ShapeError("leg position out of range");
        const Leg& have = legs[positions[k]];
        const Leg& want = map.in()[k];
        if (!(have == want))
            throw ShapeError("input " + std::to_string(k) + " is " + describe(std::span(&have, 1)) + ", map expects " +
                             describe(std::span(&want, 1)));
    }
}

namespace {

void check_positions(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map) {
    check_legs(t.legs(), positions, map);
}

struct Layout {
    Shape rest_legs;
    std::vector<std::size_t> rest_positions;
};

Layout split_layout(const Tensor& t, std::span<const std::size_t> positions) {
    Layout l;
    for (std::size_t i = 0; i < t.rank(); ++i) {
        if (std::find(positions.begin(), positions.end(), i) == positions.end()) {
            l.rest_positions.push_back(i);
            l.rest_legs.push_back(t.legs()[i]);
        }
    }
    return l;
}

Shape result_legs(const Layout& l, const LinearMap& map) {
    Shape legs = l.rest_legs;
    legs.insert(legs.end(), map.out().begin(), map.out().end());
    return legs;
}

// Flat offsets inside `t` for every multi-index over the selected legs.
std::vector<std::size_t> offset_table(const Tensor& t, std::span<const std::size_t> selected) {
    std::vector<std::size_t> stride(t.rank(), 1);
    for (std::size_t i = t.rank(); i-- > 1;) stride[i - 1] = stride[i] * t.legs()[i].dim;
    std::size_t n = 1;
    for (auto p : selected) n *= t.legs()[p].dim;
    std::vector<std::size_t> table(n, 0);
    std::size_t block = 1;
    for (std::size_t k = selected.size(); k-- > 0;) {
        const std::size_t dim = t.legs()[selected[k]].dim;
        const std::size_t s = stride[selected[k]];
        for (std::size_t idx = 0; idx < n; ++idx) table[idx] += ((idx / block) % dim) * s;
        block *= dim;
    }
    return table;
}

constexpr std::size_t kParallelThreshold = 1U << 14;

}  // namespace

Tensor apply_map(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map, ExecPolicy policy) {
    return policy == ExecPolicy::parallel ? apply_map_parallel(t, positions, map)
                                          : apply_map_serial(t, positions, map);
}

Tensor apply_map_parallel(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map) {
    check_positions(t, positions, map);
    Layout layout = split_layout(t, positions);
    Tensor out(result_legs(layout, map));
    const auto rest_off = offset_table(t, layout.rest_positions);
    const auto in_off = offset_table(t, positions);
    const auto n_rest = static_cast<long long>(rest_off.size());
    const std::size_t n_in = in_off.size();
    const std::size_t n_out = map.rows();
    const bool big = t.size() * std::max<std::size_t>(n_out, 1) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
    for (long long r = 0; r < n_rest; ++r) {
        const std::size_t base = rest_off[static_cast<std::size_t>(r)];
        const std::size_t row = static_cast<std::size_t>(r) * n_out;
        for (std::size_t i = 0; i < n_in; ++i) {
            const Scalar& x = t[base + in_off[i]];
            if (x.is_zero()) continue;
            for (const auto& e : map.column(i)) out[row + e.row].add_product(x, e.value);
        }
    }
    return out;
}

Tensor apply_map_serial(const Tensor& t, std::span<const std::size_t> positions, const LinearMap& map) {
    check_positions(t, positions, map);
    Layout layout = split_layout(t, positions);
    Tensor out(result_legs(layout, map));
    Shape in_legs;
    for (auto p : positions) in_legs.push_back(t.legs()[p]);
    const std::size_t n_out = map.rows();
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        if (t[flat].is_zero()) continue;
        const auto idx = unflatten(flat, t.legs());
        std::vector<std::size_t> rest_idx, in_idx;
        for (auto p : layout.rest_positions) rest_idx.push_back(idx[p]);
        for (auto p : positions) in_idx.push_back(idx[p]);
        const std::size_t r = flatten(rest_idx, layout.rest_legs);
        const std::size_t i = flatten(in_idx, in_legs);
        for (std::size_t o = 0; o < n_out; ++o) {
            const Scalar& m = map(o, i);
            if (!m.is_zero()) out[r * n_out + o] += t[flat] * m;
        }
    }
    return out;
}

}  // namespace kernel

Plan::Plan(std::vector<std::string> inputs) : inputs_(inputs), labels_(std::move(inputs)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j]) throw ShapeError("duplicate input label '" + labels_[i] + "'");
}

std::vector<std::size_t> Plan::take(const std::vector<std::string>& labels, const char* what) {
    std::vector<std::size_t> positions;
    for (const auto& l : labels) {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end())
            throw ShapeError("step " + std::to_string(steps_.size()) + " (" + what + "): unknown leg '" + l + "'");
        auto pos = static_cast<std::size_t>(it - labels_.begin());
        if (std::find(positions.begin(), positions.end(), pos) != positions.end())
            throw ShapeError("step " + std::to_string(steps_.size()) + " (" + what + "): leg '" + l + "' used twice");
        positions.push_back(pos);
    }
    std::vector<std::string> remaining;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (std::find(positions.begin(), positions.end(), i) == positions.end()) remaining.push_back(labels_[i]);
    labels_ = std::move(remaining);
    return positions;
}

void Plan::add(Step step, std::string description) {
    steps_.push_back(std::move(step));
    descriptions_.push_back(std::move(description));
}

namespace {
std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}
}  // namespace

Plan& Plan::apply(const LinearMap& map, const std::vector<std::string>& in, const std::vector<std::string>& out) {
    if (out.size() != map.out().size())
        throw ShapeError("step " + std::to_string(steps_.size()) + " (apply): map has " +
                         std::to_string(map.out().size()) + " outputs, " + std::to_string(out.size()) + " labels");
    auto positions = take(in, "apply");
    for (const auto& l : out) {
        if (std::find(labels_.begin(), labels_.end(), l) != labels_.end())
            throw ShapeError("step " + std::to_string(steps_.size()) + " (apply): label '" + l + "' already live");
        labels_.push_back(l);
    }
    add(ApplyStep{map, std::move(positions)}, "apply [" + join(in) + "] -> [" + join(out) + "]");
    return *this;
}

Plan& Plan::permute(const std::vector<std::string>& order) {
    if (order.size() != labels_.size())
        throw ShapeError("step " + std::to_string(steps_.size()) + " (permute): expected " +
                         std::to_string(labels_.size()) + " labels, got " + std::to_string(order.size()));
    auto perm = take(order, "permute");
    labels_ = order;
    bool trivial = true;
    for (std::size_t i = 0; i < perm.size(); ++i) trivial = trivial && perm[i] == i;
    if (!trivial) add(PermuteStep{std::move(perm)}, "permute [" + join(order) + "]");
    return *this;
}

Plan& Plan::contract_pair(const std::string& a, const std::string& b, const LinearMap& pairing) {
    if (!pairing.out().empty()) throw ShapeError("pairing must have no output legs");
    return apply(pairing, {a, b}, {});
}

Plan& Plan::tensor_with(const Tensor& constant, const std::vector<std::string>& labels) {
    if (labels.size() != constant.rank())
        throw ShapeError("step " + std::to_string(steps_.size()) + " (tensor-with): rank mismatch");
    for (const auto& l : labels) {
        if (std::find(labels_.begin(), labels_.end(), l) != labels_.end())
            throw ShapeError("step " + std::to_string(steps_.size()) + " (tensor-with): label '" + l + "' already live");
        labels_.push_back(l);
    }
    add(TensorStep{constant}, "tensor-with [" + join(labels) + "]");
    return *this;
}

Plan& Plan::merge(const std::vector<std::string>& from, const std::string& to, SpaceId space) {
    auto positions = take(from, "merge");
    labels_.push_back(to);
    add(ReshapeStep{std::move(positions), {}, space}, "merge [" + join(from) + "] -> " + to);
    return *this;
}

Plan& Plan::split(const std::string& from, const std::vector<std::string>& to, const Shape& legs) {
    if (to.size() != legs.size()) throw ShapeError("split: label/leg count mismatch");
    auto positions = take({from}, "split");
    for (const auto& l : to) labels_.push_back(l);
    add(ReshapeStep{std::move(positions), legs, SpaceId{}}, "split " + from + " -> [" + join(to) + "]");
    return *this;
}

Plan& Plan::output(const std::vector<std::string>& order) { return permute(order); }

Tensor Plan::run(const Tensor& input, kernel::ExecPolicy policy) const {
    if (input.rank() != inputs_.size())
        throw ShapeError("plan expects " + std::to_string(inputs_.size()) + " input legs, got " +
                         std::to_string(input.rank()));
    Tensor cur = input;
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        try {
            std::visit(
                [&](const auto& step) {
                    using T = std::decay_t<decltype(step)>;
                    if constexpr (std::is_same_v<T, ApplyStep>) {
                        cur = kernel::apply_map(cur, step.positions, step.map, policy);
                    } else if constexpr (std::is_same_v<T, PermuteStep>) {
                        cur = ydt::permute(cur, step.perm);
                    } else if constexpr (std::is_same_v<T, TensorStep>) {
                        cur = outer(cur, step.constant);
                    } else {
                        std::vector<std::size_t> perm;
                        for (std::size_t i = 0; i < cur.rank(); ++i)
                            if (std::find(step.positions.begin(), step.positions.end(), i) == step.positions.end())
                                perm.push_back(i);
                        const std::size_t kept = perm.size();
                        std::size_t moved = 1;
                        for (auto p : step.positions) {
                            if (p >= cur.rank()) throw ShapeError("leg position out of range");
                            perm.push_back(p);
                            moved *= cur.legs()[p].dim;
                        }
                        Tensor t = ydt::permute(cur, perm);
                        Shape legs(t.legs().begin(), t.legs().begin() + static_cast<std::ptrdiff_t>(kept));
                        if (step.legs.empty()) {
                            legs.push_back(Leg{step.merged_space, moved});
                        } else {
                            if (volume(step.legs) != moved)
                                throw ShapeError("split target " + describe(step.legs) + " does not match leg size " +
                                                 std::to_string(moved));
                            legs.insert(legs.end(), step.legs.begin(), step.legs.end());
                        }
                        cur = std::move(t).reshaped(std::move(legs));
                    }
                },
                steps_[s]);
        } catch (const ShapeError& e) {
            throw ShapeError("step " + std::to_string(s) + " (" + descriptions_[s] + "): " + e.what());
        }
    }
    return cur;
}

namespace {

std::vector<std::size_t> strides(const Shape& legs) {
    std::vector<std::size_t> st(legs.size(), 1);
    for (std::size_t i = legs.size(); i-- > 1;) st[i - 1] = st[i] * legs[i].dim;
    return st;
}

// Moves the legs at `perm` into result order and reflattens every entry.
SparseTensor permute_sparse(SparseTensor t, std::span<const std::size_t> perm) {
    Shape out;
    for (auto p : perm) {
        if (p >= t.legs.size()) throw ShapeError("leg position out of range");
        out.push_back(t.legs[p]);
    }
    const auto out_stride = strides(out);
    for (auto& e : t.entries) {
        const auto idx = unflatten(e.first, t.legs);
        std::size_t f = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) f += idx[perm[k]] * out_stride[k];
        e.first = f;
    }
    t.legs = std::move(out);
    t.normalize();
    return t;
}

}  // namespace

SparseTensor Plan::run_sparse(SparseTensor cur) const {
    if (cur.legs.size() != inputs_.size())
        throw ShapeError("plan expects " + std::to_string(inputs_.size()) + " input legs, got " +
                         std::to_string(cur.legs.size()));
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        try {
            std::visit(
                [&](const auto& step) {
                    using T = std::decay_t<decltype(step)>;
                    if constexpr (std::is_same_v<T, ApplyStep>) {
                        kernel::check_legs(cur.legs, step.positions, step.map);
                        std::vector<std::size_t> rest;
                        Shape out_legs, in_legs;
                        for (std::size_t i = 0; i < cur.legs.size(); ++i)
                            if (std::find(step.positions.begin(), step.positions.end(), i) == step.positions.end()) {
                                rest.push_back(i);
                                out_legs.push_back(cur.legs[i]);
                            }
                        for (auto p : step.positions) in_legs.push_back(cur.legs[p]);
                        const std::size_t n_out = step.map.rows();
                        out_legs.insert(out_legs.end(), step.map.out().begin(), step.map.out().end());
                        SparseTensor next{std::move(out_legs), {}};
                        std::vector<std::size_t> ri(rest.size()), ii(step.positions.size());
                        for (const auto& [flat, x] : cur.entries) {
                            const auto idx = unflatten(flat, cur.legs);
                            for (std::size_t k = 0; k < rest.size(); ++k) ri[k] = idx[rest[k]];
                            for (std::size_t k = 0; k < ii.size(); ++k) ii[k] = idx[step.positions[k]];
                            std::size_t r = 0;
                            for (std::size_t k = 0; k < rest.size(); ++k) r = r * cur.legs[rest[k]].dim + ri[k];
                            const std::size_t c = flatten(ii, in_legs);
                            for (const auto& e : step.map.column(c)) next.entries.emplace_back(r * n_out + e.row, x * e.value);
                        }
                        next.normalize();
                        cur = std::move(next);
                    } else if constexpr (std::is_same_v<T, PermuteStep>) {
                        if (step.perm.size() != cur.legs.size()) throw ShapeError("permutation rank mismatch");
                        cur = permute_sparse(std::move(cur), step.perm);
                    } else if constexpr (std::is_same_v<T, TensorStep>) {
                        const std::size_t n = step.constant.size();
                        SparseTensor next{cur.legs, {}};
                        next.legs.insert(next.legs.end(), step.constant.legs().begin(), step.constant.legs().end());
                        for (const auto& [flat, x] : cur.entries)
                            for (std::size_t j = 0; j < n; ++j)
                                if (!step.constant[j].is_zero())
                                    next.entries.emplace_back(flat * n + j, x * step.constant[j]);
                        cur = std::move(next);
                    } else {
                        std::vector<std::size_t> perm;
                        for (std::size_t i = 0; i < cur.legs.size(); ++i)
                            if (std::find(step.positions.begin(), step.positions.end(), i) == step.positions.end())
                                perm.push_back(i);
                        const std::size_t kept = perm.size();
                        std::size_t moved = 1;
                        for (auto p : step.positions) {
                            if (p >= cur.legs.size()) throw ShapeError("leg position out of range");
                            perm.push_back(p);
                            moved *= cur.legs[p].dim;
                        }
                        cur = permute_sparse(std::move(cur), perm);
                        cur.legs.resize(kept);
                        if (step.legs.empty()) {
                            cur.legs.push_back(Leg{step.merged_space, moved});
                        } else {
                            if (volume(step.legs) != moved)
                                throw ShapeError("split target " + describe(step.legs) + " does not match leg size " +
                                                 std::to_string(moved));
                            cur.legs.insert(cur.legs.end(), step.legs.begin(), step.legs.end());
                        }
                    }
                },
                steps_[s]);
        } catch (const ShapeError& e) {
            throw ShapeError("step " + std::to_string(s) + " (" + descriptions_[s] + "): " + e.what());
        }
    }
    return cur;
}

Tensor contract(const Plan& plan, const Tensor& input) { return plan.run(input); }

}  // namespace ydt
