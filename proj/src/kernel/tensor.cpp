#include "ydt/kernel/tensor.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace ydt {

namespace {

struct SpaceRegistry {
    std::shared_mutex mutex;
    std::deque<std::string> names{"k"};
    std::unordered_map<std::string, std::uint32_t> index{{"k", 0}};

    static SpaceRegistry& instance() {
        static SpaceRegistry r;
        return r;
    }
};

}  // namespace

SpaceId::SpaceId(std::string_view name) {
    auto& reg = SpaceRegistry::instance();
    std::string key(name);
    {
        std::shared_lock lock(reg.mutex);
        if (auto it = reg.index.find(key); it != reg.index.end()) {
            id_ = it->second;
            return;
        }
    }
    std::unique_lock lock(reg.mutex);
    auto [it, inserted] = reg.index.emplace(key, static_cast<std::uint32_t>(reg.names.size()));
    if (inserted) reg.names.push_back(key);
    id_ = it->second;
}

const std::string& SpaceId::name() const {
    auto& reg = SpaceRegistry::instance();
    std::shared_lock lock(reg.mutex);
    return reg.names[id_];   // deque never relocates elements
}

Leg leg(std::string_view space, std::size_t dim) { return Leg{SpaceId(space), dim}; }

std::size_t volume(std::span<const Leg> shape) {
    std::size_t v = 1;
    for (const auto& l : shape) v *= l.dim;
    return v;
}

std::string describe(std::span<const Leg> shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ", ";
        s += shape[i].space.name() + ":" + std::to_string(shape[i].dim);
    }
    return s + "]";
}

std::vector<std::size_t> unflatten(std::size_t flat, std::span<const Leg> shape) {
    std::vector<std::size_t> idx(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
        idx[i] = flat % shape[i].dim;
        flat /= shape[i].dim;
    }
    return idx;
}

std::size_t flatten(std::span<const std::size_t> index, std::span<const Leg> shape) {
    if (index.size() != shape.size()) throw ShapeError("index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (index[i] >= shape[i].dim) throw ShapeError("index out of range on leg " + std::to_string(i));
        flat = flat * shape[i].dim + index[i];
    }
    return flat;
}

Tensor::Tensor(Shape legs) : legs_(std::move(legs)), data_(volume(legs_)) {}

Tensor::Tensor(Shape legs, std::vector<Scalar> data) : legs_(std::move(legs)), data_(std::move(data)) {
    if (data_.size() != volume(legs_))
        throw ShapeError("coefficient count " + std::to_string(data_.size()) + " does not match legs " + describe(legs_));
}

Tensor Tensor::scalar(Scalar value) { return Tensor({}, {std::move(value)}); }

Tensor Tensor::basis(Shape legs, std::span<const std::size_t> index) {
    Tensor t(std::move(legs));
    t.data_[flatten(index, t.legs_)] = 1;
    return t;
}

bool Tensor::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Tensor::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

Tensor Tensor::reshaped(Shape legs) const& {
    Tensor t = *this;
    return std::move(t).reshaped(std::move(legs));
}

Tensor Tensor::reshaped(Shape legs) && {
    if (volume(legs) != data_.size())
        throw ShapeError("cannot reshape " + describe(legs_) + " to " + describe(legs));
    legs_ = std::move(legs);
    return std::move(*this);
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    if (legs_ != rhs.legs_) throw ShapeError("adding " + describe(legs_) + " and " + describe(rhs.legs_));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    if (legs_ != rhs.legs_) throw ShapeError("subtracting " + describe(legs_) + " and " + describe(rhs.legs_));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Tensor outer(const Tensor& lhs, const Tensor& rhs) {
    Shape legs = lhs.legs_;
    legs.insert(legs.end(), rhs.legs_.begin(), rhs.legs_.end());
    Tensor out(std::move(legs));
    const std::size_t n = rhs.data_.size();
    for (std::size_t i = 0; i < lhs.data_.size(); ++i) {
        if (lhs.data_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!rhs.data_[j].is_zero()) out.data_[i * n + j] = lhs.data_[i] * rhs.data_[j];
        }
    }
    return out;
}

Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
    const auto& legs = t.legs();
    if (perm.size() != legs.size()) throw ShapeError("permutation rank mismatch");
    std::vector<bool> seen(perm.size());
    Shape out_legs;
    for (auto p : perm) {
        if (p >= legs.size() || seen[p]) throw ShapeError("invalid leg permutation");
        seen[p] = true;
        out_legs.push_back(legs[p]);
    }
    // stride of each output leg inside the input layout
    std::vector<std::size_t> in_stride(legs.size(), 1);
    for (std::size_t i = legs.size(); i-- > 1;) in_stride[i - 1] = in_stride[i] * legs[i].dim;
    Tensor out(out_legs);
    std::vector<std::size_t> idx(perm.size(), 0);
    const std::size_t n = out.size();
    std::size_t src = 0;
    for (std::size_t flat = 0; flat < n; ++flat) {
        if (!t[src].is_zero()) out[flat] = t[src];
        // odometer increment over output legs, tracking the source offset
        for (std::size_t k = perm.size(); k-- > 0;) {
            src += in_stride[perm[k]];
            if (++idx[k] < out_legs[k].dim) break;
            src -= in_stride[perm[k]] * out_legs[k].dim;
            idx[k] = 0;
        }
    }
    return out;
}

SparseTensor SparseTensor::from_dense(const Tensor& t) {
    SparseTensor s{t.legs(), {}};
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!t[i].is_zero()) s.entries.emplace_back(i, t[i]);
    return s;
}

SparseTensor SparseTensor::basis(Shape legs, std::size_t flat) {
    if (flat >= volume(legs)) throw ShapeError("basis index out of range");
    SparseTensor s{std::move(legs), {}};
    s.entries.emplace_back(flat, Scalar(1));
    return s;
}

Tensor SparseTensor::to_dense() const {
    Tensor t(legs);
    for (const auto& [i, v] : entries) t[i] += v;
    return t;
}

void SparseTensor::normalize() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < entries.size();) {
        std::size_t flat = entries[r].first;
        Scalar sum = std::move(entries[r].second);
        for (++r; r < entries.size() && entries[r].first == flat; ++r) sum += entries[r].second;
        if (!sum.is_zero()) entries[w++] = {flat, std::move(sum)};
    }
    entries.resize(w);
}

}  // namespace ydt
