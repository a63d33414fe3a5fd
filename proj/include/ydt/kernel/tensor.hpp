#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ydt/kernel/scalar.hpp"

namespace ydt {

/// Raised when a tensor operation is applied to legs of the wrong space or size.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interned name of a vector space ("H", "H*", "M", ...). Spaces only serve to
/// catch wiring mistakes; two spaces with the same name are the same space.
class SpaceId {
public:
    SpaceId() = default;
    explicit SpaceId(std::string_view name);

    const std::string& name() const;
    std::uint32_t id() const noexcept { return id_; }

    bool operator==(const SpaceId&) const = default;

private:
    std::uint32_t id_ = 0;   // 0 is the scalar field "k"
};

struct Leg {
    SpaceId space;
    std::size_t dim = 0;

    bool operator==(const Leg&) const = default;
};

using Shape = std::vector<Leg>;

Leg leg(std::string_view space, std::size_t dim);
std::size_t volume(std::span<const Leg> shape);
std::string describe(std::span<const Leg> shape);

/// Row-major multi-index <-> flat index conversion.
std::vector<std::size_t> unflatten(std::size_t flat, std::span<const Leg> shape);
std::size_t flatten(std::span<const std::size_t> index, std::span<const Leg> shape);

/// Dense tensor over an ordered list of legs, coefficients in row-major order.
class Tensor {
public:
    Tensor() : data_(1) {}   // rank-0 zero
    explicit Tensor(Shape legs);
    Tensor(Shape legs, std::vector<Scalar> data);

    static Tensor scalar(Scalar value);
    static Tensor basis(Shape legs, std::span<const std::size_t> index);

    const Shape& legs() const noexcept { return legs_; }
    std::size_t rank() const noexcept { return legs_.size(); }
    std::size_t size() const noexcept { return data_.size(); }
    const std::vector<Scalar>& data() const noexcept { return data_; }
    std::vector<Scalar>& data() noexcept { return data_; }

    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
    Scalar& operator[](std::size_t flat) { return data_[flat]; }
    const Scalar& at(std::span<const std::size_t> index) const { return data_[flatten(index, legs_)]; }

    bool is_zero() const;
    std::size_t nonzeros() const;

    /// Same coefficients, different legs (volumes must agree).
    Tensor reshaped(Shape legs) const&;
    Tensor reshaped(Shape legs) &&;

    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& operator*=(const Scalar& s);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& s, Tensor t) { return t *= s; }

    /// Outer product; legs of `rhs` follow those of `lhs`.
    friend Tensor outer(const Tensor& lhs, const Tensor& rhs);

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.legs_ == b.legs_ && a.data_ == b.data_; }

private:
    Shape legs_;
    std::vector<Scalar> data_;
};

/// Exact equality: identical leg lists and coefficient-wise equal data.
inline bool tensor_equal(const Tensor& a, const Tensor& b) { return a == b; }

/// Nonzero coefficients of a tensor, sorted by flat index. Used when running
/// plans on basis tuples, where dense intermediates would be mostly zero.
struct SparseTensor {
    Shape legs;
    std::vector<std::pair<std::size_t, Scalar>> entries;

    static SparseTensor from_dense(const Tensor& t);
    static SparseTensor basis(Shape legs, std::size_t flat);
    Tensor to_dense() const;
    /// Sorts by flat index, sums duplicates and drops zeros.
    void normalize();

    friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
        return a.legs == b.legs && a.entries == b.entries;
    }
};

/// Permutes legs: result leg i is input leg perm[i].
Tensor permute(const Tensor& t, std::span<const std::size_t> perm);

}  // namespace ydt
