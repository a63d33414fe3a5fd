#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ydt/kernel/tensor.hpp"

namespace ydt {

/// Linear map between tensor products of spaces, stored densely (row = output
/// multi-index, column = input multi-index) with a cached sparse column view
/// for application. Immutable; copies share storage.
class LinearMap {
public:
    struct Entry {
        std::uint32_t row;
        Scalar value;
    };

    LinearMap();
    LinearMap(Shape out, Shape in, std::vector<Scalar> dense);

    /// Builds the map column by column; `column(i)` returns the image of the
    /// i-th input basis tensor and must have legs `out`.
    static LinearMap from_columns(Shape out, Shape in, const std::function<Tensor(std::size_t)>& column);
    static LinearMap identity(Shape legs);
    static LinearMap zero(Shape out, Shape in);
    /// Map k -> legs sending 1 to `t`.
    static LinearMap from_vector(const Tensor& t);
    /// Covector legs -> k with the given coefficients.
    static LinearMap covector(const Tensor& t);

    const Shape& out() const noexcept;
    const Shape& in() const noexcept;
    std::size_t rows() const noexcept;
    std::size_t cols() const noexcept;
    const std::vector<Scalar>& dense() const noexcept;
    const Scalar& operator()(std::size_t row, std::size_t col) const;
    std::span<const Entry> column(std::size_t col) const;

    /// Image of a tensor whose legs equal in().
    Tensor apply(const Tensor& input) const;
    /// Image of the col-th input basis tensor.
    Tensor column_tensor(std::size_t col) const;

    /// Same matrix, relabeled legs (volumes must agree).
    LinearMap with_legs(Shape out, Shape in) const;

    bool is_zero() const;
    friend bool operator==(const LinearMap& a, const LinearMap& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit LinearMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// g ∘ f; requires g.in() == f.out().
LinearMap compose(const LinearMap& g, const LinearMap& f);
/// Chain composition: compose(maps[0], compose(maps[1], ...)).
LinearMap compose(std::initializer_list<LinearMap> maps);
/// f ⊗ g with legs (f.out, g.out) <- (f.in, g.in).
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap transpose(const LinearMap& f);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& s, const LinearMap& f);

/// First column (input basis index) on which the two maps differ, if any.
std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b);

}  // namespace ydt
