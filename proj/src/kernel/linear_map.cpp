#include "ydt/kernel/linear_map.hpp"

#include <algorithm>

#include "ydt/kernel/exec.hpp"

namespace ydt {

struct LinearMap::Impl {
    Shape out, in;
    std::size_t rows = 1, cols = 1;
    std::vector<Scalar> dense;
    std::vector<std::size_t> col_start;
    std::vector<Entry> entries;

    Impl(Shape o, Shape i, std::vector<Scalar> d) : out(std::move(o)), in(std::move(i)), dense(std::move(d)) {
        rows = volume(out);
        cols = volume(in);
        if (dense.size() != rows * cols)
            throw ShapeError("map data size " + std::to_string(dense.size()) + " does not match " + describe(out) +
                             " <- " + describe(in));
        col_start.assign(cols + 1, 0);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (!dense[r * cols + c].is_zero()) ++col_start[c + 1];
        for (std::size_t c = 0; c < cols; ++c) col_start[c + 1] += col_start[c];
        entries.resize(col_start[cols]);
        std::vector<std::size_t> fill(col_start.begin(), col_start.end() - 1);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (const auto& v = dense[r * cols + c]; !v.is_zero())
                    entries[fill[c]++] = Entry{static_cast<std::uint32_t>(r), v};
    }
};

LinearMap::LinearMap() : LinearMap(Shape{}, Shape{}, std::vector<Scalar>{Scalar(0)}) {}

LinearMap::LinearMap(Shape out, Shape in, std::vector<Scalar> dense)
    : impl_(std::make_shared<Impl>(std::move(out), std::move(in), std::move(dense))) {}

LinearMap LinearMap::from_columns(Shape out, Shape in, const std::function<Tensor(std::size_t)>& column) {
    const std::size_t rows = volume(out);
    const std::size_t cols = volume(in);
    std::vector<Scalar> dense(rows * cols);
    kernel::for_each_index(cols, [&](std::size_t c) {
        Tensor t = column(c);
        if (t.legs() != out)
            throw ShapeError("column " + std::to_string(c) + " has legs " + describe(t.legs()) + ", expected " +
                             describe(out));
        for (std::size_t r = 0; r < rows; ++r)
            if (!t[r].is_zero()) dense[r * cols + c] = std::move(t[r]);
    });
    return LinearMap(std::move(out), std::move(in), std::move(dense));
}

LinearMap LinearMap::identity(Shape legs) {
    const std::size_t n = volume(legs);
    std::vector<Scalar> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) dense[i * n + i] = 1;
    return LinearMap(legs, legs, std::move(dense));
}

LinearMap LinearMap::zero(Shape out, Shape in) {
    const std::size_t n = volume(out) * volume(in);
    return LinearMap(std::move(out), std::move(in), std::vector<Scalar>(n));
}

LinearMap LinearMap::from_vector(const Tensor& t) { return LinearMap(t.legs(), Shape{}, t.data()); }

LinearMap LinearMap::covector(const Tensor& t) { return LinearMap(Shape{}, t.legs(), t.data()); }

const Shape& LinearMap::out() const noexcept { return impl_->out; }
const Shape& LinearMap::in() const noexcept { return impl_->in; }
std::size_t LinearMap::rows() const noexcept { return impl_->rows; }
std::size_t LinearMap::cols() const noexcept { return impl_->cols; }
const std::vector<Scalar>& LinearMap::dense() const noexcept { return impl_->dense; }

const Scalar& LinearMap::operator()(std::size_t row, std::size_t col) const {
    return impl_->dense.at(row * impl_->cols + col);
}

std::span<const LinearMap::Entry> LinearMap::column(std::size_t col) const {
    const auto& im = *impl_;
    return {im.entries.data() + im.col_start[col], im.col_start[col + 1] - im.col_start[col]};
}

Tensor LinearMap::apply(const Tensor& input) const {
    if (input.legs() != in())
        throw ShapeError("map expects " + describe(in()) + ", got " + describe(input.legs()));
    Tensor out_t(out());
    for (std::size_t c = 0; c < cols(); ++c) {
        const auto& x = input[c];
        if (x.is_zero()) continue;
        for (const auto& e : column(c)) out_t[e.row].add_product(x, e.value);
    }
    return out_t;
}

Tensor LinearMap::column_tensor(std::size_t col) const {
    Tensor t(out());
    for (const auto& e : column(col)) t[e.row] = e.value;
    return t;
}

LinearMap LinearMap::with_legs(Shape out, Shape in) const {
    if (volume(out) != rows() || volume(in) != cols())
        throw ShapeError("cannot relabel " + describe(this->out()) + " <- " + describe(this->in()) + " as " +
                         describe(out) + " <- " + describe(in));
    return LinearMap(std::move(out), std::move(in), dense());
}

bool LinearMap::is_zero() const { return impl_->entries.empty(); }

bool operator==(const LinearMap& a, const LinearMap& b) {
    if (a.impl_ == b.impl_) return true;
    return a.out() == b.out() && a.in() == b.in() && a.dense() == b.dense();
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
    if (g.in() != f.out())
        throw ShapeError("cannot compose: outer map takes " + describe(g.in()) + ", inner map yields " +
                         describe(f.out()));
    const std::size_t rows = g.rows();
    const std::size_t cols = f.cols();
    std::vector<Scalar> dense(rows * cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& fe : f.column(c))
            for (const auto& ge : g.column(fe.row)) dense[ge.row * cols + c].add_product(ge.value, fe.value);
    return LinearMap(g.out(), f.in(), std::move(dense));
}

LinearMap compose(std::initializer_list<LinearMap> maps) {
    if (maps.size() == 0) throw ShapeError("empty composition");
    auto it = std::rbegin(maps);
    LinearMap acc = *it++;
    for (; it != std::rend(maps); ++it) acc = compose(*it, acc);
    return acc;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
    Shape out = f.out();
    out.insert(out.end(), g.out().begin(), g.out().end());
    Shape in = f.in();
    in.insert(in.end(), g.in().begin(), g.in().end());
    const std::size_t gr = g.rows();
    const std::size_t gc = g.cols();
    const std::size_t cols = f.cols() * gc;
    std::vector<Scalar> dense(f.rows() * gr * cols);
    for (std::size_t fc = 0; fc < f.cols(); ++fc)
        for (const auto& fe : f.column(fc))
            for (std::size_t c2 = 0; c2 < gc; ++c2)
                for (const auto& ge : g.column(c2))
                    dense[(fe.row * gr + ge.row) * cols + fc * gc + c2] = fe.value * ge.value;
    return LinearMap(std::move(out), std::move(in), std::move(dense));
}

LinearMap transpose(const LinearMap& f) {
    std::vector<Scalar> dense(f.rows() * f.cols());
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (const auto& e : f.column(c)) dense[c * f.rows() + e.row] = e.value;
    return LinearMap(f.in(), f.out(), std::move(dense));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    if (a.out() != b.out() || a.in() != b.in()) throw ShapeError("adding maps of different shapes");
    std::vector<Scalar> dense = a.dense();
    for (std::size_t i = 0; i < dense.size(); ++i) dense[i] += b.dense()[i];
    return LinearMap(a.out(), a.in(), std::move(dense));
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + Scalar(-1) * b; }

LinearMap operator*(const Scalar& s, const LinearMap& f) {
    std::vector<Scalar> dense = f.dense();
    for (auto& x : dense) x *= s;
    return LinearMap(f.out(), f.in(), std::move(dense));
}

std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b) {
    if (a.out() != b.out() || a.in() != b.in())
        throw ShapeError("comparing maps of different shapes: " + describe(a.out()) + " <- " + describe(a.in()) +
                         " vs " + describe(b.out()) + " <- " + describe(b.in()));
    const std::size_t cols = a.cols();
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (!(a.dense()[r * cols + c] == b.dense()[r * cols + c])) return c;
    return std::nullopt;
}

}  // namespace ydt
