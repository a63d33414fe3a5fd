#include "ydt/kernel/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ydt {

namespace {

using Row = std::vector<std::pair<std::size_t, Scalar>>;   // sorted by column

const Scalar* lookup(const Row& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target -= factor * source
void axpy(Row& target, const Scalar& factor, const Row& source) {
    Row out;
    out.reserve(target.size() + source.size());
    auto a = target.begin();
    auto b = source.begin();
    while (a != target.end() || b != source.end()) {
        if (b == source.end() || (a != target.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == target.end() || b->first < a->first) {
            out.emplace_back(b->first, -(factor * b->second));
            ++b;
        } else {
            Scalar v = std::move(a->second);
            v -= factor * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    target = std::move(out);
}

struct Reduced {
    std::vector<Row> rows;                    // pivot rows, normalized
    std::vector<std::size_t> pivot_cols;      // pivot column of rows[i]
    std::vector<Row> rest;                    // rows with no pivot among the first n columns
};

// Gauss-Jordan on the first `n` columns of the augmented rows.
Reduced reduce(std::vector<Row> rows, std::size_t n) {
    Reduced red;
    std::vector<bool> used(rows.size(), false);
    std::vector<std::size_t> pivot_rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || lookup(rows[r], c) == nullptr) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) continue;
        used[best] = true;
        Scalar inv = lookup(rows[best], c)->inverse();
        for (auto& e : rows[best]) e.second *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == best) continue;
            if (const Scalar* v = lookup(rows[r], c)) {
                Scalar f = *v;
                axpy(rows[r], f, rows[best]);
            }
        }
        red.pivot_cols.push_back(c);
        pivot_rows.push_back(best);
    }
    for (auto r : pivot_rows) red.rows.push_back(rows[r]);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!used[r]) red.rest.push_back(std::move(rows[r]));
    return red;
}

std::vector<Row> rows_of(const LinearMap& m) {
    std::vector<Row> rows(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) rows[e.row].emplace_back(c, e.value);
    return rows;
}

}  // namespace

std::optional<LinearMap> try_inverse(const LinearMap& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw ShapeError("inverse of a non-square map " + describe(m.out()) + " <- " + describe(m.in()));
    auto rows = rows_of(m);
    for (std::size_t r = 0; r < n; ++r) rows[r].emplace_back(n + r, Scalar(1));
    Reduced red = reduce(std::move(rows), n);
    if (red.rows.size() != n) return std::nullopt;
    std::vector<Scalar> dense(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t out_row = red.pivot_cols[k];
        for (const auto& [col, v] : red.rows[k])
            if (col >= n) dense[out_row * n + (col - n)] = v;
    }
    return LinearMap(m.in(), m.out(), std::move(dense));
}

LinearMap inverse(const LinearMap& m) {
    auto inv = try_inverse(m);
    if (!inv) throw SingularError("map " + describe(m.out()) + " <- " + describe(m.in()) + " is singular");
    return *inv;
}

std::size_t rank(const LinearMap& m) { return reduce(rows_of(m), m.cols()).rows.size(); }

std::optional<Tensor> solve(const LinearMap& m, const Tensor& b) {
    if (b.legs() != m.out()) throw ShapeError("right-hand side legs do not match the map's outputs");
    const std::size_t n = m.cols();
    auto rows = rows_of(m);
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!b[r].is_zero()) rows[r].emplace_back(n, b[r]);
    Reduced red = reduce(std::move(rows), n);
    for (const auto& r : red.rest)
        if (!r.empty()) return std::nullopt;   // 0 = nonzero
    Tensor x(m.in());
    for (std::size_t k = 0; k < red.rows.size(); ++k)
        if (const Scalar* v = lookup(red.rows[k], n)) x[red.pivot_cols[k]] = *v;
    return x;
}

}  // namespace ydt
