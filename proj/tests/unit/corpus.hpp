#pragma once

#include <vector>

#include "ydt/hopf.hpp"

namespace ydt::test {

/// The corpus algebras used across the tests, built once.
inline const std::vector<HopfPtr>& corpus() {
    static const std::vector<HopfPtr> algebras = [] {
        auto sw = sweedler4();
        return std::vector<HopfPtr>{cyclic_group_algebra(2), cyclic_group_algebra(3), symmetric_group_s3(), sw,
                                    dual_of(sw)};
    }();
    return algebras;
}

inline Tensor vec(const HopfAlgebra& h, std::initializer_list<std::pair<const char*, long long>> terms) {
    Tensor t(Shape{h.leg()});
    for (const auto& [label, c] : terms) t[h.basis_index(label)] += Scalar(c);
    return t;
}

}  // namespace ydt::test
