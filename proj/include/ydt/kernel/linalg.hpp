#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ydt/kernel/linear_map.hpp"

namespace ydt {

class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact inverse of a square map; legs are swapped (in <-> out).
std::optional<LinearMap> try_inverse(const LinearMap& m);
LinearMap inverse(const LinearMap& m);

std::size_t rank(const LinearMap& m);

/// Solves m · x = b for x (b has legs m.out(), x has legs m.in()). Returns
/// one solution when the system is consistent.
std::optional<Tensor> solve(const LinearMap& m, const Tensor& b);

}  // namespace ydt
