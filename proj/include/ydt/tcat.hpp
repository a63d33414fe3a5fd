#pragma once

#include <vector>

#include "ydt/ydmod.hpp"

namespace ydt {

/// (α,β)∗(γ,δ) = (αγ, δγ⁻¹βγ).
GroupElement g_mul(const GroupElement& p, const GroupElement& q);
/// (α,β)⁻¹ = (α⁻¹, αβ⁻¹α⁻¹).
GroupElement g_inv(const GroupElement& p);

/// Closure of `generators` under ∗ and inverse, in breadth-first order
/// starting from the unit. Throws when more than `limit` elements appear.
std::vector<GroupElement> generated_subgroup(const HopfAlgebra& h, const std::vector<GroupElement>& generators,
                                             std::size_t limit = 64);

/// Associativity, unit and inverse laws on all triples of `elements`.
Report check_group_axioms(const HopfAlgebra& h, const std::vector<GroupElement>& elements);

/// M ⊗ N in component comp(M) ∗ comp(N); basis index m·dim(N) + n.
YDModule tensor_module(const YDModule& m, const YDModule& n);

/// ^p N: the same space with action and coaction twisted by p.
YDModule conjugate_module(const GroupElement& p, const YDModule& n);

/// c_{M,N}(m⊗n) = n_(0) ⊗ β⁻¹(n_(1))·m with legs (N, M) <- (M, N).
LinearMap braiding_map(const YDModule& m, const YDModule& n);
/// c⁻¹(n⊗m) = β⁻¹(S(n_(1)))·m ⊗ n_(0) with legs (M, N) <- (N, M).
LinearMap braiding_inverse_map(const YDModule& m, const YDModule& n);

struct Braiding {
    YDModule source;   // M ⊗ N
    YDModule target;   // ^M N ⊗ M
    LinearMap c;       // source -> target
    LinearMap c_inv;   // target -> source
};

Braiding braiding(const YDModule& m, const YDModule& n);
/// c and c⁻¹ are morphisms and mutually inverse.
Report braiding_report(const YDModule& m, const YDModule& n);

/// Both hexagon identities plus the object equalities they rely on.
Report verify_hexagons(const YDModule& m, const YDModule& n, const YDModule& p);

/// Dual object with its coevaluation b and evaluation d.
struct Duality {
    YDModule dual;
    LinearMap b;   // left: k -> M⊗M*, right: k -> *M⊗M (merged tensor-module legs)
    LinearMap d;   // left: M*⊗M -> k, right: M⊗*M -> k
};

/// M* with (h·f)(m) = f(β⁻¹α⁻¹S(h)·m) and coaction f(m_(0))⊗S⁻¹(m_(1)).
Duality left_dual(const YDModule& m);
/// *M with (h·f)(m) = f(β⁻¹α⁻¹S⁻¹(h)·m) and coaction f(m_(0))⊗S(m_(1)).
Duality right_dual(const YDModule& m);
/// Compatibility of the dual, b and d as morphisms, and both snake identities.
Report duality_report(const YDModule& m, Side side);

}  // namespace ydt
