#pragma once

#include <string>
#include <vector>

#include "ydt/hopf.hpp"

namespace ydt {

/// Element (α, β) of Aut_Hopf(H) × Aut_Hopf(H).
struct GroupElement {
    HopfAutomorphism alpha;
    HopfAutomorphism beta;

    std::string name() const { return "(" + alpha.name() + "," + beta.name() + ")"; }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

GroupElement unit_element(const HopfAlgebra& h);

/// Left H-module, right H-comodule M tagged with its component (α, β).
/// action: H ⊗ M → M, coaction: M → M ⊗ H.
struct YDModule {
    HopfPtr hopf;
    std::string name;
    std::string space;
    std::vector<std::string> basis;
    GroupElement component;
    LinearMap action;
    LinearMap coaction;

    std::size_t dim() const noexcept { return basis.size(); }
    Leg leg() const { return Leg{SpaceId(space), basis.size()}; }
};

/// Builds a module from raw maps, relabelling their legs onto (H, M). The
/// space defaults to the module name.
YDModule make_module(HopfPtr hopf, std::string name, std::vector<std::string> basis, GroupElement component,
                     const LinearMap& action, const LinearMap& coaction, std::string space = {});

/// Same data, different component.
YDModule relabeled(const YDModule& m, GroupElement component);

/// Exact equality of dimension, component, action and coaction tensors.
bool same_structure(const YDModule& a, const YDModule& b);

/// Unital associative action and counital coassociative coaction.
Report module_axioms(const YDModule& m);

/// Both forms of the compatibility condition, reported separately as
/// "yd_compat" and "yd_compat_alt".
Report check_yd_compat(const YDModule& m);
CheckResult check_yd_compat_main(const YDModule& m);
CheckResult check_yd_compat_alt(const YDModule& m);

/// Anti-Yetter-Drinfeld condition, written with S directly.
CheckResult check_anti_yd(const YDModule& m);
/// l-Yetter-Drinfeld condition, written with S^{2l-1} directly.
CheckResult check_l_yd(const YDModule& m, int l);

/// True iff the two compatibility forms give the same verdict.
bool equivalence_21_22(const YDModule& candidate);

/// H with h·h′ = β(h_2) h′ α(S⁻¹(h_1)) and coaction Δ.
YDModule build_H_alpha_beta(const HopfPtr& h, const HopfAutomorphism& alpha, const HopfAutomorphism& beta);

/// The one-dimensional unit object: h·1 = ε(h), 1 ↦ 1⊗1, in component (id, id).
YDModule trivial_module(const HopfPtr& h);

/// Character f and group-like g with α(h) = g⁻¹ f(h_1) β(h_2) f(S(h_3)) g.
struct PairInInvolution {
    LinearMap f;   // H → k
    Tensor g;      // element of H
    GroupElement component;
    std::string name;
};

Report check_pair_in_involution(const HopfAlgebra& h, const PairInInvolution& pii);

/// V = k^d with h·v = f(h)v and v ↦ v⊗g.
YDModule build_pii_module(const HopfPtr& h, const PairInInvolution& pii, std::size_t d);

/// φ: M → N is H-linear and H-colinear. Throws if the components differ.
Report morphism_report(const YDModule& m, const YDModule& n, const LinearMap& phi);
bool check_morphism(const YDModule& m, const YDModule& n, const LinearMap& phi);

/// Inverse of a group-like or otherwise invertible element of H.
Tensor element_inverse(const HopfAlgebra& h, const Tensor& x);

}  // namespace ydt
