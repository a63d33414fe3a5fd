#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydt/ydmod.hpp"

namespace ydt {

/// Associative unital algebra given by structure constants; mul is A⊗A → A.
struct AlgebraData {
    std::string name;
    std::string space;
    std::vector<std::string> basis;
    LinearMap mul;
    Tensor unit;

    std::size_t dim() const noexcept { return basis.size(); }
    Leg leg() const { return Leg{SpaceId(space), basis.size()}; }
};

/// The algebra underlying h, moved onto `space`.
AlgebraData algebra_of(const HopfAlgebra& h, std::string name, std::string space);
/// Associativity and both unit laws, exhaustively on basis tuples.
Report algebra_axioms(const AlgebraData& a);

/// H-bicomodule algebra: left coaction A → H⊗A, right coaction A → A⊗H.
struct BicomoduleAlgebra {
    HopfPtr hopf;
    AlgebraData algebra;
    LinearMap left;
    LinearMap right;

    /// a ↦ a_{−1}⊗a_{0}⊗a_{1} = a_<0>_[−1]⊗a_<0>_[0]⊗a_<1>, legs (H, A, H).
    LinearMap two_sided() const;
};

BicomoduleAlgebra make_bicomodule_algebra(HopfPtr hopf, AlgebraData algebra, const LinearMap& left,
                                          const LinearMap& right);
/// Coassociativity, counit and algebra-map laws of both coactions, and the
/// bicomodule condition.
Report bicomodule_axioms(const BicomoduleAlgebra& a);

/// H as an algebra with coactions h ↦ α(h_1)⊗h_2 and h ↦ h_1⊗β(h_2).
BicomoduleAlgebra build_H_ab_bicomodule(const HopfPtr& h, const GroupElement& component);

/// Both compatibility forms for a left A-module, right H-comodule M, plus
/// whether they agree. action: A⊗M → M, coaction: M → M⊗H.
Report check_yd_datum_module(const BicomoduleAlgebra& a, const LinearMap& action, const LinearMap& coaction,
                             const std::vector<std::string>& basis = {});
/// Same, reading m's action as an action of A (dimensions must match).
Report check_yd_datum_module(const BicomoduleAlgebra& a, const YDModule& m);

/// H*⋈A with (p⋈a)(q⋈b) = p(a_{−1}⇀q↼S⁻¹(a_{1}))⋈a_{0}b and unit ε⋈1.
/// Basis index p·dim(A) + a. Throws AxiomError when the result is not
/// associative and unital.
AlgebraData diagonal_crossed_product(const BicomoduleAlgebra& a);

/// h ↦ ε⋈h and p ↦ p⋈1 into a crossed product X = H*⋈A with A = H as a vector space.
LinearMap embed_algebra(const HopfAlgebra& h, const AlgebraData& x);
LinearMap embed_dual(const HopfAlgebra& h, const HopfAlgebra& dual, const AlgebraData& x);
/// Σ e^i ⊗ e_i on legs (H*, H).
Tensor canonical_element(const HopfAlgebra& h, const HopfAlgebra& dual);

/// H*⋈H(α,β), built once per (H, α, β) and shared.
std::shared_ptr<const AlgebraData> crossed_product_for(const HopfPtr& h, const GroupElement& component);

/// D(H) with its universal R-matrix.
struct DrinfeldDouble {
    HopfPtr base;
    HopfPtr dual;
    HopfPtr hopf;   // algebra H*⋈H, coalgebra H*cop⊗H
    Tensor R;       // Σ (ε⋈e_i)⊗(e^i⋈1), legs (D, D)
    Tensor R_inv;
};

/// Builds D(H). The antipode is the convolution inverse of the identity; it
/// is solved on the generating subcoalgebras ε⋈H and H*⋈1 and extended
/// anti-multiplicatively. Throws AxiomError if no inverse exists.
DrinfeldDouble build_drinfeld_double(const HopfPtr& h);

/// Hopf axioms, R invertible, RΔ(x) = Δ^cop(x)R, (Δ⊗id)R = R₁₃R₂₃, (id⊗Δ)R = R₁₃R₁₂.
Report check_drinfeld_double(const DrinfeldDouble& d);

/// Product of two elements of A⊗B, both given on legs (A, B).
Tensor tensor_product_mul(const AlgebraData& a, const AlgebraData& b, const Tensor& x, const Tensor& y);

/// Left module over a crossed product H*⋈H(α,β).
struct DcpModule {
    HopfPtr hopf;
    GroupElement component;
    std::shared_ptr<const AlgebraData> algebra;
    std::string name;
    std::string space;
    std::vector<std::string> basis;
    LinearMap action;   // X⊗M → M

    std::size_t dim() const noexcept { return basis.size(); }
};

/// Associativity and unit of a module action.
Report algebra_module_report(const AlgebraData& a, const LinearMap& action, const std::vector<std::string>& basis);

/// (p⋈h)·m = p((h·m)_(1)) (h·m)_(0). Throws AxiomError if the result is not a module.
DcpModule yd_to_dcp_module(const YDModule& m);
/// h·m = (ε⋈h)·m and m ↦ Σ (e^i⋈1)·m ⊗ e_i.
YDModule dcp_module_to_yd(const DcpModule& x);

/// A(α,β) as a D(H)-bicomodule algebra: right p⋈h ↦ (p_2⋈h_1)⊗(p_1⋈β(h_2)),
/// left p⋈h ↦ (p_2⋈α(h_1))⊗(p_1⋈h_2).
BicomoduleAlgebra dh_bicomodule_on_A(const DrinfeldDouble& d, const GroupElement& component);

}  // namespace ydt
