#pragma once

#include <memory>
#include <vector>

#include "ydt/dcp.hpp"
#include "ydt/tcat.hpp"

namespace ydt {

/// The finite part P of the group that a computation touches. Components
/// DT(H)_p = H*⋈H(p) are built on first use and shared (see crossed_product_for).
class TCoalgebra {
public:
    TCoalgebra(HopfPtr h, const std::vector<GroupElement>& generators, std::size_t limit = 64);

    const HopfPtr& hopf() const noexcept { return hopf_; }
    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    bool contains(const GroupElement& p) const;
    std::shared_ptr<const AlgebraData> component(const GroupElement& p) const;

private:
    HopfPtr hopf_;
    std::vector<GroupElement> elements_;
};

/// Δ_{p,q}: DT_{p∗q} → DT_p ⊗ DT_q, p⋈h ↦ (p_2⋈γ(h_1))⊗(p_1⋈γ⁻¹βγ(h_2)).
LinearMap dt_delta(const HopfPtr& h, const GroupElement& p, const GroupElement& q);
/// Counit of DT_{(id,id)} = D(H).
LinearMap dt_counit(const HopfPtr& h);
/// φ_p^q: DT_q → DT_{p∗q∗p⁻¹}, p⋈h ↦ p∘βα⁻¹ ⋈ αγ⁻¹β⁻¹γ(h).
LinearMap dt_phi(const HopfPtr& h, const GroupElement& p, const GroupElement& q);
/// S_p: DT_p → DT_{p⁻¹}, p⋈h ↦ (ε⋈αβ(S(h)))·(S*⁻¹(p)⋈1), product in DT_{p⁻¹}.
LinearMap dt_antipode(const HopfPtr& h, const GroupElement& p);

struct RMatrix {
    Tensor R;       // legs (DT_p, DT_q)
    Tensor R_inv;
};
/// R_{p,q} = Σ (ε⋈β⁻¹(e_i))⊗(e^i⋈1) with its two-sided inverse. Throws
/// SingularError if the inverse does not exist.
RMatrix dt_rmatrix(const HopfPtr& h, const GroupElement& p, const GroupElement& q);

/// Δ_{p,q} is multiplicative and unital.
Report delta_report(const HopfPtr& h, const GroupElement& p, const GroupElement& q);
/// (Δ_{p,q}⊗id)Δ_{p∗q,r} = (id⊗Δ_{q,r})Δ_{p,q∗r}.
Report coassociativity_report(const HopfPtr& h, const GroupElement& p, const GroupElement& q,
                              const GroupElement& r);
/// (ε⊗id)Δ_{1,p} = id = (id⊗ε)Δ_{p,1}.
Report counit_report(const HopfPtr& h, const GroupElement& p);
/// φ_p^q is a bijective unital algebra map.
Report phi_report(const HopfPtr& h, const GroupElement& p, const GroupElement& q);
/// φ_{p∗p′}^q = φ_p^{p′qp′⁻¹} ∘ φ_{p′}^q.
Report phi_group_report(const HopfPtr& h, const GroupElement& p, const GroupElement& p2, const GroupElement& q);
/// (φ_p⊗φ_p)Δ_{q,r} = Δ_{pqp⁻¹,prp⁻¹}φ_p and ε∘φ_p = ε on the unit component.
Report phi_delta_report(const HopfPtr& h, const GroupElement& p, const GroupElement& q, const GroupElement& r);
/// m(S_{p⁻¹}⊗id)Δ_{p⁻¹,p} = 1_p ε = m(id⊗S_{p⁻¹})Δ_{p,p⁻¹}.
Report antipode_report(const HopfPtr& h, const GroupElement& p);
/// R_{p,q} R_{p,q}⁻¹ = 1⊗1 on both sides.
Report rmatrix_report(const HopfPtr& h, const GroupElement& p, const GroupElement& q);

/// Every report above over P (pairs and triples as appropriate).
Report verify_tcoalgebra(const TCoalgebra& t);

/// Module-level comparison with the YD(H) structures: tensor product via Δ,
/// conjugation via pull-back along φ_{p⁻¹}, braiding as flip∘(R·).
Report verify_rep_equivalence(const YDModule& m, const YDModule& n, const GroupElement& p);

}  // namespace ydt
