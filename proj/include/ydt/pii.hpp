#pragma once

#include <vector>

#include "ydt/dcp.hpp"
#include "ydt/tcat.hpp"

namespace ydt {

/// Raised when an operation needs a pair in involution and none fits.
class NoPairError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Group-like elements of h: the basis vectors when they are all group-like
/// (group algebras), otherwise every vector with coefficients in {-1, 0, 1}
/// that satisfies Δ(g) = g⊗g and ε(g) = 1, in lexicographic scan order. The
/// scan is limited to dim ≤ 8.
std::vector<Tensor> find_grouplikes(const HopfAlgebra& h);

/// Characters of h, as maps H → k: the group-likes of the dual.
std::vector<LinearMap> find_characters(const HopfPtr& h);

/// Every (f, g) with α(h) = g⁻¹ f(h_1) β(h_2) f(S(h_3)) g, ordered by
/// (g index, f index). Empty when none exists.
std::vector<PairInInvolution> find_pairs_in_involution(const HopfPtr& h, const GroupElement& component);
/// First pair found, or NoPairError.
PairInInvolution require_pair_in_involution(const HopfPtr& h, const GroupElement& component);

/// The module set used for exhaustive category checks: trivial k, H_{α,β}
/// for all α, β in `auts`, _fk^g for the first pair of each component that
/// has one, then the left duals of all of these. Exact duplicates are dropped.
std::vector<YDModule> corpus_modules(const HopfPtr& h, const std::vector<HopfAutomorphism>& auts);

/// F: (α,β) → (id,id), h→m = f(β⁻¹(S(h_1))) β⁻¹(h_2)·m, m ↦ m_(0)⊗m_(1)g⁻¹.
YDModule functor_F(const YDModule& m, const PairInInvolution& pii);
/// G: (id,id) → (α,β), h⇀n = f(h_1) β(h_2)·n, n ↦ n_(0)⊗n_(1)g.
YDModule functor_G(const YDModule& n, const PairInInvolution& pii);

/// For m in the pair's component: F(m) is YD, G(F(m)) = m, F(m) = (_fk^g)*⊗m
/// and m = _fk^g⊗F(m).
Report functor_report(const YDModule& m, const PairInInvolution& pii);
/// For n in (id,id): G(n) is (α,β)-YD, F(G(n)) = n and G(n) = _fk^g⊗n.
Report functor_inverse_report(const YDModule& n, const PairInInvolution& pii);
/// φ: M → N is a morphism iff it is one between F(M) and F(N).
Report functor_morphism_report(const YDModule& m, const YDModule& n, const LinearMap& phi,
                               const PairInInvolution& pii);

struct AlgebraIso {
    LinearMap to;     // D(H) → H*⋈H(α,β)
    LinearMap from;   // H*⋈H(α,β) → D(H)
};

/// p⊗h ↦ g⁻¹⇀p ⋈ f(β⁻¹(S(h_1)))β⁻¹(h_2) and p⋈h ↦ g⇀p ⊗ f(h_1)β(h_2).
AlgebraIso pii_algebra_iso(const HopfPtr& h, const PairInInvolution& pii);
/// Both maps multiplicative and unital, and mutually inverse.
Report pii_algebra_iso_report(const HopfPtr& h, const PairInInvolution& pii);
/// Pulling the crossed-product module of m back along `to` gives the D(H)-module of F(m).
Report transport_report(const YDModule& m, const PairInInvolution& pii);

}  // namespace ydt
