#include "ydt/ydmod.hpp"

namespace ydt {

namespace {

const std::vector<std::string> kHM{"h", "m"};

Identity hm_identity(std::string id, std::string anchor, const YDModule& m, Plan lhs, Plan rhs) {
    return Identity{std::move(id), std::move(anchor), {m.hopf->leg(), m.leg()}, {m.hopf->basis(), m.basis},
                    std::move(lhs), std::move(rhs), kHM};
}

// Shared left-hand side (h·m)_(0) ⊗ (h·m)_(1).
Plan coaction_of_action(const YDModule& m) {
    Plan p({"h", "m"});
    p.apply(m.action, {"h", "m"}, {"a"}).apply(m.coaction, {"a"}, {"a0", "a1"});
    return p;
}

// h_2·m_(0) ⊗ h_3 m_(1) T(h_1), with `outer_left` applied to h_3 and T to h_1.
Plan twisted_rhs(const YDModule& m, const LinearMap& outer_left, const LinearMap& twist) {
    const HopfAlgebra& h = *m.hopf;
    Plan p({"h", "m"});
    p.apply(h.iterated_coproduct(3), {"h"}, {"h1", "h2", "h3"})
        .apply(m.coaction, {"m"}, {"m0", "m1"})
        .apply(m.action, {"h2", "m0"}, {"x"})
        .apply(twist, {"h1"}, {"t"})
        .apply(outer_left, {"h3"}, {"b"})
        .apply(h.mul(), {"b", "m1"}, {"bm"})
        .apply(h.mul(), {"bm", "t"}, {"y"});
    return p;
}

void check_component(const HopfAlgebra& h, const GroupElement& c) {
    for (const auto* a : {&c.alpha, &c.beta})
        if (a->map().rows() != h.dim() || a->map().cols() != h.dim())
            throw ShapeError("component automorphism " + a->name() + " does not act on " + h.name());
}

}  // namespace

GroupElement unit_element(const HopfAlgebra& h) {
    return {HopfAutomorphism::identity(h), HopfAutomorphism::identity(h)};
}

YDModule make_module(HopfPtr hopf, std::string name, std::vector<std::string> basis, GroupElement component,
                     const LinearMap& action, const LinearMap& coaction, std::string space) {
    check_component(*hopf, component);
    const std::size_t n = hopf->dim(), d = basis.size();
    if (d == 0) throw ShapeError("module " + name + " has an empty basis");
    if (action.rows() != d || action.cols() != n * d)
        throw ShapeError("action of " + name + " must map H⊗M (" + std::to_string(n * d) + ") to M (" +
                         std::to_string(d) + ")");
    if (coaction.rows() != d * n || coaction.cols() != d)
        throw ShapeError("coaction of " + name + " must map M to M⊗H");
    if (space.empty()) space = name;
    YDModule m{std::move(hopf), std::move(name), std::move(space), std::move(basis), std::move(component), {}, {}};
    const Leg H = m.hopf->leg(), M = m.leg();
    m.action = action.with_legs({M}, {H, M});
    m.coaction = coaction.with_legs({M, H}, {M});
    return m;
}

YDModule relabeled(const YDModule& m, GroupElement component) {
    check_component(*m.hopf, component);
    YDModule r = m;
    r.component = std::move(component);
    return r;
}

bool same_structure(const YDModule& a, const YDModule& b) {
    return a.dim() == b.dim() && a.hopf->dim() == b.hopf->dim() && a.component == b.component &&
           a.action.dense() == b.action.dense() && a.coaction.dense() == b.coaction.dense();
}

Report module_axioms(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    Report r;
    r.suite = "module:" + m.name;
    {
        Plan l({"m"});
        l.tensor_with(h.unit(), {"u"}).apply(m.action, {"u", "m"}, {"x"});
        r.add(kernel::verify(Identity{"action_unit", "1·m = m", {m.leg()}, {m.basis}, l, Plan({"m"}), {"m"}}));
    }
    {
        Plan l({"a", "b", "m"}), rr({"a", "b", "m"});
        l.apply(h.mul(), {"a", "b"}, {"ab"}).apply(m.action, {"ab", "m"}, {"x"});
        rr.apply(m.action, {"b", "m"}, {"bm"}).apply(m.action, {"a", "bm"}, {"x"});
        r.add(kernel::verify(Identity{"action_assoc", "(ab)·m = a·(b·m)", {h.leg(), h.leg(), m.leg()},
                                      {h.basis(), h.basis(), m.basis}, l, rr, {"a", "b", "m"}}));
    }
    {
        Plan l({"m"});
        l.apply(m.coaction, {"m"}, {"m0", "m1"}).apply(h.counit(), {"m1"}, {});
        r.add(kernel::verify(Identity{"coaction_counit", "m_(0)ε(m_(1)) = m", {m.leg()}, {m.basis}, l, Plan({"m"}),
                                      {"m"}}));
    }
    {
        Plan l({"m"}), rr({"m"});
        l.apply(m.coaction, {"m"}, {"m0", "m1"}).apply(m.coaction, {"m0"}, {"a", "b"}).output({"a", "b", "m1"});
        rr.apply(m.coaction, {"m"}, {"m0", "m1"}).apply(h.comul(), {"m1"}, {"a", "b"});
        r.add(kernel::verify(Identity{"coaction_coassoc", "(ρ⊗id)ρ = (id⊗Δ)ρ", {m.leg()}, {m.basis}, l, rr, {"m"}}));
    }
    return r;
}

CheckResult check_yd_compat_main(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    check_component(h, m.component);
    LinearMap twist = compose(m.component.alpha.map(), h.antipode_inv());
    return kernel::verify(hm_identity("yd_compat", "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0)⊗β(h_3)m_(1)α(S⁻¹(h_1))", m,
                                      coaction_of_action(m), twisted_rhs(m, m.component.beta.map(), twist)));
}

CheckResult check_yd_compat_alt(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    check_component(h, m.component);
    Plan l({"h", "m"}), r({"h", "m"});
    l.apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(m.coaction, {"m"}, {"m0", "m1"})
        .apply(m.action, {"h1", "m0"}, {"x"})
        .apply(m.component.beta.map(), {"h2"}, {"b"})
        .apply(h.mul(), {"b", "m1"}, {"y"});
    r.apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(m.action, {"h2", "m"}, {"a"})
        .apply(m.coaction, {"a"}, {"a0", "a1"})
        .apply(m.component.alpha.map(), {"h1"}, {"t"})
        .apply(h.mul(), {"a1", "t"}, {"y"});
    return kernel::verify(
        hm_identity("yd_compat_alt", "h_1·m_(0)⊗β(h_2)m_(1) = (h_2·m)_(0)⊗(h_2·m)_(1)α(h_1)", m, l, r));
}

Report check_yd_compat(const YDModule& m) {
    Report r;
    r.suite = "yd:" + m.name;
    r.add(check_yd_compat_main(m));
    r.add(check_yd_compat_alt(m));
    return r;
}

CheckResult check_anti_yd(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    return kernel::verify(hm_identity("anti_yd", "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0)⊗h_3m_(1)S(h_1)", m,
                                      coaction_of_action(m), twisted_rhs(m, h.identity(), h.antipode())));
}

CheckResult check_l_yd(const YDModule& m, int l) {
    const HopfAlgebra& h = *m.hopf;
    return kernel::verify(hm_identity("l_yd[" + std::to_string(l) + "]",
                                      "(h·m)_(0)⊗(h·m)_(1) = h_2·m_(0)⊗h_3m_(1)S^{2l-1}(h_1)", m,
                                      coaction_of_action(m), twisted_rhs(m, h.identity(), antipode_pow(h, 2 * l - 1))));
}

bool equivalence_21_22(const YDModule& candidate) {
    return check_yd_compat_main(candidate).passed == check_yd_compat_alt(candidate).passed;
}

YDModule build_H_alpha_beta(const HopfPtr& hp, const HopfAutomorphism& alpha, const HopfAutomorphism& beta) {
    const HopfAlgebra& h = *hp;
    Plan p({"h", "x"});
    p.apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(compose(alpha.map(), h.antipode_inv()), {"h1"}, {"t"})
        .apply(beta.map(), {"h2"}, {"b"})
        .apply(h.mul(), {"b", "x"}, {"bx"})
        .apply(h.mul(), {"bx", "t"}, {"y"});
    LinearMap action = realize(p, h.legs(2), h.legs(1));
    return make_module(hp, "H_{" + alpha.name() + "," + beta.name() + "}", h.basis(), {alpha, beta}, action,
                       h.comul());
}

YDModule trivial_module(const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    LinearMap coaction = LinearMap::from_vector(h.unit());
    return make_module(hp, "k", {"1"}, unit_element(h), h.counit(), coaction);
}

Tensor element_inverse(const HopfAlgebra& h, const Tensor& x) {
    LinearMap left = LinearMap::from_columns(h.legs(1), h.legs(1), [&](std::size_t j) {
        return h.mul().apply(outer(x, h.basis_vector(j)));
    });
    auto y = solve(left, h.unit());
    if (!y) throw InputError("element is not invertible in " + h.name());
    if (!(h.mul().apply(outer(*y, x)) == h.unit())) throw InputError("element has no two-sided inverse");
    return *y;
}

Report check_pair_in_involution(const HopfAlgebra& h, const PairInInvolution& pii) {
    Report r;
    r.suite = "pair:" + pii.name;
    const LinearMap f = pii.f.with_legs({}, h.legs(1));
    const Tensor g = pii.g.reshaped(h.legs(1));
    const auto l1 = labels_for(h, 1);
    r.add(compare_maps("character_unit", "f(1) = 1", compose(f, LinearMap::from_vector(h.unit())),
                       LinearMap::from_vector(Tensor::scalar(1)), {}));
    r.add(compare_maps("character_mul", "f(ab) = f(a)f(b)", compose(f, h.mul()), kron(f, f), labels_for(h, 2)));
    r.add(compare_maps("grouplike", "Δ(g) = g⊗g", LinearMap::from_vector(h.comul().apply(g)),
                       LinearMap::from_vector(outer(g, g)), {}));
    r.add(compare_maps("grouplike_counit", "ε(g) = 1", LinearMap::from_vector(h.counit().apply(g)),
                       LinearMap::from_vector(Tensor::scalar(1)), {}));
    std::optional<Tensor> ginv;
    try {
        ginv = element_inverse(h, g);
    } catch (const InputError&) {
    }
    r.add(fact("grouplike_invertible", "g⁻¹g = gg⁻¹ = 1", ginv.has_value()));
    if (!ginv) return r;
    Plan lhs({"h"}), rhs({"h"});
    lhs.apply(pii.component.alpha.map(), {"h"}, {"x"});
    rhs.apply(h.iterated_coproduct(3), {"h"}, {"h1", "h2", "h3"})
        .apply(f, {"h1"}, {})
        .apply(compose(f, h.antipode()), {"h3"}, {})
        .apply(pii.component.beta.map(), {"h2"}, {"b"})
        .tensor_with(*ginv, {"gi"})
        .tensor_with(g, {"g"})
        .apply(h.mul(), {"gi", "b"}, {"t"})
        .apply(h.mul(), {"t", "g"}, {"x"});
    r.add(kernel::verify(Identity{"pair_in_involution", "α(h) = g⁻¹f(h_1)β(h_2)f(S(h_3))g", h.legs(1), l1, lhs, rhs,
                                  {"h"}}));
    return r;
}

YDModule build_pii_module(const HopfPtr& hp, const PairInInvolution& pii, std::size_t d) {
    const HopfAlgebra& h = *hp;
    Report r = check_pair_in_involution(h, pii);
    if (const CheckResult* bad = r.first_failure())
        throw AxiomError("pair " + pii.name + " violates '" + bad->id + "' (" + bad->anchor + ")", r);
    if (d == 0) throw InputError("module dimension must be positive");
    const std::size_t n = h.dim();
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(d == 1 ? "1" : "v" + std::to_string(i + 1));
    std::vector<Scalar> act(d * n * d), coact(d * n * d);
    for (std::size_t v = 0; v < d; ++v)
        for (std::size_t k = 0; k < n; ++k) {
            act[v * n * d + k * d + v] = pii.f(0, k);
            coact[(v * n + k) * d + v] = pii.g[k];
        }
    const Leg M = leg("V", d);
    const std::string name = (d == 1 ? "k" : "V" + std::to_string(d)) + pii.name + "_{" +
                             pii.component.alpha.name() + "," + pii.component.beta.name() + "}";
    return make_module(hp, name, basis, pii.component, LinearMap({M}, {h.leg(), M}, std::move(act)),
                       LinearMap({M, h.leg()}, {M}, std::move(coact)));
}

Report morphism_report(const YDModule& m, const YDModule& n, const LinearMap& phi) {
    if (!(m.component == n.component))
        throw InputError("morphism between different components " + m.component.name() + " and " +
                         n.component.name());
    if (phi.rows() != n.dim() || phi.cols() != m.dim())
        throw ShapeError("morphism matrix does not map " + m.name + " to " + n.name);
    const HopfAlgebra& h = *m.hopf;
    const LinearMap f = phi.with_legs({n.leg()}, {m.leg()});
    Report r;
    r.suite = "morphism:" + m.name + "->" + n.name;
    r.add(compare_maps("linear", "φ(h·m) = h·φ(m)", compose(f, m.action), compose(n.action, kron(h.identity(), f)),
                       {h.basis(), m.basis}, kHM));
    r.add(compare_maps("colinear", "ρ(φ(m)) = (φ⊗id)ρ(m)", compose(n.coaction, f),
                       compose(kron(f, h.identity()), m.coaction), {m.basis}, {"m"}));
    return r;
}

bool check_morphism(const YDModule& m, const YDModule& n, const LinearMap& phi) {
    return morphism_report(m, n, phi).passed();
}

}  // namespace ydt
