#include "ydt/pii.hpp"

namespace ydt {

namespace {

constexpr std::size_t kLatticeScanMaxDim = 8;

bool is_grouplike(const HopfAlgebra& h, const Tensor& g) {
    return h.counit().apply(g)[0] == Scalar(1) && h.comul().apply(g) == outer(g, g);
}

std::string element_text(const std::vector<std::string>& basis, const Tensor& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const bool neg = v[i] == Scalar(-1);
        const bool unit = v[i] == Scalar(1) || neg;
        if (!s.empty() || neg) s += neg ? "-" : "+";
        if (!unit) s += v[i].to_string() + "*";
        s += basis[i];
    }
    return s.empty() ? "0" : s;
}

std::string character_name(const HopfAlgebra& h, const LinearMap& f, std::size_t index) {
    return f.dense() == h.counit().dense() ? "ε" : "f" + std::to_string(index);
}

Tensor ginv_of(const HopfAlgebra& h, const PairInInvolution& pii) {
    return element_inverse(h, pii.g.reshaped(h.legs(1)));
}

CheckResult structure_fact(std::string id, std::string anchor, const YDModule& a, const YDModule& b) {
    return fact(std::move(id), std::move(anchor), same_structure(a, b));
}

CheckResult compat_fact(std::string id, const YDModule& m) {
    Report r = check_yd_compat(m);
    const CheckResult* bad = r.first_failure();
    return fact(std::move(id), "compatibility in component " + m.component.name(), bad == nullptr,
                bad ? bad->id + " at " + bad->counterexample_text : "");
}

}  // namespace

std::vector<Tensor> find_grouplikes(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    std::vector<Tensor> out;
    bool all_basis = true;
    for (std::size_t i = 0; i < n; ++i) {
        Tensor e = h.basis_vector(i);
        if (is_grouplike(h, e))
            out.push_back(std::move(e));
        else
            all_basis = false;
    }
    if (all_basis || n > kLatticeScanMaxDim) return out;
    out.clear();
    // coordinate 0 varies fastest; digit 2 stands for -1
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        Tensor g(h.legs(1));
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3)
            if (c % 3) g[i] = Scalar(c % 3 == 1 ? 1 : -1).in_field(h.field());
        if (is_grouplike(h, g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<LinearMap> find_characters(const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dual = dual_of(hp);
    std::vector<LinearMap> out;
    for (const auto& p : find_grouplikes(*dual)) out.emplace_back(Shape{}, h.legs(1), p.data());
    return out;
}

std::vector<PairInInvolution> find_pairs_in_involution(const HopfPtr& hp, const GroupElement& component) {
    const HopfAlgebra& h = *hp;
    const auto gs = find_grouplikes(h);
    const auto fs = find_characters(hp);
    std::vector<PairInInvolution> out;
    for (const auto& g : gs)
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            PairInInvolution pii{fs[fi], g, component,
                                 "(" + character_name(h, fs[fi], fi) + "," + element_text(h.basis(), g) + ")"};
            if (check_pair_in_involution(h, pii).passed()) out.push_back(std::move(pii));
        }
    return out;
}

PairInInvolution require_pair_in_involution(const HopfPtr& hp, const GroupElement& component) {
    auto pairs = find_pairs_in_involution(hp, component);
    if (pairs.empty())
        throw NoPairError("no pair in involution for " + component.name() + " over " + hp->name());
    return std::move(pairs.front());
}

std::vector<YDModule> corpus_modules(const HopfPtr& hp, const std::vector<HopfAutomorphism>& auts) {
    std::vector<YDModule> out;
    auto push = [&out](YDModule m) {
        for (const auto& x : out)
            if (same_structure(x, m)) return;
        out.push_back(std::move(m));
    };
    push(trivial_module(hp));
    for (const auto& a : auts)
        for (const auto& b : auts) push(build_H_alpha_beta(hp, a, b));
    for (const auto& a : auts)
        for (const auto& b : auts) {
            auto pairs = find_pairs_in_involution(hp, {a, b});
            if (!pairs.empty()) push(build_pii_module(hp, pairs.front(), 1));
        }
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) push(left_dual(out[i]).dual);
    return out;
}

// ---------------------------------------------------------------- functors

YDModule functor_F(const YDModule& m, const PairInInvolution& pii) {
    if (!(m.component == pii.component))
        throw InputError("pair " + pii.name + " belongs to " + pii.component.name() + ", module " + m.name +
                         " to " + m.component.name());
    const HopfAlgebra& h = *m.hopf;
    const LinearMap binv = m.component.beta.inverse_map();
    const LinearMap f = pii.f.with_legs({}, h.legs(1));
    Plan a({"h", "m"});
    a.apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(compose({f, binv, h.antipode()}), {"h1"}, {})
        .apply(binv, {"h2"}, {"b"})
        .apply(m.action, {"b", "m"}, {"r"});
    Plan c({"m"});
    c.apply(m.coaction, {"m"}, {"m0", "m1"})
        .tensor_with(ginv_of(h, pii), {"gi"})
        .apply(h.mul(), {"m1", "gi"}, {"x"});
    return make_module(m.hopf, "F" + pii.name + "(" + m.name + ")", m.basis, unit_element(h),
                       realize(a, {h.leg(), m.leg()}, {m.leg()}), realize(c, {m.leg()}, {m.leg(), h.leg()}), m.space);
}

YDModule functor_G(const YDModule& n, const PairInInvolution& pii) {
    const HopfAlgebra& h = *n.hopf;
    if (!(n.component == unit_element(h)))
        throw InputError("G expects a module in (id,id), " + n.name + " is in " + n.component.name());
    const LinearMap f = pii.f.with_legs({}, h.legs(1));
    Plan a({"h", "m"});
    a.apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(f, {"h1"}, {})
        .apply(pii.component.beta.map(), {"h2"}, {"b"})
        .apply(n.action, {"b", "m"}, {"r"});
    Plan c({"m"});
    c.apply(n.coaction, {"m"}, {"m0", "m1"})
        .tensor_with(pii.g.reshaped(h.legs(1)), {"g"})
        .apply(h.mul(), {"m1", "g"}, {"x"});
    return make_module(n.hopf, "G" + pii.name + "(" + n.name + ")", n.basis, pii.component,
                       realize(a, {h.leg(), n.leg()}, {n.leg()}), realize(c, {n.leg()}, {n.leg(), h.leg()}), n.space);
}

Report functor_report(const YDModule& m, const PairInInvolution& pii) {
    const YDModule fm = functor_F(m, pii);
    const YDModule k = build_pii_module(m.hopf, pii, 1);
    Report r;
    r.suite = "functor_F:" + m.name + pii.name;
    r.add(compat_fact("F_yd_compat", fm));
    r.add(structure_fact("GF_identity", "G(F(M)) = M", functor_G(fm, pii), m));
    r.add(structure_fact("F_dual_factorization", "F(M) = (_fk^g)*⊗M", tensor_module(left_dual(k).dual, m), fm));
    r.add(structure_fact("G_factorization", "M = _fk^g⊗F(M)", tensor_module(k, fm), m));
    return r;
}

Report functor_inverse_report(const YDModule& n, const PairInInvolution& pii) {
    const YDModule gn = functor_G(n, pii);
    Report r;
    r.suite = "functor_G:" + n.name + pii.name;
    r.add(compat_fact("G_yd_compat", gn));
    r.add(structure_fact("FG_identity", "F(G(N)) = N", functor_F(gn, pii), n));
    r.add(structure_fact("G_factorization", "G(N) = _fk^g⊗N", tensor_module(build_pii_module(n.hopf, pii, 1), n), gn));
    return r;
}

Report functor_morphism_report(const YDModule& m, const YDModule& n, const LinearMap& phi,
                               const PairInInvolution& pii) {
    Report r;
    r.suite = "functor_morphism:" + m.name + "->" + n.name;
    const bool before = check_morphism(m, n, phi);
    const bool after = check_morphism(functor_F(m, pii), functor_F(n, pii), phi);
    r.add(fact("F_on_morphisms", "φ: M → N is a morphism iff φ: F(M) → F(N) is", before == after));
    return r;
}

// ---------------------------------------------------------------- algebra isomorphism

AlgebraIso pii_algebra_iso(const HopfPtr& hp, const PairInInvolution& pii) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_of(hp);
    const auto d = crossed_product_for(hp, unit_element(h));
    const auto a = crossed_product_for(hp, pii.component);
    const Shape parts{dp->leg(), h.leg()};
    const LinearMap f = pii.f.with_legs({}, h.legs(1));
    const LinearMap binv = pii.component.beta.inverse_map();
    const LinearMap hl = harpoon_left(h, *dp);
    Plan to({"x"});
    to.split("x", {"p", "h"}, parts)
        .tensor_with(ginv_of(h, pii), {"gi"})
        .apply(hl, {"gi", "p"}, {"q"})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(compose({f, binv, h.antipode()}), {"h1"}, {})
        .apply(binv, {"h2"}, {"b"})
        .merge({"q", "b"}, "y", a->leg().space);
    Plan from({"x"});
    from.split("x", {"p", "h"}, parts)
        .tensor_with(pii.g.reshaped(h.legs(1)), {"g"})
        .apply(hl, {"g", "p"}, {"q"})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(f, {"h1"}, {})
        .apply(pii.component.beta.map(), {"h2"}, {"b"})
        .merge({"q", "b"}, "y", d->leg().space);
    return {realize(to, {d->leg()}, {a->leg()}), realize(from, {a->leg()}, {d->leg()})};
}

Report pii_algebra_iso_report(const HopfPtr& hp, const PairInInvolution& pii) {
    const HopfAlgebra& h = *hp;
    const auto d = crossed_product_for(hp, unit_element(h));
    const auto a = crossed_product_for(hp, pii.component);
    const AlgebraIso iso = pii_algebra_iso(hp, pii);
    Report r;
    r.suite = "pii_algebra_iso:" + pii.name;
    auto multiplicative = [&](const std::string& id, const AlgebraData& src, const AlgebraData& dst,
                              const LinearMap& map) {
        Plan lhs({"x", "y"}), rhs({"x", "y"});
        lhs.apply(src.mul, {"x", "y"}, {"z"}).apply(map, {"z"}, {"w"});
        rhs.apply(map, {"x"}, {"a"}).apply(map, {"y"}, {"b"}).apply(dst.mul, {"a", "b"}, {"w"});
        r.add(kernel::verify(
            Identity{id, "ψ(xy) = ψ(x)ψ(y)", {src.leg(), src.leg()}, {src.basis, src.basis}, lhs, rhs, {"x", "y"}}));
    };
    multiplicative("to_multiplicative", *d, *a, iso.to);
    multiplicative("from_multiplicative", *a, *d, iso.from);
    r.add(fact("to_unit", "ψ(1) = 1", iso.to.apply(d->unit) == a->unit));
    r.add(fact("from_unit", "ψ⁻¹(1) = 1", iso.from.apply(a->unit) == d->unit));
    r.add(compare_maps("from_to", "ψ⁻¹ψ = id", compose(iso.from, iso.to), LinearMap::identity({d->leg()}),
                       {d->basis}));
    r.add(compare_maps("to_from", "ψψ⁻¹ = id", compose(iso.to, iso.from), LinearMap::identity({a->leg()}),
                       {a->basis}));
    return r;
}

Report transport_report(const YDModule& m, const PairInInvolution& pii) {
    const AlgebraIso iso = pii_algebra_iso(m.hopf, pii);
    const DcpModule x = yd_to_dcp_module(m);
    const DcpModule y = yd_to_dcp_module(functor_F(m, pii));
    Report r;
    r.suite = "transport:" + m.name + pii.name;
    r.add(compare_maps("transport", "pull-back along ψ = D(H)-module of F(M)",
                       compose(x.action, kron(iso.to, LinearMap::identity({m.leg()}))), y.action));
    return r;
}

}  // namespace ydt
