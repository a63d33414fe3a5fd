#include "ydt/dt.hpp"

#include <map>
#include <mutex>

#include "ydt/kernel/linalg.hpp"

namespace ydt {

namespace {

HopfPtr dual_for(const HopfPtr& h) {
    static std::mutex mutex;
    static std::map<const HopfAlgebra*, std::pair<HopfPtr, HopfPtr>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(h.get());
    if (it == cache.end()) it = cache.emplace(h.get(), std::make_pair(h, dual_of(h))).first;
    return it->second.second;
}

std::shared_ptr<const AlgebraData> comp(const HopfPtr& h, const GroupElement& p) { return crossed_product_for(h, p); }

Shape parts(const HopfAlgebra& h, const HopfAlgebra& dual) { return {dual.leg(), h.leg()}; }

std::string pair_name(const GroupElement& p, const GroupElement& q) { return p.name() + "," + q.name(); }

}  // namespace

// ---------------------------------------------------------------- P

TCoalgebra::TCoalgebra(HopfPtr h, const std::vector<GroupElement>& generators, std::size_t limit)
    : hopf_(std::move(h)), elements_(generated_subgroup(*hopf_, generators, limit)) {}

bool TCoalgebra::contains(const GroupElement& p) const {
    for (const auto& e : elements_)
        if (e == p) return true;
    return false;
}

std::shared_ptr<const AlgebraData> TCoalgebra::component(const GroupElement& p) const {
    if (!contains(p)) throw InputError("component " + p.name() + " is outside the generated subgroup");
    return comp(hopf_, p);
}

// ---------------------------------------------------------------- structure maps

LinearMap dt_delta(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_for(hp);
    const auto xpq = comp(hp, g_mul(p, q)), xp = comp(hp, p), xq = comp(hp, q);
    const HopfAutomorphism& gamma = q.alpha;
    const LinearMap twist = (gamma.inverse() * (p.beta * gamma)).map();
    Plan d({"x"});
    d.split("x", {"p", "h"}, parts(h, *dp))
        .apply(dp->comul(), {"p"}, {"p1", "p2"})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(gamma.map(), {"h1"}, {"a"})
        .apply(twist, {"h2"}, {"b"})
        .merge({"p2", "a"}, "u", xp->leg().space)
        .merge({"p1", "b"}, "v", xq->leg().space);
    return realize(d, {xpq->leg()}, {xp->leg(), xq->leg()});
}

LinearMap dt_counit(const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_for(hp);
    const auto x = comp(hp, unit_element(h));
    Plan e({"x"});
    e.split("x", {"p", "h"}, parts(h, *dp)).apply(dp->counit(), {"p"}, {}).apply(h.counit(), {"h"}, {});
    return realize(e, {x->leg()}, {});
}

LinearMap dt_phi(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_for(hp);
    const auto xq = comp(hp, q), xt = comp(hp, g_mul(g_mul(p, q), g_inv(p)));
    const HopfAutomorphism& a = p.alpha;
    const HopfAutomorphism& b = p.beta;
    const HopfAutomorphism& c = q.alpha;
    const LinearMap on_dual = dual_map((b * a.inverse()).map(), *dp);
    const LinearMap on_h = (a * (c.inverse() * (b.inverse() * c))).map();
    Plan f({"x"});
    f.split("x", {"p", "h"}, parts(h, *dp))
        .apply(on_dual, {"p"}, {"p2"})
        .apply(on_h, {"h"}, {"h2"})
        .merge({"p2", "h2"}, "y", xt->leg().space);
    return realize(f, {xq->leg()}, {xt->leg()});
}

LinearMap dt_antipode(const HopfPtr& hp, const GroupElement& p) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_for(hp);
    const auto xp = comp(hp, p), xi = comp(hp, g_inv(p));
    const LinearMap twist = compose((p.alpha * p.beta).map(), h.antipode());
    Plan s({"x"});
    s.split("x", {"p", "h"}, parts(h, *dp))
        .apply(twist, {"h"}, {"t"})
        .apply(embed_algebra(h, *xi), {"t"}, {"a"})
        .apply(dp->antipode_inv(), {"p"}, {"q"})
        .apply(embed_dual(h, *dp, *xi), {"q"}, {"b"})
        .apply(xi->mul, {"a", "b"}, {"y"});
    return realize(s, {xp->leg()}, {xi->leg()});
}

RMatrix dt_rmatrix(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const HopfAlgebra& h = *hp;
    const HopfPtr dp = dual_for(hp);
    const auto xp = comp(hp, p), xq = comp(hp, q);
    const Tensor canon = canonical_element(h, *dp);
    const LinearMap binv = p.beta.inverse_map();
    auto build = [&](const LinearMap& on_e) {
        Plan r({"p", "e"});
        r.apply(on_e, {"e"}, {"b"}).apply(embed_algebra(h, *xp), {"b"}, {"u"}).apply(embed_dual(h, *dp, *xq), {"p"},
                                                                                       {"v"});
        return r.run(canon);
    };
    RMatrix out{build(binv), {}};
    // ε⋈H and H*⋈1 multiply as H and H*, where Σ e_i⊗e^i has inverse Σ S(e_i)⊗e^i
    Tensor candidate = build(compose(binv, h.antipode()));
    const Tensor one = outer(xp->unit, xq->unit);
    if (tensor_product_mul(*xp, *xq, out.R, candidate) == one && tensor_product_mul(*xp, *xq, candidate, out.R) == one) {
        out.R_inv = std::move(candidate);
        return out;
    }
    // left multiplication by R on DT_p ⊗ DT_q, solved for the inverse
    const std::size_t n = xp->dim() * xq->dim();
    std::vector<Scalar> dense(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        Tensor e({xp->leg(), xq->leg()});
        e[c] = 1;
        Tensor col = tensor_product_mul(*xp, *xq, out.R, e);
        for (std::size_t r = 0; r < n; ++r) dense[r * n + c] = col[r];
    }
    const Shape legs{xp->leg(), xq->leg()};
    auto x = solve(LinearMap(legs, legs, std::move(dense)), one);
    if (!x || tensor_product_mul(*xp, *xq, *x, out.R) != one)
        throw SingularError("R_" + pair_name(p, q) + " is not invertible");
    out.R_inv = std::move(*x);
    return out;
}

// ---------------------------------------------------------------- checks

Report delta_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const auto xpq = comp(hp, g_mul(p, q)), xp = comp(hp, p), xq = comp(hp, q);
    const LinearMap d = dt_delta(hp, p, q);
    Report r;
    r.suite = "dt_delta:" + pair_name(p, q);
    Plan lhs({"x", "y"}), rhs({"x", "y"});
    lhs.apply(xpq->mul, {"x", "y"}, {"z"}).apply(d, {"z"}, {"u", "v"});
    rhs.apply(d, {"x"}, {"x1", "x2"})
        .apply(d, {"y"}, {"y1", "y2"})
        .apply(xp->mul, {"x1", "y1"}, {"u"})
        .apply(xq->mul, {"x2", "y2"}, {"v"});
    r.add(kernel::verify(Identity{"delta_multiplicative", "Δ(xy) = Δ(x)Δ(y)", {xpq->leg(), xpq->leg()},
                                  {xpq->basis, xpq->basis}, lhs, rhs, {"x", "y"}}));
    r.add(fact("delta_unit", "Δ(1) = 1⊗1", d.apply(xpq->unit) == outer(xp->unit, xq->unit)));
    return r;
}

Report coassociativity_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& q, const GroupElement& r) {
    const auto xp = comp(hp, p), xq = comp(hp, q), xr = comp(hp, r);
    const GroupElement pqr = g_mul(g_mul(p, q), r);
    // kron with an identity leg would be a dense (dim X)^3 x (dim X)^2 matrix; apply on legs instead
    Plan l({"x"}), rr({"x"});
    l.apply(dt_delta(hp, g_mul(p, q), r), {"x"}, {"a", "w"}).apply(dt_delta(hp, p, q), {"a"}, {"u", "v"});
    rr.apply(dt_delta(hp, p, g_mul(q, r)), {"x"}, {"u", "b"}).apply(dt_delta(hp, q, r), {"b"}, {"v", "w"});
    const Shape in{comp(hp, pqr)->leg()}, out{xp->leg(), xq->leg(), xr->leg()};
    const LinearMap lhs = realize(l.output({"u", "v", "w"}), in, out);
    const LinearMap rhs = realize(rr.output({"u", "v", "w"}), in, out);
    Report rep;
    rep.suite = "dt_coassociativity:" + pair_name(p, q) + "," + r.name();
    rep.add(compare_maps("coassociativity", "(Δ_{p,q}⊗id)Δ_{pq,r} = (id⊗Δ_{q,r})Δ_{p,qr}", lhs, rhs,
                         {comp(hp, g_mul(g_mul(p, q), r))->basis}));
    return rep;
}

Report counit_report(const HopfPtr& hp, const GroupElement& p) {
    const GroupElement one = unit_element(*hp);
    const auto xp = comp(hp, p);
    const LinearMap id = LinearMap::identity({xp->leg()});
    const LinearMap eps = dt_counit(hp);
    Report r;
    r.suite = "dt_counit:" + p.name();
    r.add(compare_maps("counit_left", "(ε⊗id)Δ_{1,p} = id", compose(kron(eps, id), dt_delta(hp, one, p)), id,
                       {xp->basis}));
    r.add(compare_maps("counit_right", "(id⊗ε)Δ_{p,1} = id", compose(kron(id, eps), dt_delta(hp, p, one)), id,
                       {xp->basis}));
    return r;
}

Report phi_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const auto xq = comp(hp, q), xt = comp(hp, g_mul(g_mul(p, q), g_inv(p)));
    const LinearMap f = dt_phi(hp, p, q);
    Report r;
    r.suite = "dt_phi:" + pair_name(p, q);
    Plan lhs({"x", "y"}), rhs({"x", "y"});
    lhs.apply(xq->mul, {"x", "y"}, {"z"}).apply(f, {"z"}, {"w"});
    rhs.apply(f, {"x"}, {"a"}).apply(f, {"y"}, {"b"}).apply(xt->mul, {"a", "b"}, {"w"});
    r.add(kernel::verify(Identity{"phi_multiplicative", "φ(xy) = φ(x)φ(y)", {xq->leg(), xq->leg()},
                                  {xq->basis, xq->basis}, lhs, rhs, {"x", "y"}}));
    r.add(fact("phi_unit", "φ(1) = 1", f.apply(xq->unit) == xt->unit));
    r.add(fact("phi_bijective", "φ is invertible", try_inverse(f).has_value()));
    return r;
}

Report phi_group_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& p2, const GroupElement& q) {
    const GroupElement inner = g_mul(g_mul(p2, q), g_inv(p2));
    Report r;
    r.suite = "dt_phi_group:" + pair_name(p, p2) + "," + q.name();
    r.add(compare_maps("phi_group", "φ_{pp′} = φ_p φ_{p′}", dt_phi(hp, g_mul(p, p2), q),
                       compose(dt_phi(hp, p, inner), dt_phi(hp, p2, q)), {comp(hp, q)->basis}));
    return r;
}

Report phi_delta_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& q, const GroupElement& r) {
    const GroupElement pi = g_inv(p);
    const GroupElement cq = g_mul(g_mul(p, q), pi), cr = g_mul(g_mul(p, r), pi);
    const LinearMap lhs = compose(kron(dt_phi(hp, p, q), dt_phi(hp, p, r)), dt_delta(hp, q, r));
    const LinearMap rhs = compose(dt_delta(hp, cq, cr), dt_phi(hp, p, g_mul(q, r)));
    Report rep;
    rep.suite = "dt_phi_delta:" + pair_name(p, q) + "," + r.name();
    rep.add(compare_maps("phi_delta", "(φ_p⊗φ_p)Δ_{q,r} = Δ_{pqp⁻¹,prp⁻¹}φ_p", lhs, rhs,
                         {comp(hp, g_mul(q, r))->basis}));
    const GroupElement one = unit_element(*hp);
    rep.add(compare_maps("phi_counit", "ε∘φ_p = ε", compose(dt_counit(hp), dt_phi(hp, p, one)), dt_counit(hp)));
    return rep;
}

Report antipode_report(const HopfPtr& hp, const GroupElement& p) {
    const GroupElement pi = g_inv(p);
    const auto xp = comp(hp, p), x1 = comp(hp, unit_element(*hp));
    const LinearMap sp = dt_antipode(hp, pi);   // DT_{p⁻¹} → DT_p
    const LinearMap id = LinearMap::identity({xp->leg()});
    const LinearMap target = compose(LinearMap::from_vector(xp->unit), dt_counit(hp));
    Report r;
    r.suite = "dt_antipode:" + p.name();
    r.add(compare_maps("antipode_left", "m(S_{p⁻¹}⊗id)Δ_{p⁻¹,p} = 1ε",
                       compose({xp->mul, kron(sp, id), dt_delta(hp, pi, p)}), target, {x1->basis}));
    r.add(compare_maps("antipode_right", "m(id⊗S_{p⁻¹})Δ_{p,p⁻¹} = 1ε",
                       compose({xp->mul, kron(id, sp), dt_delta(hp, p, pi)}), target, {x1->basis}));
    return r;
}

Report rmatrix_report(const HopfPtr& hp, const GroupElement& p, const GroupElement& q) {
    const auto xp = comp(hp, p), xq = comp(hp, q);
    Report r;
    r.suite = "dt_rmatrix:" + pair_name(p, q);
    try {
        RMatrix m = dt_rmatrix(hp, p, q);
        const Tensor one = outer(xp->unit, xq->unit);
        r.add(fact("r_invertible", "R R⁻¹ = R⁻¹ R = 1⊗1",
                   tensor_product_mul(*xp, *xq, m.R, m.R_inv) == one &&
                       tensor_product_mul(*xp, *xq, m.R_inv, m.R) == one));
    } catch (const SingularError& e) {
        r.add(fact("r_invertible", "R R⁻¹ = R⁻¹ R = 1⊗1", false, e.what()));
    }
    return r;
}

Report verify_tcoalgebra(const TCoalgebra& t) {
    const HopfPtr& h = t.hopf();
    const auto& P = t.elements();
    Report r;
    r.suite = "dt";
    for (const auto& p : P) {
        r.append(counit_report(h, p));
        r.append(antipode_report(h, p));
        for (const auto& q : P) {
            r.append(delta_report(h, p, q));
            r.append(phi_report(h, p, q));
            r.append(rmatrix_report(h, p, q));
            for (const auto& s : P) {
                r.append(coassociativity_report(h, p, q, s));
                r.append(phi_group_report(h, p, q, s));
                r.append(phi_delta_report(h, p, q, s));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- modules

Report verify_rep_equivalence(const YDModule& m, const YDModule& n, const GroupElement& p) {
    const HopfPtr& hp = m.hopf;
    if (n.hopf.get() != hp.get()) throw InputError("modules over different Hopf algebras");
    const DcpModule xm = yd_to_dcp_module(m), xn = yd_to_dcp_module(n);
    Report r;
    r.suite = "rep_equivalence:" + m.name + "," + n.name + "," + p.name();
    {
        const YDModule t = tensor_module(m, n);
        const DcpModule xt = yd_to_dcp_module(t);
        Plan a({"x", "w"});
        a.split("w", {"a", "b"}, {m.leg(), n.leg()})
            .apply(dt_delta(hp, m.component, n.component), {"x"}, {"u", "v"})
            .apply(xm.action, {"u", "a"}, {"a2"})
            .apply(xn.action, {"v", "b"}, {"b2"})
            .merge({"a2", "b2"}, "w2", t.leg().space);
        const Leg X = xt.algebra->leg();
        r.add(compare_maps("rep_tensor", "Δ_{p,q}-induced action on M⊗N = action of M⊗N",
                           realize(a, {X, t.leg()}, {t.leg()}), xt.action));
    }
    {
        const YDModule c = conjugate_module(p, n);
        const DcpModule xc = yd_to_dcp_module(c);
        const LinearMap pulled =
            compose(xn.action, kron(dt_phi(hp, g_inv(p), c.component), LinearMap::identity({n.leg()})));
        r.add(compare_maps("rep_conjugation", "φ_{p⁻¹}-pullback of N = ^pN", pulled, xc.action));
    }
    {
        const RMatrix R = dt_rmatrix(hp, m.component, n.component);
        Plan b({"a", "b"});
        b.tensor_with(R.R, {"r1", "r2"})
            .apply(xm.action, {"r1", "a"}, {"a2"})
            .apply(xn.action, {"r2", "b"}, {"b2"})
            .output({"b2", "a2"});
        r.add(compare_maps("rep_braiding", "flip∘(R·) = c_{M,N}", realize(b, {m.leg(), n.leg()}, {n.leg(), m.leg()}),
                           braiding_map(m, n), {m.basis, n.basis}));
    }
    return r;
}

}  // namespace ydt
