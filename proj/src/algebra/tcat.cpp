#include "ydt/tcat.hpp"

namespace ydt {

namespace {

void same_algebra(const YDModule& m, const YDModule& n) {
    if (m.hopf != n.hopf && !(m.hopf->mul() == n.hopf->mul() && m.hopf->comul() == n.hopf->comul()))
        throw InputError("modules " + m.name + " and " + n.name + " live over different Hopf algebras");
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x + "⊗" + y);
    return out;
}

// Relabels a map onto unmerged legs so that merged and split views compare.
LinearMap on_legs(const LinearMap& f, Shape out, Shape in) { return f.with_legs(std::move(out), std::move(in)); }

CheckResult same_object(std::string id, std::string anchor, const YDModule& a, const YDModule& b) {
    return fact(std::move(id), std::move(anchor), same_structure(a, b),
                same_structure(a, b) ? "" : a.name + " differs from " + b.name);
}

}  // namespace

GroupElement g_mul(const GroupElement& p, const GroupElement& q) {
    return {p.alpha * q.alpha, q.beta * (q.alpha.inverse() * (p.beta * q.alpha))};
}

GroupElement g_inv(const GroupElement& p) {
    return {p.alpha.inverse(), p.alpha * (p.beta.inverse() * p.alpha.inverse())};
}

std::vector<GroupElement> generated_subgroup(const HopfAlgebra& h, const std::vector<GroupElement>& generators,
                                             std::size_t limit) {
    std::vector<GroupElement> out{unit_element(h)};
    auto known = [&](const GroupElement& x) {
        for (const auto& y : out)
            if (y == x) return true;
        return false;
    };
    std::vector<GroupElement> gens;
    for (const auto& g : generators) {
        gens.push_back(g);
        gens.push_back(g_inv(g));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& g : gens) {
            GroupElement x = g_mul(out[i], g);
            if (known(x)) continue;
            if (out.size() >= limit)
                throw InputError("subgroup generated by the chosen automorphisms exceeds " + std::to_string(limit) +
                                 " elements");
            out.push_back(std::move(x));
        }
    }
    return out;
}

Report check_group_axioms(const HopfAlgebra& h, const std::vector<GroupElement>& elements) {
    Report r;
    r.suite = "group";
    const GroupElement e = unit_element(h);
    bool assoc = true, unit = true, inv = true;
    std::string where_assoc, where_unit, where_inv;
    for (const auto& p : elements) {
        if (unit && !(g_mul(p, e) == p && g_mul(e, p) == p)) {
            unit = false;
            where_unit = p.name();
        }
        if (inv && !(g_mul(p, g_inv(p)) == e && g_mul(g_inv(p), p) == e)) {
            inv = false;
            where_inv = p.name();
        }
        for (const auto& q : elements)
            for (const auto& s : elements)
                if (assoc && !(g_mul(g_mul(p, q), s) == g_mul(p, g_mul(q, s)))) {
                    assoc = false;
                    where_assoc = p.name() + ", " + q.name() + ", " + s.name();
                }
    }
    r.add(fact("group_assoc", "(p∗q)∗r = p∗(q∗r)", assoc, where_assoc));
    r.add(fact("group_unit", "p∗(id,id) = (id,id)∗p = p", unit, where_unit));
    r.add(fact("group_inverse", "p∗p⁻¹ = p⁻¹∗p = (id,id)", inv, where_inv));
    return r;
}

YDModule tensor_module(const YDModule& m, const YDModule& n) {
    same_algebra(m, n);
    const HopfAlgebra& h = *m.hopf;
    const HopfAutomorphism& gamma = n.component.alpha;
    const LinearMap twisted = (gamma.inverse() * (m.component.beta * gamma)).map();
    const std::string space = "(" + m.space + "⊗" + n.space + ")";
    const Leg mn{SpaceId(space), m.dim() * n.dim()};
    const SpaceId sid(space);

    Plan act({"h", "v"});
    act.split("v", {"m", "n"}, {m.leg(), n.leg()})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(gamma.map(), {"h1"}, {"a"})
        .apply(twisted, {"h2"}, {"b"})
        .apply(m.action, {"a", "m"}, {"x"})
        .apply(n.action, {"b", "n"}, {"y"})
        .merge({"x", "y"}, "r", sid);
    Plan coact({"v"});
    coact.split("v", {"m", "n"}, {m.leg(), n.leg()})
        .apply(m.coaction, {"m"}, {"m0", "m1"})
        .apply(n.coaction, {"n"}, {"n0", "n1"})
        .apply(h.mul(), {"n1", "m1"}, {"z"})
        .merge({"m0", "n0"}, "r", sid)
        .output({"r", "z"});
    LinearMap action = realize(act, {h.leg(), mn}, {mn});
    LinearMap coaction = realize(coact, {mn}, {mn, h.leg()});
    return make_module(m.hopf, "(" + m.name + "⊗" + n.name + ")", tensor_labels(m.basis, n.basis),
                       g_mul(m.component, n.component), action, coaction, space);
}

YDModule conjugate_module(const GroupElement& p, const YDModule& n) {
    const HopfAutomorphism& alpha = p.alpha;
    const HopfAutomorphism& gamma = n.component.alpha;
    const LinearMap on_h = (gamma.inverse() * (p.beta * (gamma * alpha.inverse()))).map();
    const LinearMap on_coefficient = (alpha * p.beta.inverse()).map();
    LinearMap action = compose(n.action, kron(on_h, LinearMap::identity({n.leg()})));
    LinearMap coaction = compose(kron(LinearMap::identity({n.leg()}), on_coefficient), n.coaction);
    return make_module(n.hopf, "^{" + p.name() + "}" + n.name, n.basis, g_mul(g_mul(p, n.component), g_inv(p)),
                       action, coaction, n.space);
}

LinearMap braiding_map(const YDModule& m, const YDModule& n) {
    same_algebra(m, n);
    Plan p({"m", "n"});
    p.apply(n.coaction, {"n"}, {"n0", "n1"})
        .apply(m.component.beta.inverse_map(), {"n1"}, {"b"})
        .apply(m.action, {"b", "m"}, {"x"})
        .output({"n0", "x"});
    return realize(p, {m.leg(), n.leg()}, {n.leg(), m.leg()});
}

LinearMap braiding_inverse_map(const YDModule& m, const YDModule& n) {
    same_algebra(m, n);
    const HopfAlgebra& h = *m.hopf;
    Plan p({"n", "m"});
    p.apply(n.coaction, {"n"}, {"n0", "n1"})
        .apply(compose(m.component.beta.inverse_map(), h.antipode()), {"n1"}, {"b"})
        .apply(m.action, {"b", "m"}, {"x"})
        .output({"x", "n0"});
    return realize(p, {n.leg(), m.leg()}, {m.leg(), n.leg()});
}

Braiding braiding(const YDModule& m, const YDModule& n) {
    YDModule source = tensor_module(m, n);
    YDModule target = tensor_module(conjugate_module(m.component, n), m);
    LinearMap c = braiding_map(m, n).with_legs({target.leg()}, {source.leg()});
    LinearMap c_inv = braiding_inverse_map(m, n).with_legs({source.leg()}, {target.leg()});
    return {std::move(source), std::move(target), std::move(c), std::move(c_inv)};
}

Report braiding_report(const YDModule& m, const YDModule& n) {
    Braiding b = braiding(m, n);
    Report r;
    r.suite = "braiding:" + m.name + "," + n.name;
    Report fwd = morphism_report(b.source, b.target, b.c);
    Report back = morphism_report(b.target, b.source, b.c_inv);
    for (auto& c : fwd.checks) {
        c.id = "braiding_" + c.id;
        r.add(c);
    }
    for (auto& c : back.checks) {
        c.id = "braiding_inverse_" + c.id;
        r.add(c);
    }
    r.add(compare_maps("braiding_inverse_left", "c⁻¹∘c = id", compose(b.c_inv, b.c),
                       LinearMap::identity({b.source.leg()}), {b.source.basis}));
    r.add(compare_maps("braiding_inverse_right", "c∘c⁻¹ = id", compose(b.c, b.c_inv),
                       LinearMap::identity({b.target.leg()}), {b.target.basis}));
    return r;
}

Report verify_hexagons(const YDModule& m, const YDModule& n, const YDModule& p) {
    same_algebra(m, n);
    same_algebra(n, p);
    Report r;
    r.suite = "hexagons:" + m.name + "," + n.name + "," + p.name;
    const Leg M = m.leg(), N = n.leg(), P = p.leg();
    const LinearMap idM = LinearMap::identity({M}), idN = LinearMap::identity({N}), idP = LinearMap::identity({P});
    const std::vector<std::vector<std::string>> labels{m.basis, n.basis, p.basis};
    const std::vector<std::string> names{"m", "n", "p"};

    const YDModule mn = tensor_module(m, n);
    const YDModule np = conjugate_module(n.component, p);
    r.add(same_object("conjugate_of_conjugate", "^M(^N P) = ^{M⊗N}P", conjugate_module(m.component, np),
                      conjugate_module(mn.component, p)));
    {
        LinearMap lhs = on_legs(braiding_map(mn, p), {P, M, N}, {M, N, P});
        LinearMap step1 = kron(idM, braiding_map(n, p));                 // (M, P, N) <- (M, N, P)
        LinearMap step2 = kron(braiding_map(m, np), idN);                // (P, M, N) <- (M, P, N)
        LinearMap rhs = compose(step2, step1);
        r.add(compare_maps("hexagon_left", "c_{M⊗N,P} = (c_{M,^NP}⊗id_N)(id_M⊗c_{N,P})", lhs, rhs, labels, names));
    }
    const YDModule npp = tensor_module(n, p);
    const YDModule mN = conjugate_module(m.component, n);
    r.add(same_object("conjugate_of_tensor", "^M(N⊗P) = ^MN⊗^MP", conjugate_module(m.component, npp),
                      tensor_module(mN, conjugate_module(m.component, p))));
    {
        LinearMap lhs = on_legs(braiding_map(m, npp), {N, P, M}, {M, N, P});
        LinearMap step1 = kron(braiding_map(m, n), idP);                 // (N, M, P) <- (M, N, P)
        LinearMap step2 = kron(idN, braiding_map(m, p));                 // (N, P, M) <- (N, M, P)
        LinearMap rhs = compose(step2, step1);
        r.add(compare_maps("hexagon_right", "c_{M,N⊗P} = (id_{^MN}⊗c_{M,P})(c_{M,N}⊗id_P)", lhs, rhs, labels,
                           names));
    }
    return r;
}

namespace {

// Dual action and coaction on Hom(M, k) from T (acting on h) and U (on the coefficient):
// (h·f)(m) = f(T(h)·m), f ↦ f(m_(0)) ⊗ U(m_(1)).
std::pair<LinearMap, LinearMap> dual_structure(const YDModule& m, const LinearMap& T, const LinearMap& U,
                                               const Leg& star) {
    const HopfAlgebra& h = *m.hopf;
    const std::size_t d = m.dim(), n = h.dim();
    LinearMap B = compose(m.action, kron(T, LinearMap::identity({m.leg()})));   // B[j][(h,i)]
    LinearMap C = compose(kron(LinearMap::identity({m.leg()}), U), m.coaction);  // C[(j,u)][i]
    std::vector<Scalar> act(d * n * d), coact(d * n * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < d; ++j) {
                act[i * n * d + a * d + j] = B(j, a * d + i);
                coact[(i * n + a) * d + j] = C(j * n + a, i);
            }
    return {LinearMap({star}, {h.leg(), star}, std::move(act)), LinearMap({star, h.leg()}, {star}, std::move(coact))};
}

std::vector<std::string> dual_labels(const YDModule& m) {
    std::vector<std::string> out;
    for (const auto& b : m.basis) out.push_back("e^" + b);
    return out;
}

}  // namespace

Duality left_dual(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    const std::string space = m.space + "*";
    const Leg star{SpaceId(space), m.dim()};
    const LinearMap T = compose({m.component.beta.inverse_map(), m.component.alpha.inverse_map(), h.antipode()});
    auto [act, coact] = dual_structure(m, T, h.antipode_inv(), star);
    YDModule dual = make_module(m.hopf, m.name + "*", dual_labels(m), g_inv(m.component), act, coact, space);
    const std::size_t d = m.dim();
    std::vector<Scalar> ev(d * d);
    for (std::size_t i = 0; i < d; ++i) ev[i * d + i] = 1;
    LinearMap b({m.leg(), dual.leg()}, {}, ev);
    LinearMap e({}, {dual.leg(), m.leg()}, ev);
    return {std::move(dual), std::move(b), std::move(e)};
}

Duality right_dual(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    const std::string space = "*" + m.space;
    const Leg star{SpaceId(space), m.dim()};
    // β⁻¹α⁻¹S⁻¹, same order as the left dual. The order α⁻¹β⁻¹ breaks the
    // compatibility condition once α and β do not commute.
    const LinearMap T = compose({m.component.beta.inverse_map(), m.component.alpha.inverse_map(), h.antipode_inv()});
    auto [act, coact] = dual_structure(m, T, h.antipode(), star);
    YDModule dual = make_module(m.hopf, "*" + m.name, dual_labels(m), g_inv(m.component), act, coact, space);
    const std::size_t d = m.dim();
    std::vector<Scalar> ev(d * d);
    for (std::size_t i = 0; i < d; ++i) ev[i * d + i] = 1;
    LinearMap b({dual.leg(), m.leg()}, {}, ev);
    LinearMap e({}, {m.leg(), dual.leg()}, ev);
    return {std::move(dual), std::move(b), std::move(e)};
}

Report duality_report(const YDModule& m, Side side) {
    const bool left = side == Side::left;
    Duality du = left ? left_dual(m) : right_dual(m);
    const YDModule k = trivial_module(m.hopf);
    const std::string tag = left ? "left_dual_" : "right_dual_";
    Report r;
    r.suite = (left ? "left_dual:" : "right_dual:") + m.name;
    r.add(fact(tag + "component", "component = (α⁻¹, αβ⁻¹α⁻¹)", du.dual.component == g_inv(m.component)));
    for (auto c : check_yd_compat(du.dual).checks) {
        c.id = tag + c.id;
        r.add(c);
    }
    // b: k -> X⊗Y and d: Y⊗X -> k in the unit component
    const YDModule bt = left ? tensor_module(m, du.dual) : tensor_module(du.dual, m);
    const YDModule dt = left ? tensor_module(du.dual, m) : tensor_module(m, du.dual);
    for (auto c : morphism_report(k, bt, du.b.with_legs({bt.leg()}, {k.leg()})).checks) {
        c.id = tag + "coevaluation_" + c.id;
        r.add(c);
    }
    for (auto c : morphism_report(dt, k, du.d.with_legs({k.leg()}, {dt.leg()})).checks) {
        c.id = tag + "evaluation_" + c.id;
        r.add(c);
    }
    const LinearMap idM = LinearMap::identity({m.leg()}), idS = LinearMap::identity({du.dual.leg()});
    if (left) {
        r.add(compare_maps(tag + "snake_object", "(id_M⊗d)(b⊗id_M) = id_M",
                           compose(kron(idM, du.d), kron(du.b, idM)), idM, {m.basis}));
        r.add(compare_maps(tag + "snake_dual", "(d⊗id_{M*})(id_{M*}⊗b) = id_{M*}",
                           compose(kron(du.d, idS), kron(idS, du.b)), idS, {du.dual.basis}));
    } else {
        r.add(compare_maps(tag + "snake_object", "(d⊗id_M)(id_M⊗b) = id_M",
                           compose(kron(du.d, idM), kron(idM, du.b)), idM, {m.basis}));
        r.add(compare_maps(tag + "snake_dual", "(id_{*M}⊗d)(b⊗id_{*M}) = id_{*M}",
                           compose(kron(idS, du.d), kron(du.b, idS)), idS, {du.dual.basis}));
    }
    return r;
}

}  // namespace ydt
