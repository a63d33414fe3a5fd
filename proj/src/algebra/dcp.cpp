#include "ydt/dcp.hpp"

#include <cstdint>
#include <map>
#include <mutex>

#include "ydt/kernel/linalg.hpp"

namespace ydt {

namespace {

Identity make_identity(std::string id, std::string anchor, Shape inputs,
                       std::vector<std::vector<std::string>> labels, Plan lhs, Plan rhs,
                       std::vector<std::string> names = {}) {
    return Identity{std::move(id), std::move(anchor), std::move(inputs), std::move(labels),
                    std::move(lhs),  std::move(rhs),    std::move(names)};
}

Scalar one(const HopfAlgebra& h) { return Scalar(1).in_field(h.field()); }

std::string crossed_label(const std::string& p, const std::string& a) { return p + "⋈" + a; }

}  // namespace

// ---------------------------------------------------------------- algebras

AlgebraData algebra_of(const HopfAlgebra& h, std::string name, std::string space) {
    const Leg l{SpaceId(space), h.dim()};
    return AlgebraData{std::move(name), std::move(space), h.basis(), h.mul().with_legs({l}, {l, l}),
                       h.unit().reshaped({l})};
}

Report algebra_axioms(const AlgebraData& a) {
    const Leg A = a.leg();
    Report r;
    r.suite = "algebra:" + a.name;
    {
        Plan lhs({"a", "b", "c"}), rhs({"a", "b", "c"});
        lhs.apply(a.mul, {"a", "b"}, {"ab"}).apply(a.mul, {"ab", "c"}, {"x"});
        rhs.apply(a.mul, {"b", "c"}, {"bc"}).apply(a.mul, {"a", "bc"}, {"x"});
        r.add(kernel::verify(make_identity("associativity", "(ab)c = a(bc)", {A, A, A},
                                           {a.basis, a.basis, a.basis}, lhs, rhs)));
    }
    Plan l({"a"}), rr({"a"});
    l.tensor_with(a.unit, {"u"}).apply(a.mul, {"u", "a"}, {"x"});
    rr.tensor_with(a.unit, {"u"}).apply(a.mul, {"a", "u"}, {"x"});
    r.add(kernel::verify(make_identity("unit_left", "1a = a", {A}, {a.basis}, l, Plan({"a"}))));
    r.add(kernel::verify(make_identity("unit_right", "a1 = a", {A}, {a.basis}, rr, Plan({"a"}))));
    return r;
}

// ---------------------------------------------------------------- bicomodule algebras

LinearMap BicomoduleAlgebra::two_sided() const {
    return compose(kron(left, LinearMap::identity({hopf->leg()})), right);
}

BicomoduleAlgebra make_bicomodule_algebra(HopfPtr hopf, AlgebraData algebra, const LinearMap& left,
                                          const LinearMap& right) {
    const Leg H = hopf->leg(), A = algebra.leg();
    const std::size_t n = H.dim, d = A.dim;
    if (left.rows() != n * d || left.cols() != d) throw ShapeError("left coaction must map A to H⊗A");
    if (right.rows() != n * d || right.cols() != d) throw ShapeError("right coaction must map A to A⊗H");
    return BicomoduleAlgebra{std::move(hopf), std::move(algebra), left.with_legs({H, A}, {A}),
                             right.with_legs({A, H}, {A})};
}

Report bicomodule_axioms(const BicomoduleAlgebra& a) {
    const HopfAlgebra& h = *a.hopf;
    const AlgebraData& A = a.algebra;
    const Leg L = A.leg();
    const auto& lab = A.basis;
    Report r;
    r.suite = "bicomodule:" + A.name;
    auto single = [&](std::string id, std::string anchor, const Plan& lhs, const Plan& rhs) {
        r.add(kernel::verify(make_identity(std::move(id), std::move(anchor), {L}, {lab}, lhs, rhs)));
    };
    {
        Plan lhs({"a"}), rhs({"a"});
        lhs.apply(a.left, {"a"}, {"x", "b"}).apply(h.comul(), {"x"}, {"x1", "x2"}).output({"x1", "x2", "b"});
        rhs.apply(a.left, {"a"}, {"x", "b"}).apply(a.left, {"b"}, {"y", "c"}).output({"x", "y", "c"});
        single("left_coassociativity", "(Δ⊗id)λ = (id⊗λ)λ", lhs, rhs);
        Plan c({"a"});
        c.apply(a.left, {"a"}, {"x", "b"}).apply(h.counit(), {"x"}, {});
        single("left_counit", "(ε⊗id)λ = id", c, Plan({"a"}));
    }
    {
        Plan lhs({"a"}), rhs({"a"});
        lhs.apply(a.right, {"a"}, {"b", "x"}).apply(h.comul(), {"x"}, {"x1", "x2"});
        rhs.apply(a.right, {"a"}, {"b", "x"}).apply(a.right, {"b"}, {"c", "y"}).output({"c", "y", "x"});
        single("right_coassociativity", "(id⊗Δ)ρ = (ρ⊗id)ρ", lhs, rhs);
        Plan c({"a"});
        c.apply(a.right, {"a"}, {"b", "x"}).apply(h.counit(), {"x"}, {});
        single("right_counit", "(id⊗ε)ρ = id", c, Plan({"a"}));
    }
    {
        Plan lhs({"a", "b"}), rhs({"a", "b"});
        lhs.apply(A.mul, {"a", "b"}, {"ab"}).apply(a.left, {"ab"}, {"x", "c"});
        rhs.apply(a.left, {"a"}, {"x", "a0"})
            .apply(a.left, {"b"}, {"y", "b0"})
            .apply(h.mul(), {"x", "y"}, {"xy"})
            .apply(A.mul, {"a0", "b0"}, {"c"});
        r.add(kernel::verify(make_identity("left_multiplicative", "λ(ab) = λ(a)λ(b)", {L, L}, {lab, lab}, lhs, rhs)));
        Plan l2({"a", "b"}), r2({"a", "b"});
        l2.apply(A.mul, {"a", "b"}, {"ab"}).apply(a.right, {"ab"}, {"c", "x"});
        r2.apply(a.right, {"a"}, {"a0", "x"})
            .apply(a.right, {"b"}, {"b0", "y"})
            .apply(A.mul, {"a0", "b0"}, {"c"})
            .apply(h.mul(), {"x", "y"}, {"xy"});
        r.add(kernel::verify(make_identity("right_multiplicative", "ρ(ab) = ρ(a)ρ(b)", {L, L}, {lab, lab}, l2, r2)));
    }
    {
        Plan lu, lu2, ru, ru2;
        lu.tensor_with(A.unit, {"u"}).apply(a.left, {"u"}, {"x", "v"});
        lu2.tensor_with(h.unit(), {"x"}).tensor_with(A.unit, {"v"});
        ru.tensor_with(A.unit, {"u"}).apply(a.right, {"u"}, {"v", "x"});
        ru2.tensor_with(A.unit, {"v"}).tensor_with(h.unit(), {"x"});
        r.add(kernel::verify(make_identity("left_unit", "λ(1) = 1⊗1", {}, {}, lu, lu2)));
        r.add(kernel::verify(make_identity("right_unit", "ρ(1) = 1⊗1", {}, {}, ru, ru2)));
    }
    {
        Plan lhs({"a"}), rhs({"a"});
        lhs.apply(a.right, {"a"}, {"b", "y"}).apply(a.left, {"b"}, {"x", "c"}).output({"x", "c", "y"});
        rhs.apply(a.left, {"a"}, {"x", "b"}).apply(a.right, {"b"}, {"c", "y"});
        single("bicomodule", "(λ⊗id)ρ = (id⊗ρ)λ", lhs, rhs);
    }
    return r;
}

BicomoduleAlgebra build_H_ab_bicomodule(const HopfPtr& hp, const GroupElement& c) {
    const HopfAlgebra& h = *hp;
    const std::string name = "H" + c.name();
    const LinearMap id = h.identity();
    LinearMap left = compose(kron(c.alpha.map(), id), h.comul());
    LinearMap right = compose(kron(id, c.beta.map()), h.comul());
    return make_bicomodule_algebra(hp, algebra_of(h, name, name), left, right);
}

// ---------------------------------------------------------------- compatibility

Report check_yd_datum_module(const BicomoduleAlgebra& a, const LinearMap& action_in, const LinearMap& coaction_in,
                             const std::vector<std::string>& basis) {
    const HopfAlgebra& h = *a.hopf;
    const Leg A = a.algebra.leg();
    if (action_in.out().size() != 1) throw ShapeError("module action must have one output leg");
    const Leg M = action_in.out()[0];
    if (action_in.cols() != A.dim * M.dim) throw ShapeError("module action must map A⊗M to M");
    const LinearMap action = action_in.with_legs({M}, {A, M});
    const LinearMap coaction = coaction_in.with_legs({M, h.leg()}, {M});
    std::vector<std::string> labels = basis;
    if (labels.empty())
        for (std::size_t i = 0; i < M.dim; ++i) labels.push_back(std::to_string(i));
    const std::vector<std::vector<std::string>> legs_text{a.algebra.basis, labels};
    const std::vector<std::string> names{"a", "m"};

    Report r;
    r.suite = "datum:" + a.algebra.name;
    Plan l1({"a", "m"}), r1({"a", "m"});
    l1.apply(action, {"a", "m"}, {"x"}).apply(coaction, {"x"}, {"x0", "x1"});
    r1.apply(a.two_sided(), {"a"}, {"am", "a0", "a1"})
        .apply(coaction, {"m"}, {"m0", "m1"})
        .apply(action, {"a0", "m0"}, {"y"})
        .apply(h.antipode_inv(), {"am"}, {"s"})
        .apply(h.mul(), {"a1", "m1"}, {"t"})
        .apply(h.mul(), {"t", "s"}, {"z"});
    CheckResult main = kernel::verify(make_identity(
        "datum_compat", "(a·m)_(0)⊗(a·m)_(1) = a_{0}·m_(0)⊗a_{1}m_(1)S⁻¹(a_{−1})", {A, M}, legs_text, l1, r1, names));

    Plan l2({"a", "m"}), r2({"a", "m"});
    l2.apply(a.right, {"a"}, {"b0", "b1"})
        .apply(coaction, {"m"}, {"m0", "m1"})
        .apply(action, {"b0", "m0"}, {"y"})
        .apply(h.mul(), {"b1", "m1"}, {"z"});
    r2.apply(a.left, {"a"}, {"c", "c0"})
        .apply(action, {"c0", "m"}, {"x"})
        .apply(coaction, {"x"}, {"x0", "x1"})
        .apply(h.mul(), {"x1", "c"}, {"z"})
        .output({"x0", "z"});
    CheckResult alt = kernel::verify(make_identity(
        "datum_compat_alt", "a_<0>·m_(0)⊗a_<1>m_(1) = (a_[0]·m)_(0)⊗(a_[0]·m)_(1)a_[−1]", {A, M}, legs_text, l2, r2,
        names));
    const bool agree = main.passed == alt.passed;
    r.add(std::move(main));
    r.add(std::move(alt));
    r.add(fact("datum_forms_agree", "both compatibility forms give the same verdict", agree));
    return r;
}

Report check_yd_datum_module(const BicomoduleAlgebra& a, const YDModule& m) {
    if (m.hopf->dim() != a.algebra.dim())
        throw ShapeError("module " + m.name + " is not a module over " + a.algebra.name);
    return check_yd_datum_module(a, m.action.with_legs({m.leg()}, {a.algebra.leg(), m.leg()}), m.coaction,
                                 m.basis);
}

// ---------------------------------------------------------------- crossed products

AlgebraData diagonal_crossed_product(const BicomoduleAlgebra& a) {
    const HopfAlgebra& h = *a.hopf;
    const HopfPtr dp = dual_of(a.hopf);
    const HopfAlgebra& dual = *dp;
    const AlgebraData& A = a.algebra;
    AlgebraData x;
    x.name = dual.space().name() + "⋈" + A.name;
    x.space = x.name;
    for (const auto& p : dual.basis())
        for (const auto& b : A.basis) x.basis.push_back(crossed_label(p, b));
    const Leg X = x.leg();
    const Shape parts{dual.leg(), A.leg()};

    Plan p({"x", "y"});
    p.split("x", {"p", "a"}, parts)
        .split("y", {"q", "b"}, parts)
        .apply(a.two_sided(), {"a"}, {"am", "a0", "a1"})
        .apply(h.antipode_inv(), {"a1"}, {"s"})
        .apply(harpoon_left(h, dual), {"am", "q"}, {"q1"})
        .apply(harpoon_right(h, dual), {"q1", "s"}, {"q2"})
        .apply(dual.mul(), {"p", "q2"}, {"r1"})
        .apply(A.mul, {"a0", "b"}, {"r2"})
        .merge({"r1", "r2"}, "r", X.space);
    x.mul = realize(p, {X, X}, {X});
    x.unit = outer(dual.unit(), A.unit).reshaped({X});

    Report r = algebra_axioms(x);
    r.suite = "crossed_product:" + x.name;
    if (!r.passed()) throw AxiomError(x.name + " is not an associative unital algebra", r);
    return x;
}

LinearMap embed_algebra(const HopfAlgebra& h, const AlgebraData& x) {
    const std::size_t n = h.dim();
    if (x.dim() != n * n) throw ShapeError(x.name + " is not a crossed product over " + h.name());
    std::vector<Scalar> dense(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dense[(j * n + i) * n + i] = h.counit()(0, j);
    return LinearMap({x.leg()}, {h.leg()}, std::move(dense));
}

LinearMap embed_dual(const HopfAlgebra& h, const HopfAlgebra& dual, const AlgebraData& x) {
    const std::size_t n = h.dim();
    if (x.dim() != n * n) throw ShapeError(x.name + " is not a crossed product over " + h.name());
    std::vector<Scalar> dense(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) dense[(i * n + k) * n + i] = h.unit()[k];
    return LinearMap({x.leg()}, {dual.leg()}, std::move(dense));
}

Tensor canonical_element(const HopfAlgebra& h, const HopfAlgebra& dual) {
    const std::size_t n = h.dim();
    Tensor t({dual.leg(), h.leg()});
    for (std::size_t i = 0; i < n; ++i) t[i * n + i] = one(h);
    return t;
}

std::shared_ptr<const AlgebraData> crossed_product_for(const HopfPtr& h, const GroupElement& c) {
    struct Entry {
        HopfPtr hopf;   // keeps the address in the key alive
        std::shared_ptr<const AlgebraData> algebra;
    };
    static std::mutex mutex;
    static std::map<std::string, Entry> cache;
    std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(h.get()));
    for (const auto* m : {&c.alpha.map(), &c.beta.map()}) {
        key += '|';
        for (const auto& s : m->dense()) key += s.to_string() + ',';
    }
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second.algebra;
    }
    auto built = std::make_shared<const AlgebraData>(diagonal_crossed_product(build_H_ab_bicomodule(h, c)));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, Entry{h, built}).first->second.algebra;
}

// ---------------------------------------------------------------- Drinfeld double

namespace {

// Solves Σ T(c_1) ι(c_2) = ε(c)1 for T: C → D.
std::optional<LinearMap> left_convolution_inverse(const AlgebraData& d, const LinearMap& comul_c,
                                                  const LinearMap& counit_c, const LinearMap& iota) {
    const std::size_t n = d.dim(), m = iota.cols();
    std::vector<Scalar> phi(n * m * n * m);
    for (std::size_t c = 0; c < m; ++c) {
        for (const auto& e : comul_c.column(c)) {
            const std::size_t j = e.row / m, k = e.row % m;
            for (const auto& w : iota.column(k))
                for (std::size_t r = 0; r < n; ++r)
                    for (const auto& prod : d.mul.column(r * n + w.row))
                        phi[(prod.row * m + c) * (n * m) + r * m + j].add_product(e.value * w.value, prod.value);
        }
    }
    const Leg D = d.leg(), C = iota.in()[0];
    LinearMap op({D, C}, {D, C}, std::move(phi));
    Tensor rhs({D, C});
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t c = 0; c < m; ++c) rhs[s * m + c] = d.unit[s] * counit_c(0, c);
    auto t = solve(op, rhs);
    if (!t) return std::nullopt;
    return LinearMap({D}, {C}, t->data());
}

}  // namespace

DrinfeldDouble build_drinfeld_double(const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    DrinfeldDouble dd;
    dd.base = hp;
    dd.dual = dual_of(hp);
    const HopfAlgebra& dual = *dd.dual;
    const auto xp = crossed_product_for(hp, unit_element(h));
    const AlgebraData& x = *xp;
    const Leg X = x.leg();
    const Shape parts{dual.leg(), h.leg()};

    HopfAlgebra::Data data;
    data.name = "D(" + h.name() + ")";
    data.field = h.field();
    data.space = x.space;
    data.basis = x.basis;
    data.mul = x.mul;
    data.unit = x.unit;
    {
        Plan p({"x"});
        p.split("x", {"p", "h"}, parts)
            .apply(dual.comul(), {"p"}, {"p1", "p2"})
            .apply(h.comul(), {"h"}, {"h1", "h2"})
            .merge({"p2", "h1"}, "u", X.space)
            .merge({"p1", "h2"}, "v", X.space);
        data.comul = realize(p, {X}, {X, X});
        Plan e({"x"});
        e.split("x", {"p", "h"}, parts).apply(dual.counit(), {"p"}, {}).apply(h.counit(), {"h"}, {});
        data.counit = realize(e, {X}, {});
    }
    const LinearMap iota_h = embed_algebra(h, x);
    const LinearMap iota_p = embed_dual(h, dual, x);
    const LinearMap swap = realize(Plan({"a", "b"}).output({"b", "a"}), {dual.leg(), dual.leg()},
                                   {dual.leg(), dual.leg()});
    auto t_h = left_convolution_inverse(x, h.comul(), h.counit(), iota_h);
    auto t_p = left_convolution_inverse(x, compose(swap, dual.comul()), dual.counit(), iota_p);
    if (!t_h || !t_p) {
        Report r;
        r.suite = "drinfeld_double:" + h.name();
        r.add(fact("convolution_inverse", "identity has a convolution inverse", false));
        throw AxiomError("D(" + h.name() + ") has no antipode", r);
    }
    {
        // S(p⋈h) = S((p⋈1)(ε⋈h)) = S(ε⋈h) S(p⋈1)
        Plan s({"x"});
        s.split("x", {"p", "h"}, parts)
            .apply(*t_h, {"h"}, {"a"})
            .apply(*t_p, {"p"}, {"b"})
            .apply(x.mul, {"a", "b"}, {"y"});
        data.antipode = realize(s, {X}, {X});
    }
    dd.hopf = HopfAlgebra::create(std::move(data));

    const Tensor canon = canonical_element(h, dual);
    Plan r({"p", "e"});
    r.apply(iota_h, {"e"}, {"u"}).apply(iota_p, {"p"}, {"v"});
    dd.R = r.run(canon);
    Plan ri({"p", "e"});
    ri.apply(h.antipode(), {"e"}, {"s"}).apply(iota_h, {"s"}, {"u"}).apply(iota_p, {"p"}, {"v"});
    dd.R_inv = ri.run(canon);
    return dd;
}

Tensor tensor_product_mul(const AlgebraData& a, const AlgebraData& b, const Tensor& x, const Tensor& y) {
    const Shape legs{a.leg(), b.leg()};
    if (x.legs() != legs || y.legs() != legs) throw ShapeError("tensor_product_mul: operands must live on (A, B)");
    SparseTensor in{{a.leg(), b.leg(), a.leg(), b.leg()}, {}};
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!y[j].is_zero()) in.entries.emplace_back(i * n + j, x[i] * y[j]);
    }
    Plan p({"a1", "b1", "a2", "b2"});
    p.apply(a.mul, {"a1", "a2"}, {"a"}).apply(b.mul, {"b1", "b2"}, {"b"});
    return p.run_sparse(std::move(in)).to_dense();
}

Report check_drinfeld_double(const DrinfeldDouble& d) {
    const HopfAlgebra& D = *d.hopf;
    Report r = check_hopf_axioms(D);
    r.suite = "drinfeld_double:" + d.base->name();
    const AlgebraData a = algebra_of(D, D.name(), D.space().name());
    const Tensor one_one = outer(D.unit(), D.unit());
    const bool inv = tensor_product_mul(a, a, d.R, d.R_inv) == one_one &&
                     tensor_product_mul(a, a, d.R_inv, d.R) == one_one;
    r.add(fact("r_invertible", "R R⁻¹ = R⁻¹ R = 1⊗1", inv));
    {
        Plan lhs({"x"}), rhs({"x"});
        lhs.apply(D.comul(), {"x"}, {"u", "v"})
            .tensor_with(d.R, {"r1", "r2"})
            .apply(D.mul(), {"r1", "u"}, {"a"})
            .apply(D.mul(), {"r2", "v"}, {"b"});
        rhs.apply(D.comul(), {"x"}, {"u", "v"})
            .tensor_with(d.R, {"r1", "r2"})
            .apply(D.mul(), {"v", "r1"}, {"a"})
            .apply(D.mul(), {"u", "r2"}, {"b"});
        r.add(kernel::verify(make_identity("r_intertwines", "RΔ(x) = Δ^cop(x)R", {D.leg()}, {D.basis()}, lhs, rhs)));
    }
    {
        Plan lhs, rhs;
        lhs.tensor_with(d.R, {"r1", "r2"}).apply(D.comul(), {"r1"}, {"a", "b"}).output({"a", "b", "r2"});
        rhs.tensor_with(d.R, {"x1", "y1"})
            .tensor_with(d.R, {"x2", "y2"})
            .apply(D.mul(), {"y1", "y2"}, {"y"});
        r.add(kernel::verify(make_identity("r_comul_left", "(Δ⊗id)R = R₁₃R₂₃", {}, {}, lhs, rhs)));
    }
    {
        Plan lhs, rhs;
        lhs.tensor_with(d.R, {"r1", "r2"}).apply(D.comul(), {"r2"}, {"a", "b"});
        rhs.tensor_with(d.R, {"x1", "y1"})
            .tensor_with(d.R, {"x2", "y2"})
            .apply(D.mul(), {"x1", "x2"}, {"x"})
            .output({"x", "y2", "y1"});
        r.add(kernel::verify(make_identity("r_comul_right", "(id⊗Δ)R = R₁₃R₁₂", {}, {}, lhs, rhs)));
    }
    return r;
}

// ---------------------------------------------------------------- module correspondence

Report algebra_module_report(const AlgebraData& a, const LinearMap& action_in, const std::vector<std::string>& basis) {
    const Leg X = a.leg();
    if (action_in.out().size() != 1) throw ShapeError("module action must have one output leg");
    const Leg M = action_in.out()[0];
    const LinearMap action = action_in.with_legs({M}, {X, M});
    Report r;
    r.suite = "algebra_module:" + a.name;
    Plan lhs({"x", "y", "m"}), rhs({"x", "y", "m"});
    lhs.apply(a.mul, {"x", "y"}, {"xy"}).apply(action, {"xy", "m"}, {"r"});
    rhs.apply(action, {"y", "m"}, {"ym"}).apply(action, {"x", "ym"}, {"r"});
    r.add(kernel::verify(make_identity("module_assoc", "(xy)·m = x·(y·m)", {X, X, M}, {a.basis, a.basis, basis}, lhs,
                                       rhs, {"x", "y", "m"})));
    Plan u({"m"});
    u.tensor_with(a.unit, {"u"}).apply(action, {"u", "m"}, {"r"});
    r.add(kernel::verify(make_identity("module_unit", "1·m = m", {M}, {basis}, u, Plan({"m"}), {"m"})));
    return r;
}

DcpModule yd_to_dcp_module(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    const HopfPtr dp = dual_of(m.hopf);
    auto xp = crossed_product_for(m.hopf, m.component);
    const Leg X = xp->leg(), M = m.leg();
    Plan p({"x", "m"});
    p.split("x", {"p", "h"}, {dp->leg(), h.leg()})
        .apply(m.action, {"h", "m"}, {"a"})
        .apply(m.coaction, {"a"}, {"a0", "a1"})
        .contract_pair("p", "a1", evaluation(h, *dp));
    DcpModule out{m.hopf, m.component, xp, m.name, m.space, m.basis, realize(p, {X, M}, {M})};
    Report r = algebra_module_report(*xp, out.action, m.basis);
    if (!r.passed()) throw AxiomError(m.name + " does not give a module over " + xp->name, r);
    return out;
}

YDModule dcp_module_to_yd(const DcpModule& x) {
    const HopfAlgebra& h = *x.hopf;
    const HopfPtr dp = dual_of(x.hopf);
    const AlgebraData& a = *x.algebra;
    const Leg M = x.action.out()[0];
    const LinearMap action = compose(x.action, kron(embed_algebra(h, a), LinearMap::identity({M})));
    Plan c({"m"});
    c.tensor_with(canonical_element(h, *dp), {"p", "e"})
        .apply(embed_dual(h, *dp, a), {"p"}, {"q"})
        .apply(x.action, {"q", "m"}, {"r"})
        .output({"r", "e"});
    const LinearMap coaction = realize(c, {M}, {M, h.leg()});
    return make_module(x.hopf, x.name, x.basis, x.component, action, coaction, x.space);
}

BicomoduleAlgebra dh_bicomodule_on_A(const DrinfeldDouble& d, const GroupElement& c) {
    const HopfAlgebra& h = *d.base;
    const HopfAlgebra& dual = *d.dual;
    auto ap = crossed_product_for(d.base, c);
    const Leg A = ap->leg(), D = d.hopf->leg();
    const Shape parts{dual.leg(), h.leg()};
    Plan right({"x"});
    right.split("x", {"p", "h"}, parts)
        .apply(dual.comul(), {"p"}, {"p1", "p2"})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(c.beta.map(), {"h2"}, {"b"})
        .merge({"p2", "h1"}, "u", A.space)
        .merge({"p1", "b"}, "v", D.space);
    Plan left({"x"});
    left.split("x", {"p", "h"}, parts)
        .apply(dual.comul(), {"p"}, {"p1", "p2"})
        .apply(h.comul(), {"h"}, {"h1", "h2"})
        .apply(c.alpha.map(), {"h1"}, {"a"})
        .merge({"p2", "a"}, "u", D.space)
        .merge({"p1", "h2"}, "v", A.space);
    return make_bicomodule_algebra(d.hopf, *ap, realize(left, {A}, {D, A}), realize(right, {A}, {A, D}));
}

}  // namespace ydt
