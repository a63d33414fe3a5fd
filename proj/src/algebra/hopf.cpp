#include "ydt/hopf.hpp"

#include <algorithm>
#include <array>
#include <regex>

namespace ydt {

namespace {

LinearMap coerce(const LinearMap& m, Field field, const Shape& out, const Shape& in, const char* what) {
    if (volume(m.out()) != volume(out) || volume(m.in()) != volume(in) || m.out().size() != out.size() ||
        m.in().size() != in.size())
        throw ShapeError(std::string(what) + " has shape " + describe(m.out()) + " <- " + describe(m.in()) +
                         ", expected " + describe(out) + " <- " + describe(in));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (m.out()[i].dim != out[i].dim) throw ShapeError(std::string(what) + ": output leg dimension mismatch");
    for (std::size_t i = 0; i < in.size(); ++i)
        if (m.in()[i].dim != in[i].dim) throw ShapeError(std::string(what) + ": input leg dimension mismatch");
    std::vector<Scalar> dense = m.dense();
    for (auto& x : dense) x = x.in_field(field);
    return LinearMap(out, in, std::move(dense));
}

Tensor coerce(const Tensor& t, Field field, const Shape& legs, const char* what) {
    if (t.size() != volume(legs)) throw ShapeError(std::string(what) + " has the wrong dimension");
    std::vector<Scalar> data = t.data();
    for (auto& x : data) x = x.in_field(field);
    return Tensor(legs, std::move(data));
}

Identity identity(std::string id, std::string anchor, const HopfAlgebra& h, std::size_t legs, Plan lhs, Plan rhs) {
    return Identity{std::move(id), std::move(anchor), h.legs(legs), labels_for(h, legs), std::move(lhs),
                    std::move(rhs), {}};
}

const std::regex kPowerName(R"(S\^(-?\d+))");

std::optional<int> antipode_exponent(const std::string& name) {
    if (name == "id") return 0;
    std::smatch m;
    if (std::regex_match(name, m, kPowerName)) return std::stoi(m[1]);
    return std::nullopt;
}

std::string power_name(int k) { return k == 0 ? "id" : "S^" + std::to_string(k); }

}  // namespace

// ---------------------------------------------------------------- HopfAlgebra

HopfAlgebra::HopfAlgebra(Data data) : d_(std::move(data)), space_(d_.space) {}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::create(Data d) {
    if (d.basis.empty()) throw ShapeError("Hopf algebra needs a nonempty basis");
    const std::size_t n = d.basis.size();
    const Leg l{SpaceId(d.space), n};
    const Shape one{l}, two{l, l};
    d.mul = coerce(d.mul, d.field, one, two, "multiplication");
    d.comul = coerce(d.comul, d.field, two, one, "comultiplication");
    d.counit = coerce(d.counit, d.field, {}, one, "counit");
    d.antipode = coerce(d.antipode, d.field, one, one, "antipode");
    d.unit = coerce(d.unit, d.field, one, "unit");
    if (d.antipode_inv) {
        d.antipode_inv = coerce(*d.antipode_inv, d.field, one, one, "inverse antipode");
    } else {
        auto inv = try_inverse(d.antipode);
        if (!inv) throw InputError("antipode of " + d.name + " is not invertible");
        d.antipode_inv = *inv;
    }
    for (auto& a : d.automorphisms) a.map = coerce(a.map, d.field, one, one, "automorphism");
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(d)));
}

std::shared_ptr<const HopfAlgebra> HopfAlgebra::validated(Data data) {
    auto h = create(std::move(data));
    Report r = check_hopf_axioms(*h);
    if (const CheckResult* bad = r.first_failure())
        throw AxiomError("Hopf axiom '" + bad->id + "' (" + bad->anchor + ") fails at " + bad->counterexample_text,
                         std::move(r));
    return h;
}

Tensor HopfAlgebra::basis_vector(std::size_t i) const {
    Tensor t(Shape{leg()});
    t[i] = Scalar(1).in_field(field());
    return t;
}

std::size_t HopfAlgebra::basis_index(const std::string& label) const {
    auto it = std::find(d_.basis.begin(), d_.basis.end(), label);
    if (it == d_.basis.end()) throw InputError("unknown basis label '" + label + "' in " + d_.name);
    return static_cast<std::size_t>(it - d_.basis.begin());
}

const LinearMap& HopfAlgebra::iterated_coproduct(std::size_t n) const {
    if (n == 0) throw InputError("iterated coproduct needs at least one output leg");
    std::lock_guard lock(cache_mutex_);
    if (coproducts_.size() < 2) {
        coproducts_.clear();
        coproducts_.push_back(std::make_unique<LinearMap>(identity()));
        coproducts_.push_back(std::make_unique<LinearMap>(comul()));
    }
    if (n >= 3 && !coassoc_checked_) {
        LinearMap left = compose(kron(comul(), identity()), comul());
        LinearMap right = compose(kron(identity(), comul()), comul());
        if (!(left == right)) {
            Report r;
            r.add(compare_maps("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", left, right, labels_for(*this, 1)));
            throw AxiomError("iterated coproduct of a non-coassociative comultiplication", r);
        }
        coassoc_checked_ = true;
    }
    while (coproducts_.size() < n) {
        const LinearMap& prev = *coproducts_.back();
        LinearMap ids = LinearMap::identity(legs(coproducts_.size() - 1));
        coproducts_.push_back(std::make_unique<LinearMap>(compose(kron(ids, comul()), prev)));
    }
    return *coproducts_[n - 1];
}

LinearMap iterated_coproduct(const HopfAlgebra& h, std::size_t n) { return h.iterated_coproduct(n); }

std::vector<std::vector<std::string>> labels_for(const HopfAlgebra& h, std::size_t legs) {
    return std::vector<std::vector<std::string>>(legs, h.basis());
}

// ---------------------------------------------------------------- builtins

LinearMap permutation_map(const HopfAlgebra& h, const std::vector<std::size_t>& perm) {
    const std::size_t n = h.dim();
    if (perm.size() != n) throw InputError("permutation has the wrong length");
    std::vector<Scalar> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n) throw InputError("permutation entry out of range");
        dense[perm[i] * n + i] = 1;
    }
    return LinearMap({h.leg()}, {h.leg()}, std::move(dense));
}

HopfPtr group_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                      std::vector<std::string> labels, Field field,
                      const std::vector<std::pair<std::string, std::vector<std::size_t>>>& group_auts) {
    const std::size_t n = table.size();
    if (n == 0 || labels.size() != n) throw InputError("group table and labels must be nonempty and agree");
    for (const auto& row : table) {
        if (row.size() != n) throw InputError("group table is not square");
        for (auto v : row)
            if (v >= n) throw InputError("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("non-group multiplication table: not associative at (" + labels[a] + ", " +
                                     labels[b] + ", " + labels[c] + ")");
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool unit = true;
        for (std::size_t b = 0; b < n; ++b) unit = unit && table[a][b] == b && table[b][a] == b;
        if (unit) e = a;
    }
    if (e == n) throw InputError("non-group multiplication table: no identity element");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) inv[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inv[a] == n) throw InputError("non-group multiplication table: " + labels[a] + " has no inverse");

    const Leg l = leg("H", n);
    std::vector<Scalar> mul(n * n * n), comul(n * n * n), counit(n, Scalar(1)), anti(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mul[table[a][b] * n * n + a * n + b] = 1;
        comul[(a * n + a) * n + a] = 1;
        anti[inv[a] * n + a] = 1;
    }
    HopfAlgebra::Data d;
    d.name = name;
    d.field = field;
    d.basis = std::move(labels);
    d.mul = LinearMap({l}, {l, l}, std::move(mul));
    d.comul = LinearMap({l, l}, {l}, std::move(comul));
    d.counit = LinearMap({}, {l}, std::move(counit));
    d.antipode = LinearMap({l}, {l}, std::move(anti));
    d.unit = Tensor::basis({l}, std::vector<std::size_t>{e});
    auto base = HopfAlgebra::create(d);
    for (const auto& [aut_name, perm] : group_auts) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (perm.size() != n || perm[table[a][b]] != table[perm[a]][perm[b]])
                    throw InputError("'" + aut_name + "' is not a group automorphism");
        d.automorphisms.push_back({aut_name, permutation_map(*base, perm)});
    }
    return HopfAlgebra::validated(std::move(d));
}

HopfPtr cyclic_group_algebra(std::size_t n, Field field) {
    if (n == 0) throw InputError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    std::vector<std::pair<std::string, std::vector<std::size_t>>> auts;
    if (n > 2) {
        std::vector<std::size_t> inv(n);
        for (std::size_t i = 0; i < n; ++i) inv[i] = (n - i) % n;
        auts.emplace_back("inv", inv);
    }
    return group_algebra("C" + std::to_string(n), table, labels, field, auts);
}

HopfPtr symmetric_group_s3(Field field) {
    using P = std::array<int, 3>;
    const std::vector<P> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels{"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto index = [&](const P& p) {
        return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    };
    auto compose_p = [](const P& s, const P& t) {   // (s t)(x) = s(t(x))
        return P{s[t[0]], s[t[1]], s[t[2]]};
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) table[a][b] = index(compose_p(elems[a], elems[b]));
    auto conj = [&](std::size_t c) {
        std::size_t cinv = 0;
        while (table[c][cinv] != 0) ++cinv;
        std::vector<std::size_t> perm(6);
        for (std::size_t a = 0; a < 6; ++a) perm[a] = table[table[c][a]][cinv];
        return perm;
    };
    return group_algebra("S3", table, labels, field, {{"conj(12)", conj(1)}, {"conj(123)", conj(4)}});
}

HopfPtr sweedler4(Field field) {
    if (field.p == 2) throw InputError("sweedler4 is not defined in characteristic 2");
    const Leg l = leg("H", 4);
    enum { one, g, x, gx };
    std::vector<Scalar> mul(64), comul(64), anti(16);
    auto set_mul = [&](int a, int b, int c, int s) { mul[c * 16 + a * 4 + b] = s; };
    for (int b = 0; b < 4; ++b) set_mul(one, b, b, 1);
    set_mul(g, one, g, 1);
    set_mul(g, g, one, 1);
    set_mul(g, x, gx, 1);
    set_mul(g, gx, x, 1);
    set_mul(x, one, x, 1);
    set_mul(x, g, gx, -1);
    set_mul(gx, one, gx, 1);
    set_mul(gx, g, x, -1);
    auto set_comul = [&](int a, int b, int c, int s) { comul[(b * 4 + c) * 4 + a] = s; };
    set_comul(one, one, one, 1);
    set_comul(g, g, g, 1);
    set_comul(x, x, one, 1);
    set_comul(x, g, x, 1);
    set_comul(gx, gx, g, 1);
    set_comul(gx, one, gx, 1);
    anti[one * 4 + one] = 1;
    anti[g * 4 + g] = 1;
    anti[gx * 4 + x] = -1;
    anti[x * 4 + gx] = 1;
    HopfAlgebra::Data d;
    d.name = "sweedler4";
    d.field = field;
    d.basis = {"1", "g", "x", "gx"};
    d.mul = LinearMap({l}, {l, l}, std::move(mul));
    d.comul = LinearMap({l, l}, {l}, std::move(comul));
    d.counit = LinearMap({}, {l}, {1, 1, 0, 0});
    d.antipode = LinearMap({l}, {l}, std::move(anti));
    d.unit = Tensor::basis({l}, std::vector<std::size_t>{0});
    return HopfAlgebra::validated(std::move(d));
}

HopfPtr dual_of(const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    const std::size_t n = h.dim();
    HopfAlgebra::Data d;
    d.name = "dual_of(" + h.name() + ")";
    d.field = h.field();
    d.space = h.space().name() + "*";
    for (const auto& b : h.basis()) d.basis.push_back("e^" + b);
    const Leg l = leg(d.space, n);
    std::vector<Scalar> mul(n * n * n), comul(n * n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t ij = 0; ij < n * n; ++ij) {
            mul[k * n * n + ij] = h.comul()(ij, k);
            comul[ij * n + k] = h.mul()(k, ij);
        }
    d.mul = LinearMap({l}, {l, l}, std::move(mul));
    d.comul = LinearMap({l, l}, {l}, std::move(comul));
    d.unit = Tensor({l}, h.counit().dense());
    d.counit = LinearMap({}, {l}, h.unit().data());
    d.antipode = transpose(h.antipode()).with_legs({l}, {l});
    d.antipode_inv = transpose(h.antipode_inv()).with_legs({l}, {l});
    return HopfAlgebra::create(std::move(d));
}

// ---------------------------------------------------------------- axioms

Report check_hopf_axioms(const HopfAlgebra& h) {
    const LinearMap& m = h.mul();
    const LinearMap& D = h.comul();
    const LinearMap& e = h.counit();
    const LinearMap& S = h.antipode();
    const LinearMap& Si = h.antipode_inv();
    const Tensor& u = h.unit();

    std::vector<Identity> ids;
    {
        Plan l({"a", "b", "c"}), r({"a", "b", "c"});
        l.apply(m, {"a", "b"}, {"ab"}).apply(m, {"ab", "c"}, {"x"});
        r.apply(m, {"b", "c"}, {"bc"}).apply(m, {"a", "bc"}, {"x"});
        ids.push_back(identity("associativity", "(ab)c = a(bc)", h, 3, l, r));
    }
    {
        Plan l({"a"});
        l.tensor_with(u, {"u"}).apply(m, {"u", "a"}, {"x"});
        ids.push_back(identity("unit_left", "1a = a", h, 1, l, Plan({"a"})));
        Plan r({"a"});
        r.tensor_with(u, {"u"}).apply(m, {"a", "u"}, {"x"});
        ids.push_back(identity("unit_right", "a1 = a", h, 1, r, Plan({"a"})));
    }
    {
        Plan l({"a"}), r({"a"});
        l.apply(D, {"a"}, {"x", "y"}).apply(D, {"x"}, {"x1", "x2"}).output({"x1", "x2", "y"});
        r.apply(D, {"a"}, {"x", "y"}).apply(D, {"y"}, {"y1", "y2"}).output({"x", "y1", "y2"});
        ids.push_back(identity("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", h, 1, l, r));
    }
    {
        Plan l({"a"}), r({"a"});
        l.apply(D, {"a"}, {"x", "y"}).apply(e, {"x"}, {});
        r.apply(D, {"a"}, {"x", "y"}).apply(e, {"y"}, {});
        ids.push_back(identity("counit_left", "(ε⊗id)Δ = id", h, 1, l, Plan({"a"})));
        ids.push_back(identity("counit_right", "(id⊗ε)Δ = id", h, 1, r, Plan({"a"})));
    }
    {
        Plan l({"a", "b"}), r({"a", "b"});
        l.apply(m, {"a", "b"}, {"p"}).apply(D, {"p"}, {"x", "y"});
        r.apply(D, {"a"}, {"a1", "a2"})
            .apply(D, {"b"}, {"b1", "b2"})
            .apply(m, {"a1", "b1"}, {"x"})
            .apply(m, {"a2", "b2"}, {"y"});
        ids.push_back(identity("bialgebra_comul", "Δ(ab) = Δ(a)Δ(b)", h, 2, l, r));
        Plan el({"a", "b"}), er({"a", "b"});
        el.apply(m, {"a", "b"}, {"p"}).apply(e, {"p"}, {});
        er.apply(e, {"a"}, {}).apply(e, {"b"}, {});
        ids.push_back(identity("bialgebra_counit", "ε(ab) = ε(a)ε(b)", h, 2, el, er));
    }
    {
        Plan l, r;
        l.tensor_with(u, {"u"}).apply(D, {"u"}, {"x", "y"});
        r.tensor_with(u, {"x"}).tensor_with(u, {"y"});
        ids.push_back(identity("comul_unit", "Δ(1) = 1⊗1", h, 0, l, r));
        Plan el;
        el.tensor_with(u, {"u"}).apply(e, {"u"}, {});
        ids.push_back(identity("counit_unit", "ε(1) = 1", h, 0, el, Plan()));
    }
    {
        Plan rhs({"a"});
        rhs.apply(e, {"a"}, {}).tensor_with(u, {"x"});
        Plan l({"a"}), r({"a"});
        l.apply(D, {"a"}, {"x", "y"}).apply(S, {"x"}, {"s"}).apply(m, {"s", "y"}, {"z"});
        r.apply(D, {"a"}, {"x", "y"}).apply(S, {"y"}, {"s"}).apply(m, {"x", "s"}, {"z"});
        ids.push_back(identity("antipode_left", "m(S⊗id)Δ = ηε", h, 1, l, rhs));
        ids.push_back(identity("antipode_right", "m(id⊗S)Δ = ηε", h, 1, r, rhs));
    }
    {
        Plan l({"a"}), r({"a"});
        l.apply(S, {"a"}, {"s"}).apply(Si, {"s"}, {"x"});
        r.apply(Si, {"a"}, {"s"}).apply(S, {"s"}, {"x"});
        ids.push_back(identity("antipode_inverse_left", "S⁻¹S = id", h, 1, l, Plan({"a"})));
        ids.push_back(identity("antipode_inverse_right", "SS⁻¹ = id", h, 1, r, Plan({"a"})));
    }
    Report report;
    report.suite = "hopf:" + h.name();
    for (const auto& id : ids) report.add(kernel::verify(id));
    return report;
}

// ---------------------------------------------------------------- automorphisms

HopfAutomorphism::HopfAutomorphism(std::string name, LinearMap map)
    : name_(std::move(name)), map_(std::move(map)), inv_(ydt::inverse(map_)) {}

HopfAutomorphism::HopfAutomorphism(std::string name, LinearMap map, LinearMap inverse)
    : name_(std::move(name)), map_(std::move(map)), inv_(std::move(inverse)) {}

HopfAutomorphism HopfAutomorphism::identity(const HopfAlgebra& h) {
    return HopfAutomorphism("id", h.identity(), h.identity());
}

bool HopfAutomorphism::is_identity() const { return map_ == LinearMap::identity(map_.in()); }

HopfAutomorphism HopfAutomorphism::inverse() const {
    std::string name;
    if (map_ == inv_) {
        name = name_;
    } else if (auto k = antipode_exponent(name_)) {
        name = power_name(-*k);
    } else {
        name = "(" + name_ + ")^-1";
    }
    return HopfAutomorphism(std::move(name), inv_, map_);
}

HopfAutomorphism operator*(const HopfAutomorphism& a, const HopfAutomorphism& b) {
    LinearMap map = compose(a.map_, b.map_);
    LinearMap inv = compose(b.inv_, a.inv_);
    std::string name;
    if (map == LinearMap::identity(map.in())) {
        name = "id";
    } else if (a.is_identity()) {
        name = b.name_;
    } else if (b.is_identity()) {
        name = a.name_;
    } else if (auto ka = antipode_exponent(a.name_), kb = antipode_exponent(b.name_); ka && kb) {
        name = power_name(*ka + *kb);
    } else {
        name = a.name_ + "∘" + b.name_;
    }
    return HopfAutomorphism(std::move(name), std::move(map), std::move(inv));
}

Report automorphism_report(const HopfAlgebra& h, const LinearMap& theta, const std::string& name) {
    Report r;
    r.suite = "automorphism:" + name;
    const Shape one{h.leg()};
    if (theta.out().size() != 1 || theta.in().size() != 1 || theta.rows() != h.dim() || theta.cols() != h.dim())
        throw ShapeError("automorphism " + name + " is not a " + std::to_string(h.dim()) + "x" +
                         std::to_string(h.dim()) + " matrix");
    const LinearMap t = theta.with_legs(one, one);
    const bool invertible = try_inverse(t).has_value();
    r.add(fact("invertible", "θ bijective", invertible));
    const auto l1 = labels_for(h, 1);
    const auto l2 = labels_for(h, 2);
    r.add(compare_maps("mul", "θ(ab) = θ(a)θ(b)", compose(t, h.mul()), compose(h.mul(), kron(t, t)), l2));
    r.add(compare_maps("unit", "θ(1) = 1", compose(t, LinearMap::from_vector(h.unit())),
                       LinearMap::from_vector(h.unit()), {}));
    r.add(compare_maps("comul", "Δθ = (θ⊗θ)Δ", compose(h.comul(), t), compose(kron(t, t), h.comul()), l1));
    r.add(compare_maps("counit", "εθ = ε", compose(h.counit(), t), h.counit(), l1));
    r.add(compare_maps("antipode", "θS = Sθ", compose(t, h.antipode()), compose(h.antipode(), t), l1));
    return r;
}

bool check_automorphism(const HopfAlgebra& h, const LinearMap& theta) {
    return automorphism_report(h, theta, "θ").passed();
}

LinearMap antipode_pow(const HopfAlgebra& h, int k) {
    LinearMap map = h.identity();
    const LinearMap& step = k >= 0 ? h.antipode() : h.antipode_inv();
    for (int i = 0; i < std::abs(k); ++i) map = compose(step, map);
    return map;
}

HopfAutomorphism antipode_power(const HopfAlgebra& h, int l) {
    LinearMap map = antipode_pow(h, 2 * l);
    return HopfAutomorphism(map == h.identity() ? "id" : power_name(2 * l), map, antipode_pow(h, -2 * l));
}

std::vector<HopfAutomorphism> standard_automorphisms(const HopfAlgebra& h, int l_max) {
    if (l_max < 0) throw InputError("l_max must be nonnegative");
    std::vector<HopfAutomorphism> out;
    auto add = [&](HopfAutomorphism a) {
        for (const auto& b : out)
            if (b == a) return;
        Report r = automorphism_report(h, a.map(), a.name());
        if (const CheckResult* bad = r.first_failure())
            throw AxiomError("candidate automorphism " + a.name() + " fails '" + bad->id + "' (" + bad->anchor + ")",
                             r);
        out.push_back(std::move(a));
    };
    for (int l = 0; l <= l_max; ++l) add(antipode_power(h, l));
    for (const auto& extra : h.extra_automorphisms()) {
        auto inv = try_inverse(extra.map);
        if (!inv) throw AxiomError("automorphism " + extra.name + " is singular", automorphism_report(h, extra.map, extra.name));
        add(HopfAutomorphism(extra.name, extra.map, *inv));
    }
    return out;
}

// ---------------------------------------------------------------- duality

LinearMap harpoon_left(const HopfAlgebra& h, const HopfAlgebra& dual) {
    const std::size_t n = h.dim();
    std::vector<Scalar> dense(n * n * n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < n; ++k) dense[l * n * n + a * n + k] = h.mul()(k, l * n + a);
    return LinearMap({dual.leg()}, {h.leg(), dual.leg()}, std::move(dense));
}

LinearMap harpoon_right(const HopfAlgebra& h, const HopfAlgebra& dual) {
    const std::size_t n = h.dim();
    std::vector<Scalar> dense(n * n * n);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a) dense[l * n * n + k * n + a] = h.mul()(k, a * n + l);
    return LinearMap({dual.leg()}, {dual.leg(), h.leg()}, std::move(dense));
}

LinearMap evaluation(const HopfAlgebra& h, const HopfAlgebra& dual) {
    const std::size_t n = h.dim();
    std::vector<Scalar> dense(n * n);
    for (std::size_t i = 0; i < n; ++i) dense[i * n + i] = Scalar(1).in_field(h.field());
    return LinearMap({}, {dual.leg(), h.leg()}, std::move(dense));
}

Tensor regular_action(Side side, const HopfAlgebra& h, const HopfAlgebra& dual, const Tensor& elem, const Tensor& p) {
    if (side == Side::left) return harpoon_left(h, dual).apply(outer(elem, p));
    return harpoon_right(h, dual).apply(outer(p, elem));
}

LinearMap dual_map(const LinearMap& theta, const HopfAlgebra& dual) {
    return transpose(theta).with_legs({dual.leg()}, {dual.leg()});
}

}  // namespace ydt
