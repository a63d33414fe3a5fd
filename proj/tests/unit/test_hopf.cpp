#include <doctest.h>

#include "corpus.hpp"

using namespace ydt;
using ydt::test::vec;

namespace {

Tensor tensor_of(const HopfAlgebra& h, std::initializer_list<std::tuple<const char*, const char*, const char*, long long>> terms) {
    Tensor t(h.legs(3));
    for (const auto& [a, b, c, s] : terms) {
        std::size_t idx[] = {h.basis_index(a), h.basis_index(b), h.basis_index(c)};
        t[flatten(idx, t.legs())] += Scalar(s);
    }
    return t;
}

}  // namespace

TEST_CASE("every corpus algebra satisfies the Hopf axioms") {
    for (const auto& h : test::corpus()) {
        Report r = check_hopf_axioms(*h);
        INFO(h->name());
        CHECK(r.passed());
        CHECK(r.checks.size() == 14);
    }
}

TEST_CASE("iterated coproduct") {
    auto c2 = cyclic_group_algebra(2);
    CHECK(iterated_coproduct(*c2, 1) == c2->identity());
    Tensor ggg = outer(outer(vec(*c2, {{"g", 1}}), vec(*c2, {{"g", 1}})), vec(*c2, {{"g", 1}}));
    CHECK(iterated_coproduct(*c2, 3).apply(vec(*c2, {{"g", 1}})) == ggg);

    auto sw = sweedler4();
    // x ⊗ 1 ⊗ 1 + g ⊗ x ⊗ 1 + g ⊗ g ⊗ x
    Tensor expected = tensor_of(*sw, {{"x", "1", "1", 1}, {"g", "x", "1", 1}, {"g", "g", "x", 1}});
    CHECK(iterated_coproduct(*sw, 3).apply(vec(*sw, {{"x", 1}})) == expected);
    for (const auto& h : test::corpus()) {
        LinearMap a = compose(kron(h->comul(), h->identity()), h->comul());
        LinearMap b = compose(kron(h->identity(), h->comul()), h->comul());
        CHECK(a == b);
    }
}

TEST_CASE("kernel contraction example: Δ(g) over C2") {
    auto c2 = cyclic_group_algebra(2);
    Plan p({"a"});
    p.apply(c2->comul(), {"a"}, {"x", "y"});
    Tensor gg = outer(vec(*c2, {{"g", 1}}), vec(*c2, {{"g", 1}}));
    CHECK(contract(p, vec(*c2, {{"g", 1}})) == gg);
    CHECK_FALSE(tensor_equal(gg, gg + outer(vec(*c2, {{"1", 1}}), vec(*c2, {{"1", 1}}))));
}

TEST_CASE("builtin examples") {
    auto c2 = cyclic_group_algebra(2);
    CHECK(c2->dim() == 2);
    CHECK(c2->antipode() == c2->identity());

    auto sw = sweedler4();
    // S(x) = -gx and S(gx) = x, so S²(x) = -x and S²(gx) = -gx
    LinearMap s2 = compose(sw->antipode(), sw->antipode());
    CHECK(s2.apply(vec(*sw, {{"x", 1}})) == vec(*sw, {{"x", -1}}));
    CHECK(s2.apply(vec(*sw, {{"gx", 1}})) == vec(*sw, {{"gx", -1}}));
    CHECK(s2.apply(vec(*sw, {{"g", 1}})) == vec(*sw, {{"g", 1}}));
    CHECK_FALSE(s2 == sw->identity());
    CHECK_THROWS_AS(sweedler4(Field::prime(2)), InputError);
    CHECK(check_hopf_axioms(*sweedler4(Field::prime(7))).passed());
}

TEST_CASE("non-group tables are rejected") {
    CHECK_THROWS_AS(group_algebra("bad", {{0, 1}, {1, 1}}, {"1", "a"}), InputError);
    CHECK_THROWS_AS(group_algebra("bad", {{0, 0}, {0, 0}}, {"1", "a"}), InputError);
}

TEST_CASE("dual of C2 is isomorphic to C2 via the character basis") {
    auto c2 = cyclic_group_algebra(2);
    auto d = dual_of(c2);
    CHECK(check_hopf_axioms(*d).passed());
    // characters of C2: χ± = e^1 ± e^g; they are group-like in the dual and multiply like C2
    Tensor chi_plus(Shape{d->leg()}, {1, 1}), chi_minus(Shape{d->leg()}, {1, -1});
    CHECK(d->comul().apply(chi_minus) == outer(chi_minus, chi_minus));
    CHECK(d->mul().apply(outer(chi_minus, chi_minus)) == chi_plus);
    CHECK(d->unit() == chi_plus);
    LinearMap iso({d->leg()}, {c2->leg()}, {1, 1, 1, -1});   // 1 ↦ χ+, g ↦ χ-
    CHECK(compose(iso, c2->mul()) == compose(d->mul(), kron(iso, iso)));
    CHECK(compose(kron(iso, iso), c2->comul()) == compose(d->comul(), iso));
    CHECK(compose(d->counit(), iso) == c2->counit());
}

TEST_CASE("double dual is the original algebra") {
    for (const auto& h : test::corpus()) {
        auto dd = dual_of(dual_of(h));
        const Shape one{h->leg()};
        CHECK(dd->mul().dense() == h->mul().dense());
        CHECK(dd->comul().dense() == h->comul().dense());
        CHECK(dd->antipode().dense() == h->antipode().dense());
        CHECK(dd->counit().dense() == h->counit().dense());
        CHECK(dd->unit().data() == h->unit().data());
    }
}

TEST_CASE("corrupted antipode fails at x") {
    auto sw = sweedler4();
    HopfAlgebra::Data d = sw->data();
    d.antipode = sw->identity();
    d.antipode_inv.reset();
    auto bad = HopfAlgebra::create(d);
    Report r = check_hopf_axioms(*bad);
    const CheckResult* c = r.find("antipode_left");
    REQUIRE(c);
    CHECK_FALSE(c->passed);
    CHECK(c->counterexample_text == "(x)");
    CHECK_THROWS_AS(HopfAlgebra::validated(d), AxiomError);
}

TEST_CASE("automorphism checks") {
    auto sw = sweedler4();
    CHECK(check_automorphism(*sw, sw->identity()));
    LinearMap scale({sw->leg()}, {sw->leg()}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2});
    CHECK(check_automorphism(*sw, scale));
    LinearMap swap_gx({sw->leg()}, {sw->leg()}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    CHECK_FALSE(check_automorphism(*sw, swap_gx));
    CHECK_FALSE(check_automorphism(*sw, LinearMap::zero({sw->leg()}, {sw->leg()})));

    auto c3 = cyclic_group_algebra(3);
    CHECK(check_automorphism(*c3, permutation_map(*c3, {0, 2, 1})));
    CHECK_FALSE(check_automorphism(*c3, permutation_map(*c3, {1, 0, 2})));
}

TEST_CASE("standard automorphisms") {
    auto c2 = cyclic_group_algebra(2);
    auto a = standard_automorphisms(*c2, 3);
    REQUIRE(a.size() == 1);
    CHECK(a[0].name() == "id");

    auto sw = sweedler4();
    auto s1 = standard_automorphisms(*sw, 1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[1].name() == "S^2");
    CHECK(s1[1].map() == LinearMap({sw->leg()}, {sw->leg()}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1}));
    CHECK(standard_automorphisms(*sw, 2).size() == 2);
    CHECK(s1[1].inverse().name() == "S^2");
    CHECK((s1[1] * s1[1]).name() == "id");

    auto c3 = cyclic_group_algebra(3);
    auto s3 = standard_automorphisms(*c3, 1);
    REQUIRE(s3.size() == 2);
    CHECK(s3[1].name() == "inv");
    CHECK(standard_automorphisms(*symmetric_group_s3(), 1).size() == 3);

    for (const auto& h : test::corpus())
        for (const auto& t : standard_automorphisms(*h, 2))
            CHECK(compose(t.map(), h->antipode()) == compose(h->antipode(), t.map()));
}

TEST_CASE("regular actions") {
    auto c2 = cyclic_group_algebra(2);
    auto d = dual_of(c2);
    Tensor e1 = vec(*d, {{"e^1", 1}}), eg = vec(*d, {{"e^g", 1}});
    Tensor g = vec(*c2, {{"g", 1}}), one = c2->unit();
    CHECK(regular_action(Side::left, *c2, *d, g, e1) == eg);
    CHECK(regular_action(Side::right, *c2, *d, g, eg) == e1);
    CHECK(regular_action(Side::left, *c2, *d, one, eg) == eg);
    CHECK(regular_action(Side::right, *c2, *d, one, eg) == eg);
}

TEST_CASE("harpoons are left and right actions") {
    for (const auto& hp : test::corpus()) {
        const HopfAlgebra& h = *hp;
        auto d = dual_of(hp);
        LinearMap L = harpoon_left(h, *d), R = harpoon_right(h, *d);
        Plan a({"h", "k", "p"}), b({"h", "k", "p"});
        a.apply(h.mul(), {"h", "k"}, {"hk"}).apply(L, {"hk", "p"}, {"r"});
        b.apply(L, {"k", "p"}, {"kp"}).apply(L, {"h", "kp"}, {"r"});
        Identity left{"left", "(hk)⇀p = h⇀(k⇀p)", {h.leg(), h.leg(), d->leg()}, {}, a, b, {}};
        CHECK(kernel::verify(left).passed);
        Plan c({"p", "h", "k"}), e({"p", "h", "k"});
        c.apply(h.mul(), {"h", "k"}, {"hk"}).apply(R, {"p", "hk"}, {"r"});
        e.apply(R, {"p", "h"}, {"ph"}).apply(R, {"ph", "k"}, {"r"});
        Identity right{"right", "p↼(hk) = (p↼h)↼k", {d->leg(), h.leg(), h.leg()}, {}, c, e, {}};
        CHECK(kernel::verify(right).passed);
    }
}

TEST_CASE("dual basis pairing") {
    for (const auto& hp : test::corpus()) {
        auto d = dual_of(hp);
        LinearMap ev = evaluation(*hp, *d);
        for (std::size_t i = 0; i < hp->dim(); ++i)
            for (std::size_t j = 0; j < hp->dim(); ++j)
                CHECK(ev(0, i * hp->dim() + j) == Scalar(i == j ? 1 : 0));
    }
}
