#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "ydt/tcat.hpp"

using namespace ydt;
using ydt::test::vec;

namespace {

std::vector<YDModule> modules_over(const HopfPtr& h, const std::vector<HopfAutomorphism>& auts) {
    std::vector<YDModule> out{trivial_module(h)};
    for (const auto& a : auts)
        for (const auto& b : auts) out.push_back(build_H_alpha_beta(h, a, b));
    return out;
}

Tensor basis2(const YDModule& m, const YDModule& n, std::size_t i, std::size_t j) {
    return Tensor::basis({m.leg(), n.leg()}, std::vector<std::size_t>{i, j});
}

}  // namespace

TEST_CASE("group law") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    const GroupElement e = unit_element(*sw);
    const GroupElement p{auts[1], auts[0]};
    CHECK(g_mul(p, e) == p);
    CHECK(g_mul(e, p) == p);
    CHECK(g_mul(p, g_inv(p)) == e);
    CHECK(g_mul(g_inv(p), p) == e);

    auto c3 = cyclic_group_algebra(3);
    auto a3 = standard_automorphisms(*c3, 1);
    const GroupElement q{a3[1], a3[0]};
    CHECK(g_mul(q, q) == unit_element(*c3));

    std::vector<GroupElement> all;
    for (const auto& a : a3)
        for (const auto& b : a3) all.push_back({a, b});
    CHECK(check_group_axioms(*c3, all).passed());
    auto s3 = symmetric_group_s3();
    auto as = standard_automorphisms(*s3, 1);
    std::vector<GroupElement> gens{{as[1], as[0]}, {as[0], as[2]}};
    auto sub = generated_subgroup(*s3, gens);
    // α ranges over {id, conj(12)}; the (id, β) part is the normal closure of conj(123), of order 3
    CHECK(sub.size() == 6);
    CHECK(check_group_axioms(*s3, sub).passed());
}

TEST_CASE("tensor products") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    auto mods = modules_over(sw, auts);
    const YDModule& k = mods[0];
    for (const auto& m : mods) {
        CHECK(same_structure(tensor_module(m, k), m));
        CHECK(same_structure(tensor_module(k, m), m));
    }
    YDModule a = build_H_alpha_beta(sw, auts[1], auts[0]);
    YDModule y = build_H_alpha_beta(sw, auts[0], auts[0]);
    YDModule ay = tensor_module(a, y);
    CHECK(ay.component == GroupElement{auts[1], auts[0]});
    CHECK(ay.dim() == 16);
    for (const auto& m : mods)
        for (const auto& n : mods) {
            YDModule t = tensor_module(m, n);
            CHECK(t.component == g_mul(m.component, n.component));
            CHECK(check_yd_compat(t).passed());
        }
    for (const auto& m : {a, y})
        for (const auto& n : {a, y})
            for (const auto& p : {a, y})
                CHECK(same_structure(tensor_module(tensor_module(m, n), p), tensor_module(m, tensor_module(n, p))));
}

TEST_CASE("conjugation") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    auto mods = modules_over(sw, auts);
    std::vector<GroupElement> ps;
    for (const auto& a : auts)
        for (const auto& b : auts) ps.push_back({a, b});
    for (const auto& n : mods) {
        CHECK(same_structure(conjugate_module(unit_element(*sw), n), n));
        for (const auto& p : ps) {
            YDModule c = conjugate_module(p, n);
            CHECK(c.component == g_mul(g_mul(p, n.component), g_inv(p)));
            CHECK(check_yd_compat(c).passed());
            for (const auto& q : ps)
                CHECK(same_structure(conjugate_module(g_mul(p, q), n), conjugate_module(p, conjugate_module(q, n))));
            for (const auto& m : mods)
                CHECK(same_structure(conjugate_module(p, tensor_module(m, n)),
                                     tensor_module(conjugate_module(p, m), conjugate_module(p, n))));
        }
    }
}

TEST_CASE("conjugation acts as the identity on morphisms") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    PairInInvolution pii{sw->counit(), vec(*sw, {{"g", 1}}), {auts[1], auts[0]}, "(ε,g)"};
    YDModule v = build_pii_module(sw, pii, 3);
    LinearMap phi({v.leg()}, {v.leg()}, {1, 2, 0, -1, 3, 5, 0, 0, 7});
    REQUIRE(check_morphism(v, v, phi));
    for (const auto& a : auts)
        for (const auto& b : auts) {
            YDModule c = conjugate_module({a, b}, v);
            CHECK(check_morphism(c, c, phi));
        }
}

TEST_CASE("braiding examples") {
    auto c2 = cyclic_group_algebra(2);
    auto id = HopfAutomorphism::identity(*c2);
    YDModule m = build_H_alpha_beta(c2, id, id);
    LinearMap c = braiding_map(m, m);
    // c(1⊗g) = g_(0) ⊗ g_(1)·1 = g ⊗ g1g⁻¹ = g ⊗ 1
    CHECK(c.apply(basis2(m, m, 0, 1)) == basis2(m, m, 1, 0));

    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    YDModule k = trivial_module(sw);
    for (const auto& x : modules_over(sw, auts)) {
        LinearMap ck = braiding_map(x, k);
        for (std::size_t i = 0; i < x.dim(); ++i)
            CHECK(ck.apply(basis2(x, k, i, 0)) == basis2(k, x, 0, i));
    }
}

TEST_CASE("braiding is a mutually inverse pair of morphisms, invariant under conjugation") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    auto mods = modules_over(sw, auts);
    for (const auto& m : mods)
        for (const auto& n : mods) {
            INFO(m.name << " " << n.name);
            CHECK(braiding_report(m, n).passed());
            for (const auto& a : auts)
                for (const auto& b : auts) {
                    GroupElement p{a, b};
                    CHECK(braiding_map(conjugate_module(p, m), conjugate_module(p, n)).dense() ==
                          braiding_map(m, n).dense());
                }
        }
}

TEST_CASE("hexagons over sweedler4") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    auto mods = modules_over(sw, auts);
    int triples = 0;
    for (const auto& m : mods)
        for (const auto& n : mods)
            for (const auto& p : mods) {
                Report r = verify_hexagons(m, n, p);
                INFO(r.suite);
                CHECK(r.passed());
                ++triples;
            }
    CHECK(triples >= 27);
}

TEST_CASE("hexagons over S3 with group automorphisms") {
    auto s3 = symmetric_group_s3();
    auto auts = standard_automorphisms(*s3, 1);
    std::vector<HopfAutomorphism> some{auts[0], auts[1]};
    auto mods = modules_over(s3, some);
    for (std::size_t i = 1; i < mods.size(); ++i)
        for (std::size_t j = 1; j < mods.size(); ++j)
            for (std::size_t l = 1; l < mods.size(); ++l) CHECK(verify_hexagons(mods[i], mods[j], mods[l]).passed());
}

TEST_CASE("duals") {
    auto sw = sweedler4();
    auto auts = standard_automorphisms(*sw, 1);
    YDModule k = trivial_module(sw);
    CHECK(same_structure(left_dual(k).dual, k));
    CHECK(same_structure(right_dual(k).dual, k));
    CHECK(left_dual(k).b.dense() == std::vector<Scalar>{1});

    YDModule a = build_H_alpha_beta(sw, auts[1], auts[0]);
    Duality l = left_dual(a), r = right_dual(a);
    CHECK(l.dual.component.alpha.map() == antipode_power(*sw, -1).map());
    CHECK(l.dual.component.beta.is_identity());
    CHECK(r.dual.component == l.dual.component);

    for (const auto& m : modules_over(sw, auts)) {
        INFO(m.name);
        CHECK(duality_report(m, Side::left).passed());
        CHECK(duality_report(m, Side::right).passed());
    }
    auto s3 = symmetric_group_s3();
    YDModule hs = build_H_alpha_beta(s3, HopfAutomorphism::identity(*s3), HopfAutomorphism::identity(*s3));
    CHECK(duality_report(hs, Side::left).passed());
    CHECK(duality_report(hs, Side::right).passed());
}

TEST_CASE("right dual over S3 with non-commuting automorphisms") {
    auto s3 = symmetric_group_s3();
    auto auts = standard_automorphisms(*s3, 1);
    REQUIRE(auts.size() == 3);
    const HopfAutomorphism &a = auts[1], &b = auts[2];
    REQUIRE_FALSE((a * b).map() == (b * a).map());
    YDModule m = build_H_alpha_beta(s3, a, b);
    CHECK(duality_report(m, Side::right).passed());
    CHECK(duality_report(m, Side::left).passed());

    // the order α⁻¹β⁻¹S⁻¹ in the action gives a structure that is not YD
    const YDModule rd = right_dual(m).dual;
    const LinearMap corr = compose({b.inverse_map(), a.inverse_map(), s3->antipode_inv()});
    const LinearMap lit = compose({a.inverse_map(), b.inverse_map(), s3->antipode_inv()});
    const LinearMap x = compose(inverse(corr), lit);
    const LinearMap act = compose(rd.action, kron(x.with_legs({s3->leg()}, {s3->leg()}), LinearMap::identity({rd.leg()})));
    YDModule literal = make_module(s3, "*M literal", rd.basis, rd.component, act, rd.coaction, rd.space);
    CHECK(module_axioms(literal).passed());
    CHECK_FALSE(check_yd_compat(literal).passed());
}
