#include <doctest.h>

#include "corpus.hpp"
#include "ydt/dt.hpp"
#include "ydt/kernel/linalg.hpp"

using namespace ydt;

namespace {

GroupElement s2_id(const HopfAlgebra& h) { return {antipode_power(h, 1), HopfAutomorphism::identity(h)}; }

std::vector<GroupElement> generators(const HopfAlgebra& h) {
    std::vector<GroupElement> out;
    const auto auts = standard_automorphisms(h, 1);
    for (const auto& a : auts) {
        if (a.is_identity()) continue;
        out.push_back({a, HopfAutomorphism::identity(h)});
        out.push_back({HopfAutomorphism::identity(h), a});
    }
    return out;
}

std::vector<YDModule> corpus_modules(const HopfPtr& hp) {
    std::vector<YDModule> mods{trivial_module(hp)};
    const auto auts = standard_automorphisms(*hp, 1);
    for (const auto& a : auts)
        for (const auto& b : auts) mods.push_back(build_H_alpha_beta(hp, a, b));
    return mods;
}

std::string failure(const Report& r) {
    const CheckResult* f = r.first_failure();
    return f ? r.suite + " " + f->id + " at " + f->counterexample_text : "";
}

}  // namespace

TEST_CASE("DT(H) at the unit component is D(H)") {
    for (const auto& hp : {test::corpus()[0], test::corpus()[1], test::corpus()[3]}) {
        const GroupElement one = unit_element(*hp);
        DrinfeldDouble d = build_drinfeld_double(hp);
        CHECK(dt_delta(hp, one, one).dense() == d.hopf->comul().dense());
        CHECK(dt_counit(hp).dense() == d.hopf->counit().dense());
        CHECK(dt_antipode(hp, one).dense() == d.hopf->antipode().dense());
        RMatrix r = dt_rmatrix(hp, one, one);
        CHECK(r.R.data() == d.R.data());
        CHECK(r.R_inv.data() == d.R_inv.data());
        const LinearMap phi = dt_phi(hp, one, one);
        CHECK(phi.dense() == LinearMap::identity(phi.in()).dense());
        const Tensor& u = d.hopf->unit();
        CHECK(dt_antipode(hp, one).apply(u).data() == u.data());
    }
}

TEST_CASE("DT(sweedler4) over the subgroup generated by (S²,id)") {
    auto sw = sweedler4();
    TCoalgebra t(sw, {s2_id(*sw)});
    CHECK(t.elements().size() == 2);
    Report r = verify_tcoalgebra(t);
    CHECK_MESSAGE(r.passed(), failure(r));
    CHECK(r.checks.size() > 20);

    const GroupElement p = s2_id(*sw);
    for (const auto& q : t.elements()) {
        // φ_p^{p⁻¹qp} ∘ φ_{p⁻¹}^q = id on DT_q
        const LinearMap round = compose(dt_phi(sw, p, g_mul(g_mul(g_inv(p), q), p)), dt_phi(sw, g_inv(p), q));
        CHECK(round.dense() == LinearMap::identity(round.in()).dense());
    }
}

TEST_CASE("R-matrix inverse agrees with a linear solve and R ignores q") {
    auto sw = sweedler4();
    const GroupElement p = s2_id(*sw), one = unit_element(*sw);
    RMatrix r = dt_rmatrix(sw, p, one);
    auto xp = crossed_product_for(sw, p), xq = crossed_product_for(sw, one);
    const Shape legs{xp->leg(), xq->leg()};
    const std::size_t n = volume(legs);
    std::vector<Scalar> dense(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        Tensor e(legs);
        e[c] = 1;
        Tensor col = tensor_product_mul(*xp, *xq, r.R, e);
        for (std::size_t k = 0; k < n; ++k) dense[k * n + c] = col[k];
    }
    auto x = solve(LinearMap(legs, legs, std::move(dense)), outer(xp->unit, xq->unit));
    REQUIRE(x.has_value());
    CHECK(x->data() == r.R_inv.data());
    CHECK(dt_rmatrix(sw, p, p).R.data() == r.R.data());
}

TEST_CASE("DT(k[C_3]) over the automorphism pairs") {
    auto c3 = test::corpus()[1];
    TCoalgebra t(c3, generators(*c3));
    CHECK(t.elements().size() == 4);
    Report r = verify_tcoalgebra(t);
    CHECK_MESSAGE(r.passed(), failure(r));
}

TEST_CASE("representations of DT(H) reproduce the YD structures") {
    auto sw = sweedler4();
    const GroupElement one = unit_element(*sw);
    const YDModule k = trivial_module(sw);
    CHECK(verify_rep_equivalence(k, k, one).passed());
    const YDModule a = build_H_alpha_beta(sw, antipode_power(*sw, 1), HopfAutomorphism::identity(*sw));
    const YDModule b = build_H_alpha_beta(sw, HopfAutomorphism::identity(*sw), HopfAutomorphism::identity(*sw));
    for (const auto& p : {one, s2_id(*sw)}) {
        Report r = verify_rep_equivalence(a, b, p);
        CHECK_MESSAGE(r.passed(), failure(r));
        CHECK(r.checks.size() == 3);
    }
    auto c3 = test::corpus()[1];
    TCoalgebra t(c3, generators(*c3));
    const auto mods = corpus_modules(c3);
    for (const auto& m : mods)
        for (const auto& n : mods)
            for (const auto& p : t.elements()) {
                Report r = verify_rep_equivalence(m, n, p);
                CHECK_MESSAGE(r.passed(), failure(r));
            }
}

TEST_CASE("components outside P are refused") {
    auto c3 = test::corpus()[1];
    TCoalgebra t(c3, {});
    CHECK(t.elements().size() == 1);
    CHECK_THROWS_AS(t.component(generators(*c3)[0]), InputError);
}
