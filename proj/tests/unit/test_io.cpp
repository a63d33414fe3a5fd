#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "ydt/io/suites.hpp"
#include "ydt/kernel/exec.hpp"
#include "ydt/pii.hpp"

using namespace ydt;
using io::Json;

namespace {

bool same_algebra(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.basis() == b.basis() && a.mul().dense() == b.mul().dense() && a.comul().dense() == b.comul().dense() &&
           a.unit().data() == b.unit().data() && a.counit().dense() == b.counit().dense() &&
           a.antipode().dense() == b.antipode().dense() && a.antipode_inv().dense() == b.antipode_inv().dense();
}

// module structure up to the interned legs of the two algebra instances
bool same_module(const YDModule& a, const YDModule& b) {
    return a.basis == b.basis && a.component.alpha.map().dense() == b.component.alpha.map().dense() &&
           a.component.beta.map().dense() == b.component.beta.map().dense() &&
           a.action.dense() == b.action.dense() && a.coaction.dense() == b.coaction.dense();
}

std::string fixture(const char* name) { return std::string(YDT_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("corpus algebras and modules round-trip through the file format") {
    for (const auto& h : test::corpus()) {
        CAPTURE(h->name());
        const Json j = io::hopf_to_json(*h);
        const HopfPtr back = io::hopf_from_json(Json::parse(j.dump()));
        CHECK(same_algebra(*h, *back));
        CHECK(io::hopf_to_json(*back).dump() == j.dump());

        for (const auto& m : corpus_modules(h, io::resolve_automorphisms("std:1", *h))) {
            CAPTURE(m.name);
            const Json mj = io::module_to_json(m);
            const YDModule mb = io::module_from_json(Json::parse(mj.dump()), back);
            CHECK(same_module(m, mb));
            CHECK(mb.component.name() == m.component.name());
            CHECK(io::module_to_json(mb).dump() == mj.dump());
        }
    }
}

TEST_CASE("round trip over F_p keeps residues exact") {
    const HopfPtr h = io::builtin_hopf("sweedler4", Field::prime(7));
    const Json j = io::hopf_to_json(*h);
    CHECK(j["field"] == Json{{"type", "Fp"}, {"p", 7}});
    const HopfPtr back = io::hopf_from_json(j);
    CHECK(back->field() == Field::prime(7));
    CHECK(same_algebra(*h, *back));
}

TEST_CASE("scalars and field flags") {
    CHECK(io::scalar_to_json(Scalar::parse("-3/4", Field{})) == "-3/4");
    CHECK(io::scalar_from_json("6/8", Field{}) == Scalar::parse("3/4", Field{}));
    CHECK(io::scalar_from_json(5, Field{}) == Scalar(5));
    CHECK(io::scalar_from_json(9, Field::prime(7)) == Scalar(2).in_field(Field::prime(7)));
    CHECK(io::parse_field_flag("Q") == Field{});
    CHECK(io::parse_field_flag("F5") == Field::prime(5));
    CHECK(io::parse_field_flag("Fp:11") == Field::prime(11));
    CHECK_THROWS(io::parse_field_flag("F4"));
    CHECK(io::fnv1a64("") == "cbf29ce484222325");
    CHECK(io::fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("builtin request yields the same algebra as the builtin") {
    const HopfPtr h = io::hopf_from_json(Json{{"builtin", "sweedler4"}, {"field", {{"type", "Q"}}}});
    CHECK(h->dim() == 4);
    CHECK(same_algebra(*h, *sweedler4()));
    CHECK(same_algebra(*io::builtin_hopf("dual:sweedler4"), *dual_of(sweedler4())));
    CHECK_THROWS_AS(io::builtin_hopf("Q8"), InputError);
}

TEST_CASE("non-coassociative C2 is rejected at the corrupted basis vector") {
    const Json j = io::load_json(fixture("c2_noncoassociative.json"));
    try {
        io::hopf_from_json(j);
        FAIL("accepted a non-coassociative comultiplication");
    } catch (const AxiomError& e) {
        const std::string what = e.what();
        CHECK(what.find("coassociativity") != std::string::npos);
        CHECK(what.find("(g)") != std::string::npos);
    }
    // without validation it loads and the report carries the location
    const HopfPtr h = io::hopf_from_json(j, false);
    const Report r = check_hopf_axioms(*h);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->id == "coassociativity");
    CHECK(r.first_failure()->counterexample_text == "(g)");
}

TEST_CASE("antipode replaced by the identity fails at x") {
    const HopfPtr h = io::hopf_from_json(io::load_json(fixture("sweedler4_antipode_id.json")), false);
    const Report r = check_hopf_axioms(*h);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->id == "antipode_left");
    CHECK(r.first_failure()->counterexample_text == "(x)");
}

TEST_CASE("missing and malformed files are input errors") {
    CHECK_THROWS_AS(io::load_json(fixture("does_not_exist.json")), InputError);
    CHECK_THROWS_AS(io::load_inputs({"builtin:nope"}, {}, true), InputError);
    CHECK_THROWS_AS(io::hopf_from_json(Json{{"dim", 2}}), InputError);
}

TEST_CASE("mislabeled module fails compatibility at (h=x, m=1)") {
    const auto inputs = io::load_inputs({fixture("sweedler4_mislabeled.json")}, {}, true);
    REQUIRE(inputs.size() == 1);
    REQUIRE(inputs[0].modules.size() == 1);
    CHECK(inputs[0].modules[0].component.name() == "(S^2,id)");
    const io::VerificationReport rep = io::run_suite("yd", inputs, {});
    CHECK_FALSE(rep.passed());
    bool seen = false;
    for (const auto& r : rep.reports)
        for (const auto& c : r.checks)
            if (!c.passed && c.id == "yd_compat") {
                CHECK(c.counterexample_text == "(h=x, m=1)");
                seen = true;
            }
    CHECK(seen);
    const Json j = Json::parse(io::render_json(rep));
    CHECK(j.dump().find("\"counterexample\"") != std::string::npos);
}

TEST_CASE("module inputs over the same algebra are merged") {
    const auto inputs =
        io::load_inputs({"builtin:sweedler4", fixture("sweedler4_mislabeled.json")}, {}, true);
    CHECK(inputs.size() == 1);
    CHECK(inputs[0].modules.size() == 1);
}

TEST_CASE("max-dim refuses an over-budget input") {
    const auto inputs = io::load_inputs({"builtin:sweedler4"}, {}, true);
    io::SuiteOptions opts;
    opts.max_dim = 4;
    CHECK(io::largest_intermediate("double", inputs[0]) == 4096);
    CHECK_THROWS_AS(io::run_suite("double", inputs, opts), InputError);
    opts.max_dim = 16;
    CHECK(io::run_suite("double", inputs, opts).passed());
    CHECK_THROWS_AS(io::run_suite("bogus", inputs, {}), InputError);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
    const auto inputs = io::load_inputs({"builtin:sweedler4"}, {}, true);
    kernel::set_threads(1);
    const std::string serial = io::render_json(io::run_suite("tcategory", inputs, {}));
    kernel::set_threads(4);
    const std::string parallel = io::render_json(io::run_suite("tcategory", inputs, {}));
    const std::string again = io::render_json(io::run_suite("tcategory", inputs, {}));
    kernel::set_threads(0);
    CHECK(serial == parallel);
    CHECK(parallel == again);
    const std::string text = io::render_text(io::run_suite("pii", inputs, {}));
    CHECK(text == io::render_text(io::run_suite("pii", inputs, {})));
}
