// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ydt/io/suites.hpp"
#include "ydt/pii.hpp"

using namespace ydt;

namespace {

const std::vector<std::string> kCorpus = {"C2", "C3", "S3", "sweedler4", "dual:sweedler4"};

struct Outcome {
    bool ok = true;
    std::vector<std::string> problems;
    std::size_t checks = 0;

    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            problems.push_back(what);
        }
    }
};

io::SuiteInput input(const std::string& name) { return io::load_inputs({"builtin:" + name}, {}, true).front(); }

// Report kind: the part of the suite name between the algebra prefix and ':'.
std::string kind(const Report& r) {
    const auto slash = r.suite.find('/');
    const auto colon = r.suite.find(':', slash);
    return r.suite.substr(slash + 1, colon - slash - 1);
}

std::set<std::string> ids_of(const io::VerificationReport& v, const std::string& k) {
    std::set<std::string> ids;
    for (const auto& r : v.reports)
        if (kind(r) == k)
            for (const auto& c : r.checks) ids.insert(c.id);
    return ids;
}

std::size_t reports_of(const io::VerificationReport& v, const std::string& k) {
    std::size_t n = 0;
    for (const auto& r : v.reports) n += kind(r) == k;
    return n;
}

io::VerificationReport suite(Outcome& o, const std::string& name, const std::string& algebra) {
    io::VerificationReport v = io::run_suite(name, {input(algebra)}, {});
    o.checks += v.check_count();
    if (!v.passed()) {
        for (const auto& r : v.reports)
            if (const CheckResult* f = r.first_failure())
                o.need(false, r.suite + " " + f->id + " at " + f->counterexample_text);
    }
    return v;
}

void need_ids(Outcome& o, const io::VerificationReport& v, const std::string& k,
              std::initializer_list<const char*> ids) {
    const auto have = ids_of(v, k);
    for (const char* id : ids) o.need(have.count(id) > 0, k + " report lacks " + id);
}

Outcome hopf_suite() {
    Outcome o;
    for (const auto& a : kCorpus) {
        const Report r = check_hopf_axioms(*io::builtin_hopf(a));
        o.checks += r.checks.size();
        o.need(r.passed(), a + " fails " + (r.passed() ? "" : r.first_failure()->id));
    }
    const HopfPtr bad = io::hopf_from_json(io::load_json(YDT_FIXTURES "/sweedler4_antipode_id.json"), false);
    const Report r = check_hopf_axioms(*bad);
    const CheckResult* f = r.first_failure();
    o.need(f && f->id == "antipode_left" && f->counterexample_text == "(x)",
           "corrupted antipode does not fail antipode_left at (x)");
    return o;
}

Outcome yd_suite() {
    Outcome o;
    for (const auto& a : kCorpus) {
        const auto v = suite(o, "yd", a);
        const HopfPtr h = io::builtin_hopf(a);
        const std::size_t n = io::resolve_automorphisms("std:1", *h).size();
        std::size_t families = 0;
        for (const auto& r : v.reports)
            if (r.suite.find("/yd:H_{") != std::string::npos) ++families;
        o.need(families == n * n, a + ": " + std::to_string(families) + " H_{α,β} checked, expected " +
                                      std::to_string(n * n));
        need_ids(o, v, "yd", {"yd_compat", "yd_compat_alt", "anti_yd_agrees", "l_yd_agrees[0]", "l_yd_agrees[1]",
                              "l_yd_agrees[2]"});
    }
    return o;
}

Outcome tcategory_suite() {
    Outcome o;
    for (const auto& a : kCorpus) {
        const auto v = suite(o, "tcategory", a);
        need_ids(o, v, "group", {"group_assoc", "group_unit", "group_inverse"});
        need_ids(o, v, "tensor", {"tensor_component", "tensor_yd_compat", "braiding_linear", "braiding_colinear",
                                  "braiding_inverse_left", "braiding_inverse_right"});
        need_ids(o, v, "hexagons", {"hexagon_left", "hexagon_right", "conjugate_of_conjugate", "conjugate_of_tensor"});
        need_ids(o, v, "left_dual", {"left_dual_snake_object", "left_dual_snake_dual"});
        need_ids(o, v, "right_dual", {"right_dual_snake_object", "right_dual_snake_dual"});
        if (a == "sweedler4") o.need(reports_of(v, "hexagons") >= 27, "fewer than 27 hexagon triples over sweedler4");
    }
    return o;
}

Outcome double_suite() {
    Outcome o;
    for (const auto& a : kCorpus) {
        const auto v = suite(o, "double", a);
        need_ids(o, v, "drinfeld_double", {"double_dimension", "r_comul_left", "r_comul_right", "r_intertwines",
                                           "antipode_left", "antipode_right"});
        o.need(reports_of(v, "dcp_module") > 0, a + ": no module round trips");
    }
    o.need(build_drinfeld_double(sweedler4()).hopf->dim() == 16, "D(sweedler4) is not 16-dimensional");
    return o;
}

Outcome dt_suite() {
    Outcome o;
    const auto v = suite(o, "dt", "sweedler4");
    need_ids(o, v, "dt", {"p_size", "delta_multiplicative", "delta_unit", "coassociativity", "counit_left",
                          "counit_right", "phi_multiplicative", "phi_group", "antipode_left", "antipode_right"});
    o.need(reports_of(v, "dt_rmatrix") == 4, "expected R_{p,q} for all four pairs in P = {id, (S^2,id)}");
    o.need(reports_of(v, "rep_equivalence") > 0, "no representation equivalence checks");
    return o;
}

Outcome pii_suite() {
    Outcome o;
    const HopfPtr sw = io::builtin_hopf("sweedler4");
    const GroupElement c{antipode_power(*sw, 1), HopfAutomorphism::identity(*sw)};
    const PairInInvolution* eg = nullptr;
    const auto pairs = find_pairs_in_involution(sw, c);
    for (const auto& p : pairs)
        if (p.f.dense() == sw->counit().dense() && p.g.data() == sw->basis_vector(sw->basis_index("g")).data())
            eg = &p;
    o.need(eg != nullptr, "(ε,g) not among the pairs for (S^2,id)");
    if (eg) {
        for (const auto& m : corpus_modules(sw, io::resolve_automorphisms("std:1", *sw)))
            if (m.component == c) {
                const Report r = functor_report(m, *eg);
                o.checks += r.checks.size();
                o.need(r.passed(), r.suite + " fails");
            }
        const AlgebraIso iso = pii_algebra_iso(sw, *eg);
        o.need(iso.to.rows() == 16 && iso.to.cols() == 16, "algebra iso is not between 16-dimensional algebras");
        const Report r = pii_algebra_iso_report(sw, *eg);
        o.checks += r.checks.size();
        o.need(r.passed(), "pii_algebra_iso fails for (ε,g)");
    }
    for (const auto& a : kCorpus) {
        const auto v = suite(o, "pii", a);
        const HopfPtr h = io::builtin_hopf(a);
        std::size_t eps_one = 0;
        for (const auto& r : v.reports)
            if (const CheckResult* e = r.find("eps_one_pair"); e && e->passed) ++eps_one;
        o.need(eps_one == io::resolve_automorphisms("std:1", *h).size(), a + ": (ε,1) missing for some (α,α)");
        need_ids(o, v, "functor_F", {"F_yd_compat", "GF_identity", "G_factorization"});
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto in = io::load_inputs({"builtin:sweedler4"}, {}, true);
    const io::VerificationReport first = io::run_suite("all", in, {});
    const std::string a = io::render_json(first);
    const std::string b = io::render_json(io::run_suite("all", in, {}));
    o.checks = first.check_count();
    o.need(first.passed(), "all on sweedler4 has failures");
    o.need(a == b, "JSON reports differ between runs");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hopf suite on the corpus, corrupted antipode fails at x", hopf_suite},
        {"H_{α,β} is YD for all automorphism pairs, specializations agree", yd_suite},
        {"T-category structure: components, braiding, hexagons, conjugation, duals", tcategory_suite},
        {"D(H) axioms, quasitriangularity, yd↔dcp round trips", double_suite},
        {"DT(sweedler4) over P generated by (S^2,id)", dt_suite},
        {"pairs in involution, functors F/G, algebra iso, (ε,1) for (α,α)", pii_suite},
        {"two runs of 'all' give byte-identical JSON", determinism},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        std::printf("criterion %zu: %s  %s (%zu checks, %.1f s)\n", i + 1, o.ok ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), o.checks, s);
        for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
