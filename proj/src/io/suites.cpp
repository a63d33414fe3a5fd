#include "ydt/io/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ydt/dt.hpp"
#include "ydt/pii.hpp"

namespace ydt::io {

namespace {

using Collect = std::vector<Report>;

void add(Collect& out, const HopfAlgebra& h, Report r) {
    r.suite = h.name() + "/" + r.suite;
    out.push_back(std::move(r));
}

CheckResult compat_fact(const std::string& id, const YDModule& m) {
    Report r = check_yd_compat(m);
    const CheckResult* bad = r.first_failure();
    return fact(id, "compatibility in component " + m.component.name(), bad == nullptr,
                bad ? bad->id + " at " + bad->counterexample_text : "");
}

std::vector<GroupElement> all_pairs(const std::vector<HopfAutomorphism>& auts) {
    std::vector<GroupElement> out;
    for (const auto& a : auts)
        for (const auto& b : auts) out.push_back({a, b});
    return out;
}

std::vector<YDModule> module_set(const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    std::vector<YDModule> mods = corpus_modules(in.hopf, auts);
    for (const auto& m : in.modules) mods.push_back(m);
    return mods;
}

std::vector<YDModule> in_component(const std::vector<YDModule>& mods, const GroupElement& c) {
    std::vector<YDModule> out;
    for (const auto& m : mods)
        if (m.component == c) out.push_back(m);
    return out;
}

// Triples for the hexagon checks: every corpus module while that stays
// small, otherwise the H_{α,β} family.
constexpr std::size_t kHexagonModules = 16;

std::vector<YDModule> hexagon_set(const SuiteInput& in, const std::vector<HopfAutomorphism>& auts,
                                  const std::vector<YDModule>& mods) {
    if (mods.size() <= kHexagonModules) return mods;
    std::vector<YDModule> out;
    for (const auto& a : auts)
        for (const auto& b : auts) out.push_back(build_H_alpha_beta(in.hopf, a, b));
    return out;
}

// ---------------------------------------------------------------- suites

void suite_hopf(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    add(out, h, check_hopf_axioms(h));
    for (const auto& a : auts)
        if (!a.is_identity()) add(out, h, automorphism_report(h, a.map(), a.name()));
}

void suite_yd(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    const GroupElement anti{antipode_power(h, 1), HopfAutomorphism::identity(h)};
    for (const auto& p : all_pairs(auts)) {
        const YDModule m = build_H_alpha_beta(in.hopf, p.alpha, p.beta);
        Report r = module_axioms(m);
        r.append(check_yd_compat(m));
        const bool anti_general = check_yd_compat_main(relabeled(m, anti)).passed;
        r.add(fact("anti_yd_agrees", "anti-YD check = general check at (S^2,id)",
                   check_anti_yd(m).passed == anti_general));
        for (int l = 0; l <= 2; ++l) {
            const GroupElement lyd{antipode_power(h, l), HopfAutomorphism::identity(h)};
            r.add(fact("l_yd_agrees[" + std::to_string(l) + "]", "l-YD check = general check at (S^{2l},id)",
                       check_l_yd(m, l).passed == check_yd_compat_main(relabeled(m, lyd)).passed));
        }
        r.suite = "yd:" + m.name;
        add(out, h, std::move(r));
    }
    for (const auto& m : in.modules) {
        Report r = module_axioms(m);
        r.append(check_yd_compat(m));
        r.suite = "yd:" + m.name;
        add(out, h, std::move(r));
    }
}

void suite_tcategory(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    const auto pairs = all_pairs(auts);
    Report g = check_group_axioms(h, generated_subgroup(h, pairs));
    add(out, h, std::move(g));
    const auto mods = module_set(in, auts);

    for (const auto& m : mods)
        for (const auto& n : mods) {
            const YDModule t = tensor_module(m, n);
            Report r;
            r.suite = "tensor:" + m.name + "," + n.name;
            r.add(fact("tensor_component", "comp(M⊗N) = comp(M)∗comp(N)",
                       t.component == g_mul(m.component, n.component)));
            r.add(compat_fact("tensor_yd_compat", t));
            r.append(braiding_report(m, n));
            const LinearMap c = braiding_map(m, n);
            for (const auto& p : pairs)
                r.add(fact("braiding_conjugation_invariant[" + p.name() + "]", "c_{^pM,^pN} = c_{M,N}",
                           braiding_map(conjugate_module(p, m), conjugate_module(p, n)) == c));
            add(out, h, std::move(r));
        }

    for (const auto& n : mods) {
        Report r;
        r.suite = "conjugation:" + n.name;
        for (const auto& p : pairs) {
            const YDModule c = conjugate_module(p, n);
            const std::string tag = "[" + p.name() + "]";
            r.add(fact("conjugate_component" + tag, "comp(^pN) = p∗comp(N)∗p⁻¹",
                       c.component == g_mul(g_mul(p, n.component), g_inv(p))));
            r.add(compat_fact("conjugate_yd_compat" + tag, c));
            for (const auto& q : pairs)
                r.add(fact("conjugate_product" + tag + "[" + q.name() + "]", "^{p∗q}N = ^p(^qN)",
                           same_structure(conjugate_module(g_mul(p, q), n), conjugate_module(p, conjugate_module(q, n)))));
            for (const auto& m : mods)
                r.add(fact("conjugate_tensor" + tag + "[" + m.name + "]", "^p(M⊗N) = ^pM⊗^pN",
                           same_structure(conjugate_module(p, tensor_module(m, n)),
                                          tensor_module(conjugate_module(p, m), c))));
        }
        add(out, h, std::move(r));
    }

    const auto hex = hexagon_set(in, auts, mods);
    for (const auto& m : hex)
        for (const auto& n : hex)
            for (const auto& p : hex) add(out, h, verify_hexagons(m, n, p));

    for (const auto& m : mods) {
        add(out, h, duality_report(m, Side::left));
        add(out, h, duality_report(m, Side::right));
    }
}

void suite_double(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    const DrinfeldDouble d = build_drinfeld_double(in.hopf);
    Report dd = check_drinfeld_double(d);
    dd.add(fact("double_dimension", "dim D(H) = dim(H)²", d.hopf->dim() == h.dim() * h.dim()));
    add(out, h, std::move(dd));
    for (const auto& p : all_pairs(auts)) {
        const BicomoduleAlgebra a = build_H_ab_bicomodule(in.hopf, p);
        add(out, h, bicomodule_axioms(a));
        try {
            add(out, h, algebra_axioms(*crossed_product_for(in.hopf, p)));
        } catch (const AxiomError& e) {
            add(out, h, e.report());
        }
        add(out, h, bicomodule_axioms(dh_bicomodule_on_A(d, p)));
        add(out, h, check_yd_datum_module(a, build_H_alpha_beta(in.hopf, p.alpha, p.beta)));
    }
    for (const auto& m : module_set(in, auts)) {
        Report r;
        r.suite = "dcp_module:" + m.name;
        try {
            const DcpModule x = yd_to_dcp_module(m);
            r.append(algebra_module_report(*x.algebra, x.action, x.basis));
            const YDModule back = dcp_module_to_yd(x);
            r.add(fact("yd_dcp_roundtrip", "YD → A(α,β)-module → YD is the identity", same_structure(back, m)));
            r.add(fact("dcp_yd_roundtrip", "A(α,β)-module → YD → A(α,β)-module is the identity",
                       yd_to_dcp_module(back).action == x.action));
        } catch (const AxiomError& e) {
            r.append(e.report());
        }
        add(out, h, std::move(r));
    }
}

void suite_dt(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    // P is generated by the (α, id), as in the anti-YD case (S^2, id)
    std::vector<GroupElement> gens;
    for (const auto& a : auts)
        if (!a.is_identity()) gens.push_back({a, HopfAutomorphism::identity(h)});
    const TCoalgebra t(in.hopf, gens);
    Report r = verify_tcoalgebra(t);
    r.add(fact("p_size", "P is finite and closed", !t.elements().empty(), std::to_string(t.elements().size())));
    add(out, h, std::move(r));
    for (std::size_t q = 0; q < t.elements().size(); ++q)
        for (std::size_t p = 0; p < t.elements().size(); ++p)
            add(out, h, rmatrix_report(in.hopf, t.elements()[p], t.elements()[q]));
    std::vector<YDModule> mods;
    for (const auto& m : module_set(in, auts))
        if (t.contains(m.component)) mods.push_back(m);
    for (const auto& m : mods)
        for (const auto& n : mods)
            for (const auto& p : t.elements()) add(out, h, verify_rep_equivalence(m, n, p));
}

void suite_pii(Collect& out, const SuiteInput& in, const std::vector<HopfAutomorphism>& auts) {
    const HopfAlgebra& h = *in.hopf;
    const auto mods = module_set(in, auts);
    const auto units = in_component(mods, unit_element(h));
    for (const auto& p : all_pairs(auts)) {
        const auto pairs = find_pairs_in_involution(in.hopf, p);
        Report s;
        s.suite = "pair_search:" + p.name();
        std::string names;
        for (const auto& x : pairs) names += (names.empty() ? "" : " ") + x.name;
        s.add(fact("pairs_found", "pairs (f,g) for " + p.name(), true, names.empty() ? "none" : names));
        if (p.alpha == p.beta)
            s.add(fact("eps_one_pair", "(ε,1) is a pair for (α,α)",
                       std::any_of(pairs.begin(), pairs.end(), [&](const PairInInvolution& x) {
                           return x.f.dense() == h.counit().dense() && x.g.data() == h.unit().data();
                       })));
        add(out, h, std::move(s));
        for (const auto& x : pairs) {
            add(out, h, check_pair_in_involution(h, x));
            const auto here = in_component(mods, p);
            for (const auto& m : here) {
                add(out, h, functor_report(m, x));
                add(out, h, transport_report(m, x));
            }
            for (const auto& n : units) add(out, h, functor_inverse_report(n, x));
            add(out, h, pii_algebra_iso_report(in.hopf, x));
        }
    }
}

using SuiteFn = void (*)(Collect&, const SuiteInput&, const std::vector<HopfAutomorphism>&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {{"hopf", suite_hopf},   {"yd", suite_yd}, {"tcategory", suite_tcategory},
                                  {"double", suite_double}, {"dt", suite_dt}, {"pii", suite_pii}};

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

std::size_t VerificationReport::check_count() const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.checks.size();
    return n;
}

std::size_t VerificationReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks) n += !c.passed;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites) v.emplace_back(s.name);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

std::vector<SuiteInput> load_inputs(const std::vector<std::string>& args, std::optional<Field> field, bool validate) {
    std::vector<SuiteInput> out;
    std::vector<std::string> digests;
    auto attach = [&](const std::string& label, HopfPtr h) -> SuiteInput& {
        const std::string dg = fnv1a64(hopf_to_json(*h).dump());
        for (std::size_t i = 0; i < out.size(); ++i)
            if (digests[i] == dg) return out[i];
        out.push_back({label, std::move(h), {}});
        digests.push_back(dg);
        return out.back();
    };
    for (const auto& arg : args) {
        if (arg.starts_with("builtin:")) {
            attach(arg, builtin_hopf(arg.substr(8), field ? *field : Field{}));
            continue;
        }
        const std::filesystem::path path(arg);
        const Json doc = load_json(path);
        if (!doc.is_object()) throw InputError(arg + ": expected a JSON object");
        if (!doc.contains("action")) {
            attach(arg, hopf_from_json(doc, validate, field));
            continue;
        }
        if (!doc.contains("hopf")) throw InputError(arg + ": module file needs a 'hopf' field");
        const Json& ref = doc.at("hopf");
        const Json hdoc = ref.is_string() ? load_json(path.parent_path() / ref.get<std::string>()) : ref;
        SuiteInput& in = attach(ref.is_string() ? ref.get<std::string>() : arg, hopf_from_json(hdoc, validate, field));
        in.modules.push_back(module_from_json(doc, in.hopf));
    }
    return out;
}

std::vector<HopfAutomorphism> resolve_automorphisms(const std::string& spec, const HopfAlgebra& h) {
    if (spec.starts_with("std:")) {
        int l = 0;
        try {
            std::size_t used = 0;
            l = std::stoi(spec.substr(4), &used);
            if (used != spec.size() - 4) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError("malformed --auts value '" + spec + "'");
        }
        if (l < 0 || l > 8) throw InputError("--auts std:<lmax> needs 0 <= lmax <= 8");
        return standard_automorphisms(h, l);
    }
    return automorphism_list_from_json(load_json(spec), h);
}

std::size_t largest_intermediate(const std::string& suite, const SuiteInput& in) {
    const std::size_t n = in.hopf->dim();
    std::size_t m = n;
    for (const auto& x : in.modules) m = std::max(m, x.dim());
    if (suite == "hopf") return n * n * n;
    if (suite == "yd") return n * n * n * m;
    if (suite == "tcategory") return m * m * m * n;
    const std::size_t d = n * n;
    const std::size_t dbl = d * d * d;
    if (suite == "double" || suite == "dt" || suite == "pii") return dbl;
    return std::max({n * n * n * m, m * m * m * n, dbl});
}

VerificationReport run_suite(const std::string& suite, const std::vector<SuiteInput>& inputs,
                             const SuiteOptions& options) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw InputError("unknown suite '" + suite + "'");
    if (inputs.empty()) throw InputError("no inputs given");
    if (options.max_dim) {
        const std::size_t d = *options.max_dim, budget = d * d * d;
        for (const auto& in : inputs) {
            const std::size_t need = largest_intermediate(suite, in);
            if (need > budget)
                throw InputError(in.label + ": largest intermediate tensor has " + std::to_string(need) +
                                 " entries, over the --max-dim budget of " + std::to_string(budget));
        }
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.suite = suite;
    for (const auto& in : inputs) {
        rep.inputs.push_back({in.hopf->name(), "hopf", fnv1a64(hopf_to_json(*in.hopf).dump())});
        for (const auto& m : in.modules) rep.inputs.push_back({m.name, "module", fnv1a64(module_to_json(m).dump())});
    }
    for (const auto& in : inputs) {
        std::vector<HopfAutomorphism> auts;
        try {
            auts = resolve_automorphisms(options.auts, *in.hopf);
        } catch (const AxiomError& e) {
            // a broken algebra can break S²; the hopf suite still reports on it
            if (suite != "hopf") throw;
            Report r = e.report();
            add(rep.reports, *in.hopf, std::move(r));
            auts = {HopfAutomorphism::identity(*in.hopf)};
        }
        for (const auto& s : kSuites)
            if (suite == "all" || suite == s.name) s.fn(rep.reports, in, auts);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    for (const auto& in : r.inputs) os << "input " << in.kind << " " << in.name << " fnv1a64:" << in.digest << "\n";
    for (const auto& rep : r.reports) {
        std::size_t failed = 0;
        for (const auto& c : rep.checks) failed += !c.passed;
        os << (failed ? "FAIL " : "ok   ") << rep.suite << " (" << rep.checks.size() << " checks";
        if (failed) os << ", " << failed << " failed";
        os << ")\n";
        for (const auto& c : rep.checks) {
            if (c.passed) continue;
            os << "  FAIL " << c.id << "  [" << c.anchor << "]";
            if (!c.counterexample_text.empty()) os << " at " << c.counterexample_text;
            if (!c.note.empty()) os << " (" << c.note << ")";
            os << "\n";
        }
    }
    os << (r.passed() ? "PASS" : "FAIL") << ": " << r.check_count() << " checks, " << r.failure_count()
       << " failed\n";
    return os.str();
}

std::string render_json(const VerificationReport& r) {
    Json j;
    j["suite"] = r.suite;
    Json inputs = Json::array();
    for (const auto& in : r.inputs)
        inputs.push_back(Json{{"name", in.name}, {"kind", in.kind}, {"digest", "fnv1a64:" + in.digest}});
    j["inputs"] = std::move(inputs);
    Json reports = Json::array();
    for (const auto& rep : r.reports) {
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            Json x{{"id", c.id}, {"anchor", c.anchor}, {"passed", c.passed}, {"tuples_checked", c.tuples_checked}};
            if (!c.passed) {
                x["counterexample"] = c.counterexample;
                x["location"] = !c.counterexample_text.empty() ? c.counterexample_text
                                : !c.note.empty()                ? c.note
                                                                 : "whole check";
            }
            if (!c.note.empty()) x["note"] = c.note;
            checks.push_back(std::move(x));
        }
        reports.push_back(Json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", std::move(checks)}});
    }
    j["reports"] = std::move(reports);
    j["checks"] = r.check_count();
    j["failed"] = r.failure_count();
    j["passed"] = r.passed();
    return j.dump(2) + "\n";
}

}  // namespace ydt::io
