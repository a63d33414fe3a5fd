#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ydt/io/suites.hpp"
#include "ydt/kernel/exec.hpp"
#include "ydt/pii.hpp"

using namespace ydt;

namespace {

constexpr int kPass = 0, kFail = 1, kMalformed = 2;

int run(int argc, char** argv) {
    CLI::App app{"Exact verification of (α,β)-Yetter-Drinfeld structures"};
    app.require_subcommand(1);

    std::string field_flag, auts = "std:1", report = "text";
    int threads = 0;
    std::size_t max_dim = 0, sample = 0;
    std::vector<std::string> inputs;

    std::string suite;
    std::vector<CLI::App*> suites;
    for (const auto& name : io::suite_names()) {
        CLI::App* s = app.add_subcommand(name, name == "all" ? std::string("run every suite") : "run the " + name + " suite");
        s->add_option("inputs", inputs, "builtin:<name>, Hopf algebra files or module files")->required();
        s->add_option("--field", field_flag, "ground field for builtins and files: Q, F<p> or Fp:<p>");
        s->add_option("--auts", auts, "std:<lmax> or an automorphism file")->capture_default_str();
        s->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        s->add_option("--parallel", threads, "worker threads (1 = serial)");
        s->add_option("--max-dim", max_dim, "refuse inputs whose largest intermediate exceeds d^3 entries");
        s->add_option("--sample", sample, "check n sampled tuples per identity (fixed seed) instead of all");
        s->callback([&suite, name] { suite = name; });
        suites.push_back(s);
    }
    bool export_modules = false;
    CLI::App* exp = app.add_subcommand("export", "print inputs in the canonical file format");
    exp->add_option("inputs", inputs, "builtin:<name>, Hopf algebra files or module files")->required();
    exp->add_option("--field", field_flag, "ground field: Q, F<p> or Fp:<p>");
    exp->add_option("--auts", auts, "std:<lmax> or an automorphism file")->capture_default_str();
    exp->add_flag("--modules", export_modules, "also print the corpus module set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kMalformed;
    }

    try {
        std::optional<Field> field;
        if (!field_flag.empty()) field = io::parse_field_flag(field_flag);
        if (threads > 0) kernel::set_threads(threads);
        if (sample > 0) {
            kernel::VerifyConfig cfg = kernel::verify_config();
            cfg.sample = sample;
            kernel::set_verify_config(cfg);
        }

        if (exp->parsed()) {
            io::Json out = io::Json::array();
            for (const auto& in : io::load_inputs(inputs, field, true)) {
                io::Json entry{{"hopf", io::hopf_to_json(*in.hopf)}, {"modules", io::Json::array()}};
                for (const auto& m : in.modules) entry["modules"].push_back(io::module_to_json(m));
                if (export_modules)
                    for (const auto& m : corpus_modules(in.hopf, io::resolve_automorphisms(auts, *in.hopf)))
                        entry["modules"].push_back(io::module_to_json(m));
                out.push_back(std::move(entry));
            }
            std::cout << out.dump(2) << "\n";
            return kPass;
        }

        io::SuiteOptions opts;
        opts.field = field;
        opts.auts = auts;
        if (max_dim > 0) opts.max_dim = max_dim;
        // the hopf suite reports broken algebras instead of refusing them
        const auto loaded = io::load_inputs(inputs, field, suite != "hopf");
        const io::VerificationReport rep = io::run_suite(suite, loaded, opts);
        std::cout << (report == "json" ? io::render_json(rep) : io::render_text(rep));
        std::fprintf(stderr, "ydt: %s finished in %.3f s\n", suite.c_str(), rep.seconds);
        return rep.passed() ? kPass : kFail;
    } catch (const AxiomError& e) {
        std::cerr << "ydt: invalid input: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "ydt: " << e.what() << "\n";
    }
    return kMalformed;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
