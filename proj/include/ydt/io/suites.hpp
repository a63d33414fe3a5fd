#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydt/io/format.hpp"
#include "ydt/kernel/verify.hpp"

namespace ydt::io {

/// An algebra to run suites on, with any module files that refer to it.
struct SuiteInput {
    std::string label;   // file path or builtin name
    HopfPtr hopf;
    std::vector<YDModule> modules;
};

struct SuiteOptions {
    std::optional<Field> field;
    std::string auts = "std:1";        // "std:<lmax>" or an automorphism file
    std::optional<std::size_t> max_dim;   // refuse when the largest intermediate exceeds max_dim³
};

struct InputDigest {
    std::string name;
    std::string kind;   // "hopf" or "module"
    std::string digest;
};

struct VerificationReport {
    std::string suite;
    std::vector<InputDigest> inputs;
    std::vector<Report> reports;
    double seconds = 0;   // wall clock; kept out of the rendered reports

    bool passed() const;
    std::size_t check_count() const;
    std::size_t failure_count() const;
};

const std::vector<std::string>& suite_names();

/// Resolves command-line inputs: "builtin:<name>", a Hopf algebra file, or a
/// module file whose "hopf" field holds an algebra document, a builtin
/// request or a path relative to the module file. Inputs over identical
/// algebras are merged. The Hopf axioms are only enforced when `validate`
/// is set.
std::vector<SuiteInput> load_inputs(const std::vector<std::string>& args, std::optional<Field> field, bool validate);

/// Automorphism set for one algebra from the --auts value.
std::vector<HopfAutomorphism> resolve_automorphisms(const std::string& spec, const HopfAlgebra& h);

/// Largest intermediate tensor (in entries) the suite builds for this input.
std::size_t largest_intermediate(const std::string& suite, const SuiteInput& input);

/// Runs one suite (or "all") over the inputs. Throws InputError for a bad
/// suite name, an over-budget input or an unusable automorphism set.
VerificationReport run_suite(const std::string& suite, const std::vector<SuiteInput>& inputs,
                             const SuiteOptions& options);

/// Deterministic renderings; neither includes the duration.
std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

}  // namespace ydt::io
