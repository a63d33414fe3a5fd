#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ydt/ydmod.hpp"

namespace ydt::io {

using Json = nlohmann::ordered_json;

/// {"type":"Q"} or {"type":"Fp","p":<prime>}.
Field field_from_json(const Json& j);
Json field_to_json(Field f);
/// Command-line spelling: "Q", "Fp:<p>" or "F<p>".
Field parse_field_flag(std::string_view text);

/// Rationals as "num/den" (or "n") strings, residues as integers. Both
/// spellings are accepted on input.
Scalar scalar_from_json(const Json& j, Field field);
Json scalar_to_json(const Scalar& s);

/// Builtin algebras: C<n>, S3, sweedler4, and "dual:<name>" for the dual.
HopfPtr builtin_hopf(const std::string& name, Field field = {});

/// Parses a Hopf algebra document or a builtin request {"builtin": name,
/// "field": ...}. With `validate` the Hopf axioms are enforced (AxiomError);
/// otherwise only shapes are checked. `field` overrides the document's field.
HopfPtr hopf_from_json(const Json& j, bool validate = true, std::optional<Field> field = {});
Json hopf_to_json(const HopfAlgebra& h);

/// "id", "S^<2l>", the name of one of h's extra automorphisms, or an inline
/// {"name": ..., "map": [[i, j, "c"], ...]} with θ(e_i) ∋ c e_j.
HopfAutomorphism automorphism_from_json(const Json& ref, const HopfAlgebra& h);
/// The name when it resolves back to the same map, else the inline form.
Json automorphism_to_json(const HopfAutomorphism& a, const HopfAlgebra& h);
/// {"automorphisms": [ref, ...]}; the identity is always included first.
std::vector<HopfAutomorphism> automorphism_list_from_json(const Json& j, const HopfAlgebra& h);

/// Module document over `h`: name, basis, component [ref, ref], sparse
/// action [[h, m, m', "c"], ...] and coaction [[m, m', h, "c"], ...].
YDModule module_from_json(const Json& j, const HopfPtr& h);
Json module_to_json(const YDModule& m);

/// Reads and parses a JSON file; InputError on a missing file or bad syntax.
Json load_json(const std::filesystem::path& path);

/// FNV-1a 64-bit hash, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace ydt::io
