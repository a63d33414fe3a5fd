#include "ydt/io/format.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <regex>

namespace ydt::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field_of(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::size_t index_of(const Json& j, std::size_t bound, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(where + ": index must be a nonnegative integer");
    const auto v = j.get<std::size_t>();
    if (v >= bound) fail(where + ": index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
    return v;
}

std::vector<std::string> labels_from_json(const Json& j, const std::string& where) {
    const Json& b = field_of(j, "basis", where);
    if (!b.is_array() || b.empty()) fail(where + ": 'basis' must be a nonempty list of labels");
    std::vector<std::string> out;
    for (const auto& x : b) {
        if (!x.is_string()) fail(where + ": basis labels must be strings");
        out.push_back(x.get<std::string>());
    }
    if (j.contains("dim") && j.at("dim") != Json(out.size())) fail(where + ": 'dim' disagrees with the basis");
    return out;
}

// sparse entries [i_1, ..., i_r, c]; `dims` bounds each index, `place` maps them to a dense offset
std::vector<Scalar> sparse_from_json(const Json& j, const std::vector<std::size_t>& dims, std::size_t total,
                                     Field field, const std::string& where,
                                     const std::function<std::size_t(const std::vector<std::size_t>&)>& place) {
    if (!j.is_array()) fail(where + ": expected a list of entries");
    std::vector<Scalar> dense(total, Scalar(0).in_field(field));
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != dims.size() + 1)
            fail(where + ": each entry needs " + std::to_string(dims.size()) + " indices and a coefficient");
        std::vector<std::size_t> idx(dims.size());
        for (std::size_t k = 0; k < dims.size(); ++k) idx[k] = index_of(e[k], dims[k], where);
        dense[place(idx)] += scalar_from_json(e.back(), field);
    }
    return dense;
}

Json dense_to_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

std::vector<Scalar> dense_from_json(const Json& j, std::size_t n, Field field, const std::string& where) {
    if (!j.is_array() || j.size() != n) fail(where + ": expected " + std::to_string(n) + " coefficients");
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(scalar_from_json(x, field));
    return out;
}

Json map_entries(const LinearMap& m) {
    Json out = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) out.push_back(Json::array({c, r, scalar_to_json(m(r, c))}));
    return out;
}

LinearMap square_from_entries(const Json& j, const Leg& l, Field field, const std::string& where) {
    const std::size_t n = l.dim;
    return LinearMap({l}, {l},
                     sparse_from_json(j, {n, n}, n * n, field, where, [n](const auto& i) { return i[1] * n + i[0]; }));
}

const std::regex kPower(R"(S\^(-?\d+))");

}  // namespace

// ---------------------------------------------------------------- scalars and fields

Field field_from_json(const Json& j) {
    const Json& t = field_of(j, "type", "field");
    if (t == "Q") return Field::rationals();
    if (t == "Fp") {
        const Json& p = field_of(j, "p", "field");
        if (!p.is_number_unsigned()) fail("field: 'p' must be a positive integer");
        try {
            return Field::prime(p.get<std::uint64_t>());
        } catch (const FieldError& e) {
            fail(std::string("field: ") + e.what());
        }
    }
    fail("field: unknown type " + t.dump());
}

Json field_to_json(Field f) {
    if (f.is_rational()) return Json{{"type", "Q"}};
    return Json{{"type", "Fp"}, {"p", f.p}};
}

Field parse_field_flag(std::string_view text) {
    if (text == "Q") return Field::rationals();
    std::string_view digits;
    if (text.starts_with("Fp:"))
        digits = text.substr(3);
    else if (text.starts_with("F"))
        digits = text.substr(1);
    else
        fail("unknown field '" + std::string(text) + "' (expected Q, F<p> or Fp:<p>)");
    try {
        std::size_t used = 0;
        const unsigned long long p = std::stoull(std::string(digits), &used);
        if (used != digits.size()) throw std::invalid_argument("trailing characters");
        return Field::prime(p);
    } catch (const FieldError& e) {
        fail(e.what());
    } catch (const std::exception&) {
        fail("malformed field '" + std::string(text) + "'");
    }
}

Scalar scalar_from_json(const Json& j, Field field) {
    if (j.is_number_integer()) return Scalar(j.get<long long>()).in_field(field);
    if (!j.is_string()) fail("scalar must be a string or an integer, got " + j.dump());
    try {
        return Scalar::parse(j.get<std::string>(), field);
    } catch (const FieldError& e) {
        fail(e.what());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_residue()) return Json(std::stoull(s.to_string()));
    return Json(s.to_string());
}

// ---------------------------------------------------------------- Hopf algebras

HopfPtr builtin_hopf(const std::string& name, Field field) {
    if (name.starts_with("dual:")) return dual_of(builtin_hopf(name.substr(5), field));
    if (name == "S3") return symmetric_group_s3(field);
    if (name == "sweedler4") return sweedler4(field);
    if (name.size() > 1 && name[0] == 'C' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const auto n = std::stoull(name.substr(1));
        if (n == 0 || n > 64) fail("cyclic group order out of range: " + name);
        return cyclic_group_algebra(n, field);
    }
    fail("unknown builtin algebra '" + name + "'");
}

HopfPtr hopf_from_json(const Json& j, bool validate, std::optional<Field> field) {
    if (!j.is_object()) fail("Hopf algebra document must be an object");
    if (j.contains("builtin")) {
        const Json& b = j.at("builtin");
        if (!b.is_string()) fail("'builtin' must be a name");
        Field f = field ? *field : j.contains("field") ? field_from_json(j.at("field")) : Field{};
        return builtin_hopf(b.get<std::string>(), f);
    }
    const std::string where = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "algebra";
    HopfAlgebra::Data d;
    d.name = where;
    d.field = field ? *field : field_from_json(field_of(j, "field", where));
    d.basis = labels_from_json(j, where);
    const std::size_t n = d.basis.size();
    const Leg l = leg(d.space, n);
    d.mul = LinearMap({l}, {l, l},
                      sparse_from_json(field_of(j, "mul", where), {n, n, n}, n * n * n, d.field, where + " mul",
                                       [n](const auto& i) { return i[2] * n * n + i[0] * n + i[1]; }));
    d.comul = LinearMap({l, l}, {l},
                        sparse_from_json(field_of(j, "comul", where), {n, n, n}, n * n * n, d.field,
                                         where + " comul", [n](const auto& i) { return (i[1] * n + i[2]) * n + i[0]; }));
    d.unit = Tensor({l}, dense_from_json(field_of(j, "unit", where), n, d.field, where + " unit"));
    d.counit = LinearMap({}, {l}, dense_from_json(field_of(j, "counit", where), n, d.field, where + " counit"));
    d.antipode = square_from_entries(field_of(j, "antipode", where), l, d.field, where + " antipode");
    if (j.contains("automorphisms")) {
        for (const auto& a : j.at("automorphisms")) {
            const Json& nm = field_of(a, "name", where + " automorphism");
            if (!nm.is_string()) fail(where + ": automorphism name must be a string");
            d.automorphisms.push_back({nm.get<std::string>(), square_from_entries(field_of(a, "map", where), l, d.field,
                                                                                  where + " automorphism " + nm.get<std::string>())});
        }
    }
    return validate ? HopfAlgebra::validated(std::move(d)) : HopfAlgebra::create(std::move(d));
}

Json hopf_to_json(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    Json j;
    j["name"] = h.name();
    j["field"] = field_to_json(h.field());
    j["dim"] = n;
    j["basis"] = h.basis();
    Json mul = Json::array(), comul = Json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& m = h.mul()(c, a * n + b);
                if (!m.is_zero()) mul.push_back(Json::array({a, b, c, scalar_to_json(m)}));
                const Scalar& d = h.comul()(b * n + c, a);
                if (!d.is_zero()) comul.push_back(Json::array({a, b, c, scalar_to_json(d)}));
            }
    j["mul"] = std::move(mul);
    j["comul"] = std::move(comul);
    j["unit"] = dense_to_json(h.unit().data());
    j["counit"] = dense_to_json(h.counit().dense());
    j["antipode"] = map_entries(h.antipode());
    if (!h.extra_automorphisms().empty()) {
        Json auts = Json::array();
        for (const auto& a : h.extra_automorphisms()) auts.push_back(Json{{"name", a.name}, {"map", map_entries(a.map)}});
        j["automorphisms"] = std::move(auts);
    }
    return j;
}

// ---------------------------------------------------------------- automorphisms

HopfAutomorphism automorphism_from_json(const Json& ref, const HopfAlgebra& h) {
    if (ref.is_string()) {
        const std::string name = ref.get<std::string>();
        if (name == "id") return HopfAutomorphism::identity(h);
        std::smatch m;
        if (std::regex_match(name, m, kPower)) {
            const int k = std::stoi(m[1]);
            if (k % 2 != 0) fail("'" + name + "' is an anti-automorphism; only even powers of S are allowed");
            return antipode_power(h, k / 2);
        }
        for (const auto& a : h.extra_automorphisms())
            if (a.name == name) {
                auto inv = try_inverse(a.map);
                if (!inv) fail("automorphism " + name + " is singular");
                return HopfAutomorphism(name, a.map, *inv);
            }
        fail("unknown automorphism '" + name + "' for " + h.name());
    }
    const Json& nm = field_of(ref, "name", "automorphism");
    if (!nm.is_string()) fail("automorphism name must be a string");
    const std::string name = nm.get<std::string>();
    const LinearMap map = square_from_entries(field_of(ref, "map", name), h.leg(), h.field(), "automorphism " + name);
    Report r = automorphism_report(h, map, name);
    if (const CheckResult* bad = r.first_failure())
        throw AxiomError("automorphism " + name + " fails '" + bad->id + "' (" + bad->anchor + ")", r);
    return HopfAutomorphism(name, map);
}

Json automorphism_to_json(const HopfAutomorphism& a, const HopfAlgebra& h) {
    try {
        if (automorphism_from_json(Json(a.name()), h).map() == a.map()) return Json(a.name());
    } catch (const InputError&) {
    }
    return Json{{"name", a.name()}, {"map", map_entries(a.map())}};
}

std::vector<HopfAutomorphism> automorphism_list_from_json(const Json& j, const HopfAlgebra& h) {
    const Json& list = field_of(j, "automorphisms", "automorphism file");
    if (!list.is_array()) fail("automorphism file: 'automorphisms' must be a list");
    std::vector<HopfAutomorphism> out{HopfAutomorphism::identity(h)};
    for (const auto& ref : list) {
        HopfAutomorphism a = automorphism_from_json(ref, h);
        bool seen = false;
        for (const auto& b : out) seen = seen || b == a;
        if (!seen) out.push_back(std::move(a));
    }
    return out;
}

// ---------------------------------------------------------------- modules

YDModule module_from_json(const Json& j, const HopfPtr& hp) {
    const HopfAlgebra& h = *hp;
    const std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "M";
    const std::vector<std::string> basis = labels_from_json(j, name);
    const Json& comp = field_of(j, "component", name);
    if (!comp.is_array() || comp.size() != 2) fail(name + ": 'component' must be [alpha, beta]");
    GroupElement c{automorphism_from_json(comp[0], h), automorphism_from_json(comp[1], h)};
    const std::size_t n = h.dim(), d = basis.size();
    LinearMap action({leg("M", d)}, {h.leg(), leg("M", d)},
                     sparse_from_json(field_of(j, "action", name), {n, d, d}, n * d * d, h.field(), name + " action",
                                      [n, d](const auto& i) { return i[2] * n * d + i[0] * d + i[1]; }));
    LinearMap coaction({leg("M", d), h.leg()}, {leg("M", d)},
                       sparse_from_json(field_of(j, "coaction", name), {d, d, n}, n * d * d, h.field(),
                                        name + " coaction", [n, d](const auto& i) { return (i[1] * n + i[2]) * d + i[0]; }));
    return make_module(hp, name, basis, std::move(c), action, coaction);
}

Json module_to_json(const YDModule& m) {
    const HopfAlgebra& h = *m.hopf;
    const std::size_t n = h.dim(), d = m.dim();
    Json j;
    j["name"] = m.name;
    j["dim"] = d;
    j["basis"] = m.basis;
    j["component"] = Json::array({automorphism_to_json(m.component.alpha, h), automorphism_to_json(m.component.beta, h)});
    Json act = Json::array(), coact = Json::array();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                const Scalar& s = m.action(y, a * d + x);
                if (!s.is_zero()) act.push_back(Json::array({a, x, y, scalar_to_json(s)}));
            }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t a = 0; a < n; ++a) {
                const Scalar& s = m.coaction(y * n + a, x);
                if (!s.is_zero()) coact.push_back(Json::array({x, y, a, scalar_to_json(s)}));
            }
    j["action"] = std::move(act);
    j["coaction"] = std::move(coact);
    return j;
}

// ---------------------------------------------------------------- files

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace ydt::io
