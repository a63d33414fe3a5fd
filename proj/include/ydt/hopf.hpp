#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ydt/kernel/linalg.hpp"
#include "ydt/kernel/linear_map.hpp"
#include "ydt/kernel/verify.hpp"

namespace ydt {

/// Malformed or out-of-contract input (bad table, unknown label, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when data violates an axiom it is required to satisfy. Carries
/// the report that located the failure.
class AxiomError : public std::runtime_error {
public:
    AxiomError(const std::string& what, Report report) : std::runtime_error(what), report_(std::move(report)) {}
    const Report& report() const noexcept { return report_; }

private:
    Report report_;
};

/// Automorphism supplied alongside an algebra (e.g. induced by a group automorphism).
struct NamedMap {
    std::string name;
    LinearMap map;
};

/// Finite-dimensional Hopf algebra given by structure constants.
///
/// Every structure map is a LinearMap whose legs live in space(): mul is
/// H⊗H → H, comul H → H⊗H, counit H → k, antipode H → H. The unit is a
/// vector in H. Instances are immutable and shared through HopfPtr.
class HopfAlgebra {
public:
    struct Data {
        std::string name;
        Field field;
        std::string space = "H";
        std::vector<std::string> basis;
        LinearMap mul, comul, counit, antipode;
        Tensor unit;
        std::optional<LinearMap> antipode_inv;   // computed when absent
        std::vector<NamedMap> automorphisms;
    };

    /// Checks shapes only; use validated() to also enforce the Hopf axioms.
    static std::shared_ptr<const HopfAlgebra> create(Data data);
    static std::shared_ptr<const HopfAlgebra> validated(Data data);

    const std::string& name() const noexcept { return d_.name; }
    Field field() const noexcept { return d_.field; }
    std::size_t dim() const noexcept { return d_.basis.size(); }
    const std::vector<std::string>& basis() const noexcept { return d_.basis; }
    SpaceId space() const noexcept { return space_; }
    Leg leg() const noexcept { return Leg{space_, dim()}; }
    Shape legs(std::size_t n) const { return Shape(n, leg()); }

    const LinearMap& mul() const noexcept { return d_.mul; }
    const Tensor& unit() const noexcept { return d_.unit; }
    const LinearMap& comul() const noexcept { return d_.comul; }
    const LinearMap& counit() const noexcept { return d_.counit; }
    const LinearMap& antipode() const noexcept { return d_.antipode; }
    const LinearMap& antipode_inv() const noexcept { return *d_.antipode_inv; }
    const std::vector<NamedMap>& extra_automorphisms() const noexcept { return d_.automorphisms; }
    const Data& data() const noexcept { return d_; }

    LinearMap identity() const { return LinearMap::identity({leg()}); }
    Tensor basis_vector(std::size_t i) const;
    std::size_t basis_index(const std::string& label) const;

    /// Δ^(n-1): H → H^{⊗n}, cached. Both bracketings of the first
    /// nontrivial iterate are compared on first use.
    const LinearMap& iterated_coproduct(std::size_t n) const;

private:
    explicit HopfAlgebra(Data data);

    Data d_;
    SpaceId space_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::unique_ptr<LinearMap>> coproducts_;
    mutable bool coassoc_checked_ = false;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Per-leg basis labels for error reports.
std::vector<std::vector<std::string>> labels_for(const HopfAlgebra& h, std::size_t legs);

LinearMap iterated_coproduct(const HopfAlgebra& h, std::size_t n);

// ---------------------------------------------------------------- builtins

/// Group algebra k[G] from a multiplication table over elements 0..n-1
/// (element 0 need not be the identity; it is located from the table).
HopfPtr group_algebra(const std::string& name, const std::vector<std::vector<std::size_t>>& table,
                      std::vector<std::string> labels, Field field = {},
                      const std::vector<std::pair<std::string, std::vector<std::size_t>>>& group_auts = {});
HopfPtr cyclic_group_algebra(std::size_t n, Field field = {});
HopfPtr symmetric_group_s3(Field field = {});
/// Sweedler's 4-dimensional algebra, basis {1, g, x, gx}.
HopfPtr sweedler4(Field field = {});
/// H* with convolution product, transposed coproduct and antipode.
HopfPtr dual_of(const HopfPtr& h);

/// Linear map on k[G] permuting the group basis.
LinearMap permutation_map(const HopfAlgebra& h, const std::vector<std::size_t>& perm);

// ---------------------------------------------------------------- axioms

Report check_hopf_axioms(const HopfAlgebra& h);

// ---------------------------------------------------------------- automorphisms

class HopfAutomorphism {
public:
    HopfAutomorphism(std::string name, LinearMap map);
    HopfAutomorphism(std::string name, LinearMap map, LinearMap inverse);
    static HopfAutomorphism identity(const HopfAlgebra& h);

    const std::string& name() const noexcept { return name_; }
    const LinearMap& map() const noexcept { return map_; }
    const LinearMap& inverse_map() const noexcept { return inv_; }
    bool is_identity() const;

    HopfAutomorphism inverse() const;
    /// a * b is the composite a∘b.
    friend HopfAutomorphism operator*(const HopfAutomorphism& a, const HopfAutomorphism& b);
    friend bool operator==(const HopfAutomorphism& a, const HopfAutomorphism& b) { return a.map_ == b.map_; }

private:
    std::string name_;
    LinearMap map_, inv_;
};

/// Invertible and compatible with multiplication, unit, comultiplication,
/// counit and antipode.
bool check_automorphism(const HopfAlgebra& h, const LinearMap& theta);
Report automorphism_report(const HopfAlgebra& h, const LinearMap& theta, const std::string& name);

/// id, S², …, S^{2·l_max} (deduplicated) followed by the algebra's extra
/// automorphisms; every candidate is verified.
std::vector<HopfAutomorphism> standard_automorphisms(const HopfAlgebra& h, int l_max);

/// S^{2l} for any integer l (negative powers use S⁻¹).
HopfAutomorphism antipode_power(const HopfAlgebra& h, int l);
/// S^k as a plain linear map, any integer k.
LinearMap antipode_pow(const HopfAlgebra& h, int k);

// ---------------------------------------------------------------- duality

enum class Side { left, right };

/// H ⊗ H* → H*, (h⇀p)(l) = p(lh).
LinearMap harpoon_left(const HopfAlgebra& h, const HopfAlgebra& dual);
/// H* ⊗ H → H*, (p↼h)(l) = p(hl).
LinearMap harpoon_right(const HopfAlgebra& h, const HopfAlgebra& dual);
/// Evaluation H* ⊗ H → k.
LinearMap evaluation(const HopfAlgebra& h, const HopfAlgebra& dual);
/// h⇀p (left) or p↼h (right) for single elements.
Tensor regular_action(Side side, const HopfAlgebra& h, const HopfAlgebra& dual, const Tensor& elem, const Tensor& p);
/// p ∘ θ as a map H* → H* (the transpose of θ relabeled onto the dual).
LinearMap dual_map(const LinearMap& theta, const HopfAlgebra& dual);

}  // namespace ydt
