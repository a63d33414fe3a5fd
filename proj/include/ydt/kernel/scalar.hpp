#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ydt {

namespace detail {
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;
}  // namespace detail

/// Raised when scalars from incompatible fields meet, or a residue
/// operation is impossible (division by zero, non-invertible denominator).
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ground field descriptor: p == 0 is the rationals, otherwise F_p.
struct Field {
    std::uint64_t p = 0;

    static Field rationals() { return {}; }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p == 0; }
    std::string name() const;

    bool operator==(const Field&) const = default;
};

/// Exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator. Values
/// whose numerator and denominator fit in 64 bits use an inline fast path;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits. Residues satisfy 0 <= value < p.
///
/// A rational operand meeting a residue is reduced mod p first, so integer
/// literals such as Scalar(-1) can be mixed freely with F_p data. Residues
/// of different primes never mix.
class Scalar {
public:
    Scalar() noexcept = default;
    Scalar(long long value) noexcept : num_(value) {}   // NOLINT: implicit from integer literals
    Scalar(int value) noexcept : num_(value) {}         // NOLINT

    static Scalar rational(long long num, long long den);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(long long value, std::uint64_t p);

    /// Parses "n", "-n", "n/d" (rationals) or an integer reduced into `field`.
    static Scalar parse(std::string_view text, Field field);

    Scalar(const Scalar& other);
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&&) noexcept = default;
    ~Scalar() = default;

    bool is_zero() const noexcept { return num_ == 0 && !big_; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1 && !big_; }
    bool is_residue() const noexcept { return p_ != 0; }
    std::uint64_t modulus() const noexcept { return p_; }
    Field field() const noexcept { return Field{p_}; }

    /// Value converted into `field` (identity when already there).
    Scalar in_field(Field field) const;

    mpq_class to_mpq() const;
    /// Residue representative, or the numerator/denominator of a rational.
    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    /// this += a * b, avoiding a temporary in the common small case.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    static Scalar from_mpq(mpq_class q);
    static Scalar from_i128(detail::i128 num, detail::i128 den);
    void unify(Scalar& other);
    void to_residue(std::uint64_t p);

    std::int64_t num_ = 0;   // rational numerator, or residue value
    std::int64_t den_ = 1;   // rational denominator; 1 for residues
    std::uint64_t p_ = 0;
    std::unique_ptr<mpq_class> big_;   // set only when num/den overflow 64 bits
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ydt
