#include "ydt/kernel/scalar.hpp"

#include <limits>
#include <ostream>

namespace ydt {

namespace {

using detail::i128;
using detail::u128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from_i128(i128 v) {
    u128 mag = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e != 0) {
        if (e & 1U) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1U;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p > (std::uint64_t{1} << 62)) throw FieldError("prime modulus out of range: " + std::to_string(p));
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) throw FieldError("modulus is not prime: " + std::to_string(p));
    return Field{p};
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }

Scalar Scalar::rational(long long num, long long den) {
    if (den == 0) throw FieldError("zero denominator");
    return from_i128(num, den);
}

Scalar Scalar::rational(const mpq_class& q) { return from_mpq(q); }

Scalar Scalar::residue(long long value, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    i128 m = static_cast<i128>(value) % static_cast<i128>(p);
    if (m < 0) m += p;
    s.num_ = static_cast<std::int64_t>(m);
    return s;
}

Scalar Scalar::parse(std::string_view text, Field field) {
    std::string t(text);
    auto slash = t.find('/');
    mpz_class num, den(1);
    auto bad = [&] { return std::invalid_argument("malformed scalar \"" + t + "\""); };
    if (t.empty()) throw bad();
    if (num.set_str(t.substr(0, slash), 10) != 0) throw bad();
    if (slash != std::string::npos && den.set_str(t.substr(slash + 1), 10) != 0) throw bad();
    if (den == 0) throw FieldError("zero denominator in \"" + t + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(q).in_field(field);
}

Scalar::Scalar(const Scalar& other)
    : num_(other.num_), den_(other.den_), p_(other.p_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Scalar& Scalar::operator=(const Scalar& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        p_ = other.p_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

Scalar Scalar::from_mpq(mpq_class q) {
    q.canonicalize();
    Scalar s;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
    } else {
        s.num_ = 1;   // nonzero marker; the value lives in big_
        s.big_ = std::make_unique<mpq_class>(std::move(q));
    }
    return s;
}

Scalar Scalar::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Scalar{};
    if (den != 1) {
        u128 g = gcd128(abs128(num), static_cast<u128>(den));
        if (g > 1) {
            num /= static_cast<i128>(g);
            den /= static_cast<i128>(g);
        }
    }
    if (fits64(num) && fits64(den)) {
        Scalar s;
        s.num_ = static_cast<std::int64_t>(num);
        s.den_ = static_cast<std::int64_t>(den);
        return s;
    }
    return from_mpq(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

void Scalar::to_residue(std::uint64_t p) {
    std::uint64_t n = 0;
    std::uint64_t d = 1;
    if (big_) {
        n = reduce_mpz(big_->get_num(), p);
        d = reduce_mpz(big_->get_den(), p);
    } else {
        i128 m = static_cast<i128>(num_) % static_cast<i128>(p);
        if (m < 0) m += p;
        n = static_cast<std::uint64_t>(m);
        d = static_cast<std::uint64_t>(static_cast<i128>(den_) % static_cast<i128>(p));
    }
    if (d == 0) throw FieldError("denominator " + to_string() + " not invertible mod " + std::to_string(p));
    big_.reset();
    p_ = p;
    den_ = 1;
    num_ = static_cast<std::int64_t>(mod_mul(n, mod_pow(d, p - 2, p), p));
}

Scalar Scalar::in_field(Field field) const {
    if (field.p == p_) return *this;
    if (p_ != 0) throw FieldError("cannot move " + Field{p_}.name() + " value into " + field.name());
    Scalar s = *this;
    s.to_residue(field.p);
    return s;
}

void Scalar::unify(Scalar& other) {
    if (p_ == other.p_) return;
    if (other.p_ == 0) {
        other.to_residue(p_);
    } else if (p_ == 0) {
        to_residue(other.p_);
    } else {
        throw FieldError("mixed fields " + Field{p_}.name() + " and " + Field{other.p_}.name());
    }
}

std::string Scalar::to_string() const {
    if (big_) return big_->get_str();
    if (p_ != 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ != 0) {
        if (num_ != 0) r.num_ = static_cast<std::int64_t>(p_ - static_cast<std::uint64_t>(num_));
    } else if (big_) {
        r = from_mpq(-*big_);
    } else if (num_ == kMin64) {
        r = from_i128(-static_cast<i128>(num_), den_);
    } else {
        r.num_ = -num_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    if (p_ != 0) {
        Scalar r = *this;
        r.num_ = static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(num_), p_ - 2, p_));
        return r;
    }
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (p_ != rhs.p_) {
        Scalar r = rhs;
        unify(r);
        return *this += r;
    }
    if (rhs.is_zero()) return *this;
    if (p_ != 0) {
        std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(rhs.num_);
        if (s >= p_) s -= p_;
        num_ = static_cast<std::int64_t>(s);
        return *this;
    }
    if (big_ || rhs.big_) return *this = from_mpq(to_mpq() + rhs.to_mpq());
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_add_overflow(num_, rhs.num_, &s)) {
            num_ = s;
            return *this;
        }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    return *this = from_i128(n, d);
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (p_ != rhs.p_) {
        Scalar r = rhs;
        unify(r);
        return *this *= r;
    }
    if (is_zero()) return *this;
    if (rhs.is_zero()) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return *this;
    }
    if (p_ != 0) {
        num_ = static_cast<std::int64_t>(
            mod_mul(static_cast<std::uint64_t>(num_), static_cast<std::uint64_t>(rhs.num_), p_));
        return *this;
    }
    if (big_ || rhs.big_) return *this = from_mpq(to_mpq() * rhs.to_mpq());
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t s = 0;
        if (!__builtin_mul_overflow(num_, rhs.num_, &s)) {
            num_ = s;
            return *this;
        }
    }
    i128 n = static_cast<i128>(num_) * rhs.num_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    return *this = from_i128(n, d);
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (p_ == a.p_ && p_ == b.p_ && !big_ && !a.big_ && !b.big_) {
        if (p_ != 0) {
            std::uint64_t prod = mod_mul(static_cast<std::uint64_t>(a.num_), static_cast<std::uint64_t>(b.num_), p_);
            std::uint64_t s = static_cast<std::uint64_t>(num_) + prod;
            if (s >= p_) s -= p_;
            num_ = static_cast<std::int64_t>(s);
            return;
        }
        if (den_ == 1 && a.den_ == 1 && b.den_ == 1) {
            std::int64_t prod = 0;
            std::int64_t s = 0;
            if (!__builtin_mul_overflow(a.num_, b.num_, &prod) && !__builtin_add_overflow(num_, prod, &s)) {
                num_ = s;
                return;
            }
        }
    }
    *this += a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) {
        Scalar x = a;
        Scalar y = b;
        x.unify(y);
        return x == y;
    }
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ydt
