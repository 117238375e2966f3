#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "errors.hpp"

namespace jumploci {

/// Ground field: the rationals, or F_p for an odd prime p < 2^31.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rational() { return Field{}; }

    static Field modular(std::uint32_t p) {
        if (p == 2) {
            throw InputError("characteristic 2 is not supported: graded commutativity degenerates");
        }
        if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
            throw InputError("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
        }
        Field f;
        f.p_ = p;
        return f;
    }

    constexpr bool is_rational() const { return p_ == 0; }
    constexpr std::uint32_t prime() const { return p_; }

    std::string name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

    friend constexpr bool operator==(Field, Field) = default;

private:
    static constexpr bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) return false;
        }
        return true;
    }

    std::uint32_t p_ = 0;
};

/// Exact scalar: an arbitrary precision rational or a residue modulo an odd prime.
/// Arithmetic between scalars of different fields throws InputError.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    Scalar(Field f, long n) {
        if (f.is_rational()) {
            value_ = mpq_class(n);
        } else {
            value_ = Residue{reduce(n, f.prime()), f.prime()};
        }
    }

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.value_ = q;
        std::get<mpq_class>(s.value_).canonicalize();
        return s;
    }

    static Scalar rational(long num, long den) {
        if (den == 0) throw InputError("zero denominator");
        return rational(mpq_class(num, den));
    }

    Field field() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return Field::modular(r->p);
        return Field::rational();
    }

    bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

    bool is_zero() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return r->r == 0;
        return sgn(std::get<mpq_class>(value_)) == 0;
    }

    const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
    std::int64_t residue() const { return std::get<Residue>(value_).r; }

    /// Image in another field. Rationals reduce mod p when the denominator is a unit.
    Scalar to_field(Field f) const {
        if (f == field()) return *this;
        if (!is_rational() || f.is_rational()) {
            throw InputError("cannot move scalar " + to_string() + " to field " + f.name());
        }
        const auto& q = as_rational();
        const std::uint32_t p = f.prime();
        const mpz_class num = q.get_num() % p;
        const mpz_class den = q.get_den() % p;
        if (den == 0) throw InputError("denominator of " + to_string() + " vanishes mod " + std::to_string(p));
        Scalar n(f, num.get_si());
        Scalar d(f, den.get_si());
        return n / d;
    }

    Scalar& operator+=(const Scalar& o) {
        if (auto* r = std::get_if<Residue>(&value_)) {
            const auto& s = residue_of(o, r->p);
            r->r += s.r;
            if (r->r >= r->p) r->r -= r->p;
        } else {
            std::get<mpq_class>(value_) += rational_of(o);
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& o) {
        if (auto* r = std::get_if<Residue>(&value_)) {
            const auto& s = residue_of(o, r->p);
            r->r -= s.r;
            if (r->r < 0) r->r += r->p;
        } else {
            std::get<mpq_class>(value_) -= rational_of(o);
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& o) {
        if (auto* r = std::get_if<Residue>(&value_)) {
            const auto& s = residue_of(o, r->p);
            r->r = (r->r * s.r) % r->p;
        } else {
            std::get<mpq_class>(value_) *= rational_of(o);
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (const auto* r = std::get_if<Residue>(&value_)) {
            return from_residue(pow_mod(r->r, r->p - 2, r->p), r->p);
        }
        Scalar s;
        s.value_ = mpq_class(1) / as_rational();
        return s;
    }

    Scalar operator-() const {
        Scalar s = *this;
        if (auto* r = std::get_if<Residue>(&s.value_)) {
            r->r = r->r == 0 ? 0 : r->p - r->r;
        } else {
            auto& q = std::get<mpq_class>(s.value_);
            q = -q;
        }
        return s;
    }

    Scalar pow(unsigned e) const {
        Scalar result = one(field());
        Scalar base = *this;
        while (e > 0) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.value_.index() != b.value_.index()) return false;
        if (const auto* r = std::get_if<Residue>(&a.value_)) {
            const auto& s = std::get<Residue>(b.value_);
            return r->p == s.p && r->r == s.r;
        }
        return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    }

    /// "n", "n/d" or "k mod p".
    std::string to_string() const {
        if (const auto* r = std::get_if<Residue>(&value_)) {
            return std::to_string(r->r) + " mod " + std::to_string(r->p);
        }
        return as_rational().get_str();
    }

    /// Parses the serialized forms. Plain integers and fractions land in `field`;
    /// an explicit "k mod p" must agree with `field` unless `field` is Q.
    static Scalar parse(std::string_view text, Field field = Field::rational()) {
        std::string s(text);
        const auto mod_pos = s.find("mod");
        try {
            if (mod_pos != std::string::npos) {
                const long k = std::stol(s.substr(0, mod_pos));
                const long p = std::stol(s.substr(mod_pos + 3));
                if (p <= 0) throw InputError("bad modulus in '" + s + "'");
                const Field f = Field::modular(static_cast<std::uint32_t>(p));
                if (!field.is_rational() && field != f) {
                    throw InputError("scalar '" + s + "' does not live in " + field.name());
                }
                return Scalar(f, k);
            }
            mpq_class q;
            if (q.set_str(trim(s), 10) != 0) throw InputError("unparseable scalar '" + s + "'");
            if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
            q.canonicalize();
            return rational(q).to_field(field);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
            throw InputError("unparseable scalar '" + s + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct Residue {
        std::int64_t r;
        std::int64_t p;
    };

    static std::int64_t reduce(long n, std::int64_t p) {
        std::int64_t r = n % p;
        return r < 0 ? r + p : r;
    }

    static std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
        std::int64_t result = 1;
        b %= p;
        while (e > 0) {
            if (e & 1) result = result * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return result;
    }

    static Scalar from_residue(std::int64_t r, std::int64_t p) {
        Scalar s;
        s.value_ = Residue{r, p};
        return s;
    }

    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return {};
        std::string out = s.substr(b, e - b + 1);
        if (!out.empty() && out.front() == '+') out.erase(0, 1);
        return out;
    }

    static const Residue& residue_of(const Scalar& o, std::int64_t p) {
        const auto* r = std::get_if<Residue>(&o.value_);
        if (r == nullptr || r->p != p) throw InputError("mixed field arithmetic");
        return *r;
    }

    static const mpq_class& rational_of(const Scalar& o) {
        const auto* q = std::get_if<mpq_class>(&o.value_);
        if (q == nullptr) throw InputError("mixed field arithmetic");
        return *q;
    }

    std::variant<mpq_class, Residue> value_;
};

}  // namespace jumploci
