#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace blowup {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
public:
    Field() : p_(0) {}
    static Field rational() { return Field(0); }
    /// Throws InputError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    std::string describe() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq_class canonical form); residues lie in [0, p-1].
/// Arithmetic between elements of different fields throws StructuralError.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpz_class& value);
    /// Rational numerator/denominator; for prime fields the quotient is
    /// taken mod p (denominator must be a unit).
    Scalar(const Field& field, const mpz_class& num, const mpz_class& den);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    /// True when the canonical rendering starts with a minus sign.
    bool is_negative() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Integer, or "a/b" for non-integral rationals; residues as their
    /// representative in [0, p-1].
    std::string to_string() const;

    const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    explicit Scalar(Residue r) : value_(r) {}
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    void check_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> value_;
};

}  // namespace blowup
