#include "blowup/scalar.hpp"

#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
    mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31U))
        throw InputError("prime field modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::describe() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(const Field& field, const mpz_class& value) {
    if (field.is_rational())
        value_ = mpq_class(value);
    else
        value_ = Residue{reduce_mod(value, field.characteristic()), field.characteristic()};
}

Scalar::Scalar(const Field& field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (field.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        value_ = std::move(q);
    } else {
        Scalar n(field, num);
        Scalar d(field, den);
        *this = n / d;
    }
}

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
    return Field::rational();
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
    return false;
}

void Scalar::check_same_field(const Scalar& other) const {
    if (value_.index() != other.value_.index())
        throw StructuralError("scalar arithmetic mixes rational and prime-field elements");
    if (const auto* r = std::get_if<Residue>(&value_)) {
        if (r->modulus != std::get<Residue>(other.value_).modulus)
            throw StructuralError("scalar arithmetic mixes different prime fields");
    }
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = (r->value + std::get<Residue>(rhs.value_).value) % r->modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = r->value * std::get<Residue>(rhs.value_).value % r->modulus;
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (const auto* r = std::get_if<Residue>(&value_))
        return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

}  // namespace blowup
