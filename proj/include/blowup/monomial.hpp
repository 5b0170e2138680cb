#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace blowup {

/// Exponent vector of fixed length with its total degree cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);
    Monomial(std::initializer_list<std::uint32_t> exps)
        : Monomial(std::vector<std::uint32_t>(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t degree_in(std::span<const std::size_t> vars) const;
    std::span<const std::uint32_t> exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    /// Precondition: divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial with_exponent(std::size_t index, std::uint32_t e) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Plain lexicographic comparison of exponent vectors; used only as the
    /// canonical storage key, not as a term order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Term order on monomials. Variable 0 is the largest variable.
class MonomialOrder {
public:
    enum class Kind { GradedReverseLex, Lex, BlockElimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    /// Variables [0, split) form the eliminated block; grevlex inside each block.
    static MonomialOrder block(std::size_t split) {
        return MonomialOrder(Kind::BlockElimination, split);
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}
    Kind kind_;
    std::size_t split_;
};

}  // namespace blowup
