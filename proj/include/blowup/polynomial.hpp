#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blowup/monomial.hpp"
#include "blowup/scalar.hpp"

namespace blowup {

/// Sparse multivariate polynomial: a map from monomials to nonzero
/// coefficients over a fixed field and a fixed number of variables.
/// The zero polynomial is the empty map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;
    using Term = std::pair<Monomial, Scalar>;

    Polynomial() = default;
    Polynomial(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial constant(const Field& field, std::size_t nvars, const Scalar& c);
    static Polynomial constant(const Field& field, std::size_t nvars, long c) {
        return constant(field, nvars, Scalar(field, c));
    }
    static Polynomial variable(const Field& field, std::size_t nvars, std::size_t index);
    static Polynomial term(const Field& field, const Monomial& m, const Scalar& c);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Nonzero constant.
    bool is_unit() const;
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    Scalar coefficient(const Monomial& m) const;

    /// Largest term with respect to `order`. Precondition: nonzero.
    Term leading_term(const MonomialOrder& order) const;
    /// Terms sorted by `order`, largest first.
    std::vector<Term> sorted_terms(const MonomialOrder& order) const;

    /// Adds c*m, dropping the entry when the sum cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned k) const;
    Polynomial multiply_monomial(const Monomial& m, const Scalar& c) const;

    /// Rescales so that the leading coefficient under `order` is 1.
    Polynomial monic(const MonomialOrder& order) const;

private:
    void check_compatible(const Polynomial& other) const;

    Field field_;
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Formal partial derivative in variable `var`; coefficients are field
/// elements, so in characteristic p the exponent multiplier reduces mod p.
Polynomial partial(const Polynomial& p, std::size_t var);

/// Replaces variable i by images[i]. Variables absent from the map are
/// left in place; every image must live in p's ring.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images);

/// Full change of ring: variable i maps to images[i] (images.size() ==
/// p.nvars()); every image must share one target variable count.
Polynomial substitute_all(const Polynomial& p, std::span<const Polynomial> images);

/// Sum of the terms whose total degree in `vars` is exactly k.
Polynomial graded_part(const Polynomial& p, std::span<const std::size_t> vars, unsigned k);

/// Largest k with t^k dividing p (p nonzero).
unsigned valuation_in(const Polynomial& p, std::size_t var);

/// Exact division by var^k. Throws InternalError if not exact.
Polynomial divide_by_power(const Polynomial& p, std::size_t var, unsigned k);

/// Moves p into a ring with the listed variables only (in that order).
/// Throws StructuralError when p involves a dropped variable.
Polynomial restrict_to(const Polynomial& p, std::span<const std::size_t> keep);

/// Embeds p into a ring with `extra` additional trailing variables.
Polynomial extend(const Polynomial& p, std::size_t extra);

/// Canonical text: terms in descending `order`, explicit `*`, `^` powers,
/// integer or a/b coefficients. The zero polynomial renders as "0".
std::string render(const Polynomial& p, std::span<const std::string> names,
                   const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace blowup
