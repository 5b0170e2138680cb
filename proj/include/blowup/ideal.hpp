#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "blowup/polynomial.hpp"

namespace blowup {

/// Finitely generated ideal in F[x_0, ..., x_{n-1}] with a term order.
/// Zero generators are dropped on construction.
class Ideal {
public:
    Ideal(const Field& field, std::size_t nvars, std::vector<Polynomial> generators,
          MonomialOrder order = MonomialOrder::grevlex());

    static Ideal unit(const Field& field, std::size_t nvars) {
        return Ideal(field, nvars, {Polynomial::constant(field, nvars, 1)});
    }

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    /// I + J (same ring and order).
    Ideal operator+(const Ideal& other) const;
    Ideal with(std::vector<Polynomial> extra) const;
    Ideal with_order(const MonomialOrder& order) const;

private:
    Field field_;
    std::size_t nvars_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
};

/// Reduced Groebner basis: monic elements sorted by leading monomial,
/// largest first. The unit ideal is represented by {1}.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    Field field;
    std::size_t nvars;

    bool is_unit() const { return elements.size() == 1 && elements.front().is_unit(); }
    std::vector<Monomial> leading_monomials() const;
};

struct GroebnerOptions {
    /// Abort with ResourceLimitError when a pair's lcm exceeds this total
    /// degree; 0 disables the guard.
    std::size_t max_degree = 0;
    /// Re-check every computed basis (S-pairs reduce to zero, reducedness);
    /// a failure throws InternalError.
    bool verify = false;
    /// Called with every finished basis.
    std::function<void(const GroebnerBasis&)> on_basis;
};

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& options = {});

/// Multivariate division remainder against a Groebner basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// S-polynomial of two nonzero polynomials under `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's criterion without shortcuts: every S-pair reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& basis);
/// Monic elements whose leading monomials divide no term of another element.
bool is_reduced(const GroebnerBasis& basis);

bool contains(const Ideal& ideal, const Polynomial& p, const GroebnerOptions& options = {});

/// Generators of I^k: all k-fold products of generators, duplicates removed.
Ideal ideal_power(const Ideal& ideal, unsigned k);

/// p in I^k, via the expanded generators of I^k.
bool ideal_power_membership(const Polynomial& p, const Ideal& ideal, unsigned k,
                            const GroebnerOptions& options = {});

/// V(I) is empty over the algebraic closure, i.e. 1 in I.
bool is_empty_affine(const Ideal& ideal, const GroebnerOptions& options = {});

/// g in rad(I), decided by 1 in I + (1 - t*g) with one extra variable t.
bool radical_membership(const Polynomial& g, const Ideal& ideal,
                        const GroebnerOptions& options = {});

/// Dimension of V(I): the largest set of variables independent modulo the
/// leading-term ideal. std::nullopt when V(I) is empty.
std::optional<std::size_t> krull_dimension(const Ideal& ideal, const GroebnerOptions& options = {});

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial determinant(const PolyMatrix& m);

/// Ideal of all c x c minors. c == 0 gives the unit ideal; c larger than
/// either dimension throws StructuralError.
Ideal minors_ideal(const PolyMatrix& m, std::size_t c, const Field& field, std::size_t nvars);

}  // namespace blowup
