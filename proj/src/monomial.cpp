#include "blowup/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "blowup/errors.hpp"

namespace blowup {

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
}

std::uint32_t Monomial::degree_in(std::span<const std::size_t> vars) const {
    std::uint32_t d = 0;
    for (auto v : vars) d += exps_[v];
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial q(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
    q.degree_ = other.degree_ - degree_;
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial Monomial::with_exponent(std::size_t index, std::uint32_t e) const {
    Monomial m = *this;
    m.degree_ = m.degree_ - m.exps_.at(index) + e;
    m.exps_[index] = e;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exps_.size() != b.exps_.size())
        throw StructuralError("monomial product with mismatched variable counts");
    Monomial m(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

namespace {

// Degree first, then the monomial with the smaller exponent in the last
// differing variable is larger.
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
    std::uint32_t da = 0;
    std::uint32_t db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::GradedReverseLex: {
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (std::size_t i = a.size(); i-- > 0;) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        }
        case Kind::Lex: {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] <=> b[i];
            }
            return std::strong_ordering::equal;
        }
        case Kind::BlockElimination: {
            const std::size_t split = std::min(split_, a.size());
            if (auto c = grevlex_range(a, b, 0, split); c != 0) return c;
            return grevlex_range(a, b, split, a.size());
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace blowup
