#include "blowup/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

Polynomial Polynomial::constant(const Field& field, std::size_t nvars, const Scalar& c) {
    Polynomial p(field, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(const Field& field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw StructuralError("variable index out of range");
    Polynomial p(field, nvars);
    p.add_term(Monomial::variable(nvars, index), Scalar::one(field));
    return p;
}

Polynomial Polynomial::term(const Field& field, const Monomial& m, const Scalar& c) {
    Polynomial p(field, m.size());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_unit() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one();
}

bool Polynomial::is_constant() const { return is_zero() || is_unit(); }

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.degree());
    return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Polynomial::Term Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw StructuralError("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return *best;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
    return out;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) throw StructuralError("term has the wrong number of variables");
    if (c.field() != field_) throw StructuralError("term coefficient from another field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw StructuralError("polynomials have mismatched variable counts (" +
                              std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) +
                              ")");
    if (field_ != other.field_)
        throw StructuralError("polynomials are over different fields (" + field_.describe() +
                              " vs " + other.field_.describe() + ")");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_compatible(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
    if (rhs.field() != field_) throw StructuralError("scalar from another field");
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= rhs;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(field_, nvars_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Scalar& c) const {
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return *this * leading_term(order).second.inverse();
}

Polynomial partial(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw StructuralError("partial derivative variable out of range");
    Polynomial r(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        const auto e = m[var];
        if (e == 0) continue;
        r.add_term(m.with_exponent(var, e - 1), c * Scalar(p.field(), static_cast<long>(e)));
    }
    return r;
}

namespace {

class PowerCache {
public:
    explicit PowerCache(Polynomial base) : powers_{} { base_ = std::move(base); }

    const Polynomial& get(unsigned k) {
        if (powers_.empty()) powers_.push_back(Polynomial::constant(base_.field(), base_.nvars(), 1));
        while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
        return powers_[k];
    }

private:
    Polynomial base_;
    std::vector<Polynomial> powers_;
};

}  // namespace

Polynomial substitute_all(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars())
        throw StructuralError("substitution must provide one image per variable");
    if (images.empty()) return p;
    const auto target = images.front().nvars();
    for (const auto& img : images) {
        if (img.nvars() != target)
            throw StructuralError("substitution images have mismatched variable counts");
        if (img.field() != p.field()) throw StructuralError("substitution image from another field");
    }
    std::vector<PowerCache> caches;
    caches.reserve(images.size());
    for (const auto& img : images) caches.emplace_back(img);

    Polynomial result(p.field(), target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(p.field(), target, c);
        for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
            if (m[i] != 0) t *= caches[i].get(m[i]);
        result += t;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images) {
    std::vector<Polynomial> full;
    full.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        auto it = images.find(i);
        if (it == images.end()) {
            full.push_back(Polynomial::variable(p.field(), p.nvars(), i));
        } else {
            if (it->second.nvars() != p.nvars())
                throw StructuralError("substitution image lives in a different ring");
            full.push_back(it->second);
        }
    }
    for (const auto& [i, img] : images)
        if (i >= p.nvars()) throw StructuralError("substitution variable out of range");
    return substitute_all(p, full);
}

Polynomial graded_part(const Polynomial& p, std::span<const std::size_t> vars, unsigned k) {
    Polynomial r(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.degree_in(vars) == k) r.add_term(m, c);
    return r;
}

unsigned valuation_in(const Polynomial& p, std::size_t var) {
    if (p.is_zero()) throw StructuralError("valuation of the zero polynomial");
    unsigned v = ~0U;
    for (const auto& [m, c] : p.terms()) v = std::min<unsigned>(v, m[var]);
    return v;
}

Polynomial divide_by_power(const Polynomial& p, std::size_t var, unsigned k) {
    Polynomial r(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] < k) throw InternalError("inexact division by a variable power");
        r.add_term(m.with_exponent(var, m[var] - k), c);
    }
    return r;
}

Polynomial restrict_to(const Polynomial& p, std::span<const std::size_t> keep) {
    std::vector<bool> kept(p.nvars(), false);
    for (auto v : keep) kept.at(v) = true;
    Polynomial r(p.field(), keep.size());
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!kept[i] && m[i] != 0)
                throw StructuralError("polynomial involves a variable outside the target ring");
        std::vector<std::uint32_t> e(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) e[j] = m[keep[j]];
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial extend(const Polynomial& p, std::size_t extra) {
    Polynomial r(p.field(), p.nvars() + extra);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
        e.resize(p.nvars() + extra, 0);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::string render(const Polynomial& p, std::span<const std::string> names,
                   const MonomialOrder& order) {
    if (names.size() != p.nvars()) throw StructuralError("render needs one name per variable");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(order)) {
        std::string coeff = c.to_string();
        bool negative = c.is_negative();
        if (negative) coeff.erase(0, 1);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        const bool unit_coeff = coeff == "1";
        if (m.is_one()) {
            out << coeff;
            continue;
        }
        if (!unit_coeff) out << coeff << '*';
        bool first_factor = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_factor) out << '*';
            first_factor = false;
            out << names[i];
            if (m[i] > 1) out << '^' << m[i];
        }
    }
    return out.str();
}

}  // namespace blowup
