#pragma once

// Textbook Buchberger over Q on its own term representation: every S-pair
// is processed, no criteria, no pair ordering heuristics. Used only as an
// independent oracle for the library's Groebner kernel.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "blowup/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

enum class Order { Lex, Grevlex };

inline bool greater(const Exps& a, const Exps& b, Order order) {
    if (order == Order::Grevlex) {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    return a > b;
}

struct Poly {
    std::map<Exps, mpq_class> terms;

    bool zero() const { return terms.empty(); }

    void add(const Exps& e, const mpq_class& c) {
        auto& slot = terms[e];
        slot += c;
        if (slot == 0) terms.erase(e);
    }

    std::pair<Exps, mpq_class> lead(Order order) const {
        auto best = terms.begin();
        for (auto it = terms.begin(); it != terms.end(); ++it)
            if (greater(it->first, best->first, order)) best = it;
        return *best;
    }
};

inline Poly from_library(const blowup::Polynomial& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Exps e(m.exponents().begin(), m.exponents().end());
        out.add(e, *c.as_rational());
    }
    return out;
}

inline bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Division algorithm with divisors tried in the given sequence.
inline Poly remainder(Poly p, const std::vector<Poly>& divisors, Order order) {
    Poly rem;
    while (!p.zero()) {
        auto [lm, lc] = p.lead(order);
        bool divided = false;
        for (const auto& g : divisors) {
            if (g.zero()) continue;
            auto [gm, gc] = g.lead(order);
            if (!divides(gm, lm)) continue;
            Exps q(lm.size());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = lm[i] - gm[i];
            const mpq_class factor = lc / gc;
            for (const auto& [e, c] : g.terms) {
                Exps s(e.size());
                for (std::size_t i = 0; i < s.size(); ++i) s[i] = e[i] + q[i];
                p.add(s, -factor * c);
            }
            divided = true;
            break;
        }
        if (!divided) {
            rem.add(lm, lc);
            p.terms.erase(lm);
        }
    }
    return rem;
}

inline Poly spoly(const Poly& f, const Poly& g, Order order) {
    auto [fm, fc] = f.lead(order);
    auto [gm, gc] = g.lead(order);
    Exps l(fm.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(fm[i], gm[i]);
    Poly s;
    for (const auto& [e, c] : f.terms) {
        Exps t(e.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = e[i] + l[i] - fm[i];
        s.add(t, c / fc);
    }
    for (const auto& [e, c] : g.terms) {
        Exps t(e.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = e[i] + l[i] - gm[i];
        s.add(t, -c / gc);
    }
    return s;
}

inline std::vector<Poly> groebner(std::vector<Poly> gens, Order order) {
    std::vector<Poly> g;
    for (auto& p : gens)
        if (!p.zero()) g.push_back(std::move(p));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Poly r = remainder(spoly(g[i], g[j], order), g, order);
        if (r.zero()) continue;
        g.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    return g;
}

/// Reduced form of a Groebner basis: minimal, monic, tails reduced;
/// sorted by leading monomial, largest first.
inline std::vector<Poly> reduce_basis(std::vector<Poly> g, Order order) {
    std::vector<Poly> minimal;
    for (std::size_t a = 0; a < g.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < g.size() && !drop; ++b) {
            if (a == b) continue;
            auto la = g[a].lead(order).first;
            auto lb = g[b].lead(order).first;
            if (divides(lb, la) && (la != lb || b < a)) drop = true;
        }
        if (!drop) minimal.push_back(g[a]);
    }
    std::vector<Poly> out;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Poly> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        Poly r = remainder(minimal[a], others, order);
        // Leading term survives because the basis is minimal.
        const mpq_class lc = r.lead(order).second;
        Poly monic;
        for (const auto& [e, c] : r.terms) monic.add(e, c / lc);
        out.push_back(std::move(monic));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
        return greater(a.lead(order).first, b.lead(order).first, order);
    });
    return out;
}

inline bool member(const Poly& p, const std::vector<Poly>& gens, Order order = Order::Grevlex) {
    return remainder(p, groebner(gens, order), order).zero();
}

inline bool empty_variety(const std::vector<Poly>& gens, Order order = Order::Grevlex) {
    for (const auto& g : groebner(gens, order)) {
        if (g.zero()) continue;
        const auto lm = g.lead(order).first;
        if (std::all_of(lm.begin(), lm.end(), [](int e) { return e == 0; })) return true;
    }
    return false;
}

/// True when some ordering of the divisors leaves remainder zero: a sound
/// (incomplete) membership certificate.
inline bool division_certifies(const Poly& p, std::vector<Poly> gens, Order order) {
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Poly> seq;
        for (auto i : perm) seq.push_back(gens[i]);
        if (remainder(p, seq, order).zero()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
