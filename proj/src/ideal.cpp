#include "blowup/ideal.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "blowup/errors.hpp"

namespace blowup {

Ideal::Ideal(const Field& field, std::size_t nvars, std::vector<Polynomial> generators,
             MonomialOrder order)
    : field_(field), nvars_(nvars), order_(order) {
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw StructuralError("ideal generator has the wrong variable count");
        if (g.field() != field) throw StructuralError("ideal generator over another field");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::operator+(const Ideal& other) const {
    if (other.nvars_ != nvars_ || other.field_ != field_)
        throw StructuralError("sum of ideals in different rings");
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), other.gens_.begin(), other.gens_.end());
    return Ideal(field_, nvars_, std::move(g), order_);
}

Ideal Ideal::with(std::vector<Polynomial> extra) const {
    std::vector<Polynomial> g = gens_;
    for (auto& e : extra) g.push_back(std::move(e));
    return Ideal(field_, nvars_, std::move(g), order_);
}

Ideal Ideal::with_order(const MonomialOrder& order) const {
    return Ideal(field_, nvars_, gens_, order);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_term(order).first);
    return out;
}

namespace {

using Term = Polynomial::Term;
// Terms sorted by the active order, largest first.
using TermVec = std::vector<Term>;

struct Context {
    const MonomialOrder& order;
    Field field;
    std::size_t nvars;
};

TermVec to_terms(const Polynomial& p, const MonomialOrder& order) { return p.sorted_terms(order); }

Polynomial from_terms(const TermVec& t, const Context& ctx) {
    Polynomial p(ctx.field, ctx.nvars);
    for (const auto& [m, c] : t) p.add_term(m, c);
    return p;
}

// p[from..] - c * m * g, merged in order.
TermVec sub_scaled(const TermVec& p, std::size_t from, const Scalar& c, const Monomial& m,
                   const TermVec& g, const MonomialOrder& order) {
    TermVec out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from;
    std::size_t j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        Monomial gm = g[j].first * m;
        if (i == p.size()) {
            out.emplace_back(std::move(gm), -(g[j].second * c));
            ++j;
            continue;
        }
        auto cmp = order.compare(p[i].first, gm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.emplace_back(std::move(gm), -(g[j].second * c));
            ++j;
        } else {
            Scalar s = p[i].second - g[j].second * c;
            if (!s.is_zero()) out.emplace_back(std::move(gm), std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(TermVec& t) {
    if (t.empty() || t.front().second.is_one()) return;
    const Scalar inv = t.front().second.inverse();
    for (auto& term : t) term.second *= inv;
}

// Full reduction of p by the (monic) basis elements in `basis` whose
// indices are listed in `active`; returns the remainder.
TermVec reduce(TermVec p, const std::vector<TermVec>& basis, const std::vector<std::size_t>& active,
               const MonomialOrder& order) {
    TermVec rem;
    std::size_t head = 0;
    while (head < p.size()) {
        const auto& [lm, lc] = p[head];
        const TermVec* divisor = nullptr;
        for (auto idx : active) {
            if (basis[idx].front().first.divides(lm)) {
                divisor = &basis[idx];
                break;
            }
        }
        if (divisor == nullptr) {
            rem.push_back(p[head]);
            ++head;
            continue;
        }
        Monomial q = divisor->front().first.quotient_of(lm);
        Scalar c = lc;
        p = sub_scaled(p, head, c, q, *divisor, order);
        head = 0;
    }
    return rem;
}

TermVec spoly(const TermVec& f, const TermVec& g, const MonomialOrder& order) {
    const Monomial l = f.front().first.lcm(g.front().first);
    const Monomial mf = f.front().first.quotient_of(l);
    const Monomial mg = g.front().first.quotient_of(l);
    TermVec scaled_f;
    scaled_f.reserve(f.size());
    const Scalar inv_f = f.front().second.inverse();
    for (const auto& [m, c] : f) scaled_f.emplace_back(m * mf, c * inv_f);
    const Scalar inv_g = g.front().second.inverse();
    return sub_scaled(scaled_f, 0, inv_g, mg, g, order);
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

void verify_basis(const GroebnerBasis& basis) {
    if (!is_reduced(basis)) throw InternalError("computed Groebner basis is not reduced");
    if (!s_pairs_reduce_to_zero(basis))
        throw InternalError("computed Groebner basis has an S-pair with nonzero remainder");
}

GroebnerBasis finish(GroebnerBasis basis, const GroebnerOptions& options) {
    if (options.verify) verify_basis(basis);
    if (options.on_basis) options.on_basis(basis);
    return basis;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& options) {
    const MonomialOrder& order = ideal.order();
    const Context ctx{order, ideal.field(), ideal.nvars()};
    GroebnerBasis result{{}, order, ideal.field(), ideal.nvars()};

    std::vector<TermVec> basis;
    std::vector<bool> alive;
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_index;

    auto unit_result = [&]() {
        result.elements = {Polynomial::constant(ctx.field, ctx.nvars, 1)};
        return finish(std::move(result), options);
    };

    auto add_element = [&](TermVec t) {
        make_monic(t);
        const std::size_t n = basis.size();
        for (std::size_t k = 0; k < n; ++k) {
            if (!alive[k]) continue;
            pending.push_back({k, n, basis[k].front().first.lcm(t.front().first)});
            pending_index.emplace(k, n);
        }
        basis.push_back(std::move(t));
        alive.push_back(true);
    };

    auto active_indices = [&]() {
        std::vector<std::size_t> a;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (alive[k]) a.push_back(k);
        return a;
    };

    for (const auto& g : ideal.generators()) {
        TermVec t = reduce(to_terms(g, order), basis, active_indices(), order);
        if (t.empty()) continue;
        if (t.front().first.is_one()) return unit_result();
        add_element(std::move(t));
    }

    while (!pending.empty()) {
        // Normal strategy: smallest lcm first, ties broken by indices.
        auto best = pending.begin();
        for (auto it = std::next(best); it != pending.end(); ++it) {
            auto c = order.compare(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
        }
        Pair pair = *best;
        pending.erase(best);
        pending_index.erase({pair.i, pair.j});

        if (options.max_degree != 0 && pair.lcm.degree() > options.max_degree)
            throw ResourceLimitError("Groebner computation exceeded the degree bound " +
                                     std::to_string(options.max_degree));

        const Monomial& lm_i = basis[pair.i].front().first;
        const Monomial& lm_j = basis[pair.j].front().first;
        if (lm_i.coprime(lm_j)) continue;

        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pair.i || k == pair.j || !alive[k]) continue;
            if (!basis[k].front().first.divides(pair.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending_index.contains(key(pair.i, k)) && !pending_index.contains(key(pair.j, k)))
                chain = true;
        }
        if (chain) continue;

        TermVec r = reduce(spoly(basis[pair.i], basis[pair.j], order), basis, active_indices(), order);
        if (r.empty()) continue;
        if (r.front().first.is_one()) return unit_result();
        add_element(std::move(r));
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    const std::size_t n = basis.size();
    std::vector<bool> keep(n, true);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const auto& la = basis[a].front().first;
            const auto& lb = basis[b].front().first;
            if (lb.divides(la) && (la != lb || b < a)) keep[a] = false;
        }
    }
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < n; ++a)
        if (keep[a]) kept.push_back(a);

    // Interreduce tails.
    std::vector<TermVec> reduced;
    for (auto a : kept) {
        std::vector<std::size_t> others;
        for (auto b : kept)
            if (b != a) others.push_back(b);
        TermVec tail(basis[a].begin() + 1, basis[a].end());
        TermVec rem = reduce(std::move(tail), basis, others, order);
        TermVec full;
        full.reserve(rem.size() + 1);
        full.push_back(basis[a].front());
        full.insert(full.end(), rem.begin(), rem.end());
        reduced.push_back(std::move(full));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TermVec& a, const TermVec& b) {
        return order.greater(a.front().first, b.front().first);
    });
    for (const auto& t : reduced) result.elements.push_back(from_terms(t, ctx));
    return finish(std::move(result), options);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (p.nvars() != basis.nvars || p.field() != basis.field)
        throw StructuralError("normal form against a basis from another ring");
    std::vector<TermVec> terms;
    std::vector<std::size_t> active;
    for (const auto& g : basis.elements) {
        active.push_back(terms.size());
        TermVec t = to_terms(g, basis.order);
        make_monic(t);
        terms.push_back(std::move(t));
    }
    const Context ctx{basis.order, basis.field, basis.nvars};
    return from_terms(reduce(to_terms(p, basis.order), terms, active, basis.order), ctx);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw StructuralError("S-polynomial of a zero polynomial");
    const Context ctx{order, f.field(), f.nvars()};
    return from_terms(spoly(to_terms(f, order), to_terms(g, order), order), ctx);
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& basis) {
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        for (std::size_t j = i + 1; j < basis.elements.size(); ++j) {
            auto s = s_polynomial(basis.elements[i], basis.elements[j], basis.order);
            if (!normal_form(s, basis).is_zero()) return false;
        }
    return true;
}

bool is_reduced(const GroebnerBasis& basis) {
    const auto lms = basis.leading_monomials();
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const auto& g = basis.elements[i];
        if (g.is_zero() || !g.leading_term(basis.order).second.is_one()) return false;
        for (std::size_t j = 0; j < basis.elements.size(); ++j) {
            if (i == j) continue;
            for (const auto& [m, c] : basis.elements[j].terms())
                if (lms[i].divides(m)) return false;
        }
    }
    return true;
}

bool contains(const Ideal& ideal, const Polynomial& p, const GroebnerOptions& options) {
    if (p.is_zero()) return true;
    return normal_form(p, groebner(ideal, options)).is_zero();
}

Ideal ideal_power(const Ideal& ideal, unsigned k) {
    const auto& gens = ideal.generators();
    std::vector<Polynomial> products;
    if (k == 0 || gens.empty()) {
        if (k == 0) return Ideal::unit(ideal.field(), ideal.nvars()).with_order(ideal.order());
        return ideal;
    }
    // Enumerate multisets of generator indices of size k in lexicographic order.
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        Polynomial prod = gens[idx[0]];
        for (unsigned a = 1; a < k; ++a) prod *= gens[idx[a]];
        if (std::find(products.begin(), products.end(), prod) == products.end())
            products.push_back(std::move(prod));
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == gens.size() - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned a = pos + 1; a < k; ++a) idx[a] = idx[pos];
    }
    return Ideal(ideal.field(), ideal.nvars(), std::move(products), ideal.order());
}

bool ideal_power_membership(const Polynomial& p, const Ideal& ideal, unsigned k,
                            const GroebnerOptions& options) {
    if (k == 0) throw StructuralError("ideal power exponent must be positive");
    return contains(ideal_power(ideal, k), p, options);
}

bool is_empty_affine(const Ideal& ideal, const GroebnerOptions& options) {
    return groebner(ideal, options).is_unit();
}

bool radical_membership(const Polynomial& g, const Ideal& ideal, const GroebnerOptions& options) {
    if (g.nvars() != ideal.nvars() || g.field() != ideal.field())
        throw StructuralError("radical membership across rings");
    const std::size_t n = ideal.nvars();
    std::vector<Polynomial> gens;
    for (const auto& h : ideal.generators()) gens.push_back(extend(h, 1));
    Polynomial t = Polynomial::variable(ideal.field(), n + 1, n);
    gens.push_back(Polynomial::constant(ideal.field(), n + 1, 1) - t * extend(g, 1));
    return is_empty_affine(Ideal(ideal.field(), n + 1, std::move(gens), ideal.order()), options);
}

std::optional<std::size_t> krull_dimension(const Ideal& ideal, const GroebnerOptions& options) {
    const auto basis = groebner(ideal, options);
    if (basis.is_unit()) return std::nullopt;
    const auto lms = basis.leading_monomials();
    const std::size_t n = ideal.nvars();
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lm : lms) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v)
                if (lm[v] != 0 && !(mask & (std::size_t{1} << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

Polynomial determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw StructuralError("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    Polynomial det(m[0][0].field(), m[0][0].nvars());
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * determinant(sub);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && cur[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++cur[pos];
        for (std::size_t i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
}

}  // namespace

Ideal minors_ideal(const PolyMatrix& m, std::size_t c, const Field& field, std::size_t nvars) {
    if (c == 0) return Ideal::unit(field, nvars);
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    if (c > std::min(rows, cols))
        throw StructuralError("minor size exceeds the matrix dimensions");
    std::vector<std::vector<std::size_t>> row_sets;
    std::vector<std::vector<std::size_t>> col_sets;
    subsets(rows, c, row_sets);
    subsets(cols, c, col_sets);
    std::vector<Polynomial> minors;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            PolyMatrix sub;
            for (auto r : rs) {
                std::vector<Polynomial> row;
                for (auto cc : cs) row.push_back(m[r][cc]);
                sub.push_back(std::move(row));
            }
            minors.push_back(determinant(sub));
        }
    return Ideal(field, nvars, std::move(minors));
}

}  // namespace blowup
