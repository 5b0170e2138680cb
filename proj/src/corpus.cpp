#include "blowup/corpus.hpp"

#include <algorithm>

namespace blowup {

namespace {

Ring quadric_ring(unsigned n) {
    Ring r;
    for (unsigned i = 1; i <= n; ++i) r.names.push_back("x" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) r.names.push_back("y" + std::to_string(i));
    return r;
}

Polynomial quadric(const Ring& r, unsigned n) {
    Polynomial f(r.field, r.nvars());
    for (unsigned i = 0; i < n; ++i) f += r.var(i) * r.var(n + i);
    return f;
}

Center center(std::string name, std::vector<std::size_t> vanishing) {
    return Center{std::move(name), std::move(vanishing), {}};
}

// rng() % n keeps corpora identical across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

long small_coefficient(std::mt19937_64& rng) {
    const long c = static_cast<long>(pick(rng, 7)) - 3;
    return c == 0 ? 1 : c;
}

// Monomial of total degree `deg` supported on `vars`.
Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, const std::vector<std::size_t>& vars,
                         unsigned deg) {
    Monomial m(nvars);
    for (unsigned i = 0; i < deg && !vars.empty(); ++i) {
        const auto v = vars[pick(rng, vars.size())];
        m = m.with_exponent(v, m[v] + 1);
    }
    return m;
}

// Random polynomial in `vars` with every term of degree in [lo, hi].
Polynomial random_form(std::mt19937_64& rng, const Ring& ring, const std::vector<std::size_t>& vars,
                       unsigned lo, unsigned hi, std::size_t max_terms) {
    Polynomial p(ring.field, ring.nvars());
    if (hi < lo) return p;
    const std::size_t terms = 1 + pick(rng, max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        const unsigned deg = lo + static_cast<unsigned>(pick(rng, hi - lo + 1));
        p.add_term(random_monomial(rng, ring.nvars(), vars, deg), Scalar(ring.field, small_coefficient(rng)));
    }
    return p;
}

}  // namespace

Scene quadric_cone_along_normal(unsigned n) {
    Ring r = quadric_ring(n);
    std::vector<std::size_t> ys;
    for (unsigned i = 0; i < n; ++i) ys.push_back(n + i);
    return Scene(r, quadric(r, n), {center("X", ys)});
}

Scene quadric_cone_at_origin(unsigned n) {
    Ring r = quadric_ring(n);
    std::vector<std::size_t> all;
    for (unsigned i = 0; i < 2 * n; ++i) all.push_back(i);
    return Scene(r, quadric(r, n), {center("O", all)});
}

std::vector<NamedScene> fixture_corpus() {
    std::vector<NamedScene> out;
    for (unsigned n = 1; n <= 3; ++n) {
        out.push_back({"quadric-cone-" + std::to_string(n) + "-along-normal", quadric_cone_along_normal(n)});
        out.push_back({"quadric-cone-" + std::to_string(n) + "-at-origin", quadric_cone_at_origin(n)});
    }
    {
        Ring r{Field::rational(), {"x", "y"}};
        out.push_back({"cusp", Scene(r, r.parse("x^2 - y^3"), {center("O", {0, 1})})});
    }
    {
        Ring r{Field::rational(), {"x", "y", "z"}};
        out.push_back({"non-ordinary-double-point", Scene(r, r.parse("x^2 - y^2*z^2"), {center("O", {0, 1, 2})})});
        out.push_back({"whitney-umbrella-axis", Scene(r, r.parse("x^2 - y^2*z"), {center("L", {0, 1})})});
    }
    {
        Ring r{Field::rational(), {"x", "y"}};
        out.push_back({"node", Scene(r, r.parse("x^2 - y^2"), {center("O", {0, 1})})});
        out.push_back({"smooth-line", Scene(r, r.parse("y + x*y"), {center("L", {1})})});
    }
    {
        // Nodes at (0,0) and (1,0), blown up at both.
        Ring r{Field::rational(), {"x", "y"}};
        const Scalar zero(r.field, 0L), one(r.field, 1L);
        std::vector<Center> cs{Center{"P", {0, 1}, {zero, zero}}, Center{"Q", {0, 1}, {one, zero}}};
        out.push_back({"two-nodes", Scene(r, r.parse("y^2 - x^2*(x - 1)^2"), cs)});
    }
    return out;
}

Scene random_scene(std::mt19937_64& rng, const RandomSceneOptions& options) {
    const std::size_t n = options.min_vars + pick(rng, options.max_vars - options.min_vars + 1);
    Ring ring;
    for (std::size_t i = 0; i < n; ++i) ring.names.push_back("z" + std::to_string(i + 1));
    const std::size_t d = 1 + pick(rng, n);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);
    std::vector<std::size_t> normal(order.begin(), order.begin() + static_cast<long>(d));
    std::sort(normal.begin(), normal.end());
    std::vector<std::size_t> tangent;
    for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(normal.begin(), normal.end(), i)) tangent.push_back(i);

    const unsigned top = options.max_degree;
    Polynomial f(ring.field, n);
    while (f.is_zero() || f.is_constant()) {
        f = Polynomial(ring.field, n);
        if (options.multiplicity_one) {
            for (auto y : normal) {
                // Affine-linear coefficients half the time keep B manageable.
                const unsigned cdeg = pick(rng, 2) == 0 ? 1 : top - 1;
                f += ring.var(y) * random_form(rng, ring, tangent, 0, cdeg, 3);
            }
            if (pick(rng, 2) == 0) f += random_form(rng, ring, normal, 2, std::min(top, 3u), 2);
            if (pick(rng, 2) == 0 && !tangent.empty() && top >= 3)
                f += random_form(rng, ring, normal, 2, 2, 2) * random_form(rng, ring, tangent, 1, top - 2, 2);
        } else {
            switch (pick(rng, 3)) {
                case 0: {
                    // Pure form of degree k in the normal variables plus higher order.
                    const unsigned k = 1 + static_cast<unsigned>(pick(rng, std::min(top, 3u)));
                    f = random_form(rng, ring, normal, k, k, 4);
                    if (k < top) f += random_form(rng, ring, normal, k + 1, top, 2);
                    break;
                }
                case 1: {
                    // Normal-degree-one part with tangent coefficients plus an I^2 tail.
                    for (auto y : normal) f += ring.var(y) * random_form(rng, ring, tangent, 0, top - 1, 2);
                    f += random_form(rng, ring, normal, 2, top, 3);
                    break;
                }
                default: {
                    // Arbitrary terms with positive normal degree.
                    const std::size_t terms = 1 + pick(rng, 5);
                    for (std::size_t t = 0; t < terms; ++t) {
                        const unsigned kdeg = 1 + static_cast<unsigned>(pick(rng, top));
                        Monomial m = random_monomial(rng, n, normal, kdeg);
                        if (kdeg < top && !tangent.empty())
                            m = m * random_monomial(rng, n, tangent, static_cast<unsigned>(pick(rng, top - kdeg + 1)));
                        f.add_term(m, Scalar(ring.field, small_coefficient(rng)));
                    }
                    break;
                }
            }
        }
    }
    return Scene(ring, f, {center("X", normal)});
}

std::vector<Scene> random_corpus(std::uint64_t seed, std::size_t count, const RandomSceneOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<Scene> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_scene(rng, options));
    return out;
}

}  // namespace blowup
