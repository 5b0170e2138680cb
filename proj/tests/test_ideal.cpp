#include <doctest.h>

#include <random>

#include "blowup/errors.hpp"
#include "blowup/ideal.hpp"
#include "blowup/parser.hpp"
#include "oracle/naive_groebner.hpp"
#include "poly_printing.hpp"
#include "random_poly.hpp"

using namespace blowup;

namespace {

Ring ring(std::vector<std::string> names, Field field = Field::rational()) {
    return Ring{field, std::move(names)};
}

Ideal ideal(const Ring& r, std::initializer_list<const char*> gens,
            MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(r.parse(s));
    return Ideal(r.field, r.nvars(), std::move(g), order);
}

std::vector<oracle::Poly> to_oracle(const Ideal& I) {
    std::vector<oracle::Poly> out;
    for (const auto& g : I.generators()) out.push_back(oracle::from_library(g));
    return out;
}

GroebnerOptions verifying() {
    GroebnerOptions o;
    o.verify = true;
    return o;
}

}  // namespace

TEST_CASE("groebner examples") {
    auto xy = ring({"x", "y"});
    auto G = groebner(ideal(xy, {"x^2", "x*y + y^2"}), verifying());
    // Sorted by leading monomial, largest first: y^3 > x^2 > x*y.
    REQUIRE(G.elements.size() == 3);
    CHECK(G.elements[0] == xy.parse("y^3"));
    CHECK(G.elements[1] == xy.parse("x^2"));
    CHECK(G.elements[2] == xy.parse("x*y + y^2"));

    // Same answer from the naive textbook implementation.
    auto naive = oracle::reduce_basis(
        oracle::groebner(to_oracle(ideal(xy, {"x^2", "x*y + y^2"})), oracle::Order::Grevlex),
        oracle::Order::Grevlex);
    REQUIRE(naive.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(naive[i].terms == oracle::from_library(G.elements[i]).terms);

    auto principal = groebner(ideal(xy, {"3*x"}));
    REQUIRE(principal.elements.size() == 1);
    CHECK(principal.elements[0] == xy.parse("x"));

    CHECK(groebner(ideal(xy, {"1", "x"})).is_unit());
}

TEST_CASE("normal form decides membership") {
    auto xy = ring({"x", "y"});
    auto I = ideal(xy, {"x^2 - y", "x*y - 1"});
    auto G = groebner(I, verifying());
    auto combo = xy.parse("(x + 3*y^2)*(x^2 - y) + (7 - x)*(x*y - 1)");
    CHECK(normal_form(combo, G).is_zero());
    CHECK(normal_form(xy.constant(1), groebner(ideal(xy, {"x", "y"}))) == xy.constant(1));

    auto s = ring({"x1", "x2", "y1", "y2"});
    CHECK(normal_form(s.parse("x1*y1 + x2*y2"), groebner(ideal(s, {"y1", "y2"}))).is_zero());
}

TEST_CASE("ideal power membership") {
    auto s = ring({"x1", "x2", "y1", "y2"});
    auto f = s.parse("x1*y1 + x2*y2");
    auto normal = ideal(s, {"y1", "y2"});
    CHECK(ideal_power_membership(f, normal, 1));
    CHECK_FALSE(ideal_power_membership(f, normal, 2));
    auto origin = ideal(s, {"x1", "x2", "y1", "y2"});
    CHECK(ideal_power_membership(f, origin, 2));
    CHECK_FALSE(ideal_power_membership(f, origin, 3));

    // Oracle for monomial ideals (x,y)^k: every term has degree >= k in x,y.
    auto r = ring({"x", "y", "z"});
    auto g = r.parse("x^2 - y^2*z");
    const std::size_t xyv[] = {0, 1};
    for (unsigned k = 1; k <= 4; ++k) {
        bool expected = true;
        for (const auto& [m, c] : g.terms()) expected = expected && m.degree_in(xyv) >= k;
        CHECK(ideal_power_membership(g, ideal(r, {"x", "y"}), k) == expected);
    }
    CHECK(ideal_power_membership(g, ideal(r, {"x", "y"}), 2));
    CHECK_FALSE(ideal_power_membership(g, ideal(r, {"x", "y"}), 3));
    CHECK_THROWS_AS(ideal_power_membership(g, ideal(r, {"x"}), 0), StructuralError);
}

TEST_CASE("ideal power generators are the k-fold products") {
    auto r = ring({"a", "b", "c"});
    auto P = ideal_power(ideal(r, {"a", "b", "c"}), 2);
    CHECK(P.generators().size() == 6);
    auto Q = ideal_power(ideal(r, {"a", "a"}), 3);
    CHECK(Q.generators().size() == 1);
}

TEST_CASE("variety emptiness") {
    auto x = ring({"x"});
    CHECK(is_empty_affine(ideal(x, {"x", "x + 1"})));
    auto xy = ring({"x", "y"});
    CHECK_FALSE(is_empty_affine(ideal(xy, {"x", "y"})));

    // Singular locus of the quadric cone x1*y1 + ... + xn*yn is the origin.
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
        Ring r{Field::rational(), names};
        Polynomial f(r.field, r.nvars());
        for (int i = 0; i < n; ++i) f += r.var(i) * r.var(n + i);
        std::vector<Polynomial> gens{f};
        for (std::size_t v = 0; v < r.nvars(); ++v) gens.push_back(partial(f, v));
        for (std::size_t v = 0; v < r.nvars(); ++v) gens.push_back(r.var(v));
        CHECK_FALSE(is_empty_affine(Ideal(r.field, r.nvars(), gens)));
    }
}

TEST_CASE("radical membership") {
    auto y = ring({"y"});
    CHECK(radical_membership(y.parse("y"), ideal(y, {"y^2"})));
    auto xy = ring({"x", "y"});
    CHECK_FALSE(radical_membership(xy.parse("x"), ideal(xy, {"y"})));
    auto s = ring({"x1", "x2", "y1", "y2"});
    auto f = s.parse("x1*y1 + x2*y2");
    std::vector<Polynomial> jac;
    for (std::size_t v = 0; v < 4; ++v) jac.push_back(partial(f, v));
    Ideal J(s.field, 4, jac);
    auto G = groebner(J);
    CHECK(G.elements.size() == 4);
    CHECK(radical_membership(s.parse("y1"), J));
}

TEST_CASE("krull dimension") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < 2 * n; ++i) names.push_back("v" + std::to_string(i));
        Ring r{Field::rational(), names};
        std::vector<Polynomial> gens;
        for (int i = 0; i < n; ++i) gens.push_back(r.var(i));
        CHECK(krull_dimension(Ideal(r.field, r.nvars(), gens)) == std::optional<std::size_t>(n));

        Ring tangent{Field::rational(), std::vector<std::string>(names.begin(), names.begin() + n)};
        std::vector<Polynomial> coords;
        for (int i = 0; i < n; ++i) coords.push_back(tangent.var(i));
        CHECK(krull_dimension(Ideal(tangent.field, n, coords)) == std::optional<std::size_t>(0));
    }
    auto xy = ring({"x", "y"});
    CHECK(krull_dimension(ideal(xy, {"x*y"})) == std::optional<std::size_t>(1));
    CHECK(krull_dimension(ideal(xy, {"x", "x - 1"})) == std::nullopt);
    CHECK(krull_dimension(Ideal(xy.field, 2, {})) == std::optional<std::size_t>(2));
    // Twisted cubic: dimension 1.
    auto r3 = ring({"x", "y", "z"});
    CHECK(krull_dimension(ideal(r3, {"y - x^2", "z - x^3"})) == std::optional<std::size_t>(1));
}

TEST_CASE("coordinate-subspace dimension is N - c") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t N = 1 + rng() % 6;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < N; ++i) names.push_back("v" + std::to_string(i));
        Ring r{Field::rational(), names};
        std::vector<Polynomial> gens;
        std::size_t c = 0;
        for (std::size_t i = 0; i < N; ++i)
            if (rng() % 2) {
                gens.push_back(r.var(i));
                ++c;
            }
        CHECK(krull_dimension(Ideal(r.field, N, gens)) == std::optional<std::size_t>(N - c));
    }
}

TEST_CASE("minors ideals") {
    auto r = ring({"x1", "x2", "y1", "y2"});
    PolyMatrix id{{r.constant(1), r.constant(0)}, {r.constant(0), r.constant(1)}};
    CHECK(is_empty_affine(minors_ideal(id, 2, r.field, 4)));

    PolyMatrix m{{r.parse("y1"), r.parse("y2")}, {r.parse("x1"), r.parse("x2")}};
    auto M = minors_ideal(m, 2, r.field, 4);
    REQUIRE(M.generators().size() == 1);
    CHECK(M.generators()[0] == r.parse("y1*x2 - y2*x1"));

    auto f = r.parse("x1*y1 + x2*y2");
    PolyMatrix row{{}};
    for (std::size_t v = 0; v < 4; ++v) row[0].push_back(partial(f, v));
    auto J = minors_ideal(row, 1, r.field, 4);
    CHECK(J.generators().size() == 4);

    CHECK(is_empty_affine(minors_ideal(m, 0, r.field, 4)));
    CHECK_THROWS_AS(minors_ideal(m, 3, r.field, 4), StructuralError);
}

TEST_CASE("block elimination order eliminates the first block") {
    auto r = ring({"t", "x", "y"});
    auto I = ideal(r, {"x - t^2", "y - t^3"}, MonomialOrder::block(1));
    auto G = groebner(I, verifying());
    bool found = false;
    for (const auto& g : G.elements) {
        bool free_of_t = true;
        for (const auto& [m, c] : g.terms()) free_of_t = free_of_t && m[0] == 0;
        if (free_of_t) {
            found = true;
            CHECK(g == r.parse("x^3 - y^2"));
        }
    }
    CHECK(found);
}

TEST_CASE("degree guardrail") {
    auto r = ring({"x", "y", "z"});
    GroebnerOptions o;
    o.max_degree = 2;
    CHECK_THROWS_AS(groebner(ideal(r, {"x^3 - y*z", "y^3 - x*z", "z^3 - x*y"}), o),
                    ResourceLimitError);
}

TEST_CASE("prime field bases") {
    auto r = ring({"x", "y"}, Field::prime(2));
    // Over F_2, x^2 + 1 = (x + 1)^2.
    CHECK(radical_membership(r.parse("x + 1"), ideal(r, {"x^2 + 1"})));
    auto q = ring({"x", "y"});
    CHECK_FALSE(radical_membership(q.parse("x + 1"), ideal(q, {"x^2 + 1"})));
}

TEST_CASE("random ideals: bases are reduced and contain their generators") {
    std::mt19937_64 rng(424242);
    auto r = ring({"a", "b", "c"});
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial> gens;
        const int ngens = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ngens; ++i) gens.push_back(testing::random_polynomial(rng, r, 3, 3));
        Ideal I(r.field, 3, gens);
        auto G = groebner(I);
        CHECK(is_reduced(G));
        CHECK(s_pairs_reduce_to_zero(G));
        for (const auto& g : I.generators()) CHECK(normal_form(g, G).is_zero());
    }
}

TEST_CASE("ideal power membership is antitone in k") {
    std::mt19937_64 rng(11);
    auto r = ring({"a", "b", "c"});
    for (int trial = 0; trial < 30; ++trial) {
        auto p = testing::random_polynomial(rng, r, 4, 4);
        auto I = ideal(r, {"a", "b*c"});
        bool prev = true;
        for (unsigned k = 1; k <= 4; ++k) {
            bool now = ideal_power_membership(p, I, k);
            if (now) CHECK(prev);
            prev = now;
        }
    }
}

TEST_CASE("radical membership is implied by membership of a power") {
    std::mt19937_64 rng(13);
    auto r = ring({"a", "b"});
    int witnessed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens{testing::random_polynomial(rng, r, 3, 3),
                                     testing::random_polynomial(rng, r, 3, 3)};
        Ideal I(r.field, 2, gens);
        auto g = testing::random_polynomial(rng, r, 2, 2);
        auto G = groebner(I);
        for (unsigned m = 1; m <= 3; ++m) {
            if (normal_form(g.pow(m), G).is_zero()) {
                CHECK(radical_membership(g, I));
                ++witnessed;
                break;
            }
        }
    }
    CHECK(witnessed > 0);
}

TEST_CASE("membership and emptiness agree with the naive oracle") {
    std::mt19937_64 rng(777);
    int cases = 0;
    int members = 0;
    int empties = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t nv = 1 + rng() % 3;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
        Ring r{Field::rational(), names};
        std::vector<Polynomial> gens;
        const int ngens = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ngens; ++i) gens.push_back(testing::random_polynomial(rng, r, 3, 3));
        Ideal I(r.field, nv, gens);
        if (I.generators().empty()) continue;
        Polynomial p = (trial % 2 == 0) ? testing::random_polynomial(rng, r, 3, 3)
                                        : r.parse("0");
        if (trial % 2 == 1)
            for (const auto& g : I.generators()) p += testing::random_polynomial(rng, r, 1, 2) * g;

        const auto og = to_oracle(I);
        const bool engine_member = contains(I, p);
        CHECK(engine_member == oracle::member(oracle::from_library(p), og));
        if (oracle::division_certifies(oracle::from_library(p), og, oracle::Order::Grevlex))
            CHECK(engine_member);
        const bool engine_empty = is_empty_affine(I);
        CHECK(engine_empty == oracle::empty_variety(og));
        ++cases;
        members += engine_member;
        empties += engine_empty;
    }
    CHECK(cases >= 100);
    CHECK(members > 0);
    CHECK(empties > 0);
}
