// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "blowup/corpus.hpp"
#include "blowup/sod.hpp"
#include "oracle/naive_groebner.hpp"
#include "random_poly.hpp"

using namespace blowup;

namespace {

// Every basis computed while checking criteria 1-7 is re-verified here.
struct BasisAudit {
    std::size_t bases = 0;
    std::size_t failures = 0;
};

BasisAudit audit;

GroebnerOptions audited() {
    GroebnerOptions o;
    o.on_basis = [](const GroebnerBasis& g) {
        ++audit.bases;
        if (!s_pairs_reduce_to_zero(g) || !is_reduced(g)) ++audit.failures;
    };
    return o;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failed = 0;

void run(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
        out.ok = false;
    }
    std::printf("%s  criterion %d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title, secs,
                out.detail.empty() ? "" : " - ", out.detail.c_str());
    std::fflush(stdout);
    failed += !out.ok;
}

bool discrepancies_agree(const Analysis& a) {
    for (const auto& d : a.adjunction.discrepancies)
        if (d.by_formula != d.by_lattice || d.by_formula != a.centers[d.center].discrepancy) return false;
    return true;
}

constexpr std::uint64_t kRouteSeed = 20240611;
constexpr std::size_t kRouteScenes = 240;
constexpr std::uint64_t kEquivalenceSeed = 1729;
constexpr std::size_t kEquivalenceScenes = 160;

}  // namespace

int main() {
    const auto options = audited();

    run(1, "quadric cone along y = 0, n = 1..3: k = 1, B = origin, both routes Smooth, class pi*Y - E", 5.0, [&] {
        Outcome o;
        for (unsigned n = 1; n <= 3; ++n) {
            const std::string tag = "n=" + std::to_string(n) + ": ";
            const Scene scene = quadric_cone_along_normal(n);
            const Analysis a = analyze(scene, options);
            const auto& c = a.centers.at(0);
            o.require(c.multiplicity == 1, tag + "k != 1");
            o.require(c.b_locus.has_value(), tag + "B-locus not computed");
            if (!c.b_locus) continue;
            const auto& b = *c.b_locus;
            o.require(!b.empty && b.dimension == 0u && b.expected_dimension == 0, tag + "dim B != 0");
            // B is exactly the origin of X: its reduced basis is the coordinate functions.
            const auto basis = groebner(Ideal(b.tangent_ring.field, b.tangent_ring.nvars(), b.coefficients), options);
            bool origin = basis.elements.size() == n;
            for (std::size_t i = 0; origin && i < n; ++i)
                origin = std::find(basis.elements.begin(), basis.elements.end(), b.tangent_ring.var(i)) != basis.elements.end();
            o.require(origin, tag + "B is not the origin");
            o.require(b.verdict.smooth(), tag + "B not smooth");
            o.require(a.hypothesis.smooth(), tag + "hypothesis route not Smooth");
            o.require(a.codim_route && a.codim_route->smooth(), tag + "multiplicity-one route not Smooth");
            o.require(a.oracle.verdict.smooth(), tag + "chart oracle not Smooth");
            o.require(a.strict_transform_class == DivisorClass{0, 1, {-1}}, tag + "class != pi*Y - E");
        }
        return o;
    });

    run(2, "quadric cone at the origin, n = 1..3: k = 2, smooth quadric, both routes Smooth, a = 2n - 3", 10.0, [&] {
        Outcome o;
        for (unsigned n = 1; n <= 3; ++n) {
            const std::string tag = "n=" + std::to_string(n) + ": ";
            const Analysis a = analyze(quadric_cone_at_origin(n), options);
            const auto& c = a.centers.at(0);
            o.require(c.multiplicity == 2, tag + "k != 2");
            o.require(c.exceptional.smooth(), tag + "exceptional quadric not Smooth");
            o.require(a.hypothesis.smooth(), tag + "hypothesis route not Smooth");
            o.require(a.oracle.verdict.smooth(), tag + "chart oracle not Smooth");
            o.require(a.strict_transform_class == DivisorClass{0, 1, {-2}}, tag + "class != pi*Y - 2E");
            const long expected = 2 * static_cast<long>(n) - 3;
            o.require(c.discrepancy == expected && a.adjunction.discrepancies.at(0).by_lattice == expected,
                      tag + "discrepancy != 2n - 3");
        }
        return o;
    });

    run(3, "cusp x^2 - y^3 at the origin: hypothesis Inconclusive (section X^2), chart oracle Smooth", 0, [&] {
        Outcome o;
        const Ring r{Field::rational(), {"x", "y"}};
        const Scene cusp(r, r.parse("x^2 - y^3"), {Center{"O", {0, 1}, {}}}, options);
        const Analysis a = analyze(cusp, options);
        const auto& c = a.centers.at(0);
        o.require(c.section_ring.render(c.section) == "X^2", "section is " + c.section_ring.render(c.section));
        o.require(c.exceptional.kind == VerdictKind::Singular, "section test did not fail");
        o.require(a.hypothesis.kind == VerdictKind::Inconclusive, "hypothesis route not Inconclusive");
        o.require(a.oracle.verdict.smooth(), "chart oracle not Smooth");
        o.require(a.consistent, "flagged inconsistent");
        return o;
    });

    std::size_t random_fixture_scenes = 0;
    bool all_discrepancies_agree = true;

    run(4, "hypothesis route Smooth implies chart oracle Smooth on 240 seeded random scenes", 300.0, [&] {
        Outcome o;
        std::size_t smooth = 0, exceptions = 0;
        for (const Scene& s : random_corpus(kRouteSeed, kRouteScenes)) {
            const Analysis a = analyze(s, options);
            ++random_fixture_scenes;
            all_discrepancies_agree = all_discrepancies_agree && discrepancies_agree(a);
            if (!a.hypothesis.smooth()) continue;
            ++smooth;
            if (!a.oracle.verdict.smooth()) ++exceptions;
        }
        o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
        o.require(smooth > 0, "no scene reached the hypothesis route");
        o.detail = o.ok ? std::to_string(smooth) + " certified Smooth, 0 exceptions" : o.detail;
        return o;
    });

    run(5, "B-locus route agrees with the exceptional-section route on >= 100 multiplicity-one scenes", 0, [&] {
        Outcome o;
        RandomSceneOptions k1;
        k1.multiplicity_one = true;
        std::size_t tested = 0, exceptions = 0, smooth = 0;
        for (const Scene& s : random_corpus(kEquivalenceSeed, kEquivalenceScenes, k1)) {
            const CenterAnalysis c = analyze_center(s, 0, options);
            if (c.multiplicity != 1) continue;
            ++tested;
            const BLocus b = b_locus_check(c, s.dimension(), options);
            const bool via_b = b.verdict.smooth();
            smooth += via_b;
            if (via_b != c.exceptional.smooth()) ++exceptions;
        }
        o.require(tested >= 100, "only " + std::to_string(tested) + " multiplicity-one scenes");
        o.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
        o.detail = o.ok ? std::to_string(tested) + " scenes, " + std::to_string(smooth) + " Smooth, 0 exceptions" : o.detail;
        return o;
    });

    run(6, "discrepancy by formula equals discrepancy by lattice adjunction; a = 1 for the n = 2 cone at the origin", 0, [&] {
        Outcome o;
        o.require(all_discrepancies_agree, "disagreement on the random corpus");
        for (const auto& [name, scene] : fixture_corpus()) {
            const Analysis a = analyze(scene, options);
            o.require(discrepancies_agree(a), "disagreement on fixture " + name);
        }
        const Analysis two = analyze(quadric_cone_at_origin(2), options);
        const auto& d = two.adjunction.discrepancies.at(0);
        o.require(d.by_formula == 1 && d.by_lattice == 1, "n = 2 cone at the origin: a != 1");
        return o;
    });

    run(7, "SOD ledger: (4,2) -> one block l = -1 plus residual; (2,1) -> residual only; counts for 1 <= k < d <= 12", 0, [&] {
        Outcome o;
        const CenterShape four_two[] = {CenterShape{0, "X", 4, 2}};
        const SodRecord a = sod(four_two);
        o.require(a.applicable && a.blocks.size() == 2 && !a.blocks[0].residual && a.blocks[0].twist == -1 &&
                      a.blocks[1].residual,
                  "(4,2) ledger wrong");
        const CenterShape two_one[] = {CenterShape{0, "X", 2, 1}};
        const SodRecord b = sod(two_one);
        o.require(b.applicable && b.blocks.size() == 1 && b.blocks[0].residual, "(2,1) ledger wrong");
        for (long d = 2; d <= 12; ++d)
            for (long k = 1; k < d; ++k) {
                const CenterShape s[] = {CenterShape{0, "X", d, k}};
                const auto l = lefschetz(s[0]);
                const auto r = sod(s);
                o.require(static_cast<long>(l.blocks.size()) == d - k && static_cast<long>(l.dual_blocks.size()) == d - k,
                          "Lefschetz count at (" + std::to_string(d) + "," + std::to_string(k) + ")");
                o.require(static_cast<long>(r.blocks.size()) - 1 == d - k - 1,
                          "SOD count at (" + std::to_string(d) + "," + std::to_string(k) + ")");
            }
        return o;
    });

    run(8, "Groebner kernel: every basis from criteria 1-7 passes the S-pair check; naive-oracle agreement on >= 100 ideals", 0, [&] {
        Outcome o;
        o.require(audit.bases > 0, "no bases observed");
        o.require(audit.failures == 0, std::to_string(audit.failures) + " bases failed the S-pair check");
        const std::size_t audited_bases = audit.bases;

        std::mt19937_64 rng(4711);
        std::size_t cases = 0, disagreements = 0;
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t nv = 1 + rng() % 3;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
            const Ring r{Field::rational(), names};
            std::vector<Polynomial> gens;
            const int ngens = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < ngens; ++i) gens.push_back(testing::random_polynomial(rng, r, 3, 3));
            const Ideal I(r.field, nv, gens);
            if (I.generators().empty()) continue;
            Polynomial p = testing::random_polynomial(rng, r, 3, 3);
            if (trial % 2 == 1) {
                p = Polynomial(r.field, nv);
                for (const auto& g : I.generators()) p += testing::random_polynomial(rng, r, 1, 2) * g;
            }
            std::vector<oracle::Poly> og;
            for (const auto& g : I.generators()) og.push_back(oracle::from_library(g));
            if (contains(I, p) != oracle::member(oracle::from_library(p), og)) ++disagreements;
            if (is_empty_affine(I) != oracle::empty_variety(og)) ++disagreements;
            ++cases;
        }
        o.require(cases >= 100, "only " + std::to_string(cases) + " oracle cases");
        o.require(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
        o.detail = o.ok ? std::to_string(audited_bases) + " bases audited, " + std::to_string(cases) + " oracle cases" : o.detail;
        return o;
    });

    std::printf("%s: %d of 8 criteria failed (%zu random scenes analyzed)\n", failed ? "FAIL" : "PASS", failed,
                random_fixture_scenes);
    return failed ? 1 : 0;
}
