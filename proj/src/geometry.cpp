#include "blowup/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "blowup/errors.hpp"

namespace blowup {

std::vector<std::size_t> Center::tangent(std::size_t nvars) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars; ++i)
        if (std::find(vanishing.begin(), vanishing.end(), i) == vanishing.end()) out.push_back(i);
    return out;
}

Ideal Center::ideal(const Ring& ring) const {
    std::vector<Polynomial> gens;
    for (std::size_t a = 0; a < vanishing.size(); ++a) {
        Polynomial g = ring.var(vanishing[a]);
        if (a < offsets.size()) g -= Polynomial::constant(ring.field, ring.nvars(), offsets[a]);
        gens.push_back(std::move(g));
    }
    return Ideal(ring.field, ring.nvars(), std::move(gens));
}

Ideal Center::local_ideal(const Ring& ring) const {
    std::vector<Polynomial> gens;
    for (auto v : vanishing) gens.push_back(ring.var(v));
    return Ideal(ring.field, ring.nvars(), std::move(gens));
}

Scene::Scene(Ring ring, Polynomial f, std::vector<Center> centers, const GroebnerOptions& options)
    : ring_(std::move(ring)), f_(std::move(f)), centers_(std::move(centers)) {
    if (f_.nvars() != ring_.nvars() || f_.field() != ring_.field)
        throw InputError("hypersurface equation does not live in the scene ring");
    if (f_.is_zero()) throw InputError("hypersurface equation is zero");
    if (f_.is_unit()) throw InputError("hypersurface equation is a nonzero constant");
    for (auto& c : centers_) {
        if (c.vanishing.empty()) throw InputError("center '" + c.name + "' has no vanishing variables");
        std::vector<std::size_t> sorted = c.vanishing;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("center '" + c.name + "' repeats a vanishing variable");
        if (sorted.back() >= ring_.nvars())
            throw InputError("center '" + c.name + "' refers to an unknown variable");
        if (c.offsets.empty()) c.offsets.assign(c.vanishing.size(), Scalar::zero(ring_.field));
        if (c.offsets.size() != c.vanishing.size())
            throw InputError("center '" + c.name + "' has mismatched offsets");
        for (const auto& o : c.offsets)
            if (o.field() != ring_.field)
                throw InputError("center '" + c.name + "' offset is not in " + ring_.field.describe());
    }
    for (std::size_t i = 0; i < centers_.size(); ++i)
        for (std::size_t j = i + 1; j < centers_.size(); ++j) {
            if (centers_[i].name == centers_[j].name)
                throw InputError("duplicate center name '" + centers_[i].name + "'");
            const Ideal sum = centers_[i].ideal(ring_) + centers_[j].ideal(ring_);
            if (!is_empty_affine(sum, options))
                throw InputError("centers '" + centers_[i].name + "' and '" + centers_[j].name +
                                 "' overlap");
        }
    for (const auto& c : centers_)
        if (!contains(c.ideal(ring_), f_, options))
            throw InputError("center '" + c.name + "' is not contained in the hypersurface");
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Smooth: return "Smooth";
        case VerdictKind::Singular: return "Singular";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
    return base;
}

std::vector<Polynomial> jacobian_ideal_generators(const Polynomial& f) {
    std::vector<Polynomial> gens{f};
    for (std::size_t v = 0; v < f.nvars(); ++v) gens.push_back(partial(f, v));
    return gens;
}

Ring section_ring(const Ring& ring, const Center& center) {
    Ring r = ring;
    std::vector<std::string> taken = ring.names;
    for (auto v : center.vanishing) {
        std::string cap = ring.names[v];
        for (auto& ch : cap) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (cap == ring.names[v]) cap += "_P";
        cap = fresh_name(cap, taken);
        taken.push_back(cap);
        r.names[v] = cap;
    }
    return r;
}

Verdict smooth_verdict(std::string reason) {
    return Verdict{VerdictKind::Smooth, std::move(reason), std::nullopt};
}

std::vector<BlowupChart> build_charts(const Scene& scene, std::size_t index) {
    const Ring& ring = scene.ring();
    const Center& center = scene.centers().at(index);
    const Polynomial local = to_local(scene.hypersurface(), center);
    std::vector<BlowupChart> out;
    for (auto j : center.vanishing) {
        BlowupChart chart;
        chart.center = index;
        chart.chart_variable = j;
        chart.exceptional_coordinate = j;
        chart.ring = ring;
        std::vector<std::string> taken = ring.names;
        chart.ring.names[j] = fresh_name("t", taken);
        taken.push_back(chart.ring.names[j]);
        const Polynomial t = ring.var(j);
        std::map<std::size_t, Polynomial> images;
        for (auto l : center.vanishing) {
            if (l == j) continue;
            chart.ring.names[l] = fresh_name("u_" + ring.names[l], taken);
            taken.push_back(chart.ring.names[l]);
            images.emplace(l, t * ring.var(l));
        }
        chart.pullback = substitute(local, images);
        chart.valuation = valuation_in(chart.pullback, j);
        chart.strict_transform = divide_by_power(chart.pullback, j, chart.valuation);
        out.push_back(std::move(chart));
    }
    return out;
}

}  // namespace

Polynomial to_local(const Polynomial& f, const Center& center) {
    std::map<std::size_t, Polynomial> images;
    for (std::size_t a = 0; a < center.vanishing.size(); ++a) {
        if (a >= center.offsets.size() || center.offsets[a].is_zero()) continue;
        const auto v = center.vanishing[a];
        images.emplace(v, Polynomial::variable(f.field(), f.nvars(), v) +
                              Polynomial::constant(f.field(), f.nvars(), center.offsets[a]));
    }
    return images.empty() ? f : substitute(f, images);
}

unsigned multiplicity(const Polynomial& f, const Center& center, const Ring& ring,
                      const GroebnerOptions& options) {
    const Polynomial local = to_local(f, center);
    const Ideal I = center.local_ideal(ring);
    if (!ideal_power_membership(local, I, 1, options))
        throw InputError("center '" + center.name + "' is not contained in the hypersurface");
    const auto bound = static_cast<unsigned>(local.degree());
    unsigned k = 1;
    while (k < bound && ideal_power_membership(local, I, k + 1, options)) ++k;
    return k;
}

Polynomial leading_form(const Polynomial& f, const Center& center, const Ring& ring, unsigned k,
                        const GroebnerOptions& options) {
    const Polynomial local = to_local(f, center);
    Polynomial phi = graded_part(local, center.vanishing, k);
    if (phi.is_zero()) throw InternalError("leading form of center '" + center.name + "' is zero");
    const Polynomial rest = local - phi;
    if (!rest.is_zero() && !ideal_power_membership(rest, center.local_ideal(ring), k + 1, options))
        throw InternalError("f - Phi is not in I^(k+1) for center '" + center.name + "'");
    return phi;
}

Verdict exceptional_section_smooth(const CenterAnalysis& a, const GroebnerOptions& options) {
    const Ring& ring = a.section_ring;
    if (a.section.is_zero())
        throw InputError("exceptional section of center '" + a.center.name + "' is not a divisor");
    const Ideal J(ring.field, ring.nvars(), jacobian_ideal_generators(a.section));
    for (auto v : a.center.vanishing) {
        if (!radical_membership(ring.var(v), J, options)) {
            return Verdict{VerdictKind::Singular,
                           "the zero locus of the exceptional section is singular at a point with " +
                               ring.names[v] + " != 0",
                           Witness{ring, J.generators()}};
        }
    }
    return smooth_verdict("exceptional section cuts a smooth effective divisor");
}

BLocus b_locus_check(const CenterAnalysis& a, std::size_t N, const GroebnerOptions& options) {
    if (a.multiplicity != 1)
        throw std::invalid_argument("B-locus check requires multiplicity 1 at center '" +
                                    a.center.name + "'");
    const std::vector<std::size_t> tangent = a.center.tangent(N);
    const Ring& scene_ring = a.section_ring;
    BLocus b;
    b.tangent_ring.field = scene_ring.field;
    for (auto v : tangent) b.tangent_ring.names.push_back(scene_ring.names[v]);

    for (auto v : a.center.vanishing) {
        Polynomial coeff(scene_ring.field, N);
        for (const auto& [mono, c] : a.leading_form.terms())
            if (mono[v] == 1) coeff.add_term(mono.with_exponent(v, 0), c);
        b.coefficients.push_back(restrict_to(coeff, tangent));
    }

    const std::size_t dim_x = tangent.size();
    const std::size_t d = a.codimension;
    b.expected_dimension = 2 * static_cast<long>(dim_x) - static_cast<long>(N);
    const Ideal B(b.tangent_ring.field, dim_x, b.coefficients);
    b.dimension = krull_dimension(B, options);
    b.empty = !b.dimension.has_value();
    if (b.empty) {
        b.verdict = smooth_verdict("B is empty; the dimension condition holds vacuously");
        return b;
    }
    if (static_cast<long>(*b.dimension) != b.expected_dimension) {
        b.verdict = Verdict{VerdictKind::Singular,
                            "dim B = " + std::to_string(*b.dimension) + " but 2 dim X - N = " +
                                std::to_string(b.expected_dimension),
                            Witness{b.tangent_ring, B.generators()}};
        return b;
    }
    // Rank-drop locus of the d x dim X Jacobian of the coefficients.
    PolyMatrix jac;
    for (const auto& g : b.coefficients) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < dim_x; ++v) row.push_back(partial(g, v));
        jac.push_back(std::move(row));
    }
    Ideal singular = B;
    if (d <= dim_x) singular = B + minors_ideal(jac, d, b.tangent_ring.field, dim_x);
    if (is_empty_affine(singular, options)) {
        b.verdict = smooth_verdict("B is smooth of dimension 2 dim X - N");
    } else {
        b.verdict = Verdict{VerdictKind::Singular, "the coefficient Jacobian drops rank on B",
                            Witness{b.tangent_ring, singular.generators()}};
    }
    return b;
}

CenterAnalysis analyze_center(const Scene& scene, std::size_t index, const GroebnerOptions& options) {
    const Center& center = scene.centers().at(index);
    CenterAnalysis a;
    a.index = index;
    a.center = center;
    a.codimension = center.codimension();
    a.local_f = to_local(scene.hypersurface(), center);
    a.multiplicity = multiplicity(scene.hypersurface(), center, scene.ring(), options);
    a.leading_form = leading_form(scene.hypersurface(), center, scene.ring(), a.multiplicity, options);
    a.section_ring = section_ring(scene.ring(), center);
    a.section = a.leading_form;
    a.exceptional = exceptional_section_smooth(a, options);
    a.discrepancy = static_cast<long>(a.codimension) - static_cast<long>(a.multiplicity) - 1;
    a.lefschetz_applicable = a.multiplicity < a.codimension;
    return a;
}

Verdict sing_contained_in_centers(const Scene& scene, const GroebnerOptions& options) {
    const Ring& ring = scene.ring();
    const Ideal J(ring.field, ring.nvars(), jacobian_ideal_generators(scene.hypersurface()));
    if (scene.centers().empty()) {
        if (is_empty_affine(J, options)) return smooth_verdict("Y is smooth");
        return Verdict{VerdictKind::Singular, "Y is singular and there are no centers",
                       Witness{ring, J.generators()}};
    }
    // V(J) lies in the union of the centers iff every product g_1*...*g_n
    // (one generator per center ideal) vanishes on V(J).
    std::vector<Ideal> ideals;
    for (const auto& c : scene.centers()) ideals.push_back(c.ideal(ring));
    std::vector<std::size_t> pick(ideals.size(), 0);
    while (true) {
        Polynomial product = ring.constant(1);
        for (std::size_t i = 0; i < ideals.size(); ++i) product *= ideals[i].generators()[pick[i]];
        if (!radical_membership(product, J, options))
            return Verdict{VerdictKind::Singular, "Y - X is singular",
                           Witness{ring, J.generators()}};
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == ideals[pos].generators().size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return smooth_verdict("the singular locus of Y lies inside the centers");
}

std::vector<BlowupChart> charts(const Scene& scene, std::size_t center, unsigned k) {
    auto out = build_charts(scene, center);
    bool some_unit_free = false;
    for (const auto& c : out) {
        if (c.valuation != k)
            throw InternalError("chart valuation " + std::to_string(c.valuation) +
                                " differs from the multiplicity " + std::to_string(k));
        some_unit_free = some_unit_free || valuation_in(c.strict_transform, c.exceptional_coordinate) == 0;
    }
    if (!some_unit_free) throw InternalError("every chart's strict transform is divisible by t");
    return out;
}

OracleResult chart_oracle(const Scene& scene, const GroebnerOptions& options) {
    OracleResult result;
    result.away_from_centers = sing_contained_in_centers(scene, options);
    bool all_charts_smooth = true;
    std::optional<Verdict> first_failure;
    for (std::size_t i = 0; i < scene.centers().size(); ++i) {
        for (auto& chart : build_charts(scene, i)) {
            const Polynomial& ft = chart.strict_transform;
            Ideal J(chart.ring.field, chart.ring.nvars(), jacobian_ideal_generators(ft));
            J = J.with({chart.ring.var(chart.exceptional_coordinate)});
            ChartCheck check{chart, is_empty_affine(J, options)};
            if (!check.smooth_along_exceptional) {
                all_charts_smooth = false;
                if (!first_failure)
                    first_failure = Verdict{
                        VerdictKind::Singular,
                        "strict transform is singular on the exceptional divisor of center '" +
                            scene.centers()[i].name + "' in the " +
                            scene.ring().names[chart.chart_variable] + "-chart",
                        Witness{chart.ring, J.generators()}};
            }
            result.charts.push_back(std::move(check));
        }
    }
    if (!result.away_from_centers.smooth()) {
        result.verdict = Verdict{VerdictKind::Singular,
                                 "Y - X is singular, so the strict transform is singular there",
                                 result.away_from_centers.witness};
    } else if (!all_charts_smooth) {
        result.verdict = *first_failure;
    } else {
        result.verdict = smooth_verdict("every chart of the strict transform is smooth");
    }
    return result;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r = a;
    r.pullback_canonical += b.pullback_canonical;
    r.pullback_hypersurface += b.pullback_hypersurface;
    r.exceptional.resize(std::max(a.exceptional.size(), b.exceptional.size()), 0);
    for (std::size_t i = 0; i < b.exceptional.size(); ++i) r.exceptional[i] += b.exceptional[i];
    return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass neg = b;
    neg.pullback_canonical = -neg.pullback_canonical;
    neg.pullback_hypersurface = -neg.pullback_hypersurface;
    for (auto& e : neg.exceptional) e = -e;
    return a + neg;
}

AdjunctionLedger adjunction_ledger(const Scene& scene, const std::vector<CenterAnalysis>& centers) {
    const std::size_t n = scene.centers().size();
    AdjunctionLedger ledger;
    ledger.canonical_blowup = DivisorClass{1, 0, std::vector<long>(n, 0)};
    ledger.strict_transform = DivisorClass{0, 1, std::vector<long>(n, 0)};
    for (const auto& a : centers) {
        ledger.canonical_blowup.exceptional[a.index] = static_cast<long>(a.codimension) - 1;
        ledger.strict_transform.exceptional[a.index] = -static_cast<long>(a.multiplicity);
    }
    // K_Y = (K_Z + Y)|_Y, so pi^*K_Y = pi^*K_Z + pi^*Y.
    const DivisorClass pullback_ky{1, 1, std::vector<long>(n, 0)};
    ledger.relative_canonical = (ledger.canonical_blowup + ledger.strict_transform) - pullback_ky;
    if (ledger.relative_canonical.pullback_canonical != 0 ||
        ledger.relative_canonical.pullback_hypersurface != 0)
        throw InternalError("adjunction left a pulled-back component");

    bool all_k1 = std::all_of(centers.begin(), centers.end(),
                              [](const CenterAnalysis& a) { return a.multiplicity == 1; });
    for (const auto& a : centers) {
        DiscrepancyEntry e{a.index, a.discrepancy, ledger.relative_canonical.exceptional[a.index]};
        if (e.by_formula != static_cast<long>(a.codimension) - static_cast<long>(a.multiplicity) - 1 ||
            e.by_formula != e.by_lattice)
            throw InternalError("discrepancy routes disagree at center '" + a.center.name + "'");
        ledger.discrepancies.push_back(e);

        if (all_k1 && a.codimension == 2) {
            // O(1)|_T = pr^*(det C (x) O(Y))|_T - E_B and E_X Z|_E = O(-1):
            //   E_B = det C + pi^*Y + E_i.
            ExceptionalBlowupRecord r;
            r.center = a.index;
            r.det_conormal = 1;
            r.from_section_twist = DivisorClass{0, 1, std::vector<long>(n, 0)};
            r.from_section_twist.exceptional[a.index] = 1;
            // det C + (Y~ + 2 E_i).
            DivisorClass twice_e{0, 0, std::vector<long>(n, 0)};
            twice_e.exceptional[a.index] = 2;
            r.from_strict_transform = ledger.strict_transform + twice_e;
            for (std::size_t j = 0; j < n; ++j)
                if (j != a.index) r.from_strict_transform.exceptional[j] = 0;
            r.agree = r.from_section_twist == r.from_strict_transform;
            if (!r.agree) throw InternalError("codimension-2 exceptional class routes disagree");
            ledger.exceptional_blowups.push_back(std::move(r));
        }
    }
    return ledger;
}

Analysis analyze(const Scene& scene, const GroebnerOptions& options) {
    Analysis out;
    for (std::size_t i = 0; i < scene.centers().size(); ++i)
        out.centers.push_back(analyze_center(scene, i, options));

    for (const auto& a : out.centers) (void)charts(scene, a.index, a.multiplicity);

    out.singular_locus = sing_contained_in_centers(scene, options);

    const bool sections_smooth = std::all_of(out.centers.begin(), out.centers.end(),
                                             [](const CenterAnalysis& a) { return a.exceptional.smooth(); });
    if (out.singular_locus.smooth() && sections_smooth) {
        out.hypothesis = smooth_verdict(
            "Y - X is smooth and every exceptional section is a smooth effective divisor");
        DivisorClass cls{0, 1, std::vector<long>(out.centers.size(), 0)};
        for (const auto& a : out.centers) cls.exceptional[a.index] = -static_cast<long>(a.multiplicity);
        out.strict_transform_class = cls;
    } else {
        std::string reason;
        if (!out.singular_locus.smooth()) reason = "Y - X is not smooth";
        for (const auto& a : out.centers)
            if (!a.exceptional.smooth()) {
                if (!reason.empty()) reason += "; ";
                reason += "exceptional section of center '" + a.center.name +
                          "' is not a smooth effective divisor";
            }
        out.hypothesis = Verdict{VerdictKind::Inconclusive, reason, std::nullopt};
    }

    const bool all_k1 = !out.centers.empty() &&
                        std::all_of(out.centers.begin(), out.centers.end(),
                                    [](const CenterAnalysis& a) { return a.multiplicity == 1; });
    if (all_k1) {
        bool certified = out.singular_locus.smooth();
        std::string reason = certified ? "" : "Y - X is not smooth";
        for (auto& a : out.centers) {
            a.b_locus = b_locus_check(a, scene.dimension(), options);
            if (!a.b_locus->verdict.smooth()) {
                certified = false;
                if (!reason.empty()) reason += "; ";
                reason += "B at center '" + a.center.name + "': " + a.b_locus->verdict.reason;
            }
            if (a.b_locus->empty && a.b_locus->expected_dimension < 0)
                out.warnings.push_back("center '" + a.center.name +
                                       "': B is empty with negative expected dimension; treated as "
                                       "satisfying the dimension condition");
            else if (a.b_locus->empty)
                out.warnings.push_back("center '" + a.center.name +
                                       "': B is empty; treated as satisfying the dimension condition");
        }
        out.codim_route = certified ? smooth_verdict("Y - X is smooth and every B is smooth of "
                                                     "dimension 2 dim X - N")
                                    : Verdict{VerdictKind::Inconclusive, reason, std::nullopt};
    }

    out.oracle = chart_oracle(scene, options);

    if (out.hypothesis.smooth() && !out.oracle.verdict.smooth()) {
        out.consistent = false;
        out.consistency_note = "hypothesis route certified smoothness but the chart oracle found a "
                               "singular point";
    } else if (out.hypothesis.smooth()) {
        out.consistency_note = "both routes certify a smooth strict transform";
    } else if (out.oracle.verdict.smooth()) {
        out.consistency_note = "hypotheses fail but the strict transform is smooth; the criterion is "
                               "sufficient, not necessary";
    } else {
        out.consistency_note = "hypotheses fail and the strict transform is singular";
    }
    if (out.codim_route && out.codim_route->smooth() != out.hypothesis.smooth()) {
        out.consistent = false;
        out.consistency_note += "; multiplicity-one route disagrees with the section route";
    }

    out.adjunction = adjunction_ledger(scene, out.centers);

    const auto p = scene.ring().field.characteristic();
    if (p != 0) {
        unsigned max_k = 0;
        for (const auto& a : out.centers) max_k = std::max(max_k, a.multiplicity);
        const auto bound = std::max<std::uint64_t>(max_k, static_cast<std::uint64_t>(scene.hypersurface().degree()));
        if (p <= bound)
            out.warnings.push_back(
                "characteristic " + std::to_string(p) + " is at most max(k_i, deg f) = " +
                std::to_string(bound) +
                ": the Jacobian criterion certifies smoothness over the algebraic closure, and "
                "vanishing partial derivatives may produce Singular verdicts absent in "
                "characteristic 0");
    }
    out.warnings.push_back("canonical class bookkeeping assumes Y is normal; normality is not checked");
    return out;
}

}  // namespace blowup
