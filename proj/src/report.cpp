#include "blowup/report.hpp"

#include <sstream>

#include "blowup/corpus.hpp"

namespace blowup {

namespace {

Json header(const char* command, const SceneFile& file, const Scene& scene) {
    Json out;
    out["schema"] = kReportSchema;
    out["tool_version"] = kToolVersion;
    out["command"] = command;
    out["input"] = scene_to_json(file, scene);
    return out;
}

Json names_json(const Ring& ring) { return Json(ring.names); }

Json vanishing_json(const Scene& scene, const Center& c) {
    Json out = Json::array();
    for (auto v : c.vanishing) out.push_back(scene.ring().names[v]);
    return out;
}

Json b_locus_json(const BLocus& b) {
    Json out;
    out["coordinates"] = names_json(b.tangent_ring);
    Json coeffs = Json::array();
    for (const auto& c : b.coefficients) coeffs.push_back(b.tangent_ring.render(c));
    out["coefficients"] = coeffs;
    out["empty"] = b.empty;
    out["dimension"] = b.dimension ? Json(*b.dimension) : Json(nullptr);
    out["expected_dimension"] = b.expected_dimension;
    out["verdict"] = verdict_json(b.verdict);
    return out;
}

Json chart_json(const Scene& scene, const BlowupChart& chart) {
    Json out;
    out["center"] = scene.centers()[chart.center].name;
    out["chart_variable"] = scene.ring().names[chart.chart_variable];
    out["coordinates"] = names_json(chart.ring);
    Json subs;
    const Center& c = scene.centers()[chart.center];
    const std::string t = chart.ring.names[chart.exceptional_coordinate];
    for (auto v : c.vanishing) {
        const std::string& original = scene.ring().names[v];
        subs[original] = v == chart.chart_variable ? t : t + "*" + chart.ring.names[v];
    }
    out["substitution"] = subs;
    out["exceptional_coordinate"] = t;
    out["pullback"] = chart.ring.render(chart.pullback);
    out["valuation"] = chart.valuation;
    out["strict_transform"] = chart.ring.render(chart.strict_transform);
    return out;
}

std::vector<CenterShape> shapes_from_multiplicities(const Scene& scene, const GroebnerOptions& options) {
    std::vector<CenterShape> shapes;
    for (std::size_t i = 0; i < scene.centers().size(); ++i) {
        const Center& c = scene.centers()[i];
        shapes.push_back(CenterShape{i, c.name, static_cast<long>(c.codimension()),
                                     static_cast<long>(multiplicity(scene.hypersurface(), c, scene.ring(), options))});
    }
    return shapes;
}

Json ledger_sections(const Scene& scene, const std::vector<CenterShape>& shapes) {
    Json out;
    Json lef = Json::array();
    Json serre = Json::array();
    for (const auto& s : shapes) {
        const auto rec = lefschetz(s);
        Json jr;
        jr["center"] = s.name;
        jr["applicable"] = rec.applicable;
        jr["reason"] = rec.applicable ? Json(nullptr) : Json(rec.reason);
        auto blocks = [&](const std::vector<LefschetzBlock>& bs, const char* letter) {
            Json arr = Json::array();
            for (const auto& b : bs)
                arr.push_back({{"block", letter + std::to_string(b.index)},
                               {"index", b.index},
                               {"kind", to_string(b.kind)},
                               {"twist", b.twist}});
            return arr;
        };
        jr["blocks"] = blocks(rec.blocks, "A_");
        jr["dual_blocks"] = blocks(rec.dual_blocks, "B_");
        lef.push_back(jr);

        const auto sv = serre_vanishing_record(s);
        serre.push_back({{"center", s.name}, {"lower", sv.lower}, {"upper", sv.upper}, {"twists", sv.twists}});
    }
    out["lefschetz"] = lef;
    out["serre_vanishing"] = serre;

    const auto rec = sod(shapes);
    Json js;
    js["applicable"] = rec.applicable;
    js["reason"] = rec.applicable ? Json(nullptr) : Json(rec.reason);
    Json offenders = Json::array();
    for (auto i : rec.offenders) offenders.push_back(scene.centers()[i].name);
    js["offenders"] = offenders;
    js["twist_order"] = "ascending within each center; centers in input order";
    Json blocks = Json::array();
    for (const auto& b : rec.blocks) {
        if (b.residual)
            blocks.push_back({{"kind", "residual"}, {"weakly_crepant", true}});
        else
            blocks.push_back({{"kind", "twisted-pullback"}, {"center", scene.centers()[b.center].name}, {"twist", b.twist}});
    }
    js["blocks"] = blocks;
    out["sod"] = js;
    return out;
}

Json oracle_json(const Scene& scene, const OracleResult& oracle) {
    Json out;
    out["verdict"] = verdict_json(oracle.verdict);
    out["away_from_centers"] = verdict_json(oracle.away_from_centers);
    Json cs = Json::array();
    for (const auto& check : oracle.charts) {
        Json jc = chart_json(scene, check.chart);
        jc["smooth_along_exceptional"] = check.smooth_along_exceptional;
        cs.push_back(jc);
    }
    out["charts"] = cs;
    return out;
}

void flatten(const Json& v, const std::string& path, std::ostringstream& out) {
    if (v.is_object()) {
        if (v.empty()) out << path << ": {}\n";
        for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array()) {
        if (v.empty()) out << path << ": []\n";
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    } else if (v.is_string()) {
        out << path << ": " << v.get<std::string>() << "\n";
    } else {
        out << path << ": " << v.dump() << "\n";
    }
}

}  // namespace

Json verdict_json(const Verdict& v) {
    Json out;
    out["kind"] = to_string(v.kind);
    out["reason"] = v.reason;
    if (v.witness) {
        Json gens = Json::array();
        for (const auto& g : v.witness->generators) gens.push_back(v.witness->ring.render(g));
        out["witness"] = {{"coordinates", names_json(v.witness->ring)}, {"generators", gens}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json divisor_class_json(const DivisorClass& c, const Scene& scene) {
    Json out;
    out["pi*K_Z"] = c.pullback_canonical;
    out["pi*Y"] = c.pullback_hypersurface;
    for (std::size_t i = 0; i < scene.centers().size(); ++i)
        out["E_" + scene.centers()[i].name] = i < c.exceptional.size() ? c.exceptional[i] : 0;
    return out;
}

Json analyze_report(const SceneFile& file, const Scene& scene, const Analysis& a) {
    Json out = header("analyze", file, scene);
    out["warnings"] = a.warnings;

    Json centers = Json::array();
    for (const auto& c : a.centers) {
        Json jc;
        jc["name"] = c.center.name;
        jc["vanishing"] = vanishing_json(scene, c.center);
        jc["codimension"] = c.codimension;
        jc["multiplicity"] = c.multiplicity;
        jc["leading_form"] = scene.ring().render(c.leading_form);
        jc["exceptional_section"] = {{"coordinates", names_json(c.section_ring)},
                                     {"expression", c.section_ring.render(c.section)}};
        jc["exceptional_divisor"] = verdict_json(c.exceptional);
        jc["b_locus"] = c.b_locus ? b_locus_json(*c.b_locus) : Json(nullptr);
        jc["discrepancy"] = c.discrepancy;
        jc["lefschetz_applicable"] = c.lefschetz_applicable;
        centers.push_back(jc);
    }
    out["centers"] = centers;
    out["singular_locus_in_centers"] = verdict_json(a.singular_locus);

    Json hyp;
    hyp["verdict"] = verdict_json(a.hypothesis);
    hyp["strict_transform_class"] =
        a.strict_transform_class ? divisor_class_json(*a.strict_transform_class, scene) : Json(nullptr);
    out["hypothesis_route"] = hyp;
    out["multiplicity_one_route"] = a.codim_route ? verdict_json(*a.codim_route) : Json(nullptr);
    out["chart_oracle"] = oracle_json(scene, a.oracle);
    out["consistency"] = {{"consistent", a.consistent}, {"note", a.consistency_note}};

    Json adj;
    adj["assumes_normal"] = a.adjunction.assumes_normal;
    adj["canonical_blowup"] = divisor_class_json(a.adjunction.canonical_blowup, scene);
    adj["strict_transform"] = divisor_class_json(a.adjunction.strict_transform, scene);
    adj["relative_canonical"] = divisor_class_json(a.adjunction.relative_canonical, scene);
    Json disc = Json::array();
    for (const auto& d : a.adjunction.discrepancies)
        disc.push_back({{"center", scene.centers()[d.center].name},
                        {"by_formula", d.by_formula},
                        {"by_lattice", d.by_lattice},
                        {"agree", d.by_formula == d.by_lattice}});
    adj["discrepancies"] = disc;
    Json eb = Json::array();
    for (const auto& r : a.adjunction.exceptional_blowups)
        eb.push_back({{"center", scene.centers()[r.center].name},
                      {"det_conormal", r.det_conormal},
                      {"from_section_twist", divisor_class_json(r.from_section_twist, scene)},
                      {"from_strict_transform", divisor_class_json(r.from_strict_transform, scene)},
                      {"agree", r.agree}});
    adj["exceptional_blowups"] = eb;
    out["adjunction"] = adj;

    std::vector<CenterShape> shapes;
    for (const auto& c : a.centers) shapes.push_back(shape_of(c));
    const Json ledger = ledger_sections(scene, shapes);
    for (const auto& [key, value] : ledger.items()) out[key] = value;
    return out;
}

Json charts_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options) {
    Json out = header("charts", file, scene);
    Json centers = Json::array();
    for (std::size_t i = 0; i < scene.centers().size(); ++i) {
        const Center& c = scene.centers()[i];
        const unsigned k = multiplicity(scene.hypersurface(), c, scene.ring(), options);
        Json jc;
        jc["name"] = c.name;
        jc["vanishing"] = vanishing_json(scene, c);
        jc["multiplicity"] = k;
        Json cs = Json::array();
        for (const auto& chart : charts(scene, i, k)) cs.push_back(chart_json(scene, chart));
        jc["charts"] = cs;
        centers.push_back(jc);
    }
    out["centers"] = centers;
    return out;
}

Json oracle_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options) {
    Json out = header("oracle", file, scene);
    out["chart_oracle"] = oracle_json(scene, chart_oracle(scene, options));
    return out;
}

Json sod_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options) {
    Json out = header("sod", file, scene);
    const auto shapes = shapes_from_multiplicities(scene, options);
    Json centers = Json::array();
    for (const auto& s : shapes)
        centers.push_back({{"name", s.name},
                           {"codimension", s.codimension},
                           {"multiplicity", s.multiplicity},
                           {"discrepancy", s.codimension - s.multiplicity - 1}});
    out["centers"] = centers;
    const Json ledger = ledger_sections(scene, shapes);
    for (const auto& [key, value] : ledger.items()) out[key] = value;
    return out;
}

SelftestSummary selftest_report(std::uint64_t seed, std::size_t random_count, const GroebnerOptions& options) {
    SelftestSummary s;
    s.passed = true;
    Json out;
    out["schema"] = kReportSchema;
    out["tool_version"] = kToolVersion;
    out["command"] = "selftest";
    out["seed"] = seed;

    auto discrepancies_agree = [](const Analysis& a) {
        for (const auto& d : a.adjunction.discrepancies)
            if (d.by_formula != d.by_lattice) return false;
        return true;
    };

    Json fixtures = Json::array();
    for (const auto& [name, scene] : fixture_corpus()) {
        const Analysis a = analyze(scene, options);
        const bool ok = a.consistent && discrepancies_agree(a);
        s.passed = s.passed && ok;
        Json jf;
        jf["name"] = name;
        jf["hypothesis_route"] = to_string(a.hypothesis.kind);
        jf["multiplicity_one_route"] = a.codim_route ? Json(to_string(a.codim_route->kind)) : Json(nullptr);
        jf["chart_oracle"] = to_string(a.oracle.verdict.kind);
        jf["passed"] = ok;
        fixtures.push_back(jf);
    }
    out["fixtures"] = fixtures;

    std::size_t hyp_smooth = 0, oracle_smooth = 0;
    Json violations = Json::array();
    const auto corpus = random_corpus(seed, random_count);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Analysis a = analyze(corpus[i], options);
        hyp_smooth += a.hypothesis.smooth();
        oracle_smooth += a.oracle.verdict.smooth();
        if (!a.consistent || !discrepancies_agree(a))
            violations.push_back({{"index", i}, {"hypersurface", corpus[i].ring().render(corpus[i].hypersurface())}});
    }
    s.passed = s.passed && violations.empty();
    out["random"] = {{"count", corpus.size()},
                     {"hypothesis_smooth", hyp_smooth},
                     {"oracle_smooth", oracle_smooth},
                     {"violations", violations}};

    RandomSceneOptions k1;
    k1.multiplicity_one = true;
    std::size_t tested = 0, agree = 0;
    Json k1_violations = Json::array();
    const auto k1_corpus = random_corpus(seed + 1, random_count, k1);
    for (std::size_t i = 0; i < k1_corpus.size(); ++i) {
        const auto c = analyze_center(k1_corpus[i], 0, options);
        if (c.multiplicity != 1) continue;
        ++tested;
        const auto b = b_locus_check(c, k1_corpus[i].dimension(), options);
        if (b.verdict.smooth() == c.exceptional.smooth())
            ++agree;
        else
            k1_violations.push_back({{"index", i}, {"hypersurface", k1_corpus[i].ring().render(k1_corpus[i].hypersurface())}});
    }
    s.passed = s.passed && k1_violations.empty();
    out["multiplicity_one"] = {{"count", tested}, {"agree", agree}, {"violations", k1_violations}};
    out["passed"] = s.passed;
    s.report = std::move(out);
    return s;
}

std::string to_structured(const Json& report) { return report.dump(2) + "\n"; }

std::string to_plain(const Json& report) {
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
}

std::string summary_line(const Json& report) {
    const std::string command = report.value("command", "");
    std::string line = command + ":";
    if (command == "selftest") return line + (report.value("passed", false) ? " passed" : " FAILED");
    if (report.contains("hypothesis_route"))
        line += " hypothesis route " + report["hypothesis_route"]["verdict"]["kind"].get<std::string>() + ",";
    if (report.contains("chart_oracle"))
        line += " chart oracle " + report["chart_oracle"]["verdict"]["kind"].get<std::string>() + ",";
    if (report.contains("sod"))
        line += report["sod"]["applicable"].get<bool>() ? " sod applicable," : " sod not applicable,";
    if (report.contains("centers")) line += " " + std::to_string(report["centers"].size()) + " center(s)";
    if (report.contains("consistency") && !report["consistency"]["consistent"].get<bool>())
        line += ", INCONSISTENT";
    return line;
}

}  // namespace blowup
