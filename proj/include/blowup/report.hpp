#pragma once

#include <cstdint>
#include <string>

#include "blowup/scene_io.hpp"
#include "blowup/sod.hpp"

namespace blowup {

inline constexpr const char* kReportSchema = "blowup-report/1";
inline constexpr const char* kToolVersion = "0.3.0";

Json verdict_json(const Verdict& v);
/// Keys "pi*K_Z", "pi*Y", then "E_<center name>" in input order.
Json divisor_class_json(const DivisorClass& c, const Scene& scene);

/// Report for `analyze`: every section.
Json analyze_report(const SceneFile& file, const Scene& scene, const Analysis& analysis);
/// Report for `charts`: multiplicities and the chart atlas of every center.
Json charts_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options = {});
/// Report for `oracle`: the chart route alone.
Json oracle_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options = {});
/// Report for `sod`: Lefschetz, Serre vanishing and SOD ledgers only.
Json sod_report(const SceneFile& file, const Scene& scene, const GroebnerOptions& options = {});

struct SelftestSummary {
    Json report;
    bool passed = false;
};

/// Analyzes the fixture corpus and `random_count` seeded random scenes,
/// checking route agreement, discrepancy routes and the multiplicity-one
/// equivalence.
SelftestSummary selftest_report(std::uint64_t seed, std::size_t random_count,
                                const GroebnerOptions& options = {});

/// Structured output: two-space indented JSON plus a trailing newline.
std::string to_structured(const Json& report);
/// Line-oriented text rendering of the same report.
std::string to_plain(const Json& report);
/// One-line summary for standard error.
std::string summary_line(const Json& report);

}  // namespace blowup
