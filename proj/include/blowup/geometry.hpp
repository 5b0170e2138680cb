#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blowup/ideal.hpp"
#include "blowup/parser.hpp"

namespace blowup {

/// A center X = V(y_j - c_j : j in vanishing) in A^N. The vanishing
/// variables are the normal directions; their classes form a global frame
/// of the conormal bundle. Offsets default to zero.
struct Center {
    std::string name;
    std::vector<std::size_t> vanishing;
    std::vector<Scalar> offsets;

    std::size_t codimension() const { return vanishing.size(); }
    /// Complement of `vanishing` in [0, nvars), ascending.
    std::vector<std::size_t> tangent(std::size_t nvars) const;
    /// (y_j - c_j) in the scene ring.
    Ideal ideal(const Ring& ring) const;
    /// (y_j) in coordinates centered on X.
    Ideal local_ideal(const Ring& ring) const;
};

/// Hypersurface Y = V(f) in A^N with pairwise disjoint centers, each
/// contained in Y. Construction validates these invariants.
class Scene {
public:
    /// Throws InputError naming the violated invariant.
    Scene(Ring ring, Polynomial f, std::vector<Center> centers,
          const GroebnerOptions& options = {});

    const Ring& ring() const { return ring_; }
    const Polynomial& hypersurface() const { return f_; }
    const std::vector<Center>& centers() const { return centers_; }
    std::size_t dimension() const { return ring_.nvars(); }

private:
    Ring ring_;
    Polynomial f_;
    std::vector<Center> centers_;
};

enum class VerdictKind { Smooth, Singular, Inconclusive };

std::string to_string(VerdictKind kind);

/// Generators of an ideal whose zero set is the offending locus, in the
/// ring they were computed in.
struct Witness {
    Ring ring;
    std::vector<Polynomial> generators;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::string reason;
    std::optional<Witness> witness;

    bool smooth() const { return kind == VerdictKind::Smooth; }
};

/// Zero locus B of the leading form's coefficient vector (k = 1 only).
struct BLocus {
    Ring tangent_ring;
    std::vector<Polynomial> coefficients;
    /// std::nullopt when B is empty.
    std::optional<std::size_t> dimension;
    long expected_dimension = 0;
    bool empty = false;
    Verdict verdict;
};

struct CenterAnalysis {
    std::size_t index = 0;
    Center center;
    std::size_t codimension = 0;
    unsigned multiplicity = 0;
    /// The hypersurface equation in coordinates centered on the center.
    Polynomial local_f;
    /// Degree-k part of local_f in the normal variables.
    Polynomial leading_form;
    /// Same polynomial read on X x P^{d-1}: normal slots carry projective
    /// coordinates, named by capitalizing the normal variable.
    Ring section_ring;
    Polynomial section;
    Verdict exceptional;
    std::optional<BLocus> b_locus;
    long discrepancy = 0;
    bool lefschetz_applicable = false;
};

struct BlowupChart {
    std::size_t center = 0;
    /// Normal variable set to the exceptional coordinate t.
    std::size_t chart_variable = 0;
    /// Chart coordinates reuse the scene slots: slot chart_variable is t,
    /// other normal slots are u_l, tangent slots are unchanged.
    Ring ring;
    std::size_t exceptional_coordinate = 0;
    /// Pullback of the local equation under y_j = t, y_l = t*u_l.
    Polynomial pullback;
    unsigned valuation = 0;
    Polynomial strict_transform;
};

struct ChartCheck {
    BlowupChart chart;
    /// V(f~, df~, t) is empty in this chart.
    bool smooth_along_exceptional = false;
};

struct OracleResult {
    Verdict verdict;
    Verdict away_from_centers;
    std::vector<ChartCheck> charts;
};

/// Coefficients on the basis {pi^*K_Z, pi^*Y, E_1, ..., E_n}.
struct DivisorClass {
    long pullback_canonical = 0;
    long pullback_hypersurface = 0;
    std::vector<long> exceptional;

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct DiscrepancyEntry {
    std::size_t center = 0;
    long by_formula = 0;
    long by_lattice = 0;
};

/// Class of E_{B_i}X_i on E_{X_i}Y for codimension-2 centers with k = 1,
/// as pr^*det(C_i) plus an ambient divisor class, by two bookkeeping routes.
struct ExceptionalBlowupRecord {
    std::size_t center = 0;
    long det_conormal = 0;
    DivisorClass from_section_twist;
    DivisorClass from_strict_transform;
    bool agree = false;
};

struct AdjunctionLedger {
    DivisorClass canonical_blowup;
    DivisorClass strict_transform;
    /// K of the strict transform minus pi^*K_Y: only E-coefficients survive.
    DivisorClass relative_canonical;
    std::vector<DiscrepancyEntry> discrepancies;
    std::vector<ExceptionalBlowupRecord> exceptional_blowups;
    bool assumes_normal = true;
};

struct Analysis {
    std::vector<CenterAnalysis> centers;
    Verdict singular_locus;
    Verdict hypothesis;
    /// Present when every multiplicity is 1.
    std::optional<Verdict> codim_route;
    OracleResult oracle;
    bool consistent = true;
    std::string consistency_note;
    std::optional<DivisorClass> strict_transform_class;
    AdjunctionLedger adjunction;
    std::vector<std::string> warnings;
};

/// Rewrites f in coordinates centered on X (y_j -> y_j + c_j).
Polynomial to_local(const Polynomial& f, const Center& center);

/// Largest k with f in I_X^k. Throws InputError if f is not in I_X.
unsigned multiplicity(const Polynomial& f, const Center& center, const Ring& ring,
                      const GroebnerOptions& options = {});

/// Degree-k part of the local equation in the normal variables. Checks
/// f - Phi in I_X^{k+1}; failure throws InternalError.
Polynomial leading_form(const Polynomial& f, const Center& center, const Ring& ring, unsigned k,
                        const GroebnerOptions& options = {});

/// Multiplicity, leading form, exceptional section and its verdict.
CenterAnalysis analyze_center(const Scene& scene, std::size_t index,
                              const GroebnerOptions& options = {});

/// Smoothness of V(s) in X x P^{d-1}: Smooth iff every normal coordinate
/// lies in the radical of (s, all partials of s).
Verdict exceptional_section_smooth(const CenterAnalysis& analysis,
                                   const GroebnerOptions& options = {});

/// Zero locus of Phi's coefficient vector when k = 1: dimension must be
/// 2 dim X - N, and V(B + d x d minors of its Jacobian) must be empty.
/// Throws std::invalid_argument when k != 1.
BLocus b_locus_check(const CenterAnalysis& analysis, std::size_t ambient_dimension,
                     const GroebnerOptions& options = {});

/// Sing(Y) is contained in the union of the centers. Smooth means Y - X is
/// smooth; Singular carries the Jacobian ideal as witness.
Verdict sing_contained_in_centers(const Scene& scene, const GroebnerOptions& options = {});

/// One chart per normal variable of the center.
std::vector<BlowupChart> charts(const Scene& scene, std::size_t center, unsigned k);

/// Direct Jacobian check of the strict transform over every chart.
OracleResult chart_oracle(const Scene& scene, const GroebnerOptions& options = {});

AdjunctionLedger adjunction_ledger(const Scene& scene, const std::vector<CenterAnalysis>& centers);

Analysis analyze(const Scene& scene, const GroebnerOptions& options = {});

}  // namespace blowup
