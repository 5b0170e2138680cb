#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace blowup {

struct CenterAnalysis;

/// What the categorical ledger needs from a center.
struct CenterShape {
    std::size_t center = 0;
    std::string name;
    long codimension = 0;
    long multiplicity = 0;
};

CenterShape shape_of(const CenterAnalysis& analysis);

enum class BlockKind { Pullback, LeftOrthogonal, RightOrthogonal };

std::string to_string(BlockKind kind);

/// A_l (x) O(twist), or B_l (x) O(twist) in the dual decomposition.
struct LefschetzBlock {
    std::size_t center = 0;
    long index = 0;
    BlockKind kind = BlockKind::Pullback;
    long twist = 0;
};

struct LefschetzRecord {
    std::size_t center = 0;
    bool applicable = false;
    std::string reason;
    /// A_0, A_1 (x) O(1), ..., A_{d-k-1} (x) O(d-k-1).
    std::vector<LefschetzBlock> blocks;
    /// B_{d-k-1} (x) O(1+k-d), ..., B_1 (x) O(-1), B_0.
    std::vector<LefschetzBlock> dual_blocks;
};

LefschetzRecord lefschetz(const CenterShape& shape);

/// Either a pushed-forward pullback of D^b(X_i) twisted by O(twist), or the
/// residual weakly crepant category, which always comes last.
struct SodBlock {
    bool residual = false;
    std::size_t center = 0;
    long twist = 0;
};

struct SodRecord {
    bool applicable = false;
    /// Centers with k >= d, in input order.
    std::vector<std::size_t> offenders;
    std::string reason;
    std::vector<SodBlock> blocks;
};

/// Per center, twists k-d+1, ..., -1 ascending; centers in input order;
/// then the residual block. Not applicable when some k >= d.
SodRecord sod(std::span<const CenterShape> shapes);

/// Twists m with -d < m < 0 at which pushforward of O(m) vanishes.
struct SerreVanishingRecord {
    std::size_t center = 0;
    long lower = 0;
    long upper = 0;
    std::vector<long> twists;
};

SerreVanishingRecord serre_vanishing_record(const CenterShape& shape);

}  // namespace blowup
