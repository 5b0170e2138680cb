#include "blowup/sod.hpp"

#include "blowup/geometry.hpp"

namespace blowup {

CenterShape shape_of(const CenterAnalysis& analysis) {
    return CenterShape{analysis.index, analysis.center.name, static_cast<long>(analysis.codimension),
                       static_cast<long>(analysis.multiplicity)};
}

std::string to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::Pullback: return "pullback";
        case BlockKind::LeftOrthogonal: return "left-orthogonal";
        case BlockKind::RightOrthogonal: return "right-orthogonal";
    }
    return "?";
}

LefschetzRecord lefschetz(const CenterShape& shape) {
    LefschetzRecord r;
    r.center = shape.center;
    const long d = shape.codimension, k = shape.multiplicity;
    if (k >= d) {
        r.reason = "multiplicity " + std::to_string(k) + " is not below codimension " + std::to_string(d);
        return r;
    }
    r.applicable = true;
    const long top = d - k - 1;
    for (long l = 0; l <= top; ++l)
        r.blocks.push_back({shape.center, l, l == 0 ? BlockKind::LeftOrthogonal : BlockKind::Pullback, l});
    for (long l = top; l >= 0; --l)
        r.dual_blocks.push_back({shape.center, l, l == 0 ? BlockKind::RightOrthogonal : BlockKind::Pullback, -l});
    return r;
}

SodRecord sod(std::span<const CenterShape> shapes) {
    SodRecord r;
    for (const auto& s : shapes)
        if (s.multiplicity >= s.codimension) r.offenders.push_back(s.center);
    if (!r.offenders.empty()) {
        r.reason = "multiplicity is not below codimension at";
        for (std::size_t i = 0; i < r.offenders.size(); ++i) {
            for (const auto& s : shapes)
                if (s.center == r.offenders[i]) r.reason += (i ? ", '" : " '") + s.name + "'";
        }
        return r;
    }
    r.applicable = true;
    for (const auto& s : shapes)
        for (long l = s.multiplicity - s.codimension + 1; l < 0; ++l) r.blocks.push_back({false, s.center, l});
    r.blocks.push_back({true, 0, 0});
    return r;
}

SerreVanishingRecord serre_vanishing_record(const CenterShape& shape) {
    SerreVanishingRecord r{shape.center, -shape.codimension, 0, {}};
    for (long m = r.lower + 1; m < r.upper; ++m) r.twists.push_back(m);
    return r;
}

}  // namespace blowup
