#pragma once

/**
 * @file tilings.hpp
 * @brief Exhaustive enumeration of domino tilings of an Aztec-type domain,
 *        domino classification, weighted counting, and ascii/svg rendering.
 */

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "aztec/shapes.hpp"
#include "aztec/weights.hpp"

namespace aztec {

/// Domino classification by orientation and coloring:
///   D1 vertical, gray bottom half;  D2 vertical, gray top half;
///   D3 horizontal, gray left half;  D4 horizontal, white left half.
enum class DominoType { D1, D2, D3, D4 };

enum class Orientation { Vertical, Horizontal };

/// A domino is stored by its anchor cell: the bottom cell when vertical,
/// the left cell when horizontal.
struct Domino {
    Cell anchor;
    Orientation orientation;

    Cell second() const {
        return orientation == Orientation::Vertical ? Cell{anchor.x, anchor.y + 1}
                                                    : Cell{anchor.x + 1, anchor.y};
    }
    DominoType type() const {
        const bool anchor_gray = !anchor.white();
        if (orientation == Orientation::Vertical)
            return anchor_gray ? DominoType::D1 : DominoType::D2;
        return anchor_gray ? DominoType::D3 : DominoType::D4;
    }
    auto operator<=>(const Domino&) const = default;
};

struct Tiling {
    std::vector<Domino> dominoes;
    std::array<long, 4> counts{0, 0, 0, 0}; // indexed by DominoType

    long count(DominoType t) const { return counts[static_cast<std::size_t>(t)]; }
};

struct EnumerationOptions {
    long cell_cap = 80; // refuse larger domains; brute-force guard
};

/// Depth-first enumeration branching on the smallest uncovered cell in the
/// canonical (diagonal, position) order; every tiling is produced exactly
/// once, the empty domain yields one empty tiling. Throws CapExceededError
/// when the domain has more cells than the cap.
void for_each_tiling(const AztecDomain& domain, const std::function<void(const Tiling&)>& visit,
                     const EnumerationOptions& options = {});

std::vector<Tiling> enumerate_tilings(const AztecDomain& domain,
                                      const EnumerationOptions& options = {});

long count_tilings(const AztecDomain& domain, const EnumerationOptions& options = {});

/// Sum over tilings of w1^#D1 * w2^#D2 * w3^#D3.
Rat weighted_tiling_count(const AztecDomain& domain, const WeightTriple& w,
                          const EnumerationOptions& options = {});

/// Checks that the dominoes exactly partition the domain's cell set.
bool is_tiling_of(const Tiling& tiling, const AztecDomain& domain);

std::string render_ascii(const AztecDomain& domain, const Tiling* tiling = nullptr);
std::string render_svg(const AztecDomain& domain, const Tiling* tiling = nullptr);

} // namespace aztec
