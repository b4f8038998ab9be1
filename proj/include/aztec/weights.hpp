#pragma once

#include "aztec/arith.hpp"

namespace aztec {

/// The three step/domino weights (w1, w2, w3); the fourth domino always
/// carries weight 1. Any rationals are allowed, including 0 and negatives.
struct WeightTriple {
    Rat w1{1};
    Rat w2{1};
    Rat w3{1};
};

inline WeightTriple unit_weights() { return {Rat(1), Rat(1), Rat(1)}; }

} // namespace aztec
