#pragma once

#include <cstddef>

#include "lfvop/linalg.hpp"

namespace lfvop {

enum class WitnessKind {
    /// f(y) < f(x_bar) - epsilon componentwise.
    StrictAll,
    /// f(y) <= f(x_bar) - epsilon componentwise with strict inequality at
    /// strict_index.
    WeakWithStrictIndex,
};

/// A feasible point that dominates the candidate, disproving (weak)
/// epsilon-efficiency by definition.
struct DominanceWitness {
    RationalVector y;
    WitnessKind kind = WitnessKind::StrictAll;
    /// 0-based objective index; meaningful only for WeakWithStrictIndex.
    std::size_t strict_index = 0;
};

}  // namespace lfvop
