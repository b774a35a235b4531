#pragma once

#include <vector>

#include "vsgap/rat.hpp"

namespace vsgap {

// A finitely generated subgroup of Q. Such a group is cyclic, so a single
// positive generator suffices.
struct QSubgroup {
    Rat generator;

    bool contains(const Rat& v) const;
};

// Group generated by a nonempty set of positive rationals:
// gcd of the scaled numerators over the common denominator.
QSubgroup group_of(const std::vector<Rat>& gens);

// [big : small] for small a subgroup of big; throws invalid_input
// ("not a subgroup") when small.generator is not an integer multiple
// of big.generator.
Int subgroup_index(const QSubgroup& big, const QSubgroup& small);

}  // namespace vsgap
