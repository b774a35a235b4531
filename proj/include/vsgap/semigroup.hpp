#pragma once

#include <vector>

#include "vsgap/rat.hpp"

namespace vsgap {

// Numerical semigroup generated by finitely many positive rationals,
// with zero. Membership and enumeration are exact: generators are scaled
// to integers by the least common denominator and decided by a
// coin-problem reachability table.
class NumSgp {
public:
    explicit NumSgp(std::vector<Rat> gens);

    const std::vector<Rat>& generators() const { return gens_; }
    const Int& scale() const { return scale_; }
    const std::vector<Int>& scaled_generators() const { return scaled_; }

    // Exact decision; v must be >= 0. Values outside (1/scale)Z are
    // rejected without running the DP.
    bool member(const Rat& v) const;

    // All elements <= bound (bound > 0), ascending, duplicate-free.
    std::vector<Rat> enumerate(const Rat& bound) const;

private:
    // Reachability table for scaled values 0..limit.
    std::vector<char> reach_table(const Int& limit) const;

    std::vector<Rat> gens_;
    Int scale_;
    std::vector<Int> scaled_;
};

}  // namespace vsgap
