#pragma once

#include <string>

#include "vsgap/rat.hpp"

namespace vsgap {

// Rank-2 value (nu, mu): componentwise addition, lexicographic order with
// the nu component dominant. Models the composite value group as
// Phi_nu x Z under an explicit monomial section.
struct LexVal {
    Rat nu;
    Int mu = 0;

    friend LexVal operator+(const LexVal& a, const LexVal& b) {
        return LexVal{a.nu + b.nu, a.mu + b.mu};
    }

    friend bool operator==(const LexVal& a, const LexVal& b) {
        return a.nu == b.nu && a.mu == b.mu;
    }
    friend bool operator!=(const LexVal& a, const LexVal& b) { return !(a == b); }
    friend bool operator<(const LexVal& a, const LexVal& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.mu < b.mu;
    }
    friend bool operator>(const LexVal& a, const LexVal& b) { return b < a; }
    friend bool operator<=(const LexVal& a, const LexVal& b) { return !(b < a); }
    friend bool operator>=(const LexVal& a, const LexVal& b) { return !(a < b); }

    std::string str() const { return "(" + nu.str() + "," + int_str(mu) + ")"; }
};

// -1 / 0 / +1, lexicographic with nu dominant.
inline int lex_cmp(const LexVal& a, const LexVal& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

// Projection Phi_phi -> Phi_nu: drop the mu component.
inline Rat lex_project(const LexVal& v) {
    return v.nu;
}

}  // namespace vsgap
