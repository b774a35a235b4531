#pragma once

#include <string>
#include <vector>

#include "vsgap/rat.hpp"

namespace vsgap {

// Dense polynomial in t with coefficients in Q (characteristic 0) or F_p
// (characteristic p, coefficients stored canonically in [0, p)). This is
// the coefficient ring of the sparse blowup polynomials and the entry ring
// of the resultant computation.
class TPoly {
public:
    TPoly() = default;  // zero over Q
    explicit TPoly(long characteristic) : char_(characteristic) {}
    TPoly(long characteristic, const Rat& constant);

    static TPoly zero(long characteristic) { return TPoly(characteristic); }
    static TPoly one(long characteristic) { return TPoly(characteristic, Rat(1)); }
    static TPoly one_plus_t(long characteristic);

    long characteristic() const { return char_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int k) const;
    bool is_constant() const { return c_.size() <= 1; }

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend bool operator==(const TPoly& a, const TPoly& b) {
        return a.char_ == b.char_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    TPoly pow(long e) const;

    // Exact division; throws not_divisible when the remainder is nonzero.
    TPoly divexact(const TPoly& d) const;

    // "1+t", "-4-4*t", "3*t^2", "0"; coefficients in t ascending.
    std::string str() const;

private:
    void normalize();
    static Rat reduce_coeff(const Rat& r, long characteristic);

    long char_ = 0;
    std::vector<Rat> c_;  // ascending powers of t, no trailing zeros
};

}  // namespace vsgap
