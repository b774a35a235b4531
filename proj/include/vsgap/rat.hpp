#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vsgap {

using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Exact rational, always in lowest terms with positive denominator
// (GMP's canonical form). Total order is the order of Q.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    // Accepts "p/q" or "p", with optional leading '-'.
    static Rat parse(std::string_view s);

    Int num() const { return Int(q_.get_num()); }
    Int den() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "6/5", "3", "-1/2"
    std::string str() const;
    // Always "p/q", e.g. "8/1"; used where the file format pins that shape.
    std::string str_frac() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  // throws invalid_input on division by zero

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

Rat operator*(const Int& a, const Rat& b);

std::string int_str(const Int& n);
Int parse_int(std::string_view s);

// Least common denominator of a set of rationals (>= 1).
Int common_denominator(const std::vector<Rat>& vals);

}  // namespace vsgap
