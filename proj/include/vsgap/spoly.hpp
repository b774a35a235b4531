#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vsgap/rat.hpp"
#include "vsgap/tpoly.hpp"

namespace vsgap {

using ExpVec = std::vector<std::int64_t>;

// Maps each source variable to a monomial in the target variable space
// (exponents >= 0, coefficient 1). Applying it is a ring homomorphism.
struct Substitution {
    int nvars_from = 0;
    int nvars_to = 0;
    std::vector<ExpVec> images;  // one per source variable

    void validate() const;
};

// Exact sparse multivariate polynomial over Q[t] or F_p[t]. Terms are kept
// in a canonical ascending-lex map, so equal polynomials compare equal and
// serialize identically regardless of how they were computed.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(int nvars, long characteristic) : nvars_(nvars), char_(characteristic) {}

    static SparsePoly zero(int nvars, long characteristic) { return {nvars, characteristic}; }
    static SparsePoly constant(int nvars, long characteristic, const TPoly& c);
    static SparsePoly monomial(int nvars, long characteristic, const ExpVec& e, const TPoly& c);
    static SparsePoly variable(int nvars, long characteristic, int var);

    int nvars() const { return nvars_; }
    long characteristic() const { return char_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, TPoly>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const TPoly& c);

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // Product: dispatches to the OpenMP kernel for large operands, the
    // serial kernel otherwise. Both produce the identical canonical map.
    SparsePoly mul(const SparsePoly& o) const;
    SparsePoly pow(long e) const;  // e >= 0, repeated squaring

    SparsePoly substitute(const Substitution& s) const;

    // Exact quotient by a monomial; throws not_divisible with the offending
    // term when some term is not divisible.
    SparsePoly divide_by_monomial(const ExpVec& m) const;

    // Minimal weight over terms, weight of a term = sum exp_i * weights[i].
    Rat min_weight(const std::vector<Rat>& weights) const;

    // True when some term has exponent 0 in variable `var` (nothing left to
    // divide out).
    bool has_term_free_of(int var) const;

    // Textual dump: terms descending, exponent vectors explicit,
    // coefficients in t ascending. Deterministic.
    std::string dump(const std::vector<std::string>& names) const;

private:
    void enforce_cap() const;

    int nvars_ = 0;
    long char_ = 0;
    std::map<ExpVec, TPoly> terms_;
};

// Reference kernel: plain accumulation, single thread.
SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b);

// OpenMP kernel: block-partitioned partial products merged in block order;
// result is bit-identical to mul_serial.
SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b);

}  // namespace vsgap
