#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vsgap/rat.hpp"

namespace vsgap {

// Relation/value data for Q_i with i >= 2: the relation defining Q_{i+1}
// carries z-exponent e_i and w-exponent f_i (times pbar_{i+l}), and the
// value balance pbar_{i+l} * nu(Q_i) = e_i * nu(z) + f_i * nu(w) holds.
struct HigherRel {
    Int e;
    Int f;
    Rat nu;
};

// Opaque unit monomial: product of blowup units ytilde_level^exponent.
// Empty factor list means the unit 1.
struct UnitMonomial {
    std::vector<std::pair<int, Int>> factors;  // (level, exponent), level ascending

    UnitMonomial times(int level, const Int& exponent) const;
    std::string str() const;
    friend bool operator==(const UnitMonomial& a, const UnitMonomial& b) {
        return a.factors == b.factors;
    }
};

struct BezoutRecord {
    int level;  // the center step R_{level-1} -> R_{level} that produced it
    Int abar;
    Int bbar;
};

// Full state of a generating sequence at a center D_j over R_l:
// values of the current parameters z_j, w_j, the Q_2-relation exponents
// (c, e1), the higher relations, and the unit ledger tau_i (i >= 1).
// States are immutable; every operation returns a new state.
struct GenSeqState {
    long characteristic = 0;
    std::vector<long> primes;  // global prime sequence (characteristic excluded)
    std::vector<Int> a_seq;    // base exponents a_i at R_0
    int l = 0;                 // center offset: number of R-steps consumed
    int j = 0;                 // quadratic step counter within the D-chain
    Rat nu_z;
    Rat nu_w;
    Int c;
    Int e1;
    std::vector<HigherRel> higher;    // Q_i for i = 2 .. max_index()
    std::vector<UnitMonomial> units;  // tau_i for i = 1 .. max_index()-1
    std::vector<BezoutRecord> bezout;

    // Largest tracked generating-sequence index (Q_0..Q_max are tracked).
    int max_index() const { return 1 + static_cast<int>(higher.size()); }

    // pbar_{i+l} from the global sequence (i >= 1).
    long pbar(int i) const;

    const HigherRel& rel(int i) const;  // i in [2, max_index()]
    Rat nu_q(int i) const;              // nu(Q_i) for i in [0, max_index()]
    const UnitMonomial& tau(int i) const;  // i in [1, max_index()-1]

    // R_j form: c = pbar_{1+l} and every f_i = 0.
    bool standard_form() const;
};

// --- transforms ------------------------------------------------------

// Monomial center-advancing transform R_l -> R_{l+1}: consumes Q_1 and
// re-indexes Q_{i+1} -> Q_i with the Bezout substitution of the blowup.
// Requires standard form; throws invalid_input ("not a center") otherwise.
GenSeqState advance_center(const GenSeqState& s);

enum class StepCase {
    shrink_z,  // nu(w) < nu(z): z = z'w', w = w'
    shrink_w,  // nu(z) < nu(w): z = z', w = z'w'
};

const char* step_case_name(StepCase c);

struct StepResult {
    GenSeqState state;
    StepCase which;
};

// One quadratic transform D_j -> D_{j+1}; the case is forced by the value
// comparison. Throws chain_terminated when nu(z) == nu(w).
StepResult quadratic_step(const GenSeqState& s);

// --- audit ------------------------------------------------------------

struct AuditCheck {
    std::string name;
    bool pass;
    std::string witness;
};

struct IndexEntry {
    int i;
    Int expected;  // c for i = 1, pbar_{i+l} for i >= 2
    Int actual;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    std::vector<IndexEntry> index_table;

    bool ok() const;
};

// Checks every state invariant exactly and computes the index table
// [G(nu Q_0..Q_i) : G(nu Q_0..Q_{i-1})]. Failures are reported, not thrown.
AuditReport audit(const GenSeqState& s);

struct DiReport {
    std::int64_t tuples = 0;
    std::int64_t classes = 0;
    std::int64_t pairs = 0;
    bool ok = true;
    std::vector<std::string> failures;
};

// Bounded combinatorial audit of the monomial-independence property:
// enumerates exponent tuples (f_0..f_i) within the relation bounds and
// value budget, groups them by value, and checks that every same-value
// pair reduces to a nonzero, degree-bounded unit-residue exponent vector.
DiReport audit_Di(const GenSeqState& s, const Rat& value_budget);

// --- serialization ----------------------------------------------------

std::string state_to_json(const GenSeqState& s);
GenSeqState state_from_json(const std::string& text);

std::string audit_to_json(const AuditReport& r);

}  // namespace vsgap
