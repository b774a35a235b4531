#pragma once

#include <string>
#include <vector>

#include "vsgap/genseq.hpp"
#include "vsgap/primes.hpp"
#include "vsgap/scenario.hpp"
#include "vsgap/spoly.hpp"
#include "vsgap/tpoly.hpp"

namespace vsgap {

// Variable layout used by every oracle polynomial: index 0 is the current
// z-like parameter, index 1 the current w-like parameter, index 1+k the
// blowup unit of level k (k = 1..unit_levels).
int oracle_nvars(int unit_levels);
std::vector<std::string> oracle_names(int unit_levels, bool r_phase);

struct OracleCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    std::vector<std::string> dumps;

    void add(const std::string& name, bool pass, const std::string& detail);
    bool ok() const;
};

// P_0 = z, P_1 = w, P_{i+1} = P_i^{pbar_i^2} - (1+t) z^{pbar_i a_i},
// expanded exactly over the oracle variable space.
std::vector<SparsePoly> build_P(int depth, const PrimeSeq& primes, const std::vector<Int>& a_seq,
                                long characteristic, int unit_levels = 0);

// The generating-sequence template polynomials Q_0..Q_max reconstructed
// from a state (Q_0, Q_1 as variables, units from the ledger).
std::vector<SparsePoly> build_templates(const GenSeqState& s, int unit_levels);

// Structural checks on the base sequence (recurrence shape, term counts,
// weight accounting).
OracleReport verify_pseq(long characteristic, int depth, bool with_dumps = false);

// End-to-end polynomial verification: center advances (strict transforms
// under the Bezout substitution against the template recurrence) followed
// by quadratic steps (strict transforms against the next state's
// templates), all as exact polynomial identities.
OracleReport verify_chain(const ScenarioConfig& cfg, int l_max, int step_max, int depth,
                          bool with_dumps = false);

// Quadratic-step verification alone, from an arbitrary state.
OracleReport verify_steps(const GenSeqState& start, int step_max, int unit_levels);

// Resultant of two univariate polynomials (ascending coefficients) over
// the t-polynomial ring, by fraction-free elimination of the Sylvester
// matrix.
TPoly sylvester_resultant(std::vector<TPoly> f, std::vector<TPoly> g);

struct DiscReport {
    long p = 0;
    long characteristic = 0;
    TPoly resultant;      // Res(u^p - (1+t), p u^{p-1})
    TPoly discriminant;   // (-1)^{p(p-1)/2} * resultant
    TPoly formula;        // (-1)^{p(p-1)/2} p^p (1+t)^{p-1}
    bool matches_exactly = false;
    bool matches_up_to_sign = false;
    bool unit_times_power = false;  // resultant = nonzero constant * (1+t)^{p-1}
    bool pass = false;

    std::string summary() const;
};

// Computes the discriminant of u^p - (1+t) through the resultant route and
// compares it with the closed formula; the p = 2 case matches only up to
// the unit -1, which is recorded (matches_exactly false, pass still true).
DiscReport discriminant_check(long p_prime, long characteristic);

}  // namespace vsgap
