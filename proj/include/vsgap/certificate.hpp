#pragma once

#include <string>
#include <vector>

#include "vsgap/genseq.hpp"
#include "vsgap/lexval.hpp"
#include "vsgap/rat.hpp"

namespace vsgap {

// Degree-p root extension of the unit 1+t at the current center: only the
// count p and its value-level consequences are used; no root-of-unity or
// radical is ever represented.
struct ExtensionSpec {
    long p = 0;
    long omega_count = 0;

    static ExtensionSpec for_state(const GenSeqState& s);
};

// The p factor values of the Q_2 relation in the extension: p-1 copies of
// e1*nu(z) and one distinguished value nu(Q_2) - (p-1)*e1*nu(z), summing
// exactly to nu(Q_2).
std::vector<Rat> h_values(const GenSeqState& s, const ExtensionSpec& ext);

// Re-checkable proof object: a value-level snapshot plus exact claims.
// All claims are re-derivable from the snapshot alone.
struct GapCertificate {
    int version = 1;
    std::string kind = "prop1-gap";

    // snapshot
    int l = 0;
    long p = 0;
    Int c;
    Int e1;
    Rat nu_q0;
    Rat nu_q1;
    Rat nu_q2;
    Int scale;                    // lcm of the pair denominators (DP scale)
    std::vector<Int> scaled_gens;
    Rat group_generator;          // generator of G(nu_q0, nu_q1)
    Int index_pair_over_q0;       // [G(nu_q0,nu_q1) : G(nu_q0)]
    Int index_q2_over_pair;       // [G(nu_q0,nu_q1,nu_q2) : G(nu_q0,nu_q1)]

    // data
    std::vector<Rat> h;
    Rat gap;

    // checks
    bool chk_sum = false;
    bool chk_lt_nuq2 = false;
    bool chk_not_in_group = false;
    bool chk_not_in_semigroup = false;

    // A certificate is issued when the essential claims hold; otherwise it
    // is a refutation record.
    bool issued() const { return chk_sum && chk_lt_nuq2 && chk_not_in_semigroup; }

    std::string to_json() const;
    static GapCertificate from_json(const std::string& text);
};

// Builds the certificate for the state's Q_2 gap. Refutation (gap inside
// the parameter semigroup) is a first-class result, not an error. The
// bound records the DP budget; the membership decision itself is exact.
GapCertificate certify_gap(const GenSeqState& s, const ExtensionSpec& ext,
                           const Rat& bound = Rat(0));

// Re-derives every claim from the snapshot; true iff the stored data is
// consistent and the essential claims hold.
bool recheck(const GapCertificate& cert);

// Monomial section of the composite-value projection: each sample value
// alpha lifts to (alpha, 0), and t itself carries (0, 1).
struct SurjectionCertificate {
    int version = 1;
    std::string kind = "prop2-lift";
    std::string section;
    LexVal t_value;
    std::vector<Rat> samples;
    std::vector<LexVal> lifts;

    std::string to_json() const;
    static SurjectionCertificate from_json(const std::string& text);
};

SurjectionCertificate composite_lift(const std::vector<Rat>& values,
                                     const LexVal& t_value = LexVal{Rat(0), Int(1)});

// project(lift) == sample, elementwise.
bool verify_lift(const SurjectionCertificate& cert);

}  // namespace vsgap
