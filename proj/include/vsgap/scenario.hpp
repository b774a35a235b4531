#pragma once

#include <string>
#include <vector>

#include "vsgap/genseq.hpp"
#include "vsgap/primes.hpp"
#include "vsgap/rat.hpp"

namespace vsgap {

// Desk-scale instance description. depth is the largest generating-sequence
// index tracked at R_0; l is the number of center advances the default
// chain performs before quadratic steps.
struct ScenarioConfig {
    long characteristic = 0;
    int prime_count = 5;
    int depth = 4;
    int l = 1;
    Rat bound = Rat(8);

    void validate() const;
};

ScenarioConfig default_scenario();

std::string scenario_to_json(const ScenarioConfig& c);
ScenarioConfig scenario_from_json(const std::string& text);

// a_1 = pbar_1 + 1, a_{i+1} = pbar_i * pbar_{i+1} * a_i + 1; each a_i is
// coprime to pbar_i (checked).
std::vector<Int> build_a_seq(const PrimeSeq& primes, int depth);

// Residue-tower bookkeeping: degree d_i = pbar_i with the minimal
// polynomial descriptor u^pbar - (1+t) * taubar^pbar at each stage.
struct MinPolyDescriptor {
    long p;
    std::string str() const;
};

struct TowerLedger {
    std::vector<long> degrees;
    std::vector<MinPolyDescriptor> minpolys;

    Int tower_degree() const;  // product of the recorded degrees
};

TowerLedger tower_ledger(const PrimeSeq& primes, int depth);

// Generating-sequence state at R_0: nu(z) = 1, nu(w) = a_1/pbar_1,
// nu(Q_i) = a_i/pbar_i, relations (c, e1) = (pbar_1, a_1) and
// (e_i, f_i) = (a_i, 0), empty unit ledger.
GenSeqState initial_state_r0(const ScenarioConfig& config);

}  // namespace vsgap
