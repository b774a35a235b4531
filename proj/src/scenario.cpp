#include "vsgap/scenario.hpp"

#include <json.hpp>

#include "vsgap/error.hpp"

namespace vsgap {

using ojson = nlohmann::ordered_json;

void ScenarioConfig::validate() const {
    if (characteristic != 0 && !is_prime(characteristic))
        throw invalid_input("characteristic must be 0 or prime");
    if (depth < 2) throw invalid_input("depth must be >= 2");
    if (l < 0) throw invalid_input("l must be >= 0");
    if (prime_count < l + depth)
        throw invalid_input("prime_count " + std::to_string(prime_count) + " < l + depth = " +
                            std::to_string(l + depth));
    if (bound.sign() <= 0) throw invalid_input("bound must be positive");
}

ScenarioConfig default_scenario() {
    return ScenarioConfig{};  // char 0, primes (2,3,5,7,11), depth 4, l 1, bound 8
}

std::string scenario_to_json(const ScenarioConfig& c) {
    ojson j;
    j["characteristic"] = c.characteristic;
    j["prime_count"] = c.prime_count;
    j["depth"] = c.depth;
    j["l"] = c.l;
    j["bound"] = c.bound.str_frac();
    return j.dump(2);
}

ScenarioConfig scenario_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string("scenario JSON parse error: ") + e.what());
    }
    try {
        ScenarioConfig c;
        c.characteristic = j.at("characteristic").get<long>();
        c.prime_count = j.at("prime_count").get<int>();
        c.depth = j.at("depth").get<int>();
        c.l = j.at("l").get<int>();
        c.bound = Rat::parse(j.at("bound").get<std::string>());
        c.validate();
        return c;
    } catch (const ojson::exception& e) {
        throw invalid_input(std::string("scenario JSON missing/invalid field: ") + e.what());
    }
}

std::vector<Int> build_a_seq(const PrimeSeq& primes, int depth) {
    if (depth < 1) throw invalid_input("a-sequence depth must be >= 1");
    if (static_cast<std::size_t>(depth) > primes.primes.size())
        throw invalid_input("a-sequence depth exceeds available primes");
    std::vector<Int> a;
    a.push_back(Int(primes.p(1)) + 1);
    for (int i = 1; i < depth; ++i)
        a.push_back(Int(primes.p(i)) * primes.p(i + 1) * a.back() + 1);
    for (int i = 1; i <= depth; ++i)
        if (gcd(a[static_cast<std::size_t>(i - 1)], Int(primes.p(i))) != 1)
            throw invariant_error("gcd(a_i, pbar_i) != 1 at i = " + std::to_string(i));
    return a;
}

std::string MinPolyDescriptor::str() const {
    return "u^" + std::to_string(p) + " - (1+t)*taubar^" + std::to_string(p);
}

Int TowerLedger::tower_degree() const {
    Int d = 1;
    for (long p : degrees) d *= p;
    return d;
}

TowerLedger tower_ledger(const PrimeSeq& primes, int depth) {
    if (depth < 1) throw invalid_input("tower depth must be >= 1");
    if (static_cast<std::size_t>(depth) > primes.primes.size())
        throw invalid_input("tower depth exceeds available primes");
    TowerLedger t;
    for (int i = 1; i <= depth; ++i) {
        t.degrees.push_back(primes.p(i));
        t.minpolys.push_back(MinPolyDescriptor{primes.p(i)});
    }
    return t;
}

GenSeqState initial_state_r0(const ScenarioConfig& config) {
    config.validate();
    PrimeSeq primes = build_primes(config.characteristic, static_cast<std::size_t>(config.prime_count));
    std::vector<Int> a = build_a_seq(primes, config.depth);

    GenSeqState s;
    s.characteristic = config.characteristic;
    s.primes = primes.primes;
    s.a_seq = a;
    s.l = 0;
    s.j = 0;
    s.nu_z = Rat(1);
    s.nu_w = Rat(a[0], Int(primes.p(1)));
    s.c = primes.p(1);
    s.e1 = a[0];
    for (int i = 2; i <= config.depth; ++i)
        s.higher.push_back(
            HigherRel{a[static_cast<std::size_t>(i - 1)], Int(0),
                      Rat(a[static_cast<std::size_t>(i - 1)], Int(primes.p(i)))});
    s.units.assign(static_cast<std::size_t>(config.depth - 1), UnitMonomial{});
    return s;
}

}  // namespace vsgap
