#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vsgap/error.hpp"
#include "vsgap/scenario.hpp"
#include "vsgap/subgroup.hpp"

using namespace vsgap;

TEST_CASE("prime sequence construction") {
    CHECK(build_primes(0, 4).primes == std::vector<long>{2, 3, 5, 7});
    CHECK(build_primes(2, 3).primes == std::vector<long>{3, 5, 7});
    CHECK(build_primes(0, 1).primes == std::vector<long>{2});
    CHECK_THROWS_AS(build_primes(4, 3), invalid_input);
    CHECK_THROWS_AS(build_primes(0, 0), invalid_input);
    CHECK_THROWS_AS(build_primes(0, 2).p(3), invalid_input);
}

TEST_CASE("a-sequence recurrence") {
    PrimeSeq p0 = build_primes(0, 4);
    std::vector<Int> a = build_a_seq(p0, 4);
    CHECK(a == std::vector<Int>{3, 19, 286, 10011});
    for (int i = 1; i <= 4; ++i) CHECK(gcd(a[i - 1], Int(p0.p(i))) == 1);

    CHECK(build_a_seq(p0, 1) == std::vector<Int>{3});
    CHECK(build_a_seq(build_primes(2, 3), 2) == std::vector<Int>{4, 61});
    CHECK_THROWS_AS(build_a_seq(p0, 5), invalid_input);
}

TEST_CASE("value growth nu(P_{i+1}) > pbar_i^2 nu(P_i)") {
    PrimeSeq p0 = build_primes(0, 6);
    std::vector<Int> a = build_a_seq(p0, 6);
    for (int i = 1; i < 6; ++i) {
        Rat cur(a[i - 1], Int(p0.p(i)));
        Rat next(a[i], Int(p0.p(i + 1)));
        CHECK(next > Rat(Int(p0.p(i)) * p0.p(i)) * cur);
    }
}

TEST_CASE("initial state at R_0") {
    ScenarioConfig cfg;
    cfg.prime_count = 3;
    cfg.depth = 3;
    cfg.l = 0;
    GenSeqState s = initial_state_r0(cfg);
    CHECK(s.nu_z == Rat(1));
    CHECK(s.nu_w == Rat(3, 2));
    CHECK(s.nu_q(2) == Rat(19, 3));
    CHECK(s.nu_q(3) == Rat(286, 5));
    CHECK(s.c == 2);
    CHECK(s.e1 == 3);
    CHECK(s.rel(2).e == 19);
    CHECK(s.rel(2).f == 0);
    CHECK(s.rel(3).e == 286);
    CHECK(s.standard_form());
    CHECK(s.max_index() == 3);
    // relation value bound from the construction
    CHECK(s.nu_q(2) > Rat(4) * s.nu_w);
    // (c, e1) encodes Q_2 = Q_1^{pbar_1 * pbar_1} - (1+t) Q_0^{pbar_1 * a_1}
    CHECK(Rat(s.c) * s.nu_w == Rat(s.e1) * s.nu_z);

    for (const UnitMonomial& u : s.units) CHECK(u.factors.empty());

    GenSeqState deep = initial_state_r0(default_scenario());
    CHECK(deep.max_index() == 4);
    CHECK(deep.nu_q(4) == Rat(10011, 7));
}

TEST_CASE("tower ledger") {
    PrimeSeq p0 = build_primes(0, 3);
    TowerLedger t = tower_ledger(p0, 3);
    CHECK(t.degrees == std::vector<long>{2, 3, 5});
    CHECK(t.tower_degree() == 30);
    CHECK(t.minpolys[1].str() == "u^3 - (1+t)*taubar^3");
    CHECK(tower_ledger(p0, 1).degrees == std::vector<long>{2});
}

TEST_CASE("group index chain at R_0 matches the prime sequence") {
    GenSeqState s = initial_state_r0(default_scenario());
    std::vector<Rat> vals{s.nu_z, s.nu_w};
    QSubgroup prev = group_of({s.nu_z});
    QSubgroup cur = group_of(vals);
    CHECK(subgroup_index(cur, prev) == s.primes[0]);
    for (int i = 2; i <= s.max_index(); ++i) {
        prev = cur;
        vals.push_back(s.nu_q(i));
        cur = group_of(vals);
        CHECK(subgroup_index(cur, prev) == s.primes[i - 1]);
    }
}

TEST_CASE("scenario config JSON") {
    ScenarioConfig cfg = default_scenario();
    std::string text = scenario_to_json(cfg);
    CHECK(text.find("\"characteristic\": 0") != std::string::npos);
    CHECK(text.find("\"bound\": \"8/1\"") != std::string::npos);
    ScenarioConfig back = scenario_from_json(text);
    CHECK(back.prime_count == 5);
    CHECK(back.depth == 4);
    CHECK(back.l == 1);
    CHECK(back.bound == Rat(8));
    CHECK(scenario_to_json(back) == text);

    CHECK_THROWS_AS(scenario_from_json("{not json"), invalid_input);
    CHECK_THROWS_AS(scenario_from_json("{}"), invalid_input);

    ScenarioConfig bad = cfg;
    bad.depth = 1;
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = cfg;
    bad.prime_count = 3;  // < l + depth
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = cfg;
    bad.bound = Rat(0);
    CHECK_THROWS_AS(bad.validate(), invalid_input);
}
