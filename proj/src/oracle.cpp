#include "vsgap/oracle.hpp"

#include <algorithm>

#include "vsgap/error.hpp"

namespace vsgap {

namespace {

std::int64_t to_i64(const Int& v, const std::string& what) {
    if (!v.fits_slong_p())
        throw resource_limit(what + " = " + int_str(v) + " exceeds the oracle exponent range");
    return v.get_si();
}

ExpVec zexp(int nvars, std::int64_t e) {
    ExpVec v(static_cast<std::size_t>(nvars), 0);
    v[0] = e;
    return v;
}

// Monomial (1+t)^1 * tau^pbar * z^{ze} * w^{we} for a ledger unit tau.
SparsePoly relation_tail(const GenSeqState& s, int nvars, const UnitMonomial& tau, long pb,
                         const Int& ze, const Int& we) {
    ExpVec e(static_cast<std::size_t>(nvars), 0);
    e[0] = to_i64(Int(pb) * ze, "z exponent");
    e[1] = to_i64(Int(pb) * we, "w exponent");
    for (const auto& [level, exp] : tau.factors) {
        std::size_t idx = static_cast<std::size_t>(1 + level);
        if (idx >= e.size()) throw invalid_input("unit level exceeds oracle variable space");
        e[idx] = to_i64(Int(pb) * exp, "unit exponent");
    }
    return SparsePoly::monomial(nvars, s.characteristic, e,
                                TPoly::one_plus_t(s.characteristic));
}

}  // namespace

int oracle_nvars(int unit_levels) {
    return 2 + unit_levels;
}

std::vector<std::string> oracle_names(int unit_levels, bool r_phase) {
    std::vector<std::string> names{r_phase ? "x" : "z", r_phase ? "y" : "w"};
    for (int k = 1; k <= unit_levels; ++k) names.push_back("y~" + std::to_string(k));
    return names;
}

void OracleReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(OracleCheck{name, pass, detail});
}

bool OracleReport::ok() const {
    for (const OracleCheck& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

std::vector<SparsePoly> build_P(int depth, const PrimeSeq& primes, const std::vector<Int>& a_seq,
                                long characteristic, int unit_levels) {
    if (depth < 1) throw invalid_input("build_P depth must be >= 1");
    if (static_cast<std::size_t>(depth) > primes.primes.size() ||
        static_cast<std::size_t>(depth) > a_seq.size())
        throw invalid_input("build_P depth exceeds available primes/exponents");
    int nvars = oracle_nvars(unit_levels);
    std::vector<SparsePoly> P;
    P.push_back(SparsePoly::variable(nvars, characteristic, 0));
    P.push_back(SparsePoly::variable(nvars, characteristic, 1));
    for (int i = 1; i < depth; ++i) {
        long pb = primes.p(static_cast<std::size_t>(i));
        std::int64_t xe = to_i64(Int(pb) * a_seq[static_cast<std::size_t>(i - 1)], "z exponent");
        SparsePoly tail = SparsePoly::monomial(nvars, characteristic, zexp(nvars, xe),
                                               TPoly::one_plus_t(characteristic));
        P.push_back(P.back().pow(pb * pb) - tail);
    }
    return P;
}

std::vector<SparsePoly> build_templates(const GenSeqState& s, int unit_levels) {
    int nvars = oracle_nvars(unit_levels);
    std::vector<SparsePoly> T;
    T.push_back(SparsePoly::variable(nvars, s.characteristic, 0));
    T.push_back(SparsePoly::variable(nvars, s.characteristic, 1));
    int m = s.max_index();
    if (m >= 2) {
        long pb = s.pbar(1);
        SparsePoly head = T[1].pow(to_i64(Int(pb) * s.c, "w exponent"));
        T.push_back(head - relation_tail(s, nvars, s.tau(1), pb, s.e1, Int(0)));
    }
    for (int i = 2; i <= m - 1; ++i) {
        long pb = s.pbar(i);
        SparsePoly head = T[static_cast<std::size_t>(i)].pow(pb * pb);
        T.push_back(head - relation_tail(s, nvars, s.tau(i), pb, s.rel(i).e, s.rel(i).f));
    }
    return T;
}

// --- p-sequence checks --------------------------------------------------

OracleReport verify_pseq(long characteristic, int depth, bool with_dumps) {
    OracleReport rep;
    PrimeSeq primes = build_primes(characteristic, static_cast<std::size_t>(std::max(depth, 2)));
    std::vector<Int> a = build_a_seq(primes, depth);
    std::vector<SparsePoly> P = build_P(depth, primes, a, characteristic);
    int nvars = oracle_nvars(0);

    if (depth >= 2) {
        long p1 = primes.p(1);
        SparsePoly expect =
            SparsePoly::variable(nvars, characteristic, 1).pow(p1 * p1) -
            SparsePoly::monomial(nvars, characteristic, zexp(nvars, to_i64(Int(p1) * a[0], "e")),
                                 TPoly::one_plus_t(characteristic));
        rep.add("pseq_p2_shape", P[2] == expect,
                "P_2 = w^" + std::to_string(p1 * p1) + " - (1+t) z^" + int_str(Int(p1) * a[0]));
    }

    // The naive (z,w)-weight of P_{i+1} is pbar_i^2 times the weight of P_i:
    // the head contributes every minimal-weight term once i >= 2.
    std::vector<Rat> weights{Rat(1), Rat(a[0], Int(primes.p(1)))};
    for (int i = 2; i <= depth; ++i) {
        long pb = primes.p(static_cast<std::size_t>(i - 1));
        Rat expect = (i == 2) ? Rat(Int(pb) * a[0])
                              : Rat(Int(pb) * pb) * P[static_cast<std::size_t>(i - 1)].min_weight(weights);
        Rat got = P[static_cast<std::size_t>(i)].min_weight(weights);
        rep.add("pseq_weight_P" + std::to_string(i), got == expect,
                "min weight " + got.str() + ", expected " + expect.str());
    }

    if (characteristic == 0 && depth >= 3 && primes.p(1) == 2 && primes.p(2) == 3)
        rep.add("pseq_P3_terms", P[3].term_count() == 11,
                std::to_string(P[3].term_count()) + " terms");

    if (with_dumps)
        for (int i = 0; i <= depth; ++i)
            rep.dumps.push_back("P_" + std::to_string(i) + " = " +
                                P[static_cast<std::size_t>(i)].dump(oracle_names(0, true)));
    return rep;
}

// --- chain verification ---------------------------------------------------

namespace {

// Verify one center advance at the polynomial level. T are the template
// polynomials of s (concrete P_i when l = 0); returns the strict transforms
// rho_i so the caller can continue.
void verify_advance_polys(OracleReport& rep, const GenSeqState& s, const GenSeqState& next,
                          const std::vector<SparsePoly>& T, int unit_levels, bool with_dumps) {
    int nvars = oracle_nvars(unit_levels);
    int m = s.max_index();
    long pb = s.pbar(1);
    const BezoutRecord& bz = next.bezout.back();
    std::string tag = "advance_l" + std::to_string(next.l);

    // z -> z^pbar u^abar, w -> z^{e1} u^bbar, units fixed.
    Substitution sub;
    sub.nvars_from = nvars;
    sub.nvars_to = nvars;
    sub.images.assign(static_cast<std::size_t>(nvars), ExpVec(static_cast<std::size_t>(nvars), 0));
    sub.images[0][0] = pb;
    sub.images[0][static_cast<std::size_t>(1 + next.l)] = to_i64(bz.abar, "abar");
    sub.images[1][0] = to_i64(s.e1, "e1");
    sub.images[1][static_cast<std::size_t>(1 + next.l)] = to_i64(bz.bbar, "bbar");
    for (int k = 2; k < nvars; ++k) sub.images[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;

    std::vector<SparsePoly> rho;  // rho[i] for new index i = 1..m-1
    rho.push_back(SparsePoly::zero(nvars, s.characteristic));  // placeholder index 0
    Int div = s.e1;
    for (int i = 1; i <= m - 1; ++i) {
        long ps = s.pbar(i);
        div *= Int(ps) * ps;
        SparsePoly image = T[static_cast<std::size_t>(i + 1)].substitute(sub);
        std::string name = tag + "_strict_Q" + std::to_string(i);
        try {
            SparsePoly q = image.divide_by_monomial(zexp(nvars, to_i64(div, "divisor exponent")));
            bool clean = q.has_term_free_of(0);
            rep.add(name, clean,
                    "exact division by z^" + int_str(div) +
                        (clean ? "" : " left a common z factor"));
            rho.push_back(std::move(q));
        } catch (const not_divisible& e) {
            rep.add(name, false, e.what());
            return;
        }
        // Divisor weight accounts for the entire value drop.
        Rat drop = s.nu_q(i + 1) - next.nu_q(i);
        Rat dw = Rat(div) * next.nu_z;
        rep.add(tag + "_weight_Q" + std::to_string(i), drop == dw,
                "value drop " + drop.str() + ", divisor weight " + dw.str());
    }

    // Template recurrence on the strict transforms (the level-(l+1) relation
    // shape with ledger units and recovered exponents).
    for (int i = 1; i <= m - 2; ++i) {
        long pn = next.pbar(i);
        const Int& a_new = (i == 1) ? next.e1 : next.rel(i).e;
        SparsePoly rhs = rho[static_cast<std::size_t>(i)].pow(pn * pn) -
                         relation_tail(next, nvars, next.tau(i), pn, a_new, Int(0));
        bool same = rho[static_cast<std::size_t>(i + 1)] == rhs;
        rep.add(tag + "_template_Q" + std::to_string(i + 1), same,
                same ? "strict transform matches the relation template"
                     : "strict transform differs from the relation template");
    }

    if (with_dumps)
        for (int i = 1; i < static_cast<int>(rho.size()); ++i)
            rep.dumps.push_back("rho_" + std::to_string(i) + " = " +
                                rho[static_cast<std::size_t>(i)].dump(oracle_names(unit_levels, false)));
}

void verify_step_polys(OracleReport& rep, const GenSeqState& s, const StepResult& step,
                       int unit_levels) {
    int nvars = oracle_nvars(unit_levels);
    int m = s.max_index();
    const GenSeqState& n = step.state;
    std::string tag = "step_j" + std::to_string(n.j);

    std::vector<SparsePoly> T = build_templates(s, unit_levels);
    std::vector<SparsePoly> Tn = build_templates(n, unit_levels);

    int shrink_var = (step.which == StepCase::shrink_z) ? 0 : 1;  // variable dividing out
    int divisor_var = 1 - shrink_var;
    // z = z'w' (shrink-z) or w = z'w' (shrink-w); the other parameter is fixed.
    Substitution sub;
    sub.nvars_from = nvars;
    sub.nvars_to = nvars;
    sub.images.assign(static_cast<std::size_t>(nvars), ExpVec(static_cast<std::size_t>(nvars), 0));
    sub.images[static_cast<std::size_t>(shrink_var)][0] = 1;
    sub.images[static_cast<std::size_t>(shrink_var)][1] = 1;
    sub.images[static_cast<std::size_t>(divisor_var)][static_cast<std::size_t>(divisor_var)] = 1;
    for (int k = 2; k < nvars; ++k) sub.images[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;

    const Int& mult = (step.which == StepCase::shrink_z) ? s.e1 : s.c;
    const Rat& divisor_value = (step.which == StepCase::shrink_z) ? n.nu_w : n.nu_z;

    Int dvr = s.pbar(1);
    for (int i = 2; i <= m; ++i) {
        Int de = mult * dvr;  // divisor exponent for element index i
        SparsePoly image = T[static_cast<std::size_t>(i)].substitute(sub);
        ExpVec dm(static_cast<std::size_t>(nvars), 0);
        dm[static_cast<std::size_t>(divisor_var)] = to_i64(de, "divisor exponent");
        std::string name = tag + "_strict_Q" + std::to_string(i);
        try {
            SparsePoly q = image.divide_by_monomial(dm);
            bool same = q == Tn[static_cast<std::size_t>(i)];
            rep.add(name, same,
                    same ? "strict transform equals the next template"
                         : "strict transform differs from the next template");
        } catch (const not_divisible& e) {
            rep.add(name, false, e.what());
        }
        Rat drop = s.nu_q(i) - n.nu_q(i);
        Rat dw = Rat(de) * divisor_value;
        rep.add(tag + "_weight_Q" + std::to_string(i), drop == dw,
                "value drop " + drop.str() + ", divisor weight " + dw.str());
        long ps = s.pbar(i);
        dvr *= Int(ps) * ps;
    }
}

}  // namespace

OracleReport verify_chain(const ScenarioConfig& cfg, int l_max, int step_max, int depth,
                          bool with_dumps) {
    if (l_max < 0 || step_max < 0) throw invalid_input("verify_chain: negative bounds");
    OracleReport rep;
    ScenarioConfig run = cfg;
    run.depth = depth;
    run.l = l_max;
    run.prime_count = std::max(run.prime_count, l_max + depth);
    run.validate();

    int unit_levels = std::max(1, l_max);
    GenSeqState s = initial_state_r0(run);

    // Center advances, each verified as exact polynomial identities.
    for (int l = 0; l < l_max; ++l) {
        std::vector<SparsePoly> T = build_templates(s, unit_levels);
        if (l == 0) {
            PrimeSeq primes{run.characteristic, s.primes};
            std::vector<SparsePoly> P =
                build_P(depth, primes, s.a_seq, run.characteristic, unit_levels);
            bool same = true;
            for (std::size_t i = 0; i < P.size() && i < T.size(); ++i) same = same && P[i] == T[i];
            rep.add("templates_equal_pseq_at_R0", same,
                    "template reconstruction agrees with the explicit sequence");
            if (with_dumps)
                for (std::size_t i = 0; i < P.size(); ++i)
                    rep.dumps.push_back("P_" + std::to_string(i) + " = " +
                                        P[i].dump(oracle_names(unit_levels, true)));
        }
        GenSeqState next = advance_center(s);
        verify_advance_polys(rep, s, next, T, unit_levels, with_dumps);
        s = next;
    }

    // Quadratic steps against the next state's templates.
    for (int k = 0; k < step_max; ++k) {
        StepResult step;
        try {
            step = quadratic_step(s);
        } catch (const chain_terminated&) {
            rep.add("chain_terminated_at_step_" + std::to_string(k), true,
                    "nu(z) = nu(w) = " + s.nu_z.str());
            break;
        }
        verify_step_polys(rep, s, step, unit_levels);
        s = step.state;
    }

    if (with_dumps) {
        std::vector<SparsePoly> T = build_templates(s, unit_levels);
        for (std::size_t i = 0; i < T.size(); ++i)
            rep.dumps.push_back("Q_" + std::to_string(i) + " = " +
                                T[i].dump(oracle_names(unit_levels, false)));
    }
    return rep;
}

OracleReport verify_steps(const GenSeqState& start, int step_max, int unit_levels) {
    if (step_max < 0) throw invalid_input("verify_steps: negative step budget");
    OracleReport rep;
    GenSeqState s = start;
    for (int k = 0; k < step_max; ++k) {
        StepResult step;
        try {
            step = quadratic_step(s);
        } catch (const chain_terminated&) {
            rep.add("chain_terminated_at_step_" + std::to_string(k), true,
                    "nu(z) = nu(w) = " + s.nu_z.str());
            break;
        }
        verify_step_polys(rep, s, step, unit_levels);
        s = step.state;
    }
    if (rep.checks.empty()) rep.add("no_steps_requested", true, "vacuous");
    return rep;
}

// --- resultant / discriminant ---------------------------------------------

TPoly sylvester_resultant(std::vector<TPoly> f, std::vector<TPoly> g) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    while (!g.empty() && g.back().is_zero()) g.pop_back();
    if (f.empty() || g.empty()) throw invalid_input("resultant with the zero polynomial");
    long ch = f[0].characteristic();
    int n = static_cast<int>(f.size()) - 1;
    int m = static_cast<int>(g.size()) - 1;
    if (n == 0) return f[0].pow(m);
    if (m == 0) return g[0].pow(n);

    int N = n + m;
    std::vector<std::vector<TPoly>> A(static_cast<std::size_t>(N),
                                      std::vector<TPoly>(static_cast<std::size_t>(N), TPoly::zero(ch)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(n - k)];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) A[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(m - k)];

    // Bareiss fraction-free elimination; divisions are exact over the
    // polynomial ring.
    int sign = 1;
    TPoly prev = TPoly::one(ch);
    for (int k = 0; k + 1 < N; ++k) {
        std::size_t ku = static_cast<std::size_t>(k);
        if (A[ku][ku].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < N; ++i)
                if (!A[static_cast<std::size_t>(i)][ku].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return TPoly::zero(ch);
            std::swap(A[ku], A[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            std::size_t iu = static_cast<std::size_t>(i);
            for (int j = k + 1; j < N; ++j) {
                std::size_t ju = static_cast<std::size_t>(j);
                A[iu][ju] = (A[iu][ju] * A[ku][ku] - A[iu][ku] * A[ku][ju]).divexact(prev);
            }
            A[iu][ku] = TPoly::zero(ch);
        }
        prev = A[ku][ku];
    }
    TPoly det = A[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    return sign < 0 ? -det : det;
}

std::string DiscReport::summary() const {
    return "p=" + std::to_string(p) + " char=" + std::to_string(characteristic) +
           " resultant=" + resultant.str() + " discriminant=" + discriminant.str() +
           " formula=" + formula.str() + (pass ? " PASS" : " FAIL");
}

DiscReport discriminant_check(long p_prime, long characteristic) {
    if (!is_prime(p_prime)) throw invalid_input("discriminant: p must be prime");
    if (characteristic != 0 && !is_prime(characteristic))
        throw invalid_input("discriminant: characteristic must be 0 or prime");
    if (p_prime == characteristic)
        throw invalid_input("discriminant: p equals the residue characteristic");

    long ch = characteristic;
    DiscReport r;
    r.p = p_prime;
    r.characteristic = ch;

    std::vector<TPoly> f(static_cast<std::size_t>(p_prime) + 1, TPoly::zero(ch));
    f[0] = -TPoly::one_plus_t(ch);
    f[static_cast<std::size_t>(p_prime)] = TPoly::one(ch);
    std::vector<TPoly> df(static_cast<std::size_t>(p_prime), TPoly::zero(ch));
    df[static_cast<std::size_t>(p_prime - 1)] = TPoly(ch, Rat(p_prime));

    r.resultant = sylvester_resultant(f, df);

    bool negate = ((p_prime * (p_prime - 1) / 2) % 2) != 0;
    r.discriminant = negate ? -r.resultant : r.resultant;

    Int pp;
    mpz_pow_ui(pp.get_mpz_t(), Int(p_prime).get_mpz_t(), static_cast<unsigned long>(p_prime));
    TPoly formula = TPoly(ch, Rat(pp)) * TPoly::one_plus_t(ch).pow(p_prime - 1);
    r.formula = negate ? -formula : formula;

    r.matches_exactly = r.discriminant == r.formula;
    r.matches_up_to_sign = r.matches_exactly || r.discriminant == -r.formula;
    try {
        TPoly unit = r.resultant.divexact(TPoly::one_plus_t(ch).pow(p_prime - 1));
        r.unit_times_power = !unit.is_zero() && unit.is_constant();
    } catch (const not_divisible&) {
        r.unit_times_power = false;
    }
    // The closed formula is exact for odd p; at p = 2 the product over the
    // square roots contributes one extra factor -1.
    r.pass = r.matches_up_to_sign && r.unit_times_power && (r.matches_exactly || p_prime == 2);
    return r;
}

}  // namespace vsgap
