#include "vsgap/genseq.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

#include "vsgap/config.hpp"
#include "vsgap/error.hpp"
#include "vsgap/subgroup.hpp"

namespace vsgap {

using ojson = nlohmann::ordered_json;

UnitMonomial UnitMonomial::times(int level, const Int& exponent) const {
    UnitMonomial out = *this;
    for (auto& [lv, ex] : out.factors) {
        if (lv == level) {
            ex += exponent;
            return out;
        }
    }
    out.factors.emplace_back(level, exponent);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string UnitMonomial::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& [lv, ex] : factors) {
        if (!out.empty()) out += "*";
        out += "y~" + std::to_string(lv) + "^" + int_str(ex);
    }
    return out;
}

long GenSeqState::pbar(int i) const {
    std::size_t idx = static_cast<std::size_t>(i + l);  // 1-based pbar_{i+l}
    if (i < 1 || idx > primes.size())
        throw invalid_input("prime sequence exhausted at pbar_{" + std::to_string(i + l) + "}");
    return primes[idx - 1];
}

const HigherRel& GenSeqState::rel(int i) const {
    if (i < 2 || i > max_index()) throw invalid_input("relation index " + std::to_string(i) + " untracked");
    return higher[static_cast<std::size_t>(i - 2)];
}

Rat GenSeqState::nu_q(int i) const {
    if (i == 0) return nu_z;
    if (i == 1) return nu_w;
    return rel(i).nu;
}

const UnitMonomial& GenSeqState::tau(int i) const {
    if (i < 1 || i > max_index() - 1)
        throw invalid_input("unit index " + std::to_string(i) + " untracked");
    return units[static_cast<std::size_t>(i - 1)];
}

bool GenSeqState::standard_form() const {
    if (c != pbar(1)) return false;
    for (const HigherRel& h : higher)
        if (h.f != 0) return false;
    return true;
}

// --- advance_center ---------------------------------------------------

namespace {

// Minimal positive solution of pbar * bbar - a * abar = 1.
std::pair<Int, Int> bezout_pair(long pb, const Int& a) {
    for (long ab = 1; ab <= pb; ++ab) {
        Int t = 1 + a * ab;
        if (t % pb == 0) return {Int(ab), t / pb};
    }
    throw invariant_error("no Bezout pair for (" + std::to_string(pb) + ", " + int_str(a) + ")");
}

}  // namespace

GenSeqState advance_center(const GenSeqState& s) {
    if (!s.standard_form())
        throw invalid_input("not a center: state is not in standard R_j form");
    int m = s.max_index();
    if (m < 2) throw invalid_input("not a center: no higher generating-sequence element to promote");

    long pb = s.pbar(1);
    const Int& a1 = s.e1;
    auto [abar, bbar] = bezout_pair(pb, a1);
    if (Int(pb) * bbar - a1 * abar != 1)
        throw invariant_error("Bezout identity failed");

    GenSeqState n;
    n.characteristic = s.characteristic;
    n.primes = s.primes;
    n.a_seq = s.a_seq;
    n.l = s.l + 1;
    n.j = 0;
    n.nu_z = s.nu_z / Rat(pb);
    n.bezout = s.bezout;
    n.bezout.push_back(BezoutRecord{n.l, abar, bbar});

    // nu(Q'_i) = nu(Q_{i+1}) - a1 * pbar_{1+l}^2 ... pbar_{i+l}^2 * nu(z'),
    // and the new exponent a_{i,l+1} is recovered from the value.
    std::vector<Int> new_a(static_cast<std::size_t>(m), 0);  // 1-based: new_a[i] for i=1..m-1
    std::vector<Rat> new_nu(static_cast<std::size_t>(m));
    Int div_exp = a1;
    for (int i = 1; i <= m - 1; ++i) {
        Int ps = s.pbar(i);
        div_exp *= ps * ps;
        Rat nu_i = s.nu_q(i + 1) - div_exp * n.nu_z;
        if (nu_i.sign() <= 0)
            throw invariant_error("advance produced nonpositive value nu(Q_" + std::to_string(i) + ")");
        long pnew = n.pbar(i);  // pbar_{i+l+1}
        Rat a_rec = nu_i * Rat(pnew) / n.nu_z;
        if (!a_rec.is_integer())
            throw invariant_error("recovered exponent a_{" + std::to_string(i) + "," +
                                  std::to_string(n.l) + "} = " + a_rec.str() + " is not an integer");
        if (gcd(a_rec.num(), Int(pnew)) != 1)
            throw invariant_error("gcd(a_{" + std::to_string(i) + "," + std::to_string(n.l) + "}, " +
                                  std::to_string(pnew) + ") != 1");
        new_a[static_cast<std::size_t>(i)] = a_rec.num();
        new_nu[static_cast<std::size_t>(i)] = nu_i;
    }

    n.nu_w = new_nu[1];
    n.c = n.pbar(1);
    n.e1 = new_a[1];
    for (int i = 2; i <= m - 1; ++i)
        n.higher.push_back(HigherRel{new_a[static_cast<std::size_t>(i)], Int(0),
                                     new_nu[static_cast<std::size_t>(i)]});

    // tau'_i = tau_{i+1} * ytilde_{l+1}^{abar * a_{i+1,l}} with a_{i+1,l}
    // read off the old standard relation (e-slot).
    for (int i = 1; i <= m - 2; ++i)
        n.units.push_back(s.tau(i + 1).times(n.l, abar * s.rel(i + 1).e));

    return n;
}

// --- quadratic_step ----------------------------------------------------

const char* step_case_name(StepCase c) {
    return c == StepCase::shrink_z ? "shrink-z" : "shrink-w";
}

StepResult quadratic_step(const GenSeqState& s) {
    if (s.nu_z == s.nu_w)
        throw chain_terminated("nu(z) == nu(w) == " + s.nu_z.str() +
                               ": no monomial quadratic transform remains");

    StepCase which = (s.nu_w < s.nu_z) ? StepCase::shrink_z : StepCase::shrink_w;
    GenSeqState n = s;
    n.j = s.j + 1;

    long p1 = s.pbar(1);
    // Multiplier of the eliminated parameter in the Q_2 relation.
    const Int& mult = (which == StepCase::shrink_z) ? s.e1 : s.c;
    const Rat& dropped = (which == StepCase::shrink_z) ? s.nu_w : s.nu_z;

    if (which == StepCase::shrink_z) {
        n.nu_z = s.nu_z - s.nu_w;
        n.c = s.c - s.e1;
    } else {
        n.nu_w = s.nu_w - s.nu_z;
        n.e1 = s.e1 - s.c;
    }
    if (n.c <= 0 || n.e1 <= 0)
        throw invariant_error("quadratic step drove (c, e1) nonpositive");

    // Element divisor multiplier pbar_{1+l} * prod_{s=2}^{i-1} pbar_{s+l}^2
    // and relation multiplier M(i) = that * pbar_{i+l}.
    Int dvr = p1;
    for (int i = 2; i <= s.max_index(); ++i) {
        HigherRel& h = n.higher[static_cast<std::size_t>(i - 2)];
        Int m_i = dvr * s.pbar(i);
        Int moved = h.e + h.f - mult * m_i;
        if (moved <= 0)
            throw invariant_error("strict transform exponent at i=" + std::to_string(i) +
                                  " is nonpositive: " + int_str(moved));
        if (which == StepCase::shrink_z)
            h.f = moved;
        else
            h.e = moved;
        h.nu = h.nu - mult * dvr * dropped;
        if (h.nu.sign() <= 0)
            throw invariant_error("quadratic step drove nu(Q_" + std::to_string(i) + ") nonpositive");
        long ps = s.pbar(i);
        dvr *= Int(ps) * ps;
    }

    return StepResult{std::move(n), which};
}

// --- audit --------------------------------------------------------------

bool AuditReport::ok() const {
    for (const AuditCheck& c : checks)
        if (!c.pass) return false;
    for (const IndexEntry& e : index_table)
        if (e.expected != e.actual) return false;
    return true;
}

AuditReport audit(const GenSeqState& s) {
    AuditReport r;
    auto add = [&r](const std::string& name, bool pass, const std::string& witness) {
        r.checks.push_back(AuditCheck{name, pass, witness});
    };

    bool pos = s.nu_z.sign() > 0 && s.nu_w.sign() > 0 && s.c > 0 && s.e1 > 0;
    for (const HigherRel& h : s.higher)
        pos = pos && h.nu.sign() > 0 && h.e > 0 && h.f >= 0;
    add("positivity", pos, "values > 0, c,e1,e_i > 0, f_i >= 0");

    Int g = gcd(s.c, s.e1);
    add("gcd_c_e1", g == 1, "gcd(" + int_str(s.c) + "," + int_str(s.e1) + ") = " + int_str(g));

    Rat lhs = Rat(s.c) * s.nu_w;
    Rat rhs = Rat(s.e1) * s.nu_z;
    add("value_balance_q1", lhs == rhs, "c*nu_w = " + lhs.str() + ", e1*nu_z = " + rhs.str());

    if (s.max_index() >= 2) {
        Rat bound = Rat(s.pbar(1)) * Rat(s.c) * s.nu_w;
        add("q2_above_pcw", s.nu_q(2) > bound,
            "nu(Q_2) = " + s.nu_q(2).str() + " vs pbar*c*nu_w = " + bound.str());
    }

    for (int i = 3; i <= s.max_index(); ++i) {
        long ps = s.pbar(i - 1);
        Rat bound = Rat(Int(ps) * ps) * s.nu_q(i - 1);
        add("growth_q" + std::to_string(i), s.nu_q(i) > bound,
            "nu(Q_" + std::to_string(i) + ") = " + s.nu_q(i).str() + " vs pbar^2*nu(Q_" +
                std::to_string(i - 1) + ") = " + bound.str());
    }

    for (int i = 2; i <= s.max_index(); ++i) {
        const HigherRel& h = s.rel(i);
        Rat left = Rat(s.pbar(i)) * h.nu;
        Rat right = Rat(h.e) * s.nu_z + Rat(h.f) * s.nu_w;
        add("balance_q" + std::to_string(i), left == right,
            "pbar*nu(Q_i) = " + left.str() + ", e_i*nu_z + f_i*nu_w = " + right.str());
    }

    add("unit_ledger_shape",
        static_cast<int>(s.units.size()) == std::max(0, s.max_index() - 1),
        std::to_string(s.units.size()) + " units for max index " + std::to_string(s.max_index()));

    // Index chain, eq-41/42 style: i = 1 compares against c, i >= 2
    // against pbar_{i+l}.
    std::vector<Rat> vals{s.nu_z};
    QSubgroup prev = group_of(vals);
    vals.push_back(s.nu_w);
    QSubgroup cur = group_of(vals);
    r.index_table.push_back(IndexEntry{1, s.c, subgroup_index(cur, prev)});
    for (int i = 2; i <= s.max_index(); ++i) {
        prev = cur;
        vals.push_back(s.nu_q(i));
        cur = group_of(vals);
        r.index_table.push_back(IndexEntry{i, Int(s.pbar(i)), subgroup_index(cur, prev)});
    }
    return r;
}

// --- audit_Di -----------------------------------------------------------

namespace {

struct DiTuple {
    std::vector<long> f;  // f_0 .. f_i
};

void enumerate_tuples(const GenSeqState& s, const Rat& budget, int n, const std::vector<Rat>& nu,
                      const std::vector<long>& upper, std::vector<long>& f, Rat acc,
                      std::map<Rat, std::vector<DiTuple>>& classes, std::int64_t& count) {
    if (n < 0) {
        if (++count > caps().tuple_cap)
            throw resource_limit("D(i) audit tuple cap exceeded");
        classes[acc].push_back(DiTuple{f});
        return;
    }
    std::size_t idx = static_cast<std::size_t>(n);
    for (long v = 0;; ++v) {
        if (upper[idx] >= 0 && v >= upper[idx]) break;
        Rat next = acc + Rat(v) * nu[idx];
        if (next > budget) break;
        f[idx] = v;
        enumerate_tuples(s, budget, n - 1, nu, upper, f, next, classes, count);
    }
    f[idx] = 0;
}

}  // namespace

DiReport audit_Di(const GenSeqState& s, const Rat& value_budget) {
    if (value_budget.sign() < 0) throw invalid_input("D(i) audit budget must be >= 0");
    int m = s.max_index();
    std::vector<Rat> nu;
    std::vector<long> upper;  // exclusive bound per slot; -1 = budget only
    for (int i = 0; i <= m; ++i) nu.push_back(s.nu_q(i));
    upper.push_back(-1);  // f_0 unbounded
    {
        Rat b1 = Rat(s.pbar(1)) * Rat(s.c);
        upper.push_back(b1.num().fits_slong_p() ? b1.num().get_si() : -1);
    }
    for (int i = 2; i <= m; ++i) {
        long ps = s.pbar(i);
        upper.push_back(ps * ps);
    }

    std::map<Rat, std::vector<DiTuple>> classes;
    std::vector<long> f(static_cast<std::size_t>(m + 1), 0);
    std::int64_t count = 0;
    enumerate_tuples(s, value_budget, m, nu, upper, f, Rat(0), classes, count);

    DiReport rep;
    rep.tuples = count;
    rep.classes = static_cast<std::int64_t>(classes.size());

    for (const auto& [value, members] : classes) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                ++rep.pairs;
                // Exponent vector of the ratio.
                std::vector<Int> d(static_cast<std::size_t>(m + 1));
                for (int i = 0; i <= m; ++i)
                    d[static_cast<std::size_t>(i)] =
                        Int(members[b].f[static_cast<std::size_t>(i)]) -
                        Int(members[a].f[static_cast<std::size_t>(i)]);
                // Reduce Q_i^{pbar} -> gamma_i * z^{e_i} w^{f_i} from the top.
                std::vector<Int> gamma(static_cast<std::size_t>(m + 1), 0);
                bool bad = false;
                for (int i = m; i >= 2 && !bad; --i) {
                    Int pi(s.pbar(i));
                    if (d[static_cast<std::size_t>(i)] % pi != 0) {
                        rep.failures.push_back("value " + value.str() + ": d_" + std::to_string(i) +
                                               " not divisible by pbar");
                        bad = true;
                        break;
                    }
                    Int gi = d[static_cast<std::size_t>(i)] / pi;
                    gamma[static_cast<std::size_t>(i)] = gi;
                    d[0] += gi * s.rel(i).e;
                    d[1] += gi * s.rel(i).f;
                    if (abs(gi) >= pi) {
                        rep.failures.push_back("value " + value.str() + ": |gamma_" +
                                               std::to_string(i) + "| = " + int_str(abs(gi)) +
                                               " >= tower degree " + int_str(pi));
                        bad = true;
                    }
                }
                if (bad) continue;
                if (d[1] % s.c != 0) {
                    rep.failures.push_back("value " + value.str() + ": d_1 not divisible by c");
                    continue;
                }
                Int g1 = d[1] / s.c;
                gamma[1] = g1;
                d[0] += g1 * s.e1;
                if (d[0] != 0) {
                    rep.failures.push_back("value " + value.str() +
                                           ": reduction left z-exponent " + int_str(d[0]));
                    continue;
                }
                // gamma_1^{pbar_{1+l}} lies in the residue base field, so only
                // the class of g1 mod pbar matters for nonvanishing; when all
                // higher components vanish, |g1| < pbar holds outright from the
                // f_1 bound.
                bool nonzero = false;
                for (int i = 2; i <= m; ++i) nonzero = nonzero || gamma[static_cast<std::size_t>(i)] != 0;
                nonzero = nonzero || g1 != 0;
                if (!nonzero)
                    rep.failures.push_back("value " + value.str() + ": zero residue exponent vector");
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

// --- serialization -------------------------------------------------------

namespace {

ojson unit_to_json(const UnitMonomial& u) {
    ojson arr = ojson::array();
    for (const auto& [lv, ex] : u.factors) arr.push_back(ojson::array({lv, int_str(ex)}));
    return arr;
}

UnitMonomial unit_from_json(const ojson& j) {
    UnitMonomial u;
    for (const auto& f : j)
        u.factors.emplace_back(f.at(0).get<int>(), parse_int(f.at(1).get<std::string>()));
    return u;
}

}  // namespace

std::string state_to_json(const GenSeqState& s) {
    ojson j;
    j["characteristic"] = s.characteristic;
    j["primes"] = s.primes;
    ojson a = ojson::array();
    for (const Int& v : s.a_seq) a.push_back(int_str(v));
    j["a_seq"] = a;
    j["l"] = s.l;
    j["j"] = s.j;
    j["nu_z"] = s.nu_z.str();
    j["nu_w"] = s.nu_w.str();
    j["c"] = int_str(s.c);
    j["e1"] = int_str(s.e1);
    ojson hi = ojson::array();
    for (std::size_t k = 0; k < s.higher.size(); ++k) {
        ojson h;
        h["i"] = static_cast<int>(k) + 2;
        h["e"] = int_str(s.higher[k].e);
        h["f"] = int_str(s.higher[k].f);
        h["nu"] = s.higher[k].nu.str();
        hi.push_back(h);
    }
    j["higher"] = hi;
    ojson un = ojson::array();
    for (const UnitMonomial& u : s.units) un.push_back(unit_to_json(u));
    j["units"] = un;
    ojson bz = ojson::array();
    for (const BezoutRecord& b : s.bezout) {
        ojson e;
        e["level"] = b.level;
        e["abar"] = int_str(b.abar);
        e["bbar"] = int_str(b.bbar);
        bz.push_back(e);
    }
    j["bezout"] = bz;
    return j.dump(2);
}

GenSeqState state_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string("state JSON parse error: ") + e.what());
    }
    try {
        GenSeqState s;
        s.characteristic = j.at("characteristic").get<long>();
        s.primes = j.at("primes").get<std::vector<long>>();
        for (const auto& v : j.at("a_seq")) s.a_seq.push_back(parse_int(v.get<std::string>()));
        s.l = j.at("l").get<int>();
        s.j = j.at("j").get<int>();
        s.nu_z = Rat::parse(j.at("nu_z").get<std::string>());
        s.nu_w = Rat::parse(j.at("nu_w").get<std::string>());
        s.c = parse_int(j.at("c").get<std::string>());
        s.e1 = parse_int(j.at("e1").get<std::string>());
        for (const auto& h : j.at("higher"))
            s.higher.push_back(HigherRel{parse_int(h.at("e").get<std::string>()),
                                         parse_int(h.at("f").get<std::string>()),
                                         Rat::parse(h.at("nu").get<std::string>())});
        for (const auto& u : j.at("units")) s.units.push_back(unit_from_json(u));
        if (j.contains("bezout"))
            for (const auto& b : j.at("bezout"))
                s.bezout.push_back(BezoutRecord{b.at("level").get<int>(),
                                                parse_int(b.at("abar").get<std::string>()),
                                                parse_int(b.at("bbar").get<std::string>())});
        return s;
    } catch (const ojson::exception& e) {
        throw invalid_input(std::string("state JSON missing/invalid field: ") + e.what());
    }
}

std::string audit_to_json(const AuditReport& r) {
    ojson j;
    j["ok"] = r.ok();
    ojson checks = ojson::array();
    for (const AuditCheck& c : r.checks) {
        ojson e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    ojson tbl = ojson::array();
    for (const IndexEntry& e : r.index_table) {
        ojson t;
        t["i"] = e.i;
        t["expected"] = int_str(e.expected);
        t["actual"] = int_str(e.actual);
        tbl.push_back(t);
    }
    j["index_table"] = tbl;
    return j.dump(2);
}

}  // namespace vsgap
