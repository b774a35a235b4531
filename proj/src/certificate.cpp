#include "vsgap/certificate.hpp"

#include <json.hpp>

#include "vsgap/error.hpp"
#include "vsgap/semigroup.hpp"
#include "vsgap/subgroup.hpp"

namespace vsgap {

using ojson = nlohmann::ordered_json;

ExtensionSpec ExtensionSpec::for_state(const GenSeqState& s) {
    long p = s.pbar(1);
    return ExtensionSpec{p, p};
}

namespace {

void require_gap_state(const GenSeqState& s, const ExtensionSpec& ext) {
    if (s.max_index() < 2) throw invalid_input("state does not track nu(Q_2)");
    if (ext.p != s.pbar(1))
        throw invalid_input("extension degree " + std::to_string(ext.p) +
                            " does not match pbar_{1+l} = " + std::to_string(s.pbar(1)));
    if (ext.p == s.characteristic)
        throw invalid_input("extension degree equals the residue characteristic");
    if (s.nu_z.sign() <= 0 || s.nu_w.sign() <= 0 || s.e1 <= 0)
        throw invalid_input("state values must be positive");
    // nu(Q_2) > p * e1 * nu(z) is the relation inequality; degenerate states
    // that would trivialize the distinguished factor value are rejected.
    if (!(s.nu_q(2) > Rat(ext.p) * Rat(s.e1) * s.nu_z))
        throw invalid_input("state violates nu(Q_2) > p * e1 * nu(z)");
}

}  // namespace

std::vector<Rat> h_values(const GenSeqState& s, const ExtensionSpec& ext) {
    require_gap_state(s, ext);
    Rat common = Rat(s.e1) * s.nu_z;  // = c * nu(w) for balanced states
    Rat gap = s.nu_q(2) - Rat(ext.p - 1) * common;
    std::vector<Rat> out(static_cast<std::size_t>(ext.p - 1), common);
    out.push_back(gap);
    Rat sum(0);
    for (const Rat& v : out) sum += v;
    if (sum != s.nu_q(2)) throw invariant_error("h-value sum differs from nu(Q_2)");
    return out;
}

GapCertificate certify_gap(const GenSeqState& s, const ExtensionSpec& ext, const Rat& bound) {
    (void)bound;  // membership is exact; the DP budget is the scaled gap itself
    std::vector<Rat> h = h_values(s, ext);

    GapCertificate cert;
    cert.l = s.l;
    cert.p = ext.p;
    cert.c = s.c;
    cert.e1 = s.e1;
    cert.nu_q0 = s.nu_z;
    cert.nu_q1 = s.nu_w;
    cert.nu_q2 = s.nu_q(2);
    cert.h = h;
    cert.gap = h.back();

    if (!(cert.gap < cert.nu_q2))
        throw invariant_error("gap >= nu(Q_2) cannot happen under the state invariants");

    NumSgp pair({s.nu_z, s.nu_w});
    cert.scale = pair.scale();
    cert.scaled_gens = pair.scaled_generators();
    QSubgroup pair_group = group_of({s.nu_z, s.nu_w});
    cert.group_generator = pair_group.generator;
    cert.index_pair_over_q0 = subgroup_index(pair_group, group_of({s.nu_z}));
    cert.index_q2_over_pair =
        subgroup_index(group_of({s.nu_z, s.nu_w, cert.nu_q2}), pair_group);

    cert.chk_sum = true;  // established by h_values
    cert.chk_lt_nuq2 = cert.gap < cert.nu_q2;
    cert.chk_not_in_group = !pair_group.contains(cert.gap);
    cert.chk_not_in_semigroup = !pair.member(cert.gap);
    return cert;
}

bool recheck(const GapCertificate& cert) {
    if (cert.version != 1 || cert.kind != "prop1-gap") return false;
    if (cert.p < 2 || cert.e1 <= 0) return false;
    if (cert.nu_q0.sign() <= 0 || cert.nu_q1.sign() <= 0 || cert.nu_q2.sign() <= 0) return false;

    // Re-derive the h multiset and the gap.
    Rat common = Rat(cert.e1) * cert.nu_q0;
    Rat gap = cert.nu_q2 - Rat(cert.p - 1) * common;
    if (gap != cert.gap) return false;
    if (static_cast<long>(cert.h.size()) != cert.p) return false;
    for (std::size_t i = 0; i + 1 < cert.h.size(); ++i)
        if (cert.h[i] != common) return false;
    if (cert.h.back() != gap) return false;
    Rat sum(0);
    for (const Rat& v : cert.h) sum += v;

    // Re-derive the group/semigroup data.
    NumSgp pair({cert.nu_q0, cert.nu_q1});
    QSubgroup pair_group = group_of({cert.nu_q0, cert.nu_q1});
    if (pair.scale() != cert.scale) return false;
    if (pair.scaled_generators() != cert.scaled_gens) return false;
    if (pair_group.generator != cert.group_generator) return false;
    if (subgroup_index(pair_group, group_of({cert.nu_q0})) != cert.index_pair_over_q0) return false;
    if (subgroup_index(group_of({cert.nu_q0, cert.nu_q1, cert.nu_q2}), pair_group) !=
        cert.index_q2_over_pair)
        return false;

    // Recompute the recorded checks.
    bool sum_ok = sum == cert.nu_q2;
    bool lt_ok = gap < cert.nu_q2;
    bool group_ok = !pair_group.contains(gap);
    bool sgp_ok = gap.sign() >= 0 && !pair.member(gap);
    if (sum_ok != cert.chk_sum || lt_ok != cert.chk_lt_nuq2 ||
        group_ok != cert.chk_not_in_group || sgp_ok != cert.chk_not_in_semigroup)
        return false;

    // A valid proof needs the essential claims, not just internal coherence.
    return sum_ok && lt_ok && sgp_ok;
}

std::string GapCertificate::to_json() const {
    ojson j;
    j["version"] = version;
    j["kind"] = kind;
    ojson snap;
    snap["l"] = l;
    snap["p"] = p;
    snap["c"] = int_str(c);
    snap["e1"] = int_str(e1);
    snap["nu_q0"] = nu_q0.str();
    snap["nu_q1"] = nu_q1.str();
    snap["nu_q2"] = nu_q2.str();
    snap["scale"] = int_str(scale);
    ojson sg = ojson::array();
    for (const Int& g : scaled_gens) sg.push_back(int_str(g));
    snap["scaled_gens"] = sg;
    snap["group_generator"] = group_generator.str();
    snap["index_pair_over_q0"] = int_str(index_pair_over_q0);
    snap["index_q2_over_pair"] = int_str(index_q2_over_pair);
    j["snapshot"] = snap;
    ojson hv = ojson::array();
    for (const Rat& v : h) hv.push_back(v.str());
    j["h_values"] = hv;
    j["gap"] = gap.str();
    ojson checks;
    checks["sum"] = chk_sum;
    checks["lt_nuQ2"] = chk_lt_nuq2;
    checks["not_in_group"] = chk_not_in_group;
    checks["not_in_semigroup"] = chk_not_in_semigroup;
    j["checks"] = checks;
    return j.dump(2);
}

GapCertificate GapCertificate::from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string("certificate JSON parse error: ") + e.what());
    }
    try {
        GapCertificate c;
        c.version = j.at("version").get<int>();
        c.kind = j.at("kind").get<std::string>();
        const ojson& snap = j.at("snapshot");
        c.l = snap.at("l").get<int>();
        c.p = snap.at("p").get<long>();
        c.c = parse_int(snap.at("c").get<std::string>());
        c.e1 = parse_int(snap.at("e1").get<std::string>());
        c.nu_q0 = Rat::parse(snap.at("nu_q0").get<std::string>());
        c.nu_q1 = Rat::parse(snap.at("nu_q1").get<std::string>());
        c.nu_q2 = Rat::parse(snap.at("nu_q2").get<std::string>());
        c.scale = parse_int(snap.at("scale").get<std::string>());
        for (const auto& g : snap.at("scaled_gens"))
            c.scaled_gens.push_back(parse_int(g.get<std::string>()));
        c.group_generator = Rat::parse(snap.at("group_generator").get<std::string>());
        c.index_pair_over_q0 = parse_int(snap.at("index_pair_over_q0").get<std::string>());
        c.index_q2_over_pair = parse_int(snap.at("index_q2_over_pair").get<std::string>());
        for (const auto& v : j.at("h_values")) c.h.push_back(Rat::parse(v.get<std::string>()));
        c.gap = Rat::parse(j.at("gap").get<std::string>());
        const ojson& checks = j.at("checks");
        c.chk_sum = checks.at("sum").get<bool>();
        c.chk_lt_nuq2 = checks.at("lt_nuQ2").get<bool>();
        c.chk_not_in_group = checks.at("not_in_group").get<bool>();
        c.chk_not_in_semigroup = checks.at("not_in_semigroup").get<bool>();
        return c;
    } catch (const ojson::exception& e) {
        throw invalid_input(std::string("certificate JSON missing/invalid field: ") + e.what());
    }
}

// --- composite lift --------------------------------------------------------

SurjectionCertificate composite_lift(const std::vector<Rat>& values, const LexVal& t_value) {
    SurjectionCertificate cert;
    cert.section = "phi(f) = (nu(f), 0) on monomial representatives; phi(t) = (0, 1)";
    cert.t_value = t_value;
    for (const Rat& v : values) {
        if (v.sign() < 0) throw invalid_input("negative sample value " + v.str());
        cert.samples.push_back(v);
        cert.lifts.push_back(LexVal{v, Int(0)});
        if (lex_project(cert.lifts.back()) != v)
            throw invariant_error("lift does not project to its sample");
    }
    return cert;
}

bool verify_lift(const SurjectionCertificate& cert) {
    if (cert.version != 1 || cert.kind != "prop2-lift") return false;
    if (cert.samples.size() != cert.lifts.size()) return false;
    for (std::size_t i = 0; i < cert.samples.size(); ++i)
        if (lex_project(cert.lifts[i]) != cert.samples[i]) return false;
    return true;
}

std::string SurjectionCertificate::to_json() const {
    ojson j;
    j["version"] = version;
    j["kind"] = kind;
    j["section"] = section;
    j["t_value"] = ojson::array({t_value.nu.str(), int_str(t_value.mu)});
    ojson sm = ojson::array();
    for (const Rat& v : samples) sm.push_back(v.str());
    j["samples"] = sm;
    ojson lf = ojson::array();
    for (const LexVal& v : lifts) lf.push_back(ojson::array({v.nu.str(), int_str(v.mu)}));
    j["lifts"] = lf;
    return j.dump(2);
}

SurjectionCertificate SurjectionCertificate::from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string("lift JSON parse error: ") + e.what());
    }
    try {
        SurjectionCertificate c;
        c.version = j.at("version").get<int>();
        c.kind = j.at("kind").get<std::string>();
        c.section = j.at("section").get<std::string>();
        c.t_value = LexVal{Rat::parse(j.at("t_value").at(0).get<std::string>()),
                           parse_int(j.at("t_value").at(1).get<std::string>())};
        for (const auto& v : j.at("samples")) c.samples.push_back(Rat::parse(v.get<std::string>()));
        for (const auto& v : j.at("lifts"))
            c.lifts.push_back(LexVal{Rat::parse(v.at(0).get<std::string>()),
                                     parse_int(v.at(1).get<std::string>())});
        return c;
    } catch (const ojson::exception& e) {
        throw invalid_input(std::string("lift JSON missing/invalid field: ") + e.what());
    }
}

}  // namespace vsgap
