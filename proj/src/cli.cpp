#include "vsgap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vsgap/certificate.hpp"
#include "vsgap/error.hpp"
#include "vsgap/genseq.hpp"
#include "vsgap/oracle.hpp"
#include "vsgap/scenario.hpp"
#include "vsgap/semigroup.hpp"

namespace vsgap {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Output files appear atomically or not at all.
void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw invalid_input("cannot write file: " + tmp);
        f << content;
        f.flush();
        if (!f) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw invalid_input("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw invalid_input("cannot rename into place: " + path);
    }
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << content << "\n";
    else
        write_file_atomic(out_path, content + "\n");
}

std::vector<Rat> parse_gens(const std::string& list) {
    std::vector<Rat> gens;
    std::string cur;
    std::istringstream ss(list);
    while (std::getline(ss, cur, ','))
        if (!cur.empty()) gens.push_back(Rat::parse(cur));
    if (gens.empty()) throw invalid_input("empty generator list");
    return gens;
}

ScenarioConfig load_scenario(const std::string& spec) {
    if (spec.empty() || spec == "default") return default_scenario();
    return scenario_from_json(read_file(spec));
}

// Accepts either a bare state JSON or a chain trace (uses its "final" state).
GenSeqState load_state(const std::string& path) {
    std::string text = read_file(path);
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input(std::string("state JSON parse error: ") + e.what());
    }
    if (j.contains("final")) return state_from_json(j.at("final").dump());
    return state_from_json(text);
}

// Default working state: the default scenario advanced config.l times.
GenSeqState default_state() {
    ScenarioConfig cfg = default_scenario();
    GenSeqState s = initial_state_r0(cfg);
    for (int k = 0; k < cfg.l; ++k) s = advance_center(s);
    return s;
}

GenSeqState load_state_or_default(const std::string& path) {
    if (path.empty() || path == "default") return default_state();
    return load_state(path);
}

std::string state_summary(const GenSeqState& s) {
    std::string line = "nu_z=" + s.nu_z.str() + " nu_w=" + s.nu_w.str() + " c=" + int_str(s.c) +
                       " e1=" + int_str(s.e1);
    if (s.max_index() >= 2) line += " nuQ2=" + s.nu_q(2).str();
    return line;
}

int report_checks(const OracleReport& rep, bool json_mode, bool with_dumps, std::ostream& out) {
    if (json_mode) {
        ojson j;
        j["ok"] = rep.ok();
        ojson checks = ojson::array();
        for (const OracleCheck& c : rep.checks) {
            ojson e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
        if (with_dumps) j["dumps"] = rep.dumps;
        out << j.dump(2) << "\n";
    } else {
        for (const OracleCheck& c : rep.checks)
            out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        if (with_dumps)
            for (const std::string& d : rep.dumps) out << d << "\n";
        out << (rep.ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return rep.ok() ? 0 : 1;
}

struct ChainOptions {
    std::string scenario = "default";
    int advance = -1;  // -1: use config.l
    std::string steps = "auto";
    bool with_audit = false;
    std::string out_path;
};

int run_chain(const ChainOptions& opt, bool json_mode, std::ostream& out) {
    ScenarioConfig cfg = load_scenario(opt.scenario);
    int advances = opt.advance >= 0 ? opt.advance : cfg.l;
    bool steps_auto = opt.steps == "auto";
    long step_budget = 0;
    if (!steps_auto) {
        try {
            step_budget = std::stol(opt.steps);
        } catch (...) {
            throw invalid_input("--steps expects 'auto' or an integer, got '" + opt.steps + "'");
        }
        if (step_budget < 0) throw invalid_input("--steps must be >= 0");
    }

    ojson stages = ojson::array();
    std::ostringstream text;
    bool audits_ok = true;

    GenSeqState s = initial_state_r0(cfg);
    auto record = [&](const std::string& stage, const char* case_name) {
        ojson e;
        e["stage"] = stage;
        if (case_name != nullptr) e["case"] = case_name;
        if (!s.bezout.empty() && case_name == nullptr && stage != "R_0") {
            const BezoutRecord& b = s.bezout.back();
            e["bezout"] = ojson::array({int_str(b.abar), int_str(b.bbar)});
        }
        e["state"] = ojson::parse(state_to_json(s));
        text << stage;
        if (case_name != nullptr) text << " (" << case_name << ")";
        text << ": " << state_summary(s);
        if (opt.with_audit) {
            AuditReport rep = audit(s);
            audits_ok = audits_ok && rep.ok();
            e["audit"] = ojson::parse(audit_to_json(rep));
            text << (rep.ok() ? " [audit ok]" : " [AUDIT FAILED]");
        }
        text << "\n";
        stages.push_back(e);
    };

    record("R_0", nullptr);
    for (int k = 1; k <= advances; ++k) {
        s = advance_center(s);
        record("R_" + std::to_string(s.l), nullptr);
    }

    bool terminated = false;
    long done = 0;
    while (steps_auto || done < step_budget) {
        StepResult r;
        try {
            r = quadratic_step(s);
        } catch (const chain_terminated& e) {
            terminated = true;
            if (!steps_auto)
                throw invalid_input("requested " + std::to_string(step_budget) +
                                    " steps but the chain terminated after " +
                                    std::to_string(done) + ": " + e.what());
            text << "chain terminated: nu(z) = nu(w) = " << s.nu_z.str() << "\n";
            break;
        }
        s = r.state;
        ++done;
        record("D_" + std::to_string(s.j), step_case_name(r.which));
    }

    ojson j;
    j["scenario"] = ojson::parse(scenario_to_json(cfg));
    j["stages"] = stages;
    j["steps_taken"] = done;
    j["terminated"] = terminated;
    j["audits_ok"] = opt.with_audit ? ojson(audits_ok) : ojson(nullptr);
    j["final"] = ojson::parse(state_to_json(s));

    std::string payload = json_mode || !opt.out_path.empty() ? j.dump(2) : text.str();
    if (!opt.out_path.empty()) {
        write_file_atomic(opt.out_path, j.dump(2) + "\n");
        if (!json_mode) out << text.str();
    } else {
        out << payload << (json_mode ? "\n" : "");
    }
    return (opt.with_audit && !audits_ok) ? 1 : 0;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"valuation generating sequences, quadratic transforms, and semigroup-gap certificates"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON output");

    int rc = 0;

    // scenario
    auto* sc = app.add_subcommand("scenario", "write a scenario configuration");
    long sc_char = 0;
    int sc_primes = 5, sc_depth = 4, sc_l = 1;
    std::string sc_bound = "8", sc_out;
    sc->add_option("--char", sc_char, "residue characteristic (0 or prime)");
    sc->add_option("--primes", sc_primes, "number of primes to track");
    sc->add_option("--depth", sc_depth, "generating-sequence depth at R_0");
    sc->add_option("--l", sc_l, "center advances before the quadratic chain");
    sc->add_option("--bound", sc_bound, "semigroup enumeration bound");
    sc->add_option("--out", sc_out, "output file (stdout when omitted)");
    sc->callback([&] {
        ScenarioConfig cfg;
        cfg.characteristic = sc_char;
        cfg.prime_count = sc_primes;
        cfg.depth = sc_depth;
        cfg.l = sc_l;
        cfg.bound = Rat::parse(sc_bound);
        cfg.validate();
        emit(scenario_to_json(cfg), sc_out, out);
    });

    // chain
    auto* ch = app.add_subcommand("chain", "run center advances and quadratic steps");
    ChainOptions ch_opt;
    ch->add_option("--scenario", ch_opt.scenario, "scenario file or 'default'");
    ch->add_option("--advance", ch_opt.advance, "number of center advances (default: scenario l)");
    ch->add_option("--steps", ch_opt.steps, "'auto' or a step count");
    ch->add_flag("--audit", ch_opt.with_audit, "audit every state");
    ch->add_option("--out", ch_opt.out_path, "write the JSON trace to this file");
    ch->callback([&] { rc = run_chain(ch_opt, json_mode, out); });

    // semigroup
    auto* sg = app.add_subcommand("semigroup", "numerical semigroup queries");
    std::string sg_gens, sg_bound, sg_member;
    sg->add_option("--gens", sg_gens, "comma-separated positive rationals")->required();
    sg->add_option("--bound", sg_bound, "enumeration bound");
    sg->add_option("--member", sg_member, "value to test for membership");
    sg->callback([&] {
        NumSgp s(parse_gens(sg_gens));
        if (!sg_member.empty()) {
            bool member = s.member(Rat::parse(sg_member));
            if (json_mode) {
                ojson j;
                j["member"] = member;
                out << j.dump(2) << "\n";
            } else {
                out << (member ? "true" : "false") << "\n";
            }
            return;
        }
        if (sg_bound.empty()) throw invalid_input("semigroup needs --bound or --member");
        std::vector<Rat> elems = s.enumerate(Rat::parse(sg_bound));
        if (json_mode) {
            ojson arr = ojson::array();
            for (const Rat& v : elems) arr.push_back(v.str());
            ojson j;
            j["elements"] = arr;
            out << j.dump(2) << "\n";
        } else {
            for (const Rat& v : elems) out << v.str() << "\n";
        }
    });

    // oracle verify
    auto* orc = app.add_subcommand("oracle", "polynomial-level verification");
    orc->require_subcommand(1);
    auto* ov = orc->add_subcommand("verify", "run an oracle check");
    std::string ov_what;
    long ov_char = 0, ov_p = 0;
    int ov_depth = 3, ov_steps = 2, ov_l = 1;
    bool ov_dump = false;
    ov->add_option("--what", ov_what, "p-seq | eq21 | strict | disc")
        ->required()
        ->check(CLI::IsMember({"p-seq", "eq21", "strict", "disc"}));
    ov->add_option("--char", ov_char, "residue characteristic");
    ov->add_option("--depth", ov_depth, "generating-sequence depth");
    ov->add_option("--p", ov_p, "prime for the discriminant check (0 = suite)");
    ov->add_option("--steps", ov_steps, "quadratic steps to verify");
    ov->add_option("--l", ov_l, "center advances");
    ov->add_flag("--dump", ov_dump, "print polynomial dumps");
    ov->callback([&] {
        if (ov_what == "disc") {
            std::vector<long> ps;
            if (ov_p > 0)
                ps.push_back(ov_p);
            else
                for (long p : {2L, 3L, 5L, 7L})
                    if (p != ov_char) ps.push_back(p);
            bool ok = true;
            ojson arr = ojson::array();
            for (long p : ps) {
                DiscReport r = discriminant_check(p, ov_char);
                ok = ok && r.pass;
                if (json_mode) {
                    ojson e;
                    e["p"] = r.p;
                    e["resultant"] = r.resultant.str();
                    e["discriminant"] = r.discriminant.str();
                    e["formula"] = r.formula.str();
                    e["matches_exactly"] = r.matches_exactly;
                    e["matches_up_to_sign"] = r.matches_up_to_sign;
                    e["unit_times_power"] = r.unit_times_power;
                    e["pass"] = r.pass;
                    arr.push_back(e);
                } else {
                    out << r.summary() << "\n";
                }
            }
            if (json_mode) {
                ojson j;
                j["ok"] = ok;
                j["discriminants"] = arr;
                out << j.dump(2) << "\n";
            }
            rc = ok ? 0 : 1;
            return;
        }
        ScenarioConfig cfg;
        cfg.characteristic = ov_char;
        cfg.prime_count = std::max(default_scenario().prime_count, ov_l + ov_depth);
        if (ov_what == "p-seq") {
            rc = report_checks(verify_pseq(ov_char, ov_depth, ov_dump), json_mode, ov_dump, out);
        } else if (ov_what == "eq21") {
            rc = report_checks(verify_chain(cfg, std::max(1, ov_l), 0, ov_depth, ov_dump),
                               json_mode, ov_dump, out);
        } else {  // strict
            cfg.depth = ov_depth;
            cfg.l = ov_l;
            cfg.validate();
            GenSeqState s = initial_state_r0(cfg);
            for (int k = 0; k < ov_l; ++k) s = advance_center(s);
            rc = report_checks(verify_steps(s, ov_steps, std::max(1, ov_l)), json_mode, ov_dump,
                               out);
        }
    });

    // certify
    auto* cf = app.add_subcommand("certify", "issue certificates");
    cf->require_subcommand(1);
    auto* cp = cf->add_subcommand("prop1", "semigroup-gap certificate at the current center");
    std::string cp_state, cp_out;
    cp->add_option("--state", cp_state, "state file, chain trace, or 'default'");
    cp->add_option("--out", cp_out, "output file (stdout when omitted)");
    cp->callback([&] {
        GenSeqState s = load_state_or_default(cp_state);
        GapCertificate cert = certify_gap(s, ExtensionSpec::for_state(s));
        emit(cert.to_json(), cp_out, out);
        if (!json_mode && !cp_out.empty())
            out << (cert.issued() ? "certificate issued: gap " : "certificate REFUTED: gap ")
                << cert.gap.str() << "\n";
        rc = cert.issued() ? 0 : 1;
    });

    auto* cl = cf->add_subcommand("lift", "composite-valuation lift certificate");
    std::string cl_state, cl_out, cl_bound = "8";
    cl->add_option("--state", cl_state, "state file, chain trace, or 'default'");
    cl->add_option("--bound", cl_bound, "semigroup truncation bound");
    cl->add_option("--out", cl_out, "output file (stdout when omitted)");
    cl->callback([&] {
        GenSeqState s = load_state_or_default(cl_state);
        std::vector<Rat> gens;
        for (int i = 0; i <= s.max_index(); ++i) gens.push_back(s.nu_q(i));
        std::vector<Rat> sample = NumSgp(gens).enumerate(Rat::parse(cl_bound));
        SurjectionCertificate cert = composite_lift(sample);
        emit(cert.to_json(), cl_out, out);
        rc = verify_lift(cert) ? 0 : 1;
    });

    // recheck
    auto* rk = app.add_subcommand("recheck", "re-verify a certificate file");
    std::string rk_cert;
    rk->add_option("--cert", rk_cert, "certificate file")->required();
    rk->callback([&] {
        std::string text = read_file(rk_cert);
        ojson j;
        try {
            j = ojson::parse(text);
        } catch (const std::exception& e) {
            throw invalid_input(std::string("certificate JSON parse error: ") + e.what());
        }
        std::string kind = j.value("kind", "");
        bool good = false;
        if (kind == "prop1-gap")
            good = recheck(GapCertificate::from_json(text));
        else if (kind == "prop2-lift")
            good = verify_lift(SurjectionCertificate::from_json(text));
        else
            throw invalid_input("unknown certificate kind: '" + kind + "'");
        if (json_mode) {
            ojson r;
            r["valid"] = good;
            out << r.dump(2) << "\n";
        } else {
            out << (good ? "true" : "false") << "\n";
        }
        rc = good ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const chain_terminated& e) {
        err << "chain terminated: " << e.what() << "\n";
        return 2;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace vsgap
