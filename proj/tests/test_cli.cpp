#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string binary() {
    const char* b = std::getenv("VSGAP_BIN");
    REQUIRE(b != nullptr);
    return b;
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "vsgap_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
    fs::path out_file = work_dir() / "stdout.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + binary() + "\" " + args + " > \"" +
                      out_file.string() + "\" 2> \"" + (work_dir() / "stderr.txt").string() + "\"";
    int raw = std::system(cmd.c_str());
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return RunResult{WEXITSTATUS(raw), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream f(p);
    f << content;
}

}  // namespace

TEST_CASE("semigroup queries") {
    RunResult r = run("semigroup --gens 1/2,1/3 --member 6/5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "false\n");

    r = run("semigroup --gens 1/2,1/3 --member 5/6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run("semigroup --gens 1/2,1/3 --bound 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n1/3\n1/2\n2/3\n5/6\n1\n");

    r = run("--json semigroup --gens 3,2 --bound 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"elements\"") != std::string::npos);

    CHECK(run("semigroup --gens 1/2,-1 --bound 1").exit_code == 2);
    CHECK(run("semigroup --gens 1/2,1/3").exit_code == 2);       // no bound, no member
    CHECK(run("semigroup --gens 1/0 --bound 1").exit_code == 2);
    CHECK(run("semigroup --gens 1/2 --member -1").exit_code == 2);
}

TEST_CASE("scenario file round trip and determinism") {
    fs::path f = work_dir() / "scenario.json";
    RunResult r = run("scenario --char 0 --primes 5 --depth 4 --l 1 --out " + f.string());
    CHECK(r.exit_code == 0);
    std::string first = slurp(f);
    CHECK(first.find("\"bound\": \"8/1\"") != std::string::npos);

    CHECK(run("scenario --char 0 --primes 5 --depth 4 --l 1 --out " + f.string()).exit_code == 0);
    CHECK(slurp(f) == first);  // byte-identical

    CHECK(run("scenario --char 4 --out " + (work_dir() / "bad.json").string()).exit_code == 2);
    CHECK_FALSE(fs::exists(work_dir() / "bad.json"));
    CHECK_FALSE(fs::exists(work_dir() / "bad.json.tmp"));  // no partial file

    // The emitted file is a valid chain input.
    CHECK(run("chain --scenario " + f.string() + " --steps auto --audit").exit_code == 0);
}

TEST_CASE("chain trace") {
    fs::path trace = work_dir() / "trace.json";
    RunResult r = run("chain --scenario default --advance 1 --steps auto --audit --out " +
                      trace.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("D_2 (shrink-w)") != std::string::npos);
    CHECK(r.out.find("chain terminated") != std::string::npos);
    std::string first = slurp(trace);
    CHECK(first.find("\"terminated\": true") != std::string::npos);
    CHECK(first.find("\"steps_taken\": 2") != std::string::npos);
    CHECK(first.find("\"audits_ok\": true") != std::string::npos);

    CHECK(run("chain --scenario default --advance 1 --steps auto --audit --out " + trace.string())
              .exit_code == 0);
    CHECK(slurp(trace) == first);  // deterministic bytes

    // Overshooting the chain with an explicit step count is an input error.
    CHECK(run("chain --scenario default --steps 5").exit_code == 2);
    // Bad scenario path
    CHECK(run("chain --scenario /nonexistent/scenario.json").exit_code == 2);
}

TEST_CASE("certify and recheck round trip") {
    fs::path cert = work_dir() / "cert.json";
    RunResult r = run("certify prop1 --out " + cert.string());
    CHECK(r.exit_code == 0);
    std::string text = slurp(cert);
    CHECK(text.find("\"kind\": \"prop1-gap\"") != std::string::npos);
    CHECK(text.find("\"gap\": \"6/5\"") != std::string::npos);

    r = run("recheck --cert " + cert.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    // Tampering flips the verdict and the exit code.
    fs::path bad = work_dir() / "tampered.json";
    std::string tampered = text;
    auto pos = tampered.find("\"gap\": \"6/5\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, std::string("\"gap\": \"6/5\"").size(), "\"gap\": \"5/6\"");
    spit(bad, tampered);
    r = run("recheck --cert " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out == "false\n");

    CHECK(run("recheck --cert /nonexistent/cert.json").exit_code == 2);
    spit(work_dir() / "garbage.json", "{not json");
    CHECK(run("recheck --cert " + (work_dir() / "garbage.json").string()).exit_code == 2);
    spit(work_dir() / "unknown.json", "{\"kind\": \"mystery\"}");
    CHECK(run("recheck --cert " + (work_dir() / "unknown.json").string()).exit_code == 2);
}

TEST_CASE("certify from a chain trace state") {
    fs::path trace = work_dir() / "trace_for_cert.json";
    CHECK(run("chain --scenario default --advance 1 --steps 1 --out " + trace.string()).exit_code ==
          0);
    fs::path cert = work_dir() / "cert_d1.json";
    RunResult r = run("certify prop1 --state " + trace.string() + " --out " + cert.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(cert).find("\"gap\": \"8/15\"") != std::string::npos);
    CHECK(run("recheck --cert " + cert.string()).exit_code == 0);
}

TEST_CASE("certify lift") {
    fs::path lift = work_dir() / "lift.json";
    RunResult r = run("certify lift --bound 4 --out " + lift.string());
    CHECK(r.exit_code == 0);
    std::string text = slurp(lift);
    CHECK(text.find("\"kind\": \"prop2-lift\"") != std::string::npos);
    CHECK(text.find("\"t_value\": [\n    \"0\",\n    \"1\"\n  ]") != std::string::npos);
    CHECK(run("recheck --cert " + lift.string()).exit_code == 0);
}

TEST_CASE("oracle verify surfaces") {
    CHECK(run("oracle verify --what p-seq --depth 3").exit_code == 0);
    CHECK(run("oracle verify --what eq21 --depth 3").exit_code == 0);
    CHECK(run("oracle verify --what strict --depth 3 --steps 2").exit_code == 0);
    CHECK(run("oracle verify --what disc").exit_code == 0);
    CHECK(run("oracle verify --what disc --p 5 --char 2").exit_code == 0);
    CHECK(run("oracle verify --what disc --p 4").exit_code == 2);
    CHECK(run("oracle verify --what nonsense").exit_code == 2);

    RunResult r = run("oracle verify --what p-seq --depth 3 --dump");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P_2 = ") != std::string::npos);

    r = run("--json oracle verify --what eq21 --depth 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("resource cap override via environment") {
    RunResult r = run("oracle verify --what eq21 --depth 3", "VSGAP_TERM_CAP=5");
    CHECK(r.exit_code == 3);
}

TEST_CASE("characteristic 2 through the CLI") {
    fs::path f = work_dir() / "char2.json";
    CHECK(run("scenario --char 2 --primes 5 --depth 4 --l 1 --out " + f.string()).exit_code == 0);
    RunResult r = run("chain --scenario " + f.string() + " --steps auto --audit");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("chain terminated") != std::string::npos);

    fs::path trace = work_dir() / "char2_trace.json";
    CHECK(run("chain --scenario " + f.string() + " --steps auto --out " + trace.string())
              .exit_code == 0);
    fs::path cert = work_dir() / "char2_cert.json";
    // Terminal state still certifies: gap stays outside the pair semigroup.
    CHECK(run("certify prop1 --state " + trace.string() + " --out " + cert.string()).exit_code ==
          0);
    CHECK(run("recheck --cert " + cert.string()).exit_code == 0);
}

TEST_CASE("help and bad usage") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 2);           // subcommand required
    CHECK(run("frobnicate").exit_code == 2);
}
