#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qprime/arith.hpp"

namespace {

std::string cli_path() {
    const char* p = std::getenv("QPRIME_BIN");
    REQUIRE_MESSAGE(p != nullptr, "QPRIME_BIN must point at the qprime binary");
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), ("missing file: " + path).c_str());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp(const std::string& name) { return "/tmp/qprime_cli_" + name; }

}  // namespace

TEST_CASE("gen-c produces the q1=7 family with c=157") {
    std::string out = tmp("gen7.csv");
    CHECK(run("gen-c --q1 7 --count 8 --parity odd --algo 1 -o " + out) == 0);
    std::string body = slurp(out);
    CHECK(body.rfind("# schema=1\n", 0) == 0);
    CHECK(body.find("q1,c,j0,modulus,parity,algorithm,seed\n") != std::string::npos);
    CHECK(body.find("7,157,1,210,odd,1,0") != std::string::npos);
    // 8 data rows
    int rows = 0;
    std::istringstream ss(body);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#' && line.rfind("q1,", 0) != 0) ++rows;
    CHECK(rows == 8);
}

TEST_CASE("gen-c rejects composite q1 and count violations with exit 2") {
    CHECK(run("gen-c --q1 4 --count 1 -o " + tmp("bad.csv")) == 2);
    CHECK(run("gen-c --q1 9 --count 1 -o " + tmp("bad.csv")) == 2);
    // algorithm 2 caps count at (q1+1)/2
    CHECK(run("gen-c --q1 7 --count 5 --algo 2 -o " + tmp("bad.csv")) == 2);
}

TEST_CASE("gen-c algo 2 emits validated rows") {
    std::string out = tmp("gen13.csv");
    CHECK(run("gen-c --q1 13 --count 1 --algo 2 --seed 1 -o " + out) == 0);
    std::string body = slurp(out);
    int rows = 0;
    std::istringstream ss(body);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#' && line.rfind("q1,", 0) != 0) ++rows;
    CHECK(rows == 1);
    CHECK(body.find(",2,1\n") != std::string::npos);  // algorithm=2, seed=1
}

TEST_CASE("determinism: identical config, varied workers, byte-identical files") {
    std::string a = tmp("det_a.csv"), b = tmp("det_b.csv");
    CHECK(run("gen-c --q1 11 --count 12 --parity both --target-m 25 -o " + a) == 0);
    CHECK(run("gen-c --q1 11 --count 12 --parity both --target-m 25 -o " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    std::string ja = tmp("det_a.json"), jb = tmp("det_b.json");
    CHECK(run("estimate-hc --c 157 --prime-limit 100000 --x-max 4000 --workers 1 -o " + ja) == 0);
    CHECK(run("estimate-hc --c 157 --prime-limit 100000 --x-max 4000 --workers 4 -o " + jb) == 0);
    CHECK(slurp(ja) == slurp(jb));

    std::string pairs = tmp("det_pairs.csv");
    CHECK(run("gen-c --q1 13 --count 7 --algo 2 --seed 3 --target-m 12 -o " + pairs) == 0);
    std::string sa = tmp("det_scan_a"), sb = tmp("det_scan_b");
    CHECK(run("density-scan --pairs " + pairs + " --z 1 --prime-limit 10000 --workers 1 -o " + sa) == 0);
    CHECK(run("density-scan --pairs " + pairs + " --z 1 --prime-limit 10000 --workers 3 -o " + sb) == 0);
    CHECK(slurp(sa + ".nz.json") == slurp(sb + ".nz.json"));
    CHECK(slurp(sa + ".hist.csv") == slurp(sb + ".hist.csv"));
}

TEST_CASE("pairs round-trip: load and re-emit is idempotent") {
    std::string first = tmp("rt1.csv");
    CHECK(run("gen-c --q1 7 --count 8 --parity both -o " + first) == 0);
    // hunt with a tiny window reads the file and exercises the loader
    CHECK(run("hunt --pairs " + first + " --z 4 --max-results 1 -o " + tmp("rt_hunt.csv")) == 0);
    std::string again = tmp("rt2.csv");
    CHECK(run("gen-c --q1 7 --count 8 --parity both -o " + again) == 0);
    CHECK(slurp(first) == slurp(again));
}

TEST_CASE("hunt finds the known 157 primes and verifies them") {
    std::string out = tmp("hunt157.csv");
    CHECK(run("hunt --c 157 --q1 7 --z 1 -o " + out) == 0);
    std::string body = slurp(out);
    CHECK(body.rfind("# schema=1\n", 0) == 0);
    // oracle: X = 0, 4, 6, 10 in [0, 12]
    CHECK(body.find("157,0,3,1\n") != std::string::npos);
    CHECK(body.find("157,4,3,1\n") != std::string::npos);
    CHECK(body.find("157,6,3,1\n") != std::string::npos);
    CHECK(body.find("157,10,3,1\n") != std::string::npos);
    CHECK(body.find("157,2,") == std::string::npos);  // 161 = 7 * 23
}

TEST_CASE("hunt resume skips already-tested ranges") {
    std::string out = tmp("resume.csv");
    std::remove((out + ".ckpt").c_str());
    CHECK(run("hunt --c 157 --q1 7 --z 1 --checkpoint-every 2 -o " + out) == 0);
    std::string full = slurp(out);
    // resuming after completion adds nothing
    CHECK(run("hunt --c 157 --q1 7 --z 1 --resume -o " + out) == 0);
    CHECK(slurp(out) == full);
}

TEST_CASE("density-scan rejects mixed m_c with exit 2") {
    std::string p1 = tmp("mix1.csv"), p2 = tmp("mix2.csv"), mixed = tmp("mixed.csv");
    CHECK(run("gen-c --q1 7 --count 2 --target-m 5 -o " + p1) == 0);
    CHECK(run("gen-c --q1 7 --count 2 --target-m 6 -o " + p2) == 0);
    std::ofstream out(mixed, std::ios::binary);
    std::istringstream a(slurp(p1)), b(slurp(p2));
    std::string line;
    bool skipped_header = false;
    while (std::getline(a, line)) out << line << '\n';
    while (std::getline(b, line)) {
        if (!skipped_header) {
            skipped_header = line.rfind("q1,", 0) == 0;
            continue;
        }
        out << line << '\n';
    }
    out.close();
    CHECK(run("density-scan --pairs " + mixed + " -o " + tmp("mixed_scan")) == 2);
}

TEST_CASE("cofactor-count reproduces the small frozen value") {
    std::string out = tmp("cof.csv");
    CHECK(run("cofactor-count --a1 5 --c 1 --eps 1 --x 10000 -o " + out) == 0);
    std::string body = slurp(out);
    CHECK(body.find("5,1,1,10000,1999,482\n") != std::string::npos);

    // direct n bound: inclusive [0, n_max]
    CHECK(run("cofactor-count --a1 5 --c 1 --eps 1 --n-max 2000 -o " + out) == 0);
    CHECK(slurp(out).find("5,1,1,0,2000,482\n") != std::string::npos);
}

TEST_CASE("residues dump") {
    std::string out = tmp("res7.csv");
    CHECK(run("residues --p 7 -o " + out) == 0);
    std::string body = slurp(out);
    CHECK(body.find("7,rq,0\n") != std::string::npos);
    CHECK(body.find("7,nrq,1\n") != std::string::npos);
    CHECK(run("residues --p 8 -o " + out) == 2);

    std::string j = tmp("res7.json");
    CHECK(run("residues --p 7 --format json -o " + j) == 0);
    CHECK(slurp(j).find("\"nrq\"") != std::string::npos);
}

TEST_CASE("config dump") {
    int rc = std::system((cli_path() + " --dump-config gen-c --q1 7 > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 0);
}
