// qprime: generate c values with a prescribed smallest prime divisor of
// E_c = {X^2 + c}, estimate the density constant h_c, and hunt fixed-size
// primes. Outputs are reproducible: identical config and seed give
// byte-identical files for any worker count.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qprime/density.hpp"
#include "qprime/divisors.hpp"

using json = nlohmann::ordered_json;
using namespace qprime;

namespace {

constexpr const char* kSchemaLine = "# schema=1\n";

std::string fmt_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, p);
}

struct PolicyOpts {
    int mr_rounds = 64;
    bool no_lucas = false;
    std::uint64_t seed = PrimalityPolicy{}.rng_seed;

    PrimalityPolicy policy() const {
        PrimalityPolicy p;
        p.miller_rabin_rounds = mr_rounds;
        p.use_lucas_stage = !no_lucas;
        p.rng_seed = seed;
        return p;
    }
};

void add_policy_opts(CLI::App* cmd, PolicyOpts& po) {
    cmd->add_option("--mr-rounds", po.mr_rounds, "Miller-Rabin rounds above the 64-bit range");
    cmd->add_flag("--no-lucas", po.no_lucas, "skip the strong Lucas stage");
    cmd->add_option("--policy-seed", po.seed, "seed for the randomized Miller-Rabin bases");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << kSchemaLine;
    return out;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out = open_output(path);
    out << j.dump(2) << "\n";
}

std::string parity_name(const Integer& c) {
    return mpz_odd_p(c.get_mpz_t()) ? "odd" : "even";
}

struct PairRow {
    CandidatePair pair;
    int algorithm = 0;
    Integer seed = 0;
};

void write_pairs_csv(std::ostream& out, const std::vector<PairRow>& rows) {
    out << "q1,c,j0,modulus,parity,algorithm,seed\n";
    for (const PairRow& r : rows) {
        out << to_decimal(r.pair.q1) << ',' << to_decimal(r.pair.c) << ',' << to_decimal(r.pair.j0)
            << ',' << to_decimal(r.pair.modulus) << ',' << parity_name(r.pair.c) << ','
            << r.algorithm << ',' << to_decimal(r.seed) << '\n';
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<PairRow> load_pairs_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pairs file: " + path);
    std::vector<PairRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("q1,", 0) != 0)
                throw std::invalid_argument("pairs file: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 7) throw std::invalid_argument("pairs file: bad row: " + line);
        PairRow r;
        r.pair.q1 = parse_integer(f[0]);
        r.pair.c = parse_integer(f[1]);
        r.pair.j0 = parse_integer(f[2]);
        r.pair.modulus = parse_integer(f[3]);
        r.pair.q1_divides_c = mpz_divisible_p(r.pair.c.get_mpz_t(), r.pair.q1.get_mpz_t()) != 0;
        r.algorithm = std::stoi(f[5]);
        r.seed = parse_integer(f[6]);
        if (parity_name(r.pair.c) != f[4])
            throw std::invalid_argument("pairs file: parity column disagrees with c");
        rows.push_back(std::move(r));
    }
    if (!header_seen) throw std::invalid_argument("pairs file: missing header");
    return rows;
}

json conventions_block() {
    json conv;
    conv["density"] = "per_unit_X: d = count / X_max over X in [0, X_max] of parity r";
    conv["per_element"] = "count / ceil(X_max / 2)";
    conv["h_emp"] = "s(c) * d_per_X with s(c) = m_c * ln(10)";
    conv["expected_nz"] = "4 h / (z ln 10)";
    return conv;
}

// ---------------------------------------------------------------- gen-c --

struct GenCOpts {
    std::uint64_t q1 = 0;
    std::uint64_t count = 1;
    std::string parity = "odd";
    int algo = 1;
    std::uint64_t seed = 1;
    long target_m = 0;
    std::string output = "pairs.csv";
};

int cmd_gen_c(const GenCOpts& o) {
    Integer q1(static_cast<unsigned long>(o.q1));
    if (q1 < 3 || !is_prime(q1)) {
        std::cerr << "gen-c: --q1 must be an odd prime (got " << o.q1 << ")\n";
        return 2;
    }

    std::vector<PairRow> rows;
    bool truncated = false;
    if (o.algo == 1) {
        ParityChoice pc = o.parity == "odd"    ? ParityChoice::odd
                          : o.parity == "even" ? ParityChoice::even
                                               : ParityChoice::both;
        Algorithm1Result res = algorithm1(q1, o.count, pc);
        truncated = res.truncated;
        for (CandidatePair& p : res.pairs) rows.push_back({std::move(p), 1, 0});
    } else {
        auto pairs = algorithm2(q1, o.count, Seed{Integer(static_cast<unsigned long>(o.seed))});
        if (o.parity == "even" || o.parity == "both") {
            std::vector<CandidatePair> extra;
            extra.reserve(pairs.size());
            for (const CandidatePair& p : pairs) extra.push_back(opposite_parity_pair(p));
            if (o.parity == "even")
                pairs = std::move(extra);
            else
                pairs.insert(pairs.end(), extra.begin(), extra.end());
        }
        for (CandidatePair& p : pairs)
            rows.push_back({std::move(p), 2, Integer(static_cast<unsigned long>(o.seed))});
    }

    if (o.target_m > 0) {
        std::vector<PairRow> lifted;
        lifted.reserve(rows.size());
        for (PairRow& r : rows) {
            try {
                r.pair = lift_to_digits(r.pair, o.target_m);
                lifted.push_back(std::move(r));
            } catch (const std::domain_error&) {
                std::cerr << "gen-c: note: class " << to_decimal(mod_floor(r.pair.c, r.pair.modulus))
                          << " mod q1# has no member with " << o.target_m << " digits; skipped\n";
            }
        }
        rows = std::move(lifted);
        if (rows.empty()) {
            std::cerr << "gen-c: no class reaches the requested size\n";
            return 2;
        }
    }

    for (const PairRow& r : rows) {
        if (!validate_pair(r.pair)) {
            std::cerr << "gen-c: generated pair failed validation (c=" << to_decimal(r.pair.c)
                      << ")\n";
            return 3;
        }
    }

    std::ofstream out = open_output(o.output);
    write_pairs_csv(out, rows);
    if (truncated)
        std::cerr << "gen-c: note: count exceeds the family cardinal; wrote the full family ("
                  << rows.size() << " rows)\n";
    std::cerr << "gen-c: wrote " << rows.size() << " pairs to " << o.output << "\n";
    return 0;
}

// ---------------------------------------------------------- estimate-hc --

struct EstimateOpts {
    std::string c = "1";
    std::uint64_t prime_limit = 4000000;
    std::uint64_t x_max = 0;
    std::uint64_t checkpoint_step = 10000;
    std::uint64_t sieve_limit = 20000;
    std::string output = "hc.json";
    PolicyOpts pol;
    ParallelConfig par;
};

int cmd_estimate_hc(const EstimateOpts& o) {
    Integer c = parse_integer(o.c);
    if (c < 1) {
        std::cerr << "estimate-hc: c must be >= 1\n";
        return 2;
    }
    std::vector<std::pair<std::uint64_t, double>> cks;
    double h = hc_product(c, o.prime_limit, &cks);

    json j;
    j["c"] = to_decimal(c);
    j["prime_limit"] = o.prime_limit;
    j["h_product"] = h;
    j["checkpoints"] = json::array();
    for (const auto& [limit, value] : cks)
        j["checkpoints"].push_back({{"limit", limit}, {"h", value}});
    j["conventions"] = conventions_block();

    if (o.x_max > 0) {
        DensityReport rep =
            count_primes_ec(c, o.x_max, o.checkpoint_step, o.pol.policy(), o.par, o.sieve_limit);
        double s_c = decimal_size(c).size;
        json emp;
        emp["x_max"] = rep.x_max;
        emp["prime_count"] = rep.prime_count;
        emp["d_per_X"] = rep.d_per_x;
        emp["d_per_element"] = rep.d_per_element;
        emp["h_emp"] = rep.h_emp;
        emp["checkpoints"] = json::array();
        for (const auto& [x, cnt] : rep.checkpoints) {
            double d_x = x > 0 ? static_cast<double>(cnt) / static_cast<double>(x) : 0.0;
            double d_el = x > 0 ? static_cast<double>(cnt) / static_cast<double>((x + 1) / 2) : 0.0;
            emp["checkpoints"].push_back({{"X", x},
                                          {"count", cnt},
                                          {"d_per_X", d_x},
                                          {"d_per_element", d_el},
                                          {"h_emp", s_c * d_x}});
        }
        j["empirical"] = emp;
    }

    write_json(o.output, j);
    std::cerr << "estimate-hc: h(" << to_decimal(c) << ", " << o.prime_limit
              << ") = " << fmt_double(h) << "\n";
    return 0;
}

// ----------------------------------------------------------------- hunt --

struct HuntOpts {
    std::string pairs_file;
    std::string c;
    std::uint64_t q1 = 0;
    double z = 4.0;
    std::uint64_t max_results = 0;  // 0: everything in the window
    std::uint64_t checkpoint_every = 1000;
    bool resume = false;
    std::string output = "primes.csv";
    PolicyOpts pol;
};

int cmd_hunt(const HuntOpts& o) {
    std::vector<PairRow> rows;
    if (!o.pairs_file.empty()) {
        rows = load_pairs_csv(o.pairs_file);
    } else if (!o.c.empty() && o.q1 >= 3) {
        Integer c = parse_integer(o.c);
        Integer q1(static_cast<unsigned long>(o.q1));
        auto fm = first_multiple(q1, EcParams(c));
        if (!fm) {
            std::cerr << "hunt: q1 does not divide any element of E_c\n";
            return 2;
        }
        PairRow r;
        r.pair = CandidatePair{c, fm->j0, q1, primorial(q1),
                               mpz_divisible_p(c.get_mpz_t(), q1.get_mpz_t()) != 0};
        rows.push_back(std::move(r));
    } else {
        std::cerr << "hunt: need --pairs FILE or both --c and --q1\n";
        return 2;
    }

    // resume bookkeeping: c (decimal) -> last X tested
    std::string ckpt_path = o.output + ".ckpt";
    std::map<std::string, Integer> done;
    if (o.resume) {
        std::ifstream ck(ckpt_path);
        std::string line;
        while (std::getline(ck, line)) {
            auto f = split(line, ',');
            if (f.size() == 2) done[f[0]] = parse_integer(f[1]);
        }
    }

    std::ofstream out;
    if (o.resume && !done.empty()) {
        out.open(o.output, std::ios::binary | std::ios::app);
        if (!out) {
            std::cerr << "hunt: cannot open output for append\n";
            return 2;
        }
    } else {
        out = open_output(o.output);
        out << "c,X,digits,verified\n";
    }

    PrimalityPolicy policy = o.pol.policy();
    PrimalityPolicy recheck = policy;
    recheck.rng_seed = policy.rng_seed ^ 0x9e3779b97f4a7c15ULL;

    auto save_ckpt = [&] {
        std::ofstream ck(ckpt_path + ".tmp", std::ios::binary);
        for (const auto& [cc, xx] : done) ck << cc << ',' << to_decimal(xx) << '\n';
        ck.close();
        std::rename((ckpt_path + ".tmp").c_str(), ckpt_path.c_str());
    };

    std::uint64_t found_total = 0;
    for (const PairRow& r : rows) {
        EcParams ec(r.pair.c);
        std::uint64_t x_hi =
            static_cast<std::uint64_t>(std::floor(4.0 * static_cast<double>(ec.m_c) / o.z));
        Integer start_x = ec.r;
        std::string key = to_decimal(r.pair.c);
        if (auto it = done.find(key); it != done.end()) start_x = it->second + 2;

        std::uint64_t since_ckpt = 0;
        std::uint64_t found_this = 0;
        for (Integer x = start_x; x <= Integer(static_cast<unsigned long>(x_hi)); x += 2) {
            Integer v = x * x + ec.c;
            if (is_prime(v, policy)) {
                if (!is_prime(v, recheck)) {
                    std::cerr << "hunt: verification disagreement at c=" << key
                              << " X=" << to_decimal(x) << "\n";
                    return 3;
                }
                out << key << ',' << to_decimal(x) << ',' << decimal_size(v).digits << ",1\n";
                out.flush();
                ++found_this;
                ++found_total;
                if (o.max_results > 0 && found_this >= o.max_results) break;
            }
            if (++since_ckpt >= o.checkpoint_every) {
                since_ckpt = 0;
                done[key] = x;
                save_ckpt();
            }
        }
        done[key] = Integer(static_cast<unsigned long>(x_hi));
        save_ckpt();
    }
    std::cerr << "hunt: " << found_total << " verified primes written to " << o.output << "\n";
    return 0;
}

// --------------------------------------------------------- density-scan --

struct ScanOpts {
    std::string pairs_file;
    double z = 1.0;
    std::uint64_t prime_limit = 100000;
    std::uint64_t buckets = 10;
    std::uint64_t bucket_width = 0;  // 0: floor(2 m_c / buckets) on j
    std::string output = "scan";
    PolicyOpts pol;
    ParallelConfig par;
};

int cmd_density_scan(const ScanOpts& o) {
    std::vector<PairRow> rows = load_pairs_csv(o.pairs_file);
    if (rows.empty()) {
        std::cerr << "density-scan: empty pairs file\n";
        return 2;
    }
    std::vector<CandidatePair> pairs;
    pairs.reserve(rows.size());
    for (const PairRow& r : rows) pairs.push_back(r.pair);
    long m_c = decimal_size(pairs.front().c).digits;
    for (const CandidatePair& p : pairs)
        if (decimal_size(p.c).digits != m_c) {
            std::cerr << "density-scan: pairs have mixed m_c\n";
            return 2;
        }

    PrimalityPolicy policy = o.pol.policy();

    double h_sum = 0;
    for (const CandidatePair& p : pairs) h_sum += hc_product(p.c, o.prime_limit);
    double h_mean = h_sum / static_cast<double>(pairs.size());

    NzStats st = nz_stats(pairs, o.z, h_mean, policy, o.par);

    json j;
    j["pair_count"] = pairs.size();
    j["m_c"] = st.m_c;
    j["z"] = st.z;
    j["i_z_bound"] = st.i_z_bound;
    j["h_mean"] = h_mean;
    j["h_prime_limit"] = o.prime_limit;
    j["mean_nz"] = st.mean;
    j["expected_nz"] = st.expected;
    j["frac_at_least_one"] = st.frac_at_least_one;
    j["distribution"] = json::array();
    for (const auto& [count, pct] : st.distribution)
        j["distribution"].push_back({{"count", count}, {"percent", pct}});
    j["conventions"] = conventions_block();
    write_json(o.output + ".nz.json", j);

    // histogram layout: first bucket [0, w], then (kw, (k+1)w], so range
    // ends line up at multiples of the width
    std::uint64_t w = o.bucket_width > 0 ? o.bucket_width
                                         : static_cast<std::uint64_t>(2 * m_c) /
                                               std::max<std::uint64_t>(1, o.buckets);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.emplace_back(0, w);
    for (std::uint64_t k = 1; k < o.buckets; ++k) edges.emplace_back(k * w + 1, (k + 1) * w);

    std::vector<std::uint64_t> totals(edges.size(), 0);
    for (const CandidatePair& p : pairs) {
        auto counts = histogram_by_edges(p, edges, policy, o.par);
        for (std::size_t i = 0; i < counts.size(); ++i) totals[i] += counts[i];
    }

    std::ofstream hist = open_output(o.output + ".hist.csv");
    hist << "j_lo,j_hi,primes_total,primes_per_pair\n";
    std::uint64_t grand = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        grand += totals[i];
        hist << edges[i].first << ',' << edges[i].second << ',' << totals[i] << ','
             << fmt_double(static_cast<double>(totals[i]) / static_cast<double>(pairs.size()))
             << '\n';
    }
    hist << "0," << edges.back().second << ',' << grand << ','
         << fmt_double(static_cast<double>(grand) / static_cast<double>(pairs.size())) << '\n';

    std::cerr << "density-scan: mean N_z = " << fmt_double(st.mean) << " (expected "
              << fmt_double(st.expected) << "), outputs " << o.output << ".nz.json, " << o.output
              << ".hist.csv\n";
    return 0;
}

// ------------------------------------------------------- cofactor-count --

struct CofactorOpts {
    std::uint64_t a1 = 5;
    std::string c = "1";
    int eps = 1;
    std::string x_list;      // counts at n_max = floor(x / a1)
    std::string n_max_list;  // direct n_max values
    std::string output = "cofactor.csv";
    PolicyOpts pol;
    ParallelConfig par;
};

int cmd_cofactor_count(const CofactorOpts& o) {
    Integer c = parse_integer(o.c);
    Integer a1(static_cast<unsigned long>(o.a1));
    EcParams ec(c);
    CofactorProgression cp = cofactor_progression(a1, ec, o.eps);

    std::vector<std::pair<Integer, Integer>> jobs;  // (x, n_max); x = 0 for direct bounds
    for (const std::string& s : split(o.x_list, ',')) {
        if (s.empty()) continue;
        Integer x = parse_integer(s);
        // elements within the first x indices of E_c: j = j0 + A1 n (eps +1)
        // or j = A1 n - j0 - r for n >= 1 (eps -1), j <= x - 1
        Integer n_max;
        if (o.eps > 0) {
            if (x - 1 < cp.anchor.j0) continue;  // nothing in range
            n_max = (x - 1 - cp.anchor.j0) / a1;
        } else {
            if (x - 1 < cp.anchor.j0) continue;
            n_max = (x - 1 + cp.anchor.j0 + ec.r) / a1;
        }
        jobs.emplace_back(x, n_max);
    }
    for (const std::string& s : split(o.n_max_list, ',')) {
        if (s.empty()) continue;
        jobs.emplace_back(0, parse_integer(s));
    }
    if (jobs.empty()) {
        std::cerr << "cofactor-count: need --x or --n-max\n";
        return 2;
    }

    std::ofstream out = open_output(o.output);
    out << "a1,c,eps,x,n_max,count\n";
    for (const auto& [x, n_max] : jobs) {
        Integer cnt = count_cofactor_primes(cp, n_max, o.pol.policy(), o.par);
        out << o.a1 << ',' << to_decimal(c) << ',' << o.eps << ',' << to_decimal(x) << ','
            << to_decimal(n_max) << ',' << to_decimal(cnt) << '\n';
        out.flush();
    }
    std::cerr << "cofactor-count: wrote " << jobs.size() << " rows to " << o.output << "\n";
    return 0;
}

// ------------------------------------------------------------- residues --

struct ResidueOpts {
    std::uint64_t p = 0;
    std::string format = "csv";
    std::string output = "residues.csv";
};

int cmd_residues(const ResidueOpts& o) {
    Integer p(static_cast<unsigned long>(o.p));
    if (o.p < 3 || !is_prime(p)) {
        std::cerr << "residues: --p must be an odd prime\n";
        return 2;
    }
    ResidueSets rs = residue_sets(p);
    if (o.format == "json") {
        json j;
        j["p"] = o.p;
        j["rq"] = json::array();
        for (const Integer& b : rs.rq) j["rq"].push_back(to_decimal(b));
        j["nrq"] = json::array();
        for (const Integer& b : rs.nrq) j["nrq"].push_back(to_decimal(b));
        write_json(o.output, j);
    } else {
        std::ofstream out = open_output(o.output);
        out << "p,kind,value\n";
        for (const Integer& b : rs.rq) out << o.p << ",rq," << to_decimal(b) << '\n';
        for (const Integer& b : rs.nrq) out << o.p << ",nrq," << to_decimal(b) << '\n';
    }
    std::cerr << "residues: |rq| = " << rs.rq.size() << ", |nrq| = " << rs.nrq.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime density experiments on the quadratic sets E_c = {X^2 + c}"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");
    bool dump_config = false;
    app.add_flag("--dump-config", dump_config, "print the effective config as key=value and exit");

    GenCOpts gen;
    CLI::App* cgen = app.add_subcommand("gen-c", "generate (c, j0) pairs with q1 = min D_p(E_c)");
    cgen->add_option("--q1", gen.q1, "smallest prime divisor to impose")->required();
    cgen->add_option("--count", gen.count, "number of pairs");
    cgen->add_option("--parity", gen.parity, "odd|even|both")
        ->check(CLI::IsMember({"odd", "even", "both"}));
    cgen->add_option("--algo", gen.algo, "1 = exhaustive, 2 = seeded chain")
        ->check(CLI::IsMember({1, 2}));
    cgen->add_option("--seed", gen.seed, "algorithm 2 seed X");
    cgen->add_option("--target-m", gen.target_m, "lift each c to this decimal size");
    cgen->add_option("-o,--output", gen.output, "pairs CSV path");

    EstimateOpts est;
    CLI::App* cest = app.add_subcommand("estimate-hc", "truncated-product h_c, optional empirical");
    cest->add_option("--c", est.c, "the constant c (decimal)")->required();
    cest->add_option("--prime-limit", est.prime_limit, "truncate the product at this prime");
    cest->add_option("--x-max", est.x_max, "empirical count up to this X (0 = skip)");
    cest->add_option("--checkpoint-step", est.checkpoint_step, "X checkpoint spacing");
    cest->add_option("--sieve-limit", est.sieve_limit, "presieve primes up to this bound");
    cest->add_option("-o,--output", est.output, "JSON report path");
    cest->add_option("--workers", est.par.workers, "worker threads (0 = auto)");
    add_policy_opts(cest, est.pol);

    HuntOpts hunt;
    CLI::App* chunt = app.add_subcommand("hunt", "find primes X^2 + c over the window I_z");
    chunt->add_option("--pairs", hunt.pairs_file, "pairs CSV from gen-c");
    chunt->add_option("--c", hunt.c, "inline pair: c (decimal)");
    chunt->add_option("--q1", hunt.q1, "inline pair: q1");
    chunt->add_option("--z", hunt.z, "window divisor: X <= 4 m_c / z");
    chunt->add_option("--max-results", hunt.max_results, "stop a pair after this many primes");
    chunt->add_option("--checkpoint-every", hunt.checkpoint_every, "tests between checkpoints");
    chunt->add_flag("--resume", hunt.resume, "resume from the checkpoint file");
    chunt->add_option("-o,--output", hunt.output, "primes CSV path");
    add_policy_opts(chunt, hunt.pol);

    ScanOpts scan;
    CLI::App* cscan = app.add_subcommand("density-scan", "N_z statistics and interval histogram");
    cscan->add_option("--pairs", scan.pairs_file, "pairs CSV from gen-c")->required();
    cscan->add_option("--z", scan.z, "window divisor");
    cscan->add_option("--prime-limit", scan.prime_limit, "h_c product limit for the expectation");
    cscan->add_option("--buckets", scan.buckets, "histogram bucket count");
    cscan->add_option("--bucket-width", scan.bucket_width, "bucket width in j (0 = auto)");
    cscan->add_option("-o,--output", scan.output, "output base path");
    cscan->add_option("--workers", scan.par.workers, "worker threads (0 = auto)");
    add_policy_opts(cscan, scan.pol);

    CofactorOpts cof;
    CLI::App* ccof = app.add_subcommand("cofactor-count", "primes in a cofactor progression");
    ccof->add_option("--a1", cof.a1, "divisor A1");
    ccof->add_option("--c", cof.c, "the constant c (decimal)");
    ccof->add_option("--eps", cof.eps, "+1 or -1")->check(CLI::IsMember({1, -1}));
    ccof->add_option("--x", cof.x_list,
                     "comma list of x; counts progression elements within the first x indices");
    ccof->add_option("--n-max", cof.n_max_list, "comma list of direct n bounds");
    ccof->add_option("-o,--output", cof.output, "CSV path");
    ccof->add_option("--workers", cof.par.workers, "worker threads (0 = auto)");
    add_policy_opts(ccof, cof.pol);

    ResidueOpts res;
    CLI::App* cres = app.add_subcommand("residues", "dump the quadratic residue split of Z/pZ");
    cres->add_option("--p", res.p, "odd prime")->required();
    cres->add_option("--format", res.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cres->add_option("-o,--output", res.output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (dump_config) {
        std::cout << app.config_to_str(true, true);
        return 0;
    }

    try {
        if (cgen->parsed()) return cmd_gen_c(gen);
        if (cest->parsed()) return cmd_estimate_hc(est);
        if (chunt->parsed()) return cmd_hunt(hunt);
        if (cscan->parsed()) return cmd_density_scan(scan);
        if (ccof->parsed()) return cmd_cofactor_count(cof);
        if (cres->parsed()) return cmd_residues(res);
    } catch (const std::runtime_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
