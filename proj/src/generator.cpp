#include "qprime/generator.hpp"

#include <algorithm>

#include "qprime/primality.hpp"

namespace qprime {

static void check_q1(const Integer& q1) {
    if (q1 < 3 || mpz_even_p(q1.get_mpz_t()) || !is_prime(q1))
        throw std::invalid_argument("q1 must be an odd prime >= 3");
}

static CandidatePair make_pair(const Integer& c, const Integer& q1, const Integer& modulus) {
    EcParams ec(c);
    auto fm = first_multiple(q1, ec);
    if (!fm) throw std::logic_error("generator: produced c with no q1 multiple");
    bool div = mpz_divisible_p(c.get_mpz_t(), q1.get_mpz_t()) != 0;
    return CandidatePair{c, fm->j0, q1, modulus, div};
}

// The parity link (c <-> c + modulus/2) combined with the index transfer;
// the minimal anchor is the smaller of the two progression starts of the
// new parity.
CandidatePair opposite_parity_pair(const CandidatePair& pair) {
    Integer half = pair.modulus / 2;
    Integer c_new = mod_floor(pair.c + half, pair.modulus);
    if (c_new == 0) c_new = pair.modulus;  // keep c >= 1
    int r_new = mpz_odd_p(c_new.get_mpz_t()) ? 0 : 1;
    Integer j0_mod = mod_floor(pair.j0, pair.q1);
    Integer t = transfer_first_index(j0_mod, pair.q1);
    Integer other = mod_floor(pair.q1 - t - r_new, pair.q1);
    Integer j0 = std::min(t, other);
    return CandidatePair{c_new, j0, pair.q1, pair.modulus, pair.q1_divides_c};
}

Algorithm1Result algorithm1(const Integer& q1, std::uint64_t count, ParityChoice parity) {
    check_q1(q1);
    if (count < 1) throw std::invalid_argument("algorithm1: count must be >= 1");

    CongruenceFamily odd_family = build_Ctilde(q1, Parity::odd);

    std::vector<CandidatePair> odd_pairs;
    odd_pairs.reserve(odd_family.members.size());
    for (const Integer& c : odd_family.members) odd_pairs.push_back(make_pair(c, q1, odd_family.modulus));

    std::vector<CandidatePair> out;
    auto append = [&](const std::vector<CandidatePair>& pairs) {
        for (const CandidatePair& p : pairs) {
            if (out.size() >= count) return;
            out.push_back(p);
        }
    };

    if (parity == ParityChoice::odd || parity == ParityChoice::both) append(odd_pairs);
    if (parity == ParityChoice::even || parity == ParityChoice::both) {
        std::vector<CandidatePair> even_pairs;
        even_pairs.reserve(odd_pairs.size());
        for (const CandidatePair& p : odd_pairs) even_pairs.push_back(opposite_parity_pair(p));
        std::sort(even_pairs.begin(), even_pairs.end(),
                  [](const CandidatePair& a, const CandidatePair& b) { return a.c < b.c; });
        append(even_pairs);
    }

    std::uint64_t available = odd_pairs.size() * (parity == ParityChoice::both ? 2 : 1);
    return Algorithm1Result{std::move(out), count > available};
}

// Nonresidue pick of Algorithm 2: -1 when p = 3 (mod 4), 2 when
// p = 5 (mod 8), else the first odd prime that is a nonresidue.
static Integer pick_nonresidue(const Integer& p) {
    if (mod_floor(p, 4) == 3) return p - 1;
    if (mod_floor(p, 8) == 5) return 2;
    for (std::uint64_t q = 3;; q += 2) {
        if (!is_prime_u64(q)) continue;
        Integer qi(static_cast<unsigned long>(q));
        if (qi >= p) break;
        if (legendre(qi, p) == -1) return qi;
    }
    throw std::logic_error("pick_nonresidue: no nonresidue found");
}

std::vector<CandidatePair> algorithm2(const Integer& q1, std::uint64_t count, const Seed& seed) {
    check_q1(q1);
    if (seed.x < 1) throw std::invalid_argument("algorithm2: seed must be >= 1");
    Integer cap = (q1 + 1) / 2;
    if (count < 1 || Integer(static_cast<unsigned long>(count)) > cap)
        throw std::invalid_argument("algorithm2: count must be in [1, (q1+1)/2]");

    ResidueClass chain(1, 2);  // odd c
    for (std::uint64_t pu : odd_primes_below(to_u64(q1))) {
        Integer p(static_cast<unsigned long>(pu));
        Integer x = mod_floor(seed.x, p);
        if (x == 0) x = 1;  // p | seed would force p | c
        Integer nm = pick_nonresidue(p);
        Integer b = mod_floor(-4 * x * x * nm, p);
        chain = solve_step(chain, ResidueClass(b, p));
    }

    ResidueSets rs = residue_sets(q1);
    std::vector<Integer> picks(rs.rq.begin(), rs.rq.begin() + static_cast<long>(count));
    std::vector<CandidatePair> out;
    out.reserve(count);
    for (const ResidueClass& rc : batch_solve_step(chain, q1, picks)) {
        Integer c = rc.value == 0 ? rc.modulus : rc.value;
        out.push_back(make_pair(c, q1, rc.modulus));
    }
    return out;
}

CandidatePair lift_to_digits(const CandidatePair& pair, long target_m) {
    long have = decimal_size(pair.c).digits;
    if (target_m < have) throw std::domain_error("lift_to_digits: target smaller than current size");
    Integer lo = target_m == 1 ? Integer(1) : pow10(static_cast<unsigned long>(target_m - 1));
    Integer n = 0;
    if (pair.c < lo) {
        Integer diff = lo - pair.c;
        n = (diff + pair.modulus - 1) / pair.modulus;  // ceil
    }
    Integer c = pair.c + n * pair.modulus;
    if (decimal_size(c).digits != target_m)
        throw std::domain_error("lift_to_digits: class has no member with target_m digits");
    CandidatePair out = pair;
    out.c = c;
    return out;
}

bool validate_pair(const CandidatePair& pair) {
    if (pair.c < 1 || pair.j0 < 0) return false;
    for (std::uint64_t pu : odd_primes_below(to_u64(pair.q1))) {
        if (legendre(-pair.c, Integer(static_cast<unsigned long>(pu))) != -1) return false;
    }
    if (legendre(-pair.c, pair.q1) < 0) return false;
    if (pair.q1_divides_c != (mpz_divisible_p(pair.c.get_mpz_t(), pair.q1.get_mpz_t()) != 0))
        return false;

    // j0 minimal by direct scan of j = 0 ... q1-1
    EcParams ec(pair.c);
    for (Integer j = 0; j < pair.q1; ++j) {
        if (mpz_divisible_p(eval_element(ec, j).get_mpz_t(), pair.q1.get_mpz_t()))
            return j == pair.j0;
    }
    return false;
}

}  // namespace qprime
