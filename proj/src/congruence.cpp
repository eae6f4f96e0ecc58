#include "qprime/congruence.hpp"

#include <algorithm>

#include "qprime/primality.hpp"

namespace qprime {

ResidueSets residue_sets(const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("residue_sets: p must be an odd prime");
    if (!fits_u64(p)) throw std::length_error("residue_sets: p too large to enumerate");
    std::uint64_t pu = to_u64(p);
    std::vector<bool> in_rq(pu, false);
    for (std::uint64_t x = 0; x <= (pu - 1) / 2; ++x) {
        std::uint64_t sq = u64ops::mulmod(x, x, pu);
        in_rq[sq == 0 ? 0 : pu - sq] = true;  // b = -x^2 mod p
    }
    ResidueSets rs;
    rs.p = p;
    for (std::uint64_t b = 0; b < pu; ++b)
        (in_rq[b] ? rs.rq : rs.nrq).emplace_back(static_cast<unsigned long>(b));
    return rs;
}

// Bezout v for the normal form p x - m y = 1.
static Integer bezout_v(const Integer& p, const Integer& m) {
    BezoutTriple bz = ext_gcd(p, m);  // p u + m w = g
    if (bz.g != 1) throw std::domain_error("solve_step: modulus and p are not coprime");
    return mod_floor(-bz.v, p);  // y = v d with v = -w mod p
}

ResidueClass solve_step(const ResidueClass& a, const ResidueClass& b) {
    const Integer& p = b.modulus;
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("solve_step: p must be an odd prime");
    Integer v = bezout_v(p, a.modulus);
    Integer y = mod_floor(v * (a.value - b.value), p);
    return ResidueClass(a.modulus * y + a.value, a.modulus * p);
}

std::vector<ResidueClass> batch_solve_step(const ResidueClass& a, const Integer& p,
                                           const std::vector<Integer>& bs) {
    std::vector<ResidueClass> out;
    if (bs.empty()) return out;
    ResidueClass first = solve_step(a, ResidueClass(bs.front(), p));
    Integer modulus = first.modulus;
    Integer v = bezout_v(p, a.modulus);
    out.push_back(first);
    for (std::size_t j = 1; j < bs.size(); ++j) {
        Integer w = mod_floor(v * (bs.front() - bs[j]), p);  // y (b0 - bj), precomputed mod p
        out.emplace_back(first.value + a.modulus * w, modulus);
    }
    return out;
}

static void check_consecutive_odd_primes(const std::vector<Integer>& F) {
    if (!F.empty() && !fits_u64(F.back()))
        throw std::length_error("build_CF: F entries too large");
    PrimeList expect = odd_primes_up_to(F.empty() ? 0 : to_u64(F.back()));
    if (expect.size() != F.size())
        throw std::invalid_argument("build_CF: F must be the consecutive odd primes from 3");
    for (std::size_t i = 0; i < F.size(); ++i)
        if (F[i] != Integer(static_cast<unsigned long>(expect[i])))
            throw std::invalid_argument("build_CF: F must be the consecutive odd primes from 3");
}

static constexpr std::uint64_t kFamilyCap = 4'000'000;

// Core (S_m) recursion. `last_rq` switches the final step from E^NRQ to
// E^RQ (the C-tilde construction).
static CongruenceFamily build_family(const std::vector<Integer>& F, Parity parity, bool last_rq) {
    Integer expected = 1;
    for (std::size_t i = 0; i < F.size(); ++i) {
        bool last = i + 1 == F.size();
        Integer factor = (last && last_rq) ? Integer((F[i] + 1) / 2) : Integer((F[i] - 1) / 2);
        expected *= factor;
    }
    if (expected > Integer(static_cast<unsigned long>(kFamilyCap)))
        throw std::length_error("congruence family too large to materialize; use the streaming mode");

    std::vector<ResidueClass> level;
    level.emplace_back(parity == Parity::odd ? 1 : 0, 2);
    for (std::size_t i = 0; i < F.size(); ++i) {
        bool last = i + 1 == F.size();
        ResidueSets rs = residue_sets(F[i]);
        const std::vector<Integer>& picks = (last && last_rq) ? rs.rq : rs.nrq;
        std::vector<ResidueClass> next;
        next.reserve(level.size() * picks.size());
        for (const ResidueClass& a : level)
            for (ResidueClass& c : batch_solve_step(a, F[i], picks)) next.push_back(std::move(c));
        level = std::move(next);
    }

    CongruenceFamily fam;
    fam.modulus = level.empty() ? Integer(2) : level.front().modulus;
    fam.parity = parity;
    fam.expected_cardinal = expected;
    fam.members.reserve(level.size());
    for (const ResidueClass& rc : level) fam.members.push_back(rc.value);
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

CongruenceFamily build_CF(const std::vector<Integer>& F, Parity parity) {
    check_consecutive_odd_primes(F);
    return build_family(F, parity, false);
}

CongruenceFamily build_Ctilde(const Integer& q1, Parity parity) {
    if (q1 < 3 || mpz_even_p(q1.get_mpz_t()) || !is_prime(q1))
        throw std::invalid_argument("build_Ctilde: q1 must be an odd prime");
    std::vector<Integer> F;
    for (std::uint64_t p : odd_primes_up_to(to_u64(q1)))
        F.emplace_back(static_cast<unsigned long>(p));
    return build_family(F, parity, true);
}

CongruenceFamily link_parities(const CongruenceFamily& family) {
    Integer half = family.modulus / 2;
    if (family.modulus < 2 || mpz_even_p(half.get_mpz_t()))
        throw std::domain_error("link_parities: modulus must be 2 * odd");
    CongruenceFamily out;
    out.modulus = family.modulus;
    out.parity = family.parity == Parity::even ? Parity::odd : Parity::even;
    out.expected_cardinal = family.expected_cardinal;
    out.members.reserve(family.members.size());
    for (const Integer& c : family.members) out.members.push_back(mod_floor(c + half, family.modulus));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Integer transfer_first_index(const Integer& j0, const Integer& q1) {
    if (j0 < 0 || j0 >= q1) throw std::domain_error("transfer_first_index: j0 must be in [0, q1)");
    return mod_floor((q1 - 1) / 2 - j0, q1);
}

void enumerate_ctilde_streaming(const Integer& q1, Parity parity, std::uint64_t max_count,
                                const std::function<bool(const ResidueClass&)>& visit) {
    if (q1 < 3 || mpz_even_p(q1.get_mpz_t()) || !is_prime(q1))
        throw std::invalid_argument("enumerate_ctilde_streaming: q1 must be an odd prime");
    if (max_count == 0) return;
    std::vector<Integer> F;
    for (std::uint64_t p : odd_primes_up_to(to_u64(q1)))
        F.emplace_back(static_cast<unsigned long>(p));

    std::vector<ResidueSets> sets;
    sets.reserve(F.size());
    for (const Integer& p : F) sets.push_back(residue_sets(p));

    std::uint64_t emitted = 0;
    // depth-first over (b_1, ..., b_M) choices, nrq order per level, rq at the last
    std::function<bool(std::size_t, const ResidueClass&)> descend =
        [&](std::size_t depth, const ResidueClass& acc) -> bool {
        if (depth == F.size()) {
            ++emitted;
            return visit(acc) && emitted < max_count;
        }
        bool last = depth + 1 == F.size();
        const std::vector<Integer>& picks = last ? sets[depth].rq : sets[depth].nrq;
        for (const ResidueClass& c : batch_solve_step(acc, F[depth], picks))
            if (!descend(depth + 1, c)) return false;
        return true;
    };
    descend(0, ResidueClass(parity == Parity::odd ? 1 : 0, 2));
}

}  // namespace qprime
