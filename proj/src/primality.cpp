#include "qprime/primality.hpp"

#include <random>

namespace qprime {

PrimeList primes_up_to(std::uint64_t limit) {
    PrimeList out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        if (i <= limit / i)
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

PrimeList odd_primes_up_to(std::uint64_t limit) {
    PrimeList out = primes_up_to(limit);
    if (!out.empty() && out.front() == 2) out.erase(out.begin());
    return out;
}

PrimeList odd_primes_below(std::uint64_t bound) {
    return bound == 0 ? PrimeList{} : odd_primes_up_to(bound - 1);
}

// -- 64-bit deterministic Miller-Rabin --------------------------------------

static bool mr_round_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = u64ops::powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = u64ops::mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // first 12 primes as bases: exact for every 64-bit integer
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!mr_round_u64(n, a, d, s)) return false;
    return true;
}

// -- arbitrary precision -----------------------------------------------------

static bool mr_round(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
    Integer am = mod_floor(a, n);
    if (am == 0) return true;
    Integer x = mod_pow(am, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = mod_floor(x * x, n);
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Strong Lucas test with Selfridge parameters (method A): D = 5, -7, 9, ...
// with (D/n) = -1, P = 1, Q = (1 - D)/4.
static bool strong_lucas(const Integer& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    Integer d = 5;  // 5, -7, 9, -11, ...
    for (;;) {
        int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) return false;  // 0 < |d| < n, so n shares a factor with d
        if (d > 0)
            d = -(d + 2);
        else
            d = -d + 2;
    }
    Integer q = (1 - d) / 4;

    Integer m = n + 1;
    unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    Integer k = m >> s;

    // U_k, V_k by the binary double-and-add chain on (U, V, Q^j)
    Integer u = 1, v = 1, qk = mod_floor(q, n);
    long bits = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2));
    for (long i = bits - 2; i >= 0; --i) {
        u = mod_floor(u * v, n);
        v = mod_floor(v * v - 2 * qk, n);
        qk = mod_floor(qk * qk, n);
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            // (U, V) <- ((P*U + V)/2, (D*U + P*V)/2), P = 1
            Integer u2 = u + v;
            Integer v2 = d * u + v;
            if (mpz_odd_p(u2.get_mpz_t())) u2 += n;
            if (mpz_odd_p(v2.get_mpz_t())) v2 += n;
            u = mod_floor(u2 / 2, n);
            v = mod_floor(v2 / 2, n);
            qk = mod_floor(qk * q, n);
        }
    }

    if (u == 0 || v == 0) return true;
    for (unsigned long i = 1; i < s; ++i) {
        v = mod_floor(v * v - 2 * qk, n);
        if (v == 0) return true;
        qk = mod_floor(qk * qk, n);
    }
    return false;
}

bool is_prime(const Integer& n, const PrimalityPolicy& policy) {
    if (policy.miller_rabin_rounds < 1)
        throw std::invalid_argument("PrimalityPolicy: miller_rabin_rounds must be >= 1");
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));

    static const PrimeList small = primes_up_to(1000);
    for (std::uint64_t p : small)
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;

    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    if (!mr_round(n, 2, d, s)) return false;

    std::mt19937_64 rng(policy.rng_seed);
    Integer span = n - 4;  // bases in [2, n-2]
    for (int round = 1; round < policy.miller_rabin_rounds; ++round) {
        std::uint64_t hi = rng();
        std::uint64_t lo = rng();
        Integer a = 2 + mod_floor((Integer(hi) << 64) + Integer(lo), span);
        if (!mr_round(n, a, d, s)) return false;
    }
    if (policy.use_lucas_stage && !strong_lucas(n)) return false;
    return true;
}

}  // namespace qprime
