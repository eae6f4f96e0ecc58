#pragma once

#include <cstdint>
#include <vector>

#include "qprime/arith.hpp"

namespace qprime {

/// Ascending list of primes from a sieve run.
using PrimeList = std::vector<std::uint64_t>;

/// Exactly the primes <= limit (2 included), via sieve of Eratosthenes.
PrimeList primes_up_to(std::uint64_t limit);

/// Odd primes p with 3 <= p <= limit.
PrimeList odd_primes_up_to(std::uint64_t limit);

/// Odd primes p with 3 <= p < bound (the F = {p_1 ... p_{k-1}} sets).
PrimeList odd_primes_below(std::uint64_t bound);

/// Primality testing policy. Verdicts are deterministic under 2^64 (fixed
/// base set), and reproducible above it: the same (n, policy) always gives
/// the same answer because the extra Miller-Rabin bases come from a
/// generator seeded with rng_seed.
struct PrimalityPolicy {
    int miller_rabin_rounds = 64;
    bool use_lucas_stage = true;
    std::uint64_t rng_seed = 0x51e5'ec0d'ed0c'5eedULL;
};

/// Exact for all 64-bit n (deterministic Miller-Rabin base set).
bool is_prime_u64(std::uint64_t n);

/// Probabilistic primality for arbitrary-precision n (>= 0). Exact when n
/// fits 64 bits; otherwise Miller-Rabin rounds plus an optional strong
/// Lucas stage (BPSW-style).
bool is_prime(const Integer& n, const PrimalityPolicy& policy = {});

}  // namespace qprime
