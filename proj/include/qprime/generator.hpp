#pragma once

#include <vector>

#include "qprime/congruence.hpp"
#include "qprime/ecset.hpp"

namespace qprime {

/// A generated (c, j0) with q1 = min of the prime divisors of E_c:
/// legendre(-c, p) = -1 for every odd prime p < q1 and legendre(-c, q1)
/// >= 0; j0 is the minimal index with q1 | (2 j0 + r)^2 + c.
struct CandidatePair {
    Integer c;
    Integer j0;
    Integer q1;
    Integer modulus;       // q1#
    bool q1_divides_c;     // the legendre(-c, q1) = 0 class
};

struct Seed {
    Integer x;
};

enum class ParityChoice { even, odd, both };

struct Algorithm1Result {
    std::vector<CandidatePair> pairs;
    bool truncated;  // count exceeded the family cardinal
};

/// Exhaustive generator: builds the full residue family mod q1# via the
/// stepwise congruence recursion, solves the odd parity, links the even
/// parity from it (no re-solving), and returns the first `count` pairs in
/// ascending c per parity (odd block first for `both`). Practical bound:
/// the family must be materializable (roughly q1 <= 29).
Algorithm1Result algorithm1(const Integer& q1, std::uint64_t count, ParityChoice parity);

/// Chain generator: one quadratic nonresidue per prime p < q1, chosen by
/// the fixed rule (p = 3 mod 4 -> -1, p = 5 mod 8 -> 2, else first odd
/// prime nonresidue), with the constraint c = -4 X^2 n_p (mod p) from the
/// seed X. Produces up to (q1+1)/2 odd-parity pairs, one per element of
/// the quadratic residue set of q1 in ascending order.
std::vector<CandidatePair> algorithm2(const Integer& q1, std::uint64_t count, const Seed& seed);

/// Smallest member of the class c mod q1# with exactly target_m decimal
/// digits; q1 and j0 are preserved. Throws when the class has no member of
/// that size.
CandidatePair lift_to_digits(const CandidatePair& pair, long target_m);

/// Independent validator: trial Legendre scan over all odd primes < q1,
/// the sign at q1, and minimality of j0 by direct scan mod q1.
bool validate_pair(const CandidatePair& pair);

/// The opposite-parity pair of the same class mod q1#, through the parity
/// link (c <-> c + modulus/2) and the index transfer. Involution on the
/// class; no congruence re-solving.
CandidatePair opposite_parity_pair(const CandidatePair& pair);

}  // namespace qprime
