#pragma once

#include <functional>
#include <vector>

#include "qprime/arith.hpp"

namespace qprime {

enum class Parity { even, odd };

inline Parity parity_of(const Integer& n) {
    return mpz_odd_p(n.get_mpz_t()) ? Parity::odd : Parity::even;
}

/// Quadratic residue split of Z/pZ under b = -x^2: rq has (p+1)/2 members
/// (0 included), nrq the remaining (p-1)/2. c mod p in nrq means no X has
/// p | X^2 + c.
struct ResidueSets {
    Integer p;
    std::vector<Integer> rq;
    std::vector<Integer> nrq;
};

/// A family of residues of c modulo 2 p_F (or q1#) of one parity, sorted
/// ascending, with its expected cardinal T.
struct CongruenceFamily {
    Integer modulus;
    Parity parity;
    std::vector<Integer> members;
    Integer expected_cardinal;
};

ResidueSets residue_sets(const Integer& p);

/// One step of the (S_m) recursion: the unique class mod (a.modulus * p)
/// matching a and b = (b mod p). Solved through the Bezout coefficients of
/// p x - a.modulus y = 1, not a generic CRT call.
ResidueClass solve_step(const ResidueClass& a, const ResidueClass& b);

/// Same solutions as mapping solve_step over bs, but solves the Bezout
/// equation once and derives the rest by adding precomputed offsets
/// 2 p_F y (b0 - bj).
std::vector<ResidueClass> batch_solve_step(const ResidueClass& a, const Integer& p,
                                           const std::vector<Integer>& bs);

/// All c mod 2 p_F of the given parity with legendre(-c, p) = -1 for every
/// p in F. F must be the consecutive odd primes 3, 5, ..., p_M. Cardinal
/// prod (p-1)/2.
CongruenceFamily build_CF(const std::vector<Integer>& F, Parity parity);

/// All c mod q1# of the given parity with legendre(-c, p) = -1 for every
/// odd p < q1 and legendre(-c, q1) in {0, +1}. Cardinal
/// (q1+1)/2 * prod_{p<q1} (p-1)/2.
CongruenceFamily build_Ctilde(const Integer& q1, Parity parity);

/// The opposite-parity family: each member maps to (c + modulus/2) mod
/// modulus (the two families are equal mod modulus/2). Involution.
CongruenceFamily link_parities(const CongruenceFamily& family);

/// Anchor index for c + q1 (opposite parity) given the anchor j0 of odd c:
/// j'' = ((q1-1)/2 - j0) mod q1. Involution.
Integer transfer_first_index(const Integer& j0, const Integer& q1);

/// Streaming enumeration of the same family as build_Ctilde, one chain at
/// a time in fixed depth-first order, never materializing a level. Stops
/// after max_count chains or when the visitor returns false.
void enumerate_ctilde_streaming(const Integer& q1, Parity parity, std::uint64_t max_count,
                                const std::function<bool(const ResidueClass&)>& visit);

}  // namespace qprime
