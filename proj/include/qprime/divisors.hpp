#pragma once

#include <vector>

#include "qprime/ecset.hpp"
#include "qprime/parallel.hpp"
#include "qprime/primality.hpp"

namespace qprime {

/// Cofactor progression of A1 in E_c: value(n) = 4n(A1 n + eps X0) + B0,
/// so that A1 * value(n) is always an element of E_c.
struct CofactorProgression {
    Integer a1;
    Integer c;
    int eps;  // +1 or -1
    FirstMultiple anchor;

    Integer value(const Integer& n) const {
        return 4 * n * (a1 * n + eps * anchor.X0) + anchor.B0;
    }
};

/// Arithmetic sub-progression n0 + k*step of cofactor indices whose values
/// are all divisible by the A it was built for; `a` is the divisor of A
/// that produced it (a = A gives the dual progressions, step exactly A).
struct SubProgression {
    Integer a;
    Integer n0;
    Integer step;
};

/// Builds the progression for A1 in D(E_c); throws when A1 has no multiple
/// in E_c. eps selects the +X0 / -X0 branch.
CofactorProgression cofactor_progression(const Integer& A1, const EcParams& ec, int eps);

/// True iff gcd(A1, X0, B0) = 1 (the progression is an irreducible
/// quadratic in n).
bool is_irreducible(const CofactorProgression& cp);

/// All sub-progressions of multiples of A among the values, one per divisor
/// a of A whose congruence system is solvable. Union over both eps covers
/// every n with A | value(n). Empty when A has no multiple in the
/// progression.
std::vector<SubProgression> divisor_subprogressions(const CofactorProgression& cp,
                                                    const Integer& A);

/// |{n in [0, n_max] : value(n) prime}|.
Integer count_cofactor_primes(const CofactorProgression& cp, const Integer& n_max,
                              const PrimalityPolicy& policy = {},
                              const ParallelConfig& par = {});

}  // namespace qprime
