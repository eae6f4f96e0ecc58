#pragma once

#include <optional>
#include <vector>

#include "qprime/arith.hpp"

namespace qprime {

/// Parameters of the set E_c = {(2j + r)^2 + c, j >= 0}: c >= 1, the
/// X-parity r = 1 - (c mod 2), and the decimal size of c. Every element
/// is odd by construction.
struct EcParams {
    Integer c;
    int r;
    long m_c;
    double s_c;

    explicit EcParams(Integer c_in);
};

/// First multiple of A in E_c: the minimal X0 >= 0 of parity r with
/// A | X0^2 + c, its index j0 = (X0 - r)/2, and the cofactor
/// B0 = (X0^2 + c)/A.
struct FirstMultiple {
    Integer A;
    Integer j0;
    Integer X0;
    Integer B0;
};

/// The two arithmetic progressions of indices j with p | (2j + r)^2 + c:
/// {start1 + p k} and {start2 + p k}, start1 <= start2; they coincide
/// exactly when p | c.
struct IndexProgressionPair {
    Integer start1;
    Integer start2;
    Integer step;
    bool merged;
};

/// Dense quadratic a2 x^2 + a1 x + a0.
struct QuadraticForm {
    Integer a2;
    Integer a1;
    Integer a0;

    Integer eval(const Integer& x) const { return (a2 * x + a1) * x + a0; }
};

/// A surviving residue b mod 2 p_F together with the quadratic form
/// (2 p_F x + b)^2 + c expanded in x.
struct CoprimeResidueForm {
    Integer b;
    QuadraticForm form;
};

/// The j-th element (2j + r)^2 + c.
Integer eval_element(const EcParams& ec, const Integer& j);

/// Number of residues X mod p with p | X^2 + c: 0 when -c is a nonresidue,
/// 1 when p | c, 2 otherwise. Equals legendre(-c, p) + 1.
int t_p(const Integer& p, const Integer& c);

/// Anchor of the divisor progressions of A (odd, >= 3) in E_c. Absent iff
/// A is prime with t_p(A, c) = 0, or composite without multiples. Prime A
/// goes through sqrt_mod; composite A scans one period X < 2A.
std::optional<FirstMultiple> first_multiple(const Integer& A, const EcParams& ec);

/// Sieve-2 index progressions for odd prime p; absent iff t_p = 0.
std::optional<IndexProgressionPair> index_progressions(const Integer& p, const EcParams& ec);

/// All residues b in [0, 2 p_F) of parity r with X = b (mod 2 p_F) implying
/// gcd(X^2 + c, p_F) = 1, each with its quadratic form. Requires t_p >= 1
/// for every p in F; the count is prod (p - t_p).
std::vector<CoprimeResidueForm> coprime_residue_forms(const EcParams& ec,
                                                      const std::vector<Integer>& F);

/// Exact density prod_{p in F} (1 - t_p / p) of elements of E_c coprime
/// with F (primes with t_p = 0 contribute factor 1).
mpq_class density_exact(const EcParams& ec, const std::vector<Integer>& F);

}  // namespace qprime
