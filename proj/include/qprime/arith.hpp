#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qprime {

/// Arbitrary-precision signed integer. All number-theoretic paths are exact;
/// floating point only ever appears in sizes, densities and regression fits.
using Integer = mpz_class;

/// Residue class value mod modulus, kept normalized to 0 <= value < modulus.
struct ResidueClass {
    Integer value;
    Integer modulus;

    ResidueClass(Integer v, Integer m);

    bool operator==(const ResidueClass& o) const {
        return value == o.value && modulus == o.modulus;
    }
};

/// Result of the extended Euclid run: a*u + b*v = g = gcd(a, b) >= 0.
struct BezoutTriple {
    Integer g;
    Integer u;
    Integer v;
};

/// Exact decimal digit count m and natural-log size s = m * ln(10).
struct DecimalSize {
    long digits;
    double size;
};

// -- basic helpers ----------------------------------------------------------

/// Remainder in [0, m) for m >= 1, regardless of the sign of a.
Integer mod_floor(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Inverse of a mod m, if it exists.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

Integer pow10(unsigned long k);

std::string to_decimal(const Integer& n);
Integer parse_integer(const std::string& s);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);

// -- spec operations --------------------------------------------------------

/// Bezout coefficients with g = gcd(a,b) >= 0. Throws if a = b = 0.
BezoutTriple ext_gcd(const Integer& a, const Integer& b);

/// base^exp mod m, in [0, m). Requires exp >= 0 and m >= 1.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m);

/// Legendre symbol (a/p) for odd prime p, via the Euler criterion.
/// Returns 0 when p | a, +1 for nonzero quadratic residues, -1 otherwise.
/// Throws std::domain_error for even or < 3 moduli, and when the Euler
/// criterion exposes a composite p.
int legendre(const Integer& a, const Integer& p);

/// Square root of a mod odd prime p, canonical representative in
/// [0, (p-1)/2]; absent when (a/p) = -1. Tonelli-Shanks with the
/// p = 3 (mod 4) fast path.
std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p);

/// Merge two residue classes with coprime moduli. Throws on non-coprime
/// moduli (consistent or not).
ResidueClass crt_merge(const ResidueClass& x, const ResidueClass& y);

/// Product of all primes <= n; 1 when n < 2.
Integer primorial(const Integer& n);

/// Exact digit count of N >= 1 (from the decimal representation) and the
/// size m * ln(10).
DecimalSize decimal_size(const Integer& n);

// -- 64-bit fast paths ------------------------------------------------------
//
// Same semantics as the Integer versions, for the hot loops (truncated
// h_c products, sieving). Moduli must be odd primes < 2^63.

namespace u64ops {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
int legendre(std::uint64_t a, std::uint64_t p);
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

}  // namespace u64ops

}  // namespace qprime
