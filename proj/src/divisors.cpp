#include "qprime/divisors.hpp"

#include <algorithm>

namespace qprime {

CofactorProgression cofactor_progression(const Integer& A1, const EcParams& ec, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("cofactor_progression: eps must be +-1");
    auto fm = first_multiple(A1, ec);
    if (!fm) throw std::domain_error("cofactor_progression: A1 has no multiple in E_c");
    return CofactorProgression{A1, ec.c, eps, *fm};
}

bool is_irreducible(const CofactorProgression& cp) {
    return gcd(gcd(cp.a1, cp.anchor.X0), cp.anchor.B0) == 1;
}

static std::vector<Integer> divisors_of(const Integer& A) {
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= A; ++d) {
        if (!mpz_divisible_p(A.get_mpz_t(), d.get_mpz_t())) continue;
        small.push_back(d);
        if (d * d != A) large.push_back(A / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<SubProgression> divisor_subprogressions(const CofactorProgression& cp,
                                                    const Integer& A) {
    if (A < 2) throw std::domain_error("divisor_subprogressions: A must be >= 2");

    // anchor n0: the value map mod A has period dividing A
    Integer n0 = -1;
    for (Integer n = 0; n < A; ++n) {
        if (mpz_divisible_p(cp.value(n).get_mpz_t(), A.get_mpz_t())) {
            n0 = n;
            break;
        }
    }
    std::vector<SubProgression> out;
    if (n0 < 0) return out;

    Integer lead = cp.a1 * n0 + cp.eps * cp.anchor.X0;  // A1 n0 + eps X0

    for (const Integer& a : divisors_of(A)) {
        Integer b = A / a;
        Integer g1 = gcd(cp.a1, b);
        if (mod_floor(lead, g1) != 0) continue;

        // A1 n = -(A1 n0 + eps X0) (mod b)  <=>  n = t (mod b1), b1 = b/g1
        Integer b1 = b / g1;
        Integer t = 0;
        if (b1 > 1) {
            auto u = mod_inverse(mod_floor(cp.a1 / g1, b1), b1);
            if (!u) continue;  // unreachable: gcd(A1/g1, b/g1) = 1
            t = mod_floor(-(*u) * (lead / g1), b1);
        }

        // combine with n = n0 (mod a); solvable iff gcd(a, b1) | n0 - t
        Integer g2 = gcd(a, b1);
        if (mod_floor(n0 - t, g2) != 0) continue;
        Integer step = lcm(a, b1);  // = A / gcd(a*A1, A/a)

        // n = n0 + a k with (a/g2) k = (t - n0)/g2 (mod b1/g2)
        Integer k = 0;
        Integer b_red = b1 / g2;
        if (b_red > 1) {
            auto inv = mod_inverse(mod_floor(a / g2, b_red), b_red);
            k = mod_floor(*inv * ((t - n0) / g2), b_red);
        }
        Integer n_start = mod_floor(n0 + a * k, step);
        out.push_back({a, n_start, step});
    }
    return out;
}

Integer count_cofactor_primes(const CofactorProgression& cp, const Integer& n_max,
                              const PrimalityPolicy& policy, const ParallelConfig& par) {
    if (n_max < 0) throw std::domain_error("count_cofactor_primes: n_max must be >= 0");

    // fast path: every value in the range fits 64 bits (the value map is a
    // parabola in n, so the range maximum is max(value(0), value(n_max)))
    if (fits_u64(cp.a1) && fits_u64(n_max) && fits_u64(cp.anchor.X0) && fits_u64(cp.anchor.B0) &&
        fits_u64(cp.value(n_max))) {
        std::uint64_t a1 = to_u64(cp.a1), x0 = to_u64(cp.anchor.X0), b0 = to_u64(cp.anchor.B0);
        std::uint64_t hi = to_u64(n_max);
        int eps = cp.eps;
        std::uint64_t total = chunked_sum(
            0, hi + 1, 4096, par, [a1, x0, b0, eps](std::uint64_t lo, std::uint64_t up) {
                std::uint64_t cnt = 0;
                for (std::uint64_t n = lo; n < up; ++n) {
                    unsigned __int128 a1n = static_cast<unsigned __int128>(a1) * n;
                    unsigned __int128 v;
                    if (eps > 0)
                        v = 4 * n * (a1n + x0) + b0;
                    else if (a1n >= x0)
                        v = 4 * n * (a1n - x0) + b0;
                    else
                        v = b0 - 4 * n * (x0 - a1n);
                    if (is_prime_u64(static_cast<std::uint64_t>(v))) ++cnt;
                }
                return cnt;
            });
        return Integer(total);
    }

    if (!fits_u64(n_max)) throw std::length_error("count_cofactor_primes: n_max too large");
    std::uint64_t hi = to_u64(n_max);
    std::uint64_t total =
        chunked_sum(0, hi + 1, 1024, par, [&](std::uint64_t lo, std::uint64_t up) {
            std::uint64_t cnt = 0;
            for (std::uint64_t n = lo; n < up; ++n)
                if (is_prime(cp.value(Integer(n)), policy)) ++cnt;
            return cnt;
        });
    return Integer(total);
}

}  // namespace qprime
