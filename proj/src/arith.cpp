#include "qprime/arith.hpp"

#include <cmath>
#include <vector>

namespace qprime {

ResidueClass::ResidueClass(Integer v, Integer m) : value(std::move(v)), modulus(std::move(m)) {
    if (modulus < 1) throw std::domain_error("ResidueClass: modulus must be >= 1");
    value = mod_floor(value, modulus);
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m < 1) throw std::domain_error("mod_floor: modulus must be >= 1");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
    return inv;
}

Integer pow10(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

Integer parse_integer(const std::string& s) {
    Integer n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_integer: not a decimal integer: " + s);
    return n;
}

bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& n) {
    std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 32) {
        Integer hi = n >> 32;
        lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
             (mpz_get_ui(n.get_mpz_t()) & 0xffffffffULL);
    }
    return lo;
}

BezoutTriple ext_gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("ext_gcd: gcd(0, 0) is undefined");
    BezoutTriple t;
    mpz_gcdext(t.g.get_mpz_t(), t.u.get_mpz_t(), t.v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return t;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& m) {
    if (m < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

static void check_odd_prime_modulus(const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("modulus must be an odd prime >= 3");
}

int legendre(const Integer& a, const Integer& p) {
    check_odd_prime_modulus(p);
    Integer am = mod_floor(a, p);
    if (am == 0) return 0;
    Integer r = mod_pow(am, (p - 1) / 2, p);
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::domain_error("legendre: Euler criterion failed; modulus is not prime");
}

std::optional<Integer> sqrt_mod(const Integer& a, const Integer& p) {
    check_odd_prime_modulus(p);
    Integer am = mod_floor(a, p);
    if (am == 0) return Integer(0);
    if (legendre(am, p) == -1) return std::nullopt;

    Integer s;
    if (mod_floor(p, 4) == 3) {
        s = mod_pow(am, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^e with q odd
        Integer q = p - 1;
        unsigned long e = mpz_scan1(q.get_mpz_t(), 0);
        q >>= e;
        Integer z = 2;
        while (legendre(z, p) != -1) ++z;

        Integer x = mod_pow(am, (q + 1) / 2, p);
        Integer b = mod_pow(am, q, p);
        Integer g = mod_pow(z, q, p);
        unsigned long m = e;
        while (b != 1) {
            Integer t = b;
            unsigned long i = 0;
            while (t != 1) {
                t = mod_floor(t * t, p);
                ++i;
            }
            Integer gs = g;
            for (unsigned long k = 0; k + i + 1 < m; ++k) gs = mod_floor(gs * gs, p);
            g = mod_floor(gs * gs, p);
            x = mod_floor(x * gs, p);
            b = mod_floor(b * g, p);
            m = i;
        }
        s = x;
    }
    if (s > (p - 1) / 2) s = p - s;
    return s;
}

ResidueClass crt_merge(const ResidueClass& x, const ResidueClass& y) {
    if (gcd(x.modulus, y.modulus) != 1)
        throw std::domain_error("crt_merge: moduli are not coprime");
    // mx*u + my*v = 1; result = x + mx*u*(y - x) mod mx*my
    BezoutTriple bz = ext_gcd(x.modulus, y.modulus);
    Integer m = x.modulus * y.modulus;
    Integer t = mod_floor(x.modulus * bz.u, m);
    Integer r = x.value + t * mod_floor(y.value - x.value, y.modulus);
    return ResidueClass(std::move(r), std::move(m));
}

static Integer product_tree(const std::vector<Integer>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 0) return Integer(1);
    if (hi - lo == 1) return v[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return product_tree(v, lo, mid) * product_tree(v, mid, hi);
}

Integer primorial(const Integer& n) {
    if (n < 2) return Integer(1);
    if (!fits_u64(n) || to_u64(n) > 1'000'000'000ULL)
        throw std::length_error("primorial: limit too large to sieve");
    std::uint64_t limit = to_u64(n);
    std::vector<bool> composite(limit + 1, false);
    std::vector<Integer> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.emplace_back(static_cast<unsigned long>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return product_tree(primes, 0, primes.size());
}

DecimalSize decimal_size(const Integer& n) {
    if (n < 1) throw std::domain_error("decimal_size: argument must be >= 1");
    // sizeinbase is exact or one too big; settle with a comparison
    std::size_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (d > 1 && n < pow10(static_cast<unsigned long>(d - 1))) --d;
    long m = static_cast<long>(d);
    return DecimalSize{m, static_cast<double>(m) * std::log(10.0)};
}

namespace u64ops {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = m == 1 ? 0 : 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t r = powmod(a, (p - 1) / 2, p);
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::domain_error("u64ops::legendre: modulus is not prime");
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return std::uint64_t{0};
    if (legendre(a, p) == -1) return std::nullopt;

    std::uint64_t s;
    if (p % 4 == 3) {
        s = powmod(a, (p + 1) / 4, p);
    } else {
        std::uint64_t q = p - 1;
        unsigned e = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++e;
        }
        std::uint64_t z = 2;
        while (legendre(z, p) != -1) ++z;
        std::uint64_t x = powmod(a, (q + 1) / 2, p);
        std::uint64_t b = powmod(a, q, p);
        std::uint64_t g = powmod(z, q, p);
        unsigned m = e;
        while (b != 1) {
            std::uint64_t t = b;
            unsigned i = 0;
            while (t != 1) {
                t = mulmod(t, t, p);
                ++i;
            }
            std::uint64_t gs = g;
            for (unsigned k = 0; k + i + 1 < m; ++k) gs = mulmod(gs, gs, p);
            g = mulmod(gs, gs, p);
            x = mulmod(x, gs, p);
            b = mulmod(b, g, p);
            m = i;
        }
        s = x;
    }
    if (s > (p - 1) / 2) s = p - s;
    return s;
}

}  // namespace u64ops

}  // namespace qprime
