#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qprime/arith.hpp"
#include "qprime/primality.hpp"

using namespace qprime;

TEST_CASE("ext_gcd identities and known values") {
    auto t = ext_gcd(5, 3);
    CHECK(t.g == 1);
    CHECK(t.u == -1);
    CHECK(t.v == 2);

    t = ext_gcd(2 * 105, 7);
    CHECK(t.g == 7);
    CHECK(Integer(210) * t.u + Integer(7) * t.v == 7);

    t = ext_gcd(0, 9);
    CHECK(t.g == 9);
    CHECK(t.u == 0);
    CHECK(t.v == 1);

    CHECK_THROWS_AS(ext_gcd(0, 0), std::domain_error);

    for (long a = -30; a <= 30; a += 7) {
        for (long b = -25; b <= 25; b += 3) {
            if (a == 0 && b == 0) continue;
            auto bz = ext_gcd(a, b);
            CHECK(bz.g >= 0);
            CHECK(Integer(a) * bz.u + Integer(b) * bz.v == bz.g);
            if (bz.g != 0) {
                CHECK(mod_floor(Integer(a), bz.g) == 0);
                CHECK(mod_floor(Integer(b), bz.g) == 0);
            }
        }
    }
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(12345, 0, 7) == 1);
    CHECK(mod_pow(5, 0, 1) == 0);  // mod 1 everything is 0
    CHECK(mod_pow(3, 3, 7) == 6);  // 3 is a nonresidue mod 7
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::domain_error);
    CHECK_THROWS_AS(mod_pow(2, -1, 5), std::domain_error);
}

TEST_CASE("legendre known values") {
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 3) == -1);
    CHECK(legendre(10, 5) == 0);
    CHECK_THROWS_AS(legendre(3, 2), std::domain_error);
    CHECK_THROWS_AS(legendre(3, 1), std::domain_error);
    CHECK_THROWS_AS(legendre(3, 9), std::domain_error);  // Euler criterion flags composites
}

TEST_CASE("legendre multiplicativity and square agreement, p <= 97") {
    for (std::uint64_t p : odd_primes_up_to(97)) {
        Integer pi(static_cast<unsigned long>(p));
        for (std::uint64_t a = 1; a < p; ++a) {
            bool square = oracle::has_root(a, p);
            CHECK(legendre(Integer(static_cast<unsigned long>(a)), pi) == (square ? 1 : -1));
            for (std::uint64_t b = 1; b < p; ++b) {
                CHECK(legendre(Integer(static_cast<unsigned long>(a * b)), pi) ==
                      legendre(Integer(static_cast<unsigned long>(a)), pi) *
                          legendre(Integer(static_cast<unsigned long>(b)), pi));
            }
        }
    }
}

TEST_CASE("sqrt_mod canonical roots") {
    CHECK(sqrt_mod(-1, 5) == Integer(2));
    CHECK(sqrt_mod(0, 7) == Integer(0));
    CHECK(sqrt_mod(-157, 7) == Integer(2));
    CHECK(!sqrt_mod(-1, 3).has_value());
}

TEST_CASE("sqrt_mod exhaustive cross-check, p <= 97") {
    for (std::uint64_t p : odd_primes_up_to(97)) {
        Integer pi(static_cast<unsigned long>(p));
        for (std::uint64_t a = 0; a < p; ++a) {
            auto s = sqrt_mod(Integer(static_cast<unsigned long>(a)), pi);
            auto su = u64ops::sqrt_mod(a, p);
            if (oracle::has_root(a, p)) {
                REQUIRE(s.has_value());
                CHECK(mod_floor(*s * *s, pi) == Integer(static_cast<unsigned long>(a)));
                CHECK(*s <= (pi - 1) / 2);
                REQUIRE(su.has_value());
                CHECK(Integer(static_cast<unsigned long>(*su)) == *s);
            } else {
                CHECK(!s.has_value());
                CHECK(!su.has_value());
            }
        }
    }
}

TEST_CASE("crt_merge") {
    ResidueClass r = crt_merge(ResidueClass(7, 15), ResidueClass(3, 7));
    CHECK(r.value == 52);
    CHECK(r.modulus == 105);

    r = crt_merge(ResidueClass(9, 11), ResidueClass(0, 1));
    CHECK(r.value == 9);
    CHECK(r.modulus == 11);

    r = crt_merge(ResidueClass(1, 2), ResidueClass(1, 3));
    CHECK(r.value == 1);
    CHECK(r.modulus == 6);

    CHECK_THROWS_AS(crt_merge(ResidueClass(1, 6), ResidueClass(3, 4)), std::domain_error);
    CHECK_THROWS_AS(crt_merge(ResidueClass(1, 6), ResidueClass(1, 4)), std::domain_error);
}

TEST_CASE("crt_merge associativity on coprime triples") {
    const std::uint64_t mods[] = {5, 7, 8, 9, 11, 13};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k) {
                if (i == j || j == k || i == k) continue;
                std::uint64_t m1 = mods[i], m2 = mods[j], m3 = mods[k];
                if (gcd(Integer(static_cast<unsigned long>(m1)), Integer(static_cast<unsigned long>(m2))) != 1 ||
                    gcd(Integer(static_cast<unsigned long>(m2)), Integer(static_cast<unsigned long>(m3))) != 1 ||
                    gcd(Integer(static_cast<unsigned long>(m1)), Integer(static_cast<unsigned long>(m3))) != 1)
                    continue;
                ResidueClass a(Integer(static_cast<unsigned long>(m1 / 2)), Integer(static_cast<unsigned long>(m1)));
                ResidueClass b(Integer(static_cast<unsigned long>(m2 / 3)), Integer(static_cast<unsigned long>(m2)));
                ResidueClass c(Integer(static_cast<unsigned long>(m3 - 1)), Integer(static_cast<unsigned long>(m3)));
                ResidueClass left = crt_merge(crt_merge(a, b), c);
                ResidueClass right = crt_merge(a, crt_merge(b, c));
                CHECK(left.value == right.value);
                CHECK(left.modulus == right.modulus);
            }
}

TEST_CASE("primorial") {
    CHECK(primorial(7) == 210);
    CHECK(primorial(1) == 1);
    CHECK(primorial(0) == 1);
    CHECK(primorial(2) == 2);
    CHECK(decimal_size(primorial(727)).digits == 301);
    CHECK(decimal_size(primorial(1471)).digits == 616);
    CHECK(decimal_size(primorial(1000)).digits == 416);
}

TEST_CASE("decimal_size exact digit counting") {
    auto ds = decimal_size(999);
    CHECK(ds.digits == 3);
    CHECK(ds.size == doctest::Approx(3 * std::log(10.0)));
    CHECK(decimal_size(1000).digits == 4);
    CHECK(decimal_size(1).digits == 1);
    CHECK_THROWS_AS(decimal_size(0), std::domain_error);

    // m(10^k) = k + 1, sampled up to 10^6
    for (unsigned long k : {0UL, 1UL, 2UL, 5UL, 17UL, 100UL, 1000UL, 100000UL, 1000000UL}) {
        CHECK(decimal_size(pow10(k)).digits == static_cast<long>(k + 1));
        if (k > 0) CHECK(decimal_size(pow10(k) - 1).digits == static_cast<long>(k));
    }

    // s(c) for a 301-digit c
    CHECK(decimal_size(pow10(300)).size == doctest::Approx(693.1).epsilon(0.001));
}

TEST_CASE("integer decimal round-trip") {
    const char* s = "123456789012345678901234567890123456789";
    CHECK(to_decimal(parse_integer(s)) == s);
    CHECK(to_decimal(Integer(-17)) == "-17");
    CHECK_THROWS_AS(parse_integer("12x"), std::invalid_argument);
}

TEST_CASE("u64 helpers match Integer versions") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 97ULL, 1009ULL}) {
        Integer pi(static_cast<unsigned long>(p));
        for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 50); ++a) {
            CHECK(u64ops::legendre(a, p) ==
                  (a % p == 0 ? 0 : legendre(Integer(static_cast<unsigned long>(a)), pi)));
            CHECK(u64ops::powmod(a, 12, p) ==
                  to_u64(mod_pow(Integer(static_cast<unsigned long>(a)), 12, pi)));
        }
    }
}
