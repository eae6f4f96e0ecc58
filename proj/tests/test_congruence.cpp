#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qprime/congruence.hpp"
#include "qprime/primality.hpp"

using namespace qprime;

static std::vector<Integer> ints(std::initializer_list<unsigned long> xs) {
    std::vector<Integer> v;
    for (unsigned long x : xs) v.emplace_back(x);
    return v;
}

TEST_CASE("residue_sets examples and cardinals") {
    ResidueSets r3 = residue_sets(3);
    CHECK(r3.rq == ints({0, 2}));
    CHECK(r3.nrq == ints({1}));

    ResidueSets r5 = residue_sets(5);
    CHECK(r5.rq == ints({0, 1, 4}));
    CHECK(r5.nrq == ints({2, 3}));

    ResidueSets r7 = residue_sets(7);
    CHECK(r7.rq == ints({0, 3, 5, 6}));
    CHECK(r7.nrq == ints({1, 2, 4}));

    for (std::uint64_t p : odd_primes_up_to(200)) {
        ResidueSets rs = residue_sets(Integer(static_cast<unsigned long>(p)));
        CHECK(rs.rq.size() == (p + 1) / 2);
        CHECK(rs.nrq.size() == (p - 1) / 2);
        CHECK(rs.rq.front() == 0);
        std::set<Integer> all(rs.rq.begin(), rs.rq.end());
        all.insert(rs.nrq.begin(), rs.nrq.end());
        CHECK(all.size() == p);
    }
}

TEST_CASE("solve_step") {
    ResidueClass r = solve_step(ResidueClass(1, 6), ResidueClass(2, 5));
    CHECK(r.value == 7);  // 7 = 1 (mod 6), = 2 (mod 5)
    CHECK(r.modulus == 30);

    r = solve_step(ResidueClass(1, 6), ResidueClass(3, 5));
    CHECK(r.value == 13);

    // d = 0: c = a with y = 0
    r = solve_step(ResidueClass(4, 6), ResidueClass(4, 5));
    CHECK(r.value == 4);

    CHECK_THROWS_AS(solve_step(ResidueClass(1, 6), ResidueClass(1, 3)), std::domain_error);
}

TEST_CASE("batch_solve_step equals mapped solve_step") {
    ResidueClass a(1, 6);
    auto batch = batch_solve_step(a, 5, ints({2, 3}));
    REQUIRE(batch.size() == 2);
    CHECK(batch[0].value == 7);
    CHECK(batch[1].value == 13);

    for (unsigned long av : {1UL, 5UL, 7UL, 11UL}) {
        ResidueClass start(av, 30);
        std::vector<Integer> bs = ints({1, 2, 4, 5, 6});
        auto got = batch_solve_step(start, 7, bs);
        REQUIRE(got.size() == bs.size());
        for (std::size_t i = 0; i < bs.size(); ++i) {
            ResidueClass want = solve_step(start, ResidueClass(bs[i], 7));
            CHECK(got[i].value == want.value);
            CHECK(got[i].modulus == want.modulus);
        }
    }

    CHECK(batch_solve_step(a, 5, {}).empty());

    // singleton batch equals the single solve_step
    auto one = batch_solve_step(a, 5, ints({3}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].value == 13);

    // recursion base: parity class mod 2 against nrq(3) = {1}
    auto base = batch_solve_step(ResidueClass(1, 2), 3, ints({1}));
    REQUIRE(base.size() == 1);
    CHECK(base[0].value == 1);
    CHECK(base[0].modulus == 6);
}

TEST_CASE("build_CF examples") {
    CongruenceFamily f = build_CF(ints({3}), Parity::odd);
    CHECK(f.modulus == 6);
    CHECK(f.members == ints({1}));
    CHECK(f.expected_cardinal == 1);

    f = build_CF(ints({3, 5}), Parity::odd);
    CHECK(f.modulus == 30);
    CHECK(f.members == ints({7, 13}));

    f = build_CF(ints({3, 5}), Parity::even);
    CHECK(f.members == ints({22, 28}));

    CHECK_THROWS_AS(build_CF(ints({5}), Parity::odd), std::invalid_argument);
    CHECK_THROWS_AS(build_CF(ints({3, 7}), Parity::odd), std::invalid_argument);
    CHECK_THROWS_AS(build_CF(ints({3, 3, 5}), Parity::odd), std::invalid_argument);
}

TEST_CASE("build_CF exhaustive correctness for prefixes of {3,5,7,11}") {
    std::vector<std::vector<std::uint64_t>> prefixes = {{3}, {3, 5}, {3, 5, 7}, {3, 5, 7, 11}};
    for (const auto& F : prefixes) {
        std::vector<Integer> Fi;
        Integer two_pf = 2;
        for (std::uint64_t p : F) {
            Fi.emplace_back(static_cast<unsigned long>(p));
            two_pf *= static_cast<unsigned long>(p);
        }
        for (Parity par : {Parity::odd, Parity::even}) {
            CongruenceFamily fam = build_CF(Fi, par);
            CHECK(Integer(static_cast<unsigned long>(fam.members.size())) == fam.expected_cardinal);
            std::set<Integer> members(fam.members.begin(), fam.members.end());
            CHECK(members.size() == fam.members.size());
            for (Integer c = 0; c < two_pf; ++c) {
                bool right_parity = (par == Parity::odd) == (mod_floor(c, 2) == 1);
                bool ok = right_parity && oracle::family_member_ok(c, F);
                CHECK(ok == (members.count(c) > 0));
            }
        }
    }
}

TEST_CASE("parity link (Prop 4.1)") {
    std::vector<std::vector<std::uint64_t>> prefixes = {{3}, {3, 5}, {3, 5, 7}, {3, 5, 7, 11}};
    for (const auto& F : prefixes) {
        std::vector<Integer> Fi;
        for (std::uint64_t p : F) Fi.emplace_back(static_cast<unsigned long>(p));
        CongruenceFamily even = build_CF(Fi, Parity::even);
        CongruenceFamily odd = build_CF(Fi, Parity::odd);

        CongruenceFamily linked = link_parities(even);
        CHECK(linked.parity == Parity::odd);
        CHECK(linked.members == odd.members);
        // and back
        CongruenceFamily back = link_parities(linked);
        CHECK(back.members == even.members);

        // equal sets modulo p_F
        Integer p_f = even.modulus / 2;
        std::set<Integer> em, om;
        for (const Integer& c : even.members) em.insert(mod_floor(c, p_f));
        for (const Integer& c : odd.members) om.insert(mod_floor(c, p_f));
        CHECK(em == om);
    }

    CHECK(link_parities(build_CF(ints({3, 5}), Parity::even)).members == ints({7, 13}));

    CongruenceFamily empty_fam;
    empty_fam.modulus = 6;
    empty_fam.parity = Parity::even;
    empty_fam.expected_cardinal = 0;
    CHECK(link_parities(empty_fam).members.empty());
}

TEST_CASE("build_Ctilde cardinals and q1 = 7 family") {
    CongruenceFamily f7 = build_Ctilde(7, Parity::odd);
    CHECK(f7.modulus == 210);
    CHECK(f7.members == ints({7, 13, 73, 97, 103, 133, 157, 187}));
    CHECK(f7.expected_cardinal == 8);

    CHECK(build_Ctilde(5, Parity::odd).members.size() == 3);
    CHECK(build_Ctilde(3, Parity::even).members.size() == 2);

    for (std::uint64_t q1 : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        Integer q(static_cast<unsigned long>(q1));
        Integer want = (q + 1) / 2;
        for (std::uint64_t p : odd_primes_below(q1)) want *= Integer(static_cast<unsigned long>((p - 1) / 2));
        for (Parity par : {Parity::odd, Parity::even}) {
            CongruenceFamily f = build_Ctilde(q, par);
            CHECK(Integer(static_cast<unsigned long>(f.members.size())) == want);
            CHECK(f.expected_cardinal == want);
        }
    }

    CHECK_THROWS_AS(build_Ctilde(2, Parity::odd), std::invalid_argument);
    CHECK_THROWS_AS(build_Ctilde(9, Parity::odd), std::invalid_argument);
}

TEST_CASE("streaming enumeration matches the exhaustive family") {
    for (std::uint64_t q1 : {5ULL, 7ULL, 13ULL}) {
        Integer q(static_cast<unsigned long>(q1));
        CongruenceFamily fam = build_Ctilde(q, Parity::odd);
        std::set<Integer> got;
        enumerate_ctilde_streaming(q, Parity::odd, 100000, [&](const ResidueClass& rc) {
            CHECK(rc.modulus == fam.modulus);
            got.insert(rc.value);
            return true;
        });
        std::set<Integer> want(fam.members.begin(), fam.members.end());
        CHECK(got == want);
    }

    // first-k mode stops early
    std::size_t seen = 0;
    enumerate_ctilde_streaming(13, Parity::odd, 5, [&](const ResidueClass&) {
        ++seen;
        return true;
    });
    CHECK(seen == 5);
}

TEST_CASE("transfer_first_index") {
    CHECK(transfer_first_index(1, 7) == 2);
    CHECK(transfer_first_index(3, 7) == 0);
    CHECK(transfer_first_index(6, 13) == 0);  // j0 = (q1-1)/2
    for (Integer j0 = 0; j0 < 13; ++j0)
        CHECK(transfer_first_index(transfer_first_index(j0, 13), 13) == j0);
    CHECK_THROWS_AS(transfer_first_index(7, 7), std::domain_error);
}
