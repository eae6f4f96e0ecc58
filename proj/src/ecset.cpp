#include "qprime/ecset.hpp"

#include <algorithm>

#include "qprime/primality.hpp"

namespace qprime {

EcParams::EcParams(Integer c_in) : c(std::move(c_in)) {
    if (c < 1) throw std::domain_error("EcParams: c must be >= 1");
    r = mpz_odd_p(c.get_mpz_t()) ? 0 : 1;
    DecimalSize ds = decimal_size(c);
    m_c = ds.digits;
    s_c = ds.size;
}

Integer eval_element(const EcParams& ec, const Integer& j) {
    Integer x = 2 * j + ec.r;
    return x * x + ec.c;
}

int t_p(const Integer& p, const Integer& c) { return legendre(-c, p) + 1; }

std::optional<FirstMultiple> first_multiple(const Integer& A, const EcParams& ec) {
    if (A < 3 || mpz_even_p(A.get_mpz_t()))
        throw std::domain_error("first_multiple: A must be odd and >= 3");

    auto make = [&](Integer x0) {
        Integer val = x0 * x0 + ec.c;
        return FirstMultiple{A, (x0 - ec.r) / 2, x0, val / A};
    };

    if (mpz_probab_prime_p(A.get_mpz_t(), 32) != 0) {
        auto root = sqrt_mod(-ec.c, A);
        if (!root) return std::nullopt;
        // lift each root t, A - t to the parity class of r
        Integer best = -1;
        for (const Integer& t : {*root, mod_floor(A - *root, A)}) {
            Integer x = t;
            if (mod_floor(x, 2) != ec.r) x += A;
            if (best < 0 || x < best) best = x;
        }
        return make(best);
    }

    // composite A: scan one full period X in [0, 2A) of parity r
    for (Integer x = ec.r; x < 2 * A; x += 2)
        if (mpz_divisible_p(Integer(x * x + ec.c).get_mpz_t(), A.get_mpz_t())) return make(x);
    return std::nullopt;
}

std::optional<IndexProgressionPair> index_progressions(const Integer& p, const EcParams& ec) {
    auto fm = first_multiple(p, ec);
    if (!fm) return std::nullopt;
    Integer j0 = mod_floor(fm->j0, p);
    Integer other = mod_floor(p - j0 - ec.r, p);
    bool merged = mpz_divisible_p(ec.c.get_mpz_t(), p.get_mpz_t()) != 0;
    if (other < j0) std::swap(j0, other);
    return IndexProgressionPair{j0, other, p, merged};
}

std::vector<CoprimeResidueForm> coprime_residue_forms(const EcParams& ec,
                                                      const std::vector<Integer>& F) {
    Integer p_f = 1;
    struct Excluded {
        Integer p;
        Integer x1, x2;  // X = +-X0 mod p
    };
    std::vector<Excluded> excl;
    excl.reserve(F.size());
    for (const Integer& p : F) {
        if (t_p(p, ec.c) == 0)
            throw std::domain_error("coprime_residue_forms: prime with t_p = 0 in F");
        auto fm = first_multiple(p, ec);
        Integer x1 = mod_floor(fm->X0, p);
        excl.push_back({p, x1, mod_floor(p - x1, p)});
        p_f *= p;
    }

    std::vector<CoprimeResidueForm> out;
    Integer two_pf = 2 * p_f;
    for (Integer b = ec.r; b < two_pf; b += 2) {
        bool alive = true;
        for (const auto& e : excl) {
            Integer bp = mod_floor(b, e.p);
            if (bp == e.x1 || bp == e.x2) {
                alive = false;
                break;
            }
        }
        if (!alive) continue;
        out.push_back({b, QuadraticForm{4 * p_f * p_f, 4 * b * p_f, b * b + ec.c}});
    }
    return out;
}

mpq_class density_exact(const EcParams& ec, const std::vector<Integer>& F) {
    mpq_class d(1);
    for (const Integer& p : F) {
        mpq_class f(p - t_p(p, ec.c), p);
        f.canonicalize();
        d *= f;
    }
    d.canonicalize();
    return d;
}

}  // namespace qprime
