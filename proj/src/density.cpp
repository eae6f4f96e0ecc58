#include "qprime/density.hpp"

#include <algorithm>
#include <cmath>

namespace qprime {

double hc_product(const Integer& c, std::uint64_t prime_limit,
                  std::vector<std::pair<std::uint64_t, double>>* checkpoints) {
    if (prime_limit < 3) throw std::domain_error("hc_product: prime_limit must be >= 3");
    double h = 1.0;
    std::uint64_t next_decade = 10;
    for (std::uint64_t p : odd_primes_up_to(prime_limit)) {
        if (checkpoints) {
            while (next_decade < prime_limit && p > next_decade) {
                checkpoints->emplace_back(next_decade, h);
                next_decade *= 10;
            }
        }
        std::uint64_t cp = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
        if (cp == 0) continue;  // p | c: factor 1
        int tp = u64ops::legendre(p - cp, p) + 1;  // t_p from legendre(-c, p)
        h *= static_cast<double>(p - tp) / static_cast<double>(p - 1);
    }
    if (checkpoints) checkpoints->emplace_back(prime_limit, h);
    return h;
}

// Survivor mask over indices j in [0, j_max]: marks j whose element
// (2j + r)^2 + c has an odd prime divisor <= sieve_limit, except when the
// element is that prime itself.
static std::vector<char> sieve2_mask(const EcParams& ec, std::uint64_t j_max,
                                     std::uint64_t sieve_limit) {
    std::vector<char> alive(j_max + 1, 1);
    std::uint64_t r = static_cast<std::uint64_t>(ec.r);
    for (std::uint64_t p : odd_primes_up_to(sieve_limit)) {
        std::uint64_t cp = mpz_fdiv_ui(ec.c.get_mpz_t(), static_cast<unsigned long>(p));
        auto root = u64ops::sqrt_mod(cp == 0 ? 0 : p - cp, p);  // X^2 = -c (mod p)
        if (!root) continue;
        for (std::uint64_t x : {*root, (p - *root) % p}) {
            std::uint64_t xl = (x % 2 == r) ? x : x + p;  // lift to parity r
            std::uint64_t j0 = ((xl - r) / 2) % p;
            for (std::uint64_t j = j0; j <= j_max; j += p) {
                if (4 * j * (j + r) + r <= p &&
                    eval_element(ec, Integer(j)) == Integer(static_cast<unsigned long>(p)))
                    continue;  // the element is p itself
                alive[j] = 0;
            }
        }
    }
    return alive;
}

// Primes among indices [j_lo, j_hi] under a precomputed mask.
static std::uint64_t count_window(const EcParams& ec, const std::vector<char>& alive,
                                  std::uint64_t j_lo, std::uint64_t j_hi,
                                  const PrimalityPolicy& policy, const ParallelConfig& par) {
    if (j_hi < j_lo) return 0;
    return chunked_sum(j_lo, j_hi + 1, 512, par, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t j = lo; j < hi; ++j)
            if (alive[j] && is_prime(eval_element(ec, Integer(j)), policy)) ++cnt;
        return cnt;
    });
}

DensityReport count_primes_ec(const Integer& c, std::uint64_t x_max, std::uint64_t checkpoint_step,
                              const PrimalityPolicy& policy, const ParallelConfig& par,
                              std::uint64_t sieve_limit) {
    EcParams ec(c);
    DensityReport rep;
    rep.c = c;
    rep.x_max = x_max;

    std::uint64_t r = static_cast<std::uint64_t>(ec.r);
    if (x_max >= r) {
        std::uint64_t j_max = (x_max - r) / 2;
        std::vector<char> alive = sieve2_mask(ec, j_max, sieve_limit);
        if (checkpoint_step == 0) {
            rep.prime_count = count_window(ec, alive, 0, j_max, policy, par);
        } else {
            std::vector<std::uint64_t> marks;
            for (std::uint64_t X = checkpoint_step; X < x_max; X += checkpoint_step)
                marks.push_back(X);
            marks.push_back(x_max);
            std::uint64_t running = 0;
            bool started = false;
            std::uint64_t prev_j = 0;
            for (std::uint64_t X : marks) {
                if (X >= r) {
                    std::uint64_t j_here = (X - r) / 2;
                    if (!started)
                        running += count_window(ec, alive, 0, j_here, policy, par);
                    else if (j_here > prev_j)
                        running += count_window(ec, alive, prev_j + 1, j_here, policy, par);
                    prev_j = j_here;
                    started = true;
                }
                rep.checkpoints.emplace_back(X, running);
            }
            rep.prime_count = running;
        }
    } else if (checkpoint_step != 0) {
        rep.checkpoints.emplace_back(x_max, 0);
    }

    if (x_max > 0) rep.d_per_x = static_cast<double>(rep.prime_count) / static_cast<double>(x_max);
    std::uint64_t elements = (x_max + 1) / 2;  // ceil(x_max / 2)
    if (elements > 0)
        rep.d_per_element = static_cast<double>(rep.prime_count) / static_cast<double>(elements);
    rep.h_emp = ec.s_c * rep.d_per_x;
    return rep;
}

static std::uint64_t iz_bound(long m_c, double z) {
    if (z < 1.0) throw std::domain_error("I_z: z must be >= 1");
    return static_cast<std::uint64_t>(std::floor(4.0 * static_cast<double>(m_c) / z));
}

static std::uint64_t count_pair_window(const CandidatePair& pair, std::uint64_t x_hi,
                                       const PrimalityPolicy& policy, const ParallelConfig& par,
                                       std::uint64_t sieve_limit) {
    EcParams ec(pair.c);
    std::uint64_t r = static_cast<std::uint64_t>(ec.r);
    if (x_hi < r) return 0;
    std::uint64_t j_max = (x_hi - r) / 2;
    std::vector<char> alive = sieve2_mask(ec, j_max, sieve_limit);
    return count_window(ec, alive, 0, j_max, policy, par);
}

NzStats nz_stats(const std::vector<CandidatePair>& pairs, double z, double h,
                 const PrimalityPolicy& policy, const ParallelConfig& par) {
    if (pairs.empty()) throw std::invalid_argument("nz_stats: empty cohort");
    long m_c = decimal_size(pairs.front().c).digits;
    for (const CandidatePair& p : pairs)
        if (decimal_size(p.c).digits != m_c)
            throw std::invalid_argument("nz_stats: pairs have mixed m_c");

    NzStats st;
    st.z = z;
    st.m_c = m_c;
    st.i_z_bound = iz_bound(m_c, z);
    st.per_pair.reserve(pairs.size());
    for (const CandidatePair& p : pairs)
        st.per_pair.push_back(count_pair_window(p, st.i_z_bound, policy, par, 20000));

    double n = static_cast<double>(pairs.size());
    std::uint64_t ge1 = 0, total = 0;
    std::map<std::uint64_t, std::uint64_t> freq;
    for (std::uint64_t v : st.per_pair) {
        ++freq[v];
        total += v;
        if (v >= 1) ++ge1;
    }
    for (const auto& [count, times] : freq)
        st.distribution[count] = 100.0 * static_cast<double>(times) / n;
    st.mean = static_cast<double>(total) / n;
    st.expected = 4.0 * h / (z * std::log(10.0));
    st.frac_at_least_one = static_cast<double>(ge1) / n;
    return st;
}

std::vector<std::uint64_t> histogram_by_edges(
    const CandidatePair& pair, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
    const PrimalityPolicy& policy, const ParallelConfig& par) {
    std::vector<std::uint64_t> out;
    if (edges.empty()) return out;
    EcParams ec(pair.c);
    std::uint64_t j_max = 0;
    for (const auto& [lo, hi] : edges) j_max = std::max(j_max, hi);
    std::vector<char> alive = sieve2_mask(ec, j_max, 20000);
    for (const auto& [lo, hi] : edges) out.push_back(count_window(ec, alive, lo, hi, policy, par));
    return out;
}

std::vector<std::uint64_t> interval_histogram(const CandidatePair& pair,
                                              std::uint64_t bucket_width_j, std::size_t n_buckets,
                                              const PrimalityPolicy& policy,
                                              const ParallelConfig& par) {
    if (n_buckets == 0) return {};
    if (bucket_width_j < 1)
        throw std::domain_error("interval_histogram: bucket width must be >= 1");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(n_buckets);
    for (std::size_t k = 0; k < n_buckets; ++k)
        edges.emplace_back(k * bucket_width_j, (k + 1) * bucket_width_j - 1);
    return histogram_by_edges(pair, edges, policy, par);
}

std::vector<std::pair<Integer, Integer>> hunt_primes(const CandidatePair& pair, double z,
                                                     std::uint64_t max_results,
                                                     const PrimalityPolicy& policy) {
    std::vector<std::pair<Integer, Integer>> out;
    if (max_results == 0) return out;
    EcParams ec(pair.c);
    std::uint64_t x_hi = iz_bound(ec.m_c, z);
    std::uint64_t r = static_cast<std::uint64_t>(ec.r);
    if (x_hi < r) return out;
    std::uint64_t j_max = (x_hi - r) / 2;
    std::vector<char> alive = sieve2_mask(ec, j_max, 20000);

    PrimalityPolicy recheck = policy;
    recheck.rng_seed = policy.rng_seed ^ 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        if (!alive[j]) continue;
        Integer v = eval_element(ec, Integer(j));
        if (!is_prime(v, policy)) continue;
        if (!is_prime(v, recheck)) throw std::runtime_error("hunt_primes: re-verification disagreed");
        out.emplace_back(Integer(2 * j + r), v);
        if (out.size() >= max_results) break;
    }
    return out;
}

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("power_law_fit: need at least 3 points");
    for (const auto& [x, y] : points)
        if (x <= 0.0 || y <= 0.0)
            throw std::invalid_argument("power_law_fit: points must be positive");

    double n = static_cast<double>(points.size());
    double mx = 0, my = 0;
    for (const auto& [x, y] : points) {
        mx += std::log(x);
        my += std::log(y);
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : points) {
        double dx = std::log(x) - mx, dy = std::log(y) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("power_law_fit: all x equal");

    PowerLawFit fit;
    fit.loglog_b = sxy / sxx;
    fit.loglog_a = std::exp(my - fit.loglog_b * mx);
    fit.loglog_r = syy == 0.0 ? 1.0 : sxy / std::sqrt(sxx * syy);

    auto ssr = [&](double aa, double bb) {
        double s = 0;
        for (const auto& [x, y] : points) {
            double d = y - aa * std::pow(x, bb);
            s += d * d;
        }
        return s;
    };

    // damped Gauss-Newton on sum (y - a x^b)^2, seeded by the log-log fit
    double a = fit.loglog_a, b = fit.loglog_b;
    double cur = ssr(a, b);
    double lambda = 1e-6;
    bool done = false;
    for (int it = 0; it < 200 && !done; ++it) {
        double jaa = 0, jab = 0, jbb = 0, ga = 0, gb = 0;
        for (const auto& [x, y] : points) {
            double f = a * std::pow(x, b);
            double res = y - f;
            double da = f / a;            // x^b
            double db = f * std::log(x);  // a x^b ln x
            jaa += da * da;
            jab += da * db;
            jbb += db * db;
            ga += da * res;
            gb += db * res;
        }
        bool stepped = false;
        for (int tries = 0; tries < 40 && !stepped; ++tries) {
            double d11 = jaa * (1 + lambda), d22 = jbb * (1 + lambda);
            double det = d11 * d22 - jab * jab;
            if (det == 0.0) break;
            double na = a + (ga * d22 - jab * gb) / det;
            double nb = b + (d11 * gb - jab * ga) / det;
            if (na > 0.0 && std::isfinite(na) && std::isfinite(nb)) {
                double ns = ssr(na, nb);
                if (ns <= cur) {
                    done = cur - ns < 1e-14 * (1.0 + cur);
                    a = na;
                    b = nb;
                    cur = ns;
                    lambda = std::max(lambda * 0.25, 1e-12);
                    stepped = true;
                }
            }
            if (!stepped) lambda *= 8.0;
        }
        if (!stepped) break;
    }
    fit.a = a;
    fit.b = b;

    double mean_y = 0;
    for (const auto& [x, y] : points) mean_y += y;
    mean_y /= n;
    double ss_tot = 0;
    for (const auto& [x, y] : points) ss_tot += (y - mean_y) * (y - mean_y);
    fit.r = ss_tot == 0.0 ? 1.0 : std::sqrt(std::max(0.0, 1.0 - ssr(a, b) / ss_tot));
    return fit;
}

YieldEstimate expected_prime_yield(const Integer& q1, long m_c, double h) {
    YieldEstimate ye;
    double acc = std::log10(h) - std::log10(static_cast<double>(m_c) * std::log(10.0));
    acc += std::log10((mpz_get_d(q1.get_mpz_t()) + 1.0) / 2.0);
    for (std::uint64_t p : odd_primes_below(to_u64(q1)))
        acc += std::log10((static_cast<double>(p) - 1.0) / 2.0);
    ye.lower_log10 = acc;
    ye.upper_log10 = acc + static_cast<double>(m_c) / 2.0;
    ye.lower = std::pow(10.0, acc);
    return ye;
}

}  // namespace qprime
