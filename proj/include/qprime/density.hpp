#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qprime/generator.hpp"
#include "qprime/parallel.hpp"
#include "qprime/primality.hpp"

namespace qprime {

/// Prime counting result over X in [0, X_max] of parity r. Both density
/// conventions are reported: d_per_x = count / X_max (the one h_emp uses,
/// h_emp = s(c) * d_per_x) and d_per_element = count / ceil(X_max / 2).
struct DensityReport {
    Integer c;
    std::uint64_t x_max = 0;
    std::uint64_t prime_count = 0;
    double d_per_x = 0.0;
    double d_per_element = 0.0;
    double h_emp = 0.0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;  // (X, cumulative count)
};

/// Per-pair prime counts over the window I_z = [0, floor(4 m_c / z)].
struct NzStats {
    double z = 1.0;
    long m_c = 0;
    std::uint64_t i_z_bound = 0;
    std::vector<std::uint64_t> per_pair;
    std::map<std::uint64_t, double> distribution;  // count -> percent of pairs
    double mean = 0.0;
    double expected = 0.0;  // 4 h / (z ln 10)
    double frac_at_least_one = 0.0;
};

/// Power-law fit y = a x^b. loglog_* is the linearized least-squares seed
/// (slope/intercept of ln y on ln x); a and b refine it by damped
/// Gauss-Newton on sum (y - a x^b)^2, and r is reported in y-space.
struct PowerLawFit {
    double a = 0.0;
    double b = 0.0;
    double r = 0.0;
    double loglog_b = 0.0;
    double loglog_a = 0.0;
    double loglog_r = 0.0;
};

struct YieldEstimate {
    double lower_log10 = 0.0;
    double upper_log10 = 0.0;
    double lower = 0.0;  // 10^lower_log10 (inf when it overflows)
};

/// Truncated product of (p - t_p)/(p - 1) over odd primes p <= prime_limit,
/// ascending, skipping p | c. Optional checkpoints collect the running
/// value at each power of ten.
double hc_product(const Integer& c, std::uint64_t prime_limit,
                  std::vector<std::pair<std::uint64_t, double>>* checkpoints = nullptr);

/// Counts primes among {X^2 + c : X = r (mod 2), 0 <= X <= X_max} with a
/// divisor-progression presieve up to sieve_limit, then the policy test on
/// survivors. Checkpoints at multiples of checkpoint_step (0 = none).
DensityReport count_primes_ec(const Integer& c, std::uint64_t x_max, std::uint64_t checkpoint_step,
                              const PrimalityPolicy& policy = {}, const ParallelConfig& par = {},
                              std::uint64_t sieve_limit = 20000);

/// N_z statistics over a cohort of pairs sharing m_c. h is used for the
/// expected value 4h/(z ln10); pass the product estimate (or a measured h).
NzStats nz_stats(const std::vector<CandidatePair>& pairs, double z, double h,
                 const PrimalityPolicy& policy = {}, const ParallelConfig& par = {});

/// Prime counts of eval_element(j) over consecutive j-buckets
/// [0, w-1], [w, 2w-1], ...
std::vector<std::uint64_t> interval_histogram(const CandidatePair& pair,
                                              std::uint64_t bucket_width_j, std::size_t n_buckets,
                                              const PrimalityPolicy& policy = {},
                                              const ParallelConfig& par = {});

/// Same counts over explicit inclusive j-ranges (for uneven layouts).
std::vector<std::uint64_t> histogram_by_edges(
    const CandidatePair& pair, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
    const PrimalityPolicy& policy = {}, const ParallelConfig& par = {});

/// Primes X^2 + c for X in I_z of parity r, ascending, at most max_results;
/// every hit re-verified under a reseeded policy before being returned.
std::vector<std::pair<Integer, Integer>> hunt_primes(const CandidatePair& pair, double z,
                                                     std::uint64_t max_results,
                                                     const PrimalityPolicy& policy = {});

PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

/// Bounds on the prime yield of the whole congruence family at (q1, m_c):
/// lower = h/(m_c ln10) * (q1+1)/2 * prod (p-1)/2 in log10 form; the upper
/// bound adds m_c/2 to the log10.
YieldEstimate expected_prime_yield(const Integer& q1, long m_c, double h);

}  // namespace qprime
