#pragma once

#include "nicecurves/chabauty.hpp"
#include "nicecurves/nice_family.hpp"
#include "nicecurves/report.hpp"

namespace nicecurves {

/// Deterministic sample of distinct nice L values via param_L over parameters
/// t of bounded height (seeded PRNG, duplicates and degenerate t skipped).
std::vector<Rational> sample_nice_L(int count, long t_height, uint64_t seed);
/// Deterministic sample of admissible u parameters for the special family.
std::vector<Rational> sample_special_u(int count, long u_height, uint64_t seed);
/// The first `count` squarefree d ordered by (|d|, sign), |d| <= max_abs.
std::vector<Integer> squarefree_d_list(int count, long max_abs);

// Campaigns, one per claim; each returns a machine-checkable report.
VerificationReport campaign_param(uint64_t seed, int round_trips);
VerificationReport campaign_search_Hq(long bound);
VerificationReport campaign_search_H(long bound);
VerificationReport campaign_torsion_classification(int L_samples, long t_height, int d_count, long d_abs,
                                                   uint64_t seed);
VerificationReport campaign_psi3_roots(int samples, long t_height, uint64_t seed);
VerificationReport campaign_infinite_order(int samples, long u_height, uint64_t seed);
VerificationReport campaign_j_square(int samples, long t_height, uint64_t seed);
VerificationReport campaign_jacobian_oracle();
VerificationReport campaign_descent(uint64_t seed, int specializations);
VerificationReport campaign_aux_lemmas();
std::vector<VerificationReport> campaign_chabauty(int64_t max_prime, int precision,
                                                  int64_t forced_prime = 0);

/// Reports for single-shot CLI commands.
VerificationReport torsion_report(const Rational& L, const Integer& d);
VerificationReport twist_report(const Rational& L, const Integer& D);

/// The full verification suite in acceptance order.
std::vector<VerificationReport> run_all(uint64_t seed, int64_t chabauty_max_prime = 50,
                                        int precision = kDefaultPrecision, long search_bound = 1000);

/// CSV rows for parameter sweeps: t, L, W, r, s, torsion_class_d, j_num, j_den.
std::string param_sweep_csv(int count, long t_height, uint64_t seed);

} // namespace nicecurves
