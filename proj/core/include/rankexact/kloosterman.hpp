#pragma once

#include <string>
#include <vector>

#include "rankexact/geometry.hpp"
#include "rankexact/multiplier.hpp"
#include "rankexact/phase.hpp"

namespace rankexact {

enum class KloostermanFamily { SInfInf, SZeroInf, BringmannB, BringmannD, ClassicalA, ScalarS };

struct KloostermanValue {
    BigComplex value;
    long modulus = 0; // c or a
    long ell = 0;
    std::size_t term_count = 0;
    KloostermanFamily family = KloostermanFamily::ScalarS;
};

// Generic scalar sum S(m,n,c,nu) = sum_{0<=d<c, (d,c)=1} conj(nu(gamma)) e((m~ a + n~ d)/c)
// with gamma = (a, (ad-1)/c; c, d), a = d^{-1} mod c, m~ = m - alpha_nu.
KloostermanValue scalar_kloosterman(long m, long n, long c, const ScalarMultiplier& nu,
                                    const PrecisionConfig& cfg);

// Rademacher A_c(n) = (1/2) sqrt(c/12) sum_{x mod 24c, x^2 = 1-24n} chi_12(x) e(x/12c).
BigComplex classical_A_c(long c, long n, const PrecisionConfig& cfg);

enum class SInfRoute { Simplified, MuDefinition }; // Eq (5.18) fast path vs Definition 4.3 route

// S_inf_inf^{(l)}(m,n,c,mu_p): phases accumulated exactly per sin-bucket
// L = [a l], each bucket divided by sin(pi L/p) once. conj_mu evaluates the
// weight -1/2 sum for conj(mu_p) (tilde shifts m - 23/24).
KloostermanValue s_inf_inf(long l, long m, long n, long c, long p, const PrecisionConfig& cfg,
                           SInfRoute route = SInfRoute::Simplified, bool conj_mu = false);

enum class SZeroRoute { Simplified, SigmaForm }; // Eq (5.19) vs Eq (5.9)

// S_0inf^{(l)}(X_r^{([a l])}, n, a, mu_p; r); exactly 0 (term_count 0) when
// [a l] is outside the condition set.
KloostermanValue s_zero_inf(long l, long n, long a, long p, long r, const PrecisionConfig& cfg,
                            SZeroRoute route = SZeroRoute::Simplified);

// Bringmann's sums, general odd u.
BigComplex bringmann_B(long l, long u, long c, long n, long m, const PrecisionConfig& cfg);
BigComplex bringmann_D(long l, long u, long a, long n, long m, const PrecisionConfig& cfg);

struct VanishingResult {
    std::string case_id;
    long n = 0, c = 0;
    BigFloat residual;
    BigFloat precision_floor; // 1e3 * term_count * 2^{1-P}
    std::size_t term_count = 0;
    bool below_floor = false;
};

// Theorem 2.3 combinations. case_id in {5-4, 7-5, 5-1, 5-2, 7-0, 7-1.1, 7-1.2,
// 7-2, 7-3.1, 7-3.2, 7-4.1, 7-4.2, 7-6}; n is the progression index (the series
// argument is p*n + k with k fixed by the case). `scrambled` swaps two weights
// as a power check: the residual must then be far above the floor.
VanishingResult vanishing_combination_check(const std::string& case_id, long n, long c,
                                            const PrecisionConfig& cfg, bool scrambled = false);

struct GrowthProfile {
    KloostermanFamily family = KloostermanFamily::SInfInf;
    long p = 0, ell = 0, n = 0;
    long m_or_r = 0;
    std::vector<long> grid;               // increasing moduli bounds
    std::vector<BigComplex> partial_sums; // prefix-consistent
    double fitted_slope = 0.0;            // log|partial| vs log x over the top decade
};

// Partial sums sum_{c<=x} S/c (SInfInf) or sum_{a<=x} S/(a sqrt p) (SZeroInf)
// on the given grid, plus the least-squares slope over x in [x_max/10, x_max].
GrowthProfile growth_profile(KloostermanFamily family, long l, long m_or_r, long n, long p,
                             long x_max, const std::vector<long>& grid,
                             const PrecisionConfig& cfg);

std::vector<long> default_growth_grid(long x_max, int points_per_decade = 16);

} // namespace rankexact
