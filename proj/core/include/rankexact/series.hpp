#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankexact/partition.hpp"
#include "rankexact/phase.hpp"

namespace rankexact {

enum class BesselKind { I, J };

// I_{1/2}(z) = sqrt(2/(pi z)) sinh z ; J_{1/2}(z) = sqrt(2/(pi z)) sin z. z > 0.
BigFloat bessel_half(BesselKind kind, const BigFloat& z, const PrecisionConfig& cfg);

struct TracePoint {
    long bound = 0; // truncation bound after which the partial sum was recorded
    double re = 0.0;
    double im = 0.0;
};

// Universal output record of the series evaluators.
struct SeriesReport {
    std::string target;
    std::vector<std::pair<std::string, std::string>> params;
    long c_max = 0, a_max = 0, r_max = -1;
    std::vector<TracePoint> trace;
    BigComplex value;
    bool has_nearest_integer = false;
    mpz_class nearest_integer;
    double margin = 0.0; // distance to nearest integer
    std::optional<double> oracle;
    std::optional<double> oracle_gap;
    long precision_bits = 256;
    SummationMode summation_mode = SummationMode::SequentialAscending;
    double elapsed_ms = 0.0;
    bool converged = true; // margin < 0.4 when integer rounding was requested
};

// Rademacher's exact formula for p(n); the d/dn derivative is expanded in
// closed form. Rounds when margin < 0.4, else the report carries converged=false.
SeriesReport rademacher_p(long n, long c_max, const PrecisionConfig& cfg);

// Theorem 1.1 series for A(1/2;n); oracle comparison filled from tbl when given.
SeriesReport andrews_dragonette(long n, long c_max, const PrecisionConfig& cfg,
                                const RankTable* tbl = nullptr);

// Theorem 1.2 series for A(1/3;n).
SeriesReport mod3_series(long n, long c_max, const PrecisionConfig& cfg,
                         const RankTable* tbl = nullptr);

// Eq (1.13), both cusp sums. For p=5 the 0-cusp sum is structurally empty;
// for p=7 it runs over [a l] in {1,6} with delta = 1/1176 (Corollary 2.2) —
// both verified structurally on every call.
SeriesReport main_formula(long l, long p, long n, long c_max, long a_max,
                          const PrecisionConfig& cfg, const RankTable* tbl = nullptr);

// Theorem 1.3 with the paper's sqrt(n) truncation, general odd u.
SeriesReport bringmann_truncated(long l, long u, long n, const PrecisionConfig& cfg,
                                 const RankTable* tbl = nullptr);

struct DysonAnalyticReport {
    long p = 0, k = 0;
    long n_max = 0;
    long c_max = 0, a_max = 0;
    double max_spread = 0.0; // worst |N_i - N_j| over the identity's groups
    bool pass = false;
    std::vector<long> tested_indices;
};

// Corollary 2.4: reconstruct N(a,p;pn+k) from Eq (1.7) + Eq (1.13) series
// values and confirm the Dyson identity within tolerance `tol`.
DysonAnalyticReport dyson_via_kloosterman(long p, long k, long n_max, double tol,
                                          const PrecisionConfig& cfg, const RankTable& tbl);

long default_cmax(long p, long n); // max(20p, ceil(10 sqrt(24 n))) rounded up to p | c_max
} // namespace rankexact
