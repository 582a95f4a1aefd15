#pragma once

#include <map>
#include <string>
#include <vector>

#include "rankexact/phase.hpp"

namespace rankexact {

// p(0..n_max) by the pentagonal-number recurrence.
std::vector<mpz_class> partition_numbers(long n_max);

// N(m,n) for 0 <= n <= n_max, stored for m >= 0 (N(-m,n) = N(m,n)).
// Built once by coefficient extraction from the double series
//   R(w;q) = 1 + sum_{j>=1} q^{j^2} / ((wq;q)_j (w^{-1}q;q)_j),
// coefficients in w kept as integer Laurent slices per q-power.
class RankTable {
  public:
    explicit RankTable(long n_max);

    long n_max() const { return n_max_; }
    const mpz_class& count(long m, long n) const; // N(m,n), any sign of m
    const mpz_class& partition(long n) const { return pn_[n]; }

    // sum over m ≡ a (mod b) of N(m,n)
    mpz_class rank_mod_count(long a, long b, long n) const;
    // counts per residue class t = 0..b-1 at fixed n
    std::vector<mpz_class> residue_counts(long b, long n) const;

  private:
    long n_max_;
    std::vector<std::vector<mpz_class>> rows_; // rows_[n][m], 0 <= m <= n
    std::vector<mpz_class> pn_;
    mpz_class zero_;
};

// A(l/b;n) = sum_m N(m,n) cos(2 pi l m / b) at working precision, plus the
// exact Eq-(1.7) identity b*N(a,b;n) = p(n) + sum_j zeta^{-aj} A(j/b;n),
// which reduces over residue counts to an integer identity checked exactly.
BigFloat coefficient_oracle(long l, long b, long n, const RankTable& tbl,
                            const PrecisionConfig& cfg);

// Exact small-n oracle: N(m,n) by explicit partition enumeration (n <= ~20).
mpz_class rank_count_by_enumeration(long m, long n);

// Finitely supported q-series with exponents in (1/u)Z - 1/24-style rational
// offsets; used for the leading expansion of M(l/p;z).
struct FracQSeries {
    long base_denominator = 1;
    Rational truncation_order;                 // coefficients kept for exponent < order
    std::map<Rational, mpz_class> coefficients; // exponent -> coefficient
};

// Leading Fourier expansion of M(l/p;z) up to q^order (order >= 1/2 required),
// computed from the defining double series. The Lemma-5.1 shape
// sum_{T=0}^{floor(p/2l')} q^{T l'/p} with l' = min(l, p-l) is verified internally.
FracQSeries mock_M_leading_terms(long l, long p, const Rational& order);

struct DysonReport {
    std::string identity;
    long n_max = 0;
    std::vector<long> tested_indices;
    bool all_pass = true;
    std::vector<long> failures;
};

// Exact combinatorial verification of an Atkin--Swinnerton-Dyer identity for
// all progression indices <= n_max. identity_id in {5-1,5-2,5-4,7-0,...,7-6}.
DysonReport dyson_identity_check(const std::string& identity_id, long n_max,
                                 const RankTable& tbl);

} // namespace rankexact
