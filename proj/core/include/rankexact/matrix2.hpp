#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace rankexact {

// gamma in SL2(Z); ad - bc = 1 enforced on construction.
struct UnimodularMatrix {
    mpz_class a, b, c, d;

    UnimodularMatrix(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_);
    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
    static UnimodularMatrix T(long k = 1) { return {1, k, 0, 1}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }
    // V_p = [[1,0],[p,1]], the lower-triangular generator used for Gamma_0(p) words
    static UnimodularMatrix V(long p, long k = 1) { return {1, 0, mpz_class(p) * k, 1}; }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const;
    UnimodularMatrix inverse() const { return {d, -b, -c, a}; }
    UnimodularMatrix negated() const { return {-a, -b, -c, -d}; }

    bool operator==(const UnimodularMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// Reproducible random elements of Gamma_0(p): bounded words in {T^{+-1}, V_p^{+-1}}
// with optional sign flip; matrix entries capped at `entry_cap`.
class Gamma0Words {
  public:
    Gamma0Words(long p, std::uint64_t seed, mpz_class entry_cap = mpz_class("1000000000000"))
        : p_(p), rng_(seed), cap_(std::move(entry_cap)) {}

    UnimodularMatrix next();

  private:
    long p_;
    std::mt19937_64 rng_;
    mpz_class cap_;
};

} // namespace rankexact
