#pragma once

#include <cstdint>
#include <utility>

#include <gmpxx.h>

namespace rankexact {

// Extended Kronecker symbol (a|n), defined for all integers.
int kronecker_symbol(const mpz_class& a, const mpz_class& n);
int kronecker_symbol(long a, long n);

// inv: d^{-1} mod n in [0,n). dprime: the Notation-4.3 companion d'_n with
// d*d' == -1 (mod n) for odd n, (mod 2n) for even n, canonicalized into
// [0,n) resp. [0,2n). n=1 degenerates to (0,0).
struct ModInverses {
    mpz_class inv;
    mpz_class dprime;
};
ModInverses mod_inverse_variants(const mpz_class& d, const mpz_class& n);

long mod_inverse_long(long d, long n); // gcd(d,n)=1, n>=1; result in [0,n)

inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// least non-negative residue
inline long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime(long n);

} // namespace rankexact
