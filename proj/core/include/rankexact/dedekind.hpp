#pragma once

#include "rankexact/phase.hpp"

namespace rankexact {

// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 for integer x.
Rational sawtooth(const Rational& x);

// Dedekind sum s(d,c) = sum_{r mod c} ((r/c))((dr/c)), c >= 1, gcd(d,c)=1.
// Euclidean three-term reduction, O(log c) rational operations.
Rational dedekind_sum(const mpz_class& d, const mpz_class& c);

// Definitional O(c) summation; reference implementation the fast path is
// tested against.
Rational dedekind_sum_direct(const mpz_class& d, const mpz_class& c);

} // namespace rankexact
