#pragma once

#include <vector>

#include "rankexact/phase.hpp"

namespace rankexact {

// x_r = (s - sqrt(s^2 - 1/4))/3 with s = 1/2 + r: the root of
// (3/2)x^2 - (1/2+r)x + 1/24 in (0,1/2). Exact quadratic-surd data.
struct XrSurd {
    Rational s;            // 1/2 + r
    Rational discriminant; // s^2 - 1/4
};
XrSurd x_r_surd(long r);
BigFloat x_r_value(long r, const PrecisionConfig& cfg);

// Largest r with x_r > 1/p, decided by the exact sign of delta_{1,p,1,r};
// -1 when no r qualifies (p <= 5).
long max_r(long p);

// Per (l,u,a,r) rational data: delta (Eq 1.10/4.14), the integer m (Eq 1.11),
// the offset t = (a_(u) l - [a_(u) l])/u_(a), membership, and X = ceil(-u_(a) delta).
struct DeltaRecord {
    long l = 0, u = 0, a = 0, r = 0;
    Rational delta;
    mpz_class m_int;
    long t = 0;
    bool in_condition = false;
    long X = 0;
};

// General odd u >= 3 with u ∤ a; the prime case additionally cross-checks the
// simplified -m = (3/2)t^2 + ((1+2r)/2)t (resp. + ((5-2r)/2)t + 1 - r) forms.
DeltaRecord delta_record(long l, long u, long a, long r);

struct ConditionSet {
    long p = 0, a = 0, r = 0;
    std::vector<int> members; // subset of 1..p-1, ascending
    bool contains(int l) const;
};

// ⊳a,r⊲ = { 1 <= l <= p-1 : [a l]/p in (0,x_r) ∪ (1-x_r,1) }, membership
// decided by the exact sign of delta_{l,p,a,r}.
ConditionSet condition_set(long p, long a, long r);

// X_r^{(l)} = ceil(-p*delta_{l,p,1,r}) for l in ⊳r⊲, else 0; index l-1.
std::vector<long> X_vector(long p, long r);

} // namespace rankexact
