#pragma once

#include <functional>

#include "rankexact/matrix2.hpp"
#include "rankexact/phase.hpp"

namespace rankexact {

// Weight-1/2 eta multiplier on SL2(Z), as an exact phase.
// c>0 rows use e(-1/8) e^{-pi i s(d,c)} e((a+d)/24c); c<0 via nu(g) = i nu(-g);
// c=0 rows are e(b/24) (d=1) and e(-1/4 - b/24) (d=-1).
Phase eta_multiplier(const UnimodularMatrix& g);

// Knopp's case formula, c > 0 only. Must agree with eta_multiplier everywhere.
Phase eta_multiplier_knopp(const UnimodularMatrix& g);

// Theta multiplier (c|d) eps_d^{-1} on Gamma_0(4). Throws NotInGroupError if 4∤c.
Phase theta_multiplier(const UnimodularMatrix& g);

// w_k(g1,g2) = j(g2,z)^k j(g1,g2 z)^k j(g1 g2,z)^{-k}, evaluated numerically at
// z = i*phi and snapped to the nearest rational phase with denominator dividing 8.
// k is given in half-units: k2 = 2k. Throws SnapFailureError when no such
// rational lies within 1e-30.
Phase cocycle_w(int k2, const UnimodularMatrix& g1, const UnimodularMatrix& g2);

// A one-dimensional multiplier handle for scalar Kloosterman sums: exact phase
// plus the cusp parameter alpha in [0,1) with nu(T) = e(-alpha).
struct ScalarMultiplier {
    std::function<Phase(const UnimodularMatrix&)> phase;
    Rational alpha;

    ScalarMultiplier conjugated() const;

    static ScalarMultiplier eta();            // nu_eta, alpha = 23/24
    static ScalarMultiplier eta_conj();       // conj(nu_eta), alpha = 1/24
    // (d|3) * conj(nu_eta), the Theorem-1.2 multiplier on Gamma_0(3); alpha = 1/24
    static ScalarMultiplier mod3();
};

} // namespace rankexact
