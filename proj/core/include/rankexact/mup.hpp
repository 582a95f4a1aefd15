#pragma once

#include <vector>

#include "rankexact/matrix2.hpp"
#include "rankexact/phase.hpp"

namespace rankexact {

// Scalar transformation phase mu(c,d,l,p) = exp(3 pi i c d l^2/p^2) (-1)^{cl/p} (-1)^{floor(dl/p)}.
// Requires p | c (including c = 0).
Phase mu_scalar(const mpz_class& c, const mpz_class& d, long l, long p);

// mu_p(gamma) as a permutation-with-phase matrix: acting on v by
// (M v)_l = phase(l) * v_{perm(l)}, perm(l) = [d l] mod p, phase(l) =
// conj(nu_eta(gamma)) * mu(c,d,l,p). Exactly one unimodular entry per row/column.
class PermPhaseMatrix {
  public:
    PermPhaseMatrix(long p, std::vector<int> perm, std::vector<Phase> phases);

    long p() const { return p_; }
    int perm(int l) const { return perm_[l - 1]; }       // l in 1..p-1
    const Phase& phase(int l) const { return phases_[l - 1]; }

    static PermPhaseMatrix identity(long p);
    // (A*B) v = A (B v); composite perm = perm_B ∘ perm_A, phase(l) = phase_A(l)*phase_B(perm_A(l))
    PermPhaseMatrix operator*(const PermPhaseMatrix& o) const;
    // inverse = Hermitian adjoint: permutation reversed, phases conjugated
    PermPhaseMatrix inverse() const;

    int perm_sign() const;      // sgn of the permutation via cycle decomposition
    Phase phase_product() const;
    bool is_identity_perm() const;

    bool operator==(const PermPhaseMatrix& o) const {
        return p_ == o.p_ && perm_ == o.perm_ && phases_ == o.phases_;
    }

  private:
    long p_;
    std::vector<int> perm_;
    std::vector<Phase> phases_;
};

// mu_p(gamma) = conj(nu_eta)(gamma) * M_p(gamma) for gamma in Gamma_0(p).
PermPhaseMatrix mu_matrix(const UnimodularMatrix& g, long p);

struct CuspAlpha {
    long p;
    Rational alpha_infty;              // 1/24
    std::vector<Rational> alpha_zero;  // alpha_{+0}^{(l)}, index l-1, each in (0,1)
};

// alpha_{+0}^{(l)} = frac(3 l^2/(2p) + p/24 + l/2); alpha_{+infty} = 1/24.
CuspAlpha cusp_alphas(long p);

} // namespace rankexact
