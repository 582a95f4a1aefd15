#pragma once

#include <gmpxx.h>

#include <string>

#include "rankexact/precision.hpp"

namespace rankexact {

// Exact scalars: GMP rationals, always canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// floor(q) as an integer
mpz_class rational_floor(const Rational& q);
mpz_class rational_ceil(const Rational& q);
// q - floor(q), in [0,1)
Rational rational_frac(const Rational& q);

// Exact rational theta in [0,1) representing the unit complex number
// e(theta) = exp(2*pi*i*theta). Products multiply values, i.e. add thetas mod 1.
class Phase {
  public:
    Phase() : theta_(0) {}
    // reduces theta mod 1 into [0,1)
    static Phase of(const Rational& theta) { return Phase(rational_frac(theta)); }
    static Phase of(long num, long den) { return of(make_rational(num, den)); }
    static Phase one() { return Phase(); }
    static Phase minus_one() { return of(1, 2); }

    const Rational& theta() const { return theta_; }

    friend Phase operator*(const Phase& a, const Phase& b) {
        return Phase::of(a.theta_ + b.theta_);
    }
    Phase& operator*=(const Phase& o) {
        theta_ = rational_frac(theta_ + o.theta_);
        return *this;
    }
    // conjugate = (1 - theta) mod 1
    Phase conj() const { return Phase::of(-theta_); }
    Phase pow(long k) const { return Phase::of(theta_ * k); }

    bool operator==(const Phase& o) const { return theta_ == o.theta_; }
    bool operator!=(const Phase& o) const { return theta_ != o.theta_; }

    // cos(2*pi*theta) + i*sin(2*pi*theta) at working precision
    BigComplex value(const PrecisionConfig& cfg) const;

    std::string str() const { return theta_.get_str(); }

  private:
    explicit Phase(Rational t) : theta_(std::move(t)) {}
    Rational theta_;
};

} // namespace rankexact
