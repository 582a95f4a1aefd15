#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rankexact {

enum class SummationMode { SequentialAscending, DeterministicTree };

// Fixed for the lifetime of a computation and recorded in every report.
struct PrecisionConfig {
    long working_bits = 256;
    SummationMode summation_mode = SummationMode::SequentialAscending;
    int threads = 1;
};

// Arbitrary-precision real, thin RAII wrapper over mpfr_t.
// Binary operations evaluate at the larger operand precision, round-to-nearest.
class BigFloat {
  public:
    explicit BigFloat(long prec = 256) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(long x, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(double x, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const mpq_class& q, long prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const mpz_class& z, long prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, o.prec()); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static BigFloat pi(long prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Decimal string with `digits` significant digits (default ~ full precision).
    std::string str(int digits = 0) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const { BigFloat r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  private:
    mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sinh(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
// x^(1/4) for x > 0
BigFloat quartic_root(const BigFloat& x);
// nearest integer and |x - nearest|
mpz_class round_to_integer(const BigFloat& x);

class BigComplex {
  public:
    explicit BigComplex(long prec = 256) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    BigFloat& re() { return re_; }
    BigFloat& im() { return im_; }
    long prec() const { return std::max(re_.prec(), im_.prec()); }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigFloat abs() const { return rankexact::sqrt(re_ * re_ + im_ * im_); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
        return BigComplex(a * b.re_, a * b.im_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigFloat& b) {
        return BigComplex(a.re_ / b, a.im_ / b);
    }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex& operator+=(const BigComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }

  private:
    BigFloat re_, im_;
};

// Sums term(i) for i in [0, count) under the configured mode. The tree mode
// splits ranges at midpoints, so the reduction shape (and the rounded result)
// is independent of thread count.
BigComplex reduce_terms(std::size_t count, const std::function<BigComplex(std::size_t)>& term,
                        const PrecisionConfig& cfg);

} // namespace rankexact
