#include "singmod/mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace singmod::mp {

namespace {
constexpr mpfr_rnd_t rnd = MPFR_RNDN;
}

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(mpfr_prec_t prec, long x)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, rnd);
}

Real::Real(mpfr_prec_t prec, mpz_class const & x)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), rnd);
}

Real::Real(Real const & o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, rnd);
}

Real::Real(Real && o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real & Real::operator=(Real const & o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, rnd);
    }
    return *this;
}

Real & Real::operator=(Real && o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

double Real::log2_abs() const
{
    if (mpfr_zero_p(v_))
        return -std::numeric_limits<double>::infinity();
    long e = 0;
    double const m = mpfr_get_d_2exp(&e, v_, rnd);
    return std::log2(std::abs(m)) + static_cast<double>(e);
}

Real Real::pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
}

Real operator+(Real const & x, Real const & y)
{
    Real r(x.prec());
    mpfr_add(r.get(), x.get(), y.get(), rnd);
    return r;
}

Real operator-(Real const & x, Real const & y)
{
    Real r(x.prec());
    mpfr_sub(r.get(), x.get(), y.get(), rnd);
    return r;
}

Real operator*(Real const & x, Real const & y)
{
    Real r(x.prec());
    mpfr_mul(r.get(), x.get(), y.get(), rnd);
    return r;
}

Real operator/(Real const & x, Real const & y)
{
    Real r(x.prec());
    mpfr_div(r.get(), x.get(), y.get(), rnd);
    return r;
}

Real operator-(Real const & x)
{
    Real r(x.prec());
    mpfr_neg(r.get(), x.get(), rnd);
    return r;
}

Real abs(Real const & x)
{
    Real r(x.prec());
    mpfr_abs(r.get(), x.get(), rnd);
    return r;
}

Real sqrt(Real const & x)
{
    Real r(x.prec());
    mpfr_sqrt(r.get(), x.get(), rnd);
    return r;
}

mpz_class round_to_integer(Real const & x)
{
    Real r(x.prec());
    mpfr_round(r.get(), x.get());
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), r.get(), rnd);
    return z;
}

Real Complex::norm() const
{
    Real r(prec());
    mpfr_sqr(r.get(), re.get(), rnd);
    Real t(prec());
    mpfr_sqr(t.get(), im.get(), rnd);
    mpfr_add(r.get(), r.get(), t.get(), rnd);
    return r;
}

double Complex::log2_magnitude() const
{
    return std::max(re.log2_abs(), im.log2_abs());
}

Complex operator+(Complex const & x, Complex const & y)
{
    return {x.re + y.re, x.im + y.im};
}

Complex operator-(Complex const & x, Complex const & y)
{
    return {x.re - y.re, x.im - y.im};
}

Complex operator*(Complex const & x, Complex const & y)
{
    mpfr_prec_t const p = x.prec();
    Complex r(p);
    Real t(p);
    mpfr_mul(r.re.get(), x.re.get(), y.re.get(), rnd);
    mpfr_mul(t.get(), x.im.get(), y.im.get(), rnd);
    mpfr_sub(r.re.get(), r.re.get(), t.get(), rnd);
    mpfr_mul(r.im.get(), x.re.get(), y.im.get(), rnd);
    mpfr_mul(t.get(), x.im.get(), y.re.get(), rnd);
    mpfr_add(r.im.get(), r.im.get(), t.get(), rnd);
    return r;
}

Complex operator*(Real const & s, Complex const & x)
{
    return {s * x.re, s * x.im};
}

Complex operator*(mpz_class const & s, Complex const & x)
{
    Complex r(x.prec());
    mpfr_mul_z(r.re.get(), x.re.get(), s.get_mpz_t(), rnd);
    mpfr_mul_z(r.im.get(), x.im.get(), s.get_mpz_t(), rnd);
    return r;
}

Complex operator+(Complex const & x, mpz_class const & s)
{
    Complex r = x;
    mpfr_add_z(r.re.get(), r.re.get(), s.get_mpz_t(), rnd);
    return r;
}

Complex operator/(Complex const & x, Complex const & y)
{
    Real const n = y.norm();
    Complex const t = x * y.conj();
    return {t.re / n, t.im / n};
}

Complex sqr(Complex const & x)
{
    mpfr_prec_t const p = x.prec();
    Complex r(p);
    Real t(p);
    mpfr_sqr(r.re.get(), x.re.get(), rnd);
    mpfr_sqr(t.get(), x.im.get(), rnd);
    mpfr_sub(r.re.get(), r.re.get(), t.get(), rnd);
    mpfr_mul(r.im.get(), x.re.get(), x.im.get(), rnd);
    mpfr_mul_2ui(r.im.get(), r.im.get(), 1, rnd);
    return r;
}

Complex pow(Complex const & x, unsigned long k)
{
    Complex result(Real(x.prec(), 1), Real(x.prec(), 0));
    Complex base = x;
    while (k) {
        if (k & 1UL)
            result = result * base;
        k >>= 1;
        if (k)
            base = sqr(base);
    }
    return result;
}

Complex exp_i(Real const & theta)
{
    Complex r(theta.prec());
    mpfr_sin_cos(r.im.get(), r.re.get(), theta.get(), rnd);
    return r;
}

Complex exp(Complex const & z)
{
    Real m(z.prec());
    mpfr_exp(m.get(), z.re.get(), rnd);
    return m * exp_i(z.im);
}

} // namespace singmod::mp
