#pragma once

/*
 * Minimal RAII wrappers over MPFR: a real number with its own precision
 * and a complex number built from two of them. All results are rounded
 * to nearest and take the precision of the left operand.
 */

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace singmod::mp {

class Real
{
  public:
    explicit Real(mpfr_prec_t prec);
    Real(mpfr_prec_t prec, long x);
    Real(mpfr_prec_t prec, mpz_class const & x);
    Real(Real const & o);
    Real(Real && o) noexcept;
    Real & operator=(Real const & o);
    Real & operator=(Real && o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log2 |x|, -infinity for zero.
    double log2_abs() const;

    static Real pi(mpfr_prec_t prec);

  private:
    mpfr_t v_;
};

Real operator+(Real const & x, Real const & y);
Real operator-(Real const & x, Real const & y);
Real operator*(Real const & x, Real const & y);
Real operator/(Real const & x, Real const & y);
Real operator-(Real const & x);
Real abs(Real const & x);
Real sqrt(Real const & x);

/// Nearest integer (ties away from zero).
mpz_class round_to_integer(Real const & x);

struct Complex
{
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec)
        : re(prec)
        , im(prec)
    {
    }
    Complex(Real r, Real i)
        : re(std::move(r))
        , im(std::move(i))
    {
    }

    mpfr_prec_t prec() const { return re.prec(); }
    Complex conj() const { return {re, -im}; }
    /// |z|^2
    Real norm() const;
    /// max(|re|, |im|) as a log2, -infinity for zero
    double log2_magnitude() const;
};

Complex operator+(Complex const & x, Complex const & y);
Complex operator-(Complex const & x, Complex const & y);
Complex operator*(Complex const & x, Complex const & y);
Complex operator*(Real const & s, Complex const & x);
Complex operator*(mpz_class const & s, Complex const & x);
Complex operator/(Complex const & x, Complex const & y);
Complex operator+(Complex const & x, mpz_class const & s);
Complex sqr(Complex const & x);
Complex pow(Complex const & x, unsigned long k);

/// exp(i theta)
Complex exp_i(Real const & theta);
/// exp(z)
Complex exp(Complex const & z);

} // namespace singmod::mp
