#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace singmod {

/// Dense polynomial with arbitrary-precision integer coefficients,
/// stored in increasing degree. The zero polynomial has no coefficients.
class IntPolynomial
{
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(unsigned degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::vector<mpz_class> const & coeffs() const { return coeffs_; }
    mpz_class coeff(unsigned k) const;

    mpz_class operator()(mpz_class const & x) const;

    friend IntPolynomial operator+(IntPolynomial const & f, IntPolynomial const & g);
    friend IntPolynomial operator-(IntPolynomial const & f, IntPolynomial const & g);
    friend IntPolynomial operator*(mpz_class const & c, IntPolynomial const & f);
    friend IntPolynomial operator*(IntPolynomial const & f, IntPolynomial const & g);

    bool operator==(IntPolynomial const & o) const { return coeffs_ == o.coeffs_; }

    /// Human-readable form in the variable `var`, highest degree first,
    /// e.g. "X^2 - 1488*X + 159768".
    std::string to_string(char const * var = "X") const;

  private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

std::ostream & operator<<(std::ostream & o, IntPolynomial const & f);

/// An element f of Z[j], evaluated on j-invariants.
using JPolynomial = IntPolynomial;

/*
 * Truncated Laurent series in q with integer coefficients:
 *
 *   sum_{e = lead}^{order} c_e q^e + O(q^{order+1})
 *
 * Every coefficient with exponent <= order() is exact; arithmetic shrinks
 * order() to whatever the operands determine.
 */
class LaurentSeries
{
  public:
    /// Coefficients for exponents lead, lead+1, ...; must be non-empty.
    LaurentSeries(long lead, std::vector<mpz_class> coeffs);

    /// The constant c, known through q^order.
    static LaurentSeries constant(mpz_class const & c, long order);

    long lead_exponent() const { return lead_; }
    long order() const { return lead_ + static_cast<long>(coeffs_.size()) - 1; }
    std::vector<mpz_class> const & coeffs() const { return coeffs_; }

    /// Coefficient of q^e; zero below the lead exponent. Throws
    /// std::out_of_range above order().
    mpz_class const & coeff(long e) const;

    /// Drop coefficients above q^order.
    LaurentSeries truncated(long order) const;

    /// Multiply by q^k.
    LaurentSeries shifted(long k) const;

    /// Lowest exponent with a nonzero coefficient, or order()+1 if none.
    long valuation() const;

    /// Reciprocal; the first nonzero coefficient must be +1 or -1.
    LaurentSeries inverse() const;

    LaurentSeries pow(unsigned k) const;

    friend LaurentSeries operator+(LaurentSeries const & x, LaurentSeries const & y);
    friend LaurentSeries operator-(LaurentSeries const & x, LaurentSeries const & y);
    friend LaurentSeries operator*(LaurentSeries const & x, LaurentSeries const & y);
    friend LaurentSeries operator*(mpz_class const & c, LaurentSeries const & x);
    friend LaurentSeries operator/(LaurentSeries const & x, LaurentSeries const & y);

    bool operator==(LaurentSeries const & o) const = default;

  private:
    long lead_;
    std::vector<mpz_class> coeffs_;
};

std::ostream & operator<<(std::ostream & o, LaurentSeries const & s);

} // namespace singmod
