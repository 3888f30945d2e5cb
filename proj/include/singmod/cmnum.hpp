#pragma once

/*
 * Numerical evaluation of j at CM points and Hilbert class polynomials.
 *
 * j is computed as E_4(q)^3 / Delta(q) with Delta = q prod (1 - q^n)^24,
 * using the pentagonal series for the product and divisor sums for E_4.
 * Both have small coefficients, so a geometric tail bound in |q| decides
 * the truncation. At a reduced form |q| <= exp(-pi sqrt 3).
 *
 * Precision is heuristic (required_bits); the integer rounding of every
 * class-polynomial coefficient is checked against a margin and the whole
 * computation retried at doubled precision on failure.
 */

#include <cstdint>
#include <optional>

#include "singmod/mp.hpp"
#include "singmod/qforms.hpp"
#include "singmod/series.hpp"

namespace singmod {

struct PrecisionContext
{
    /// Working precision override; unset means each computation picks its
    /// own from the discriminant.
    std::optional<long> bits;
    /// log2 of the rounding-acceptance threshold.
    int margin_log2 = -20;
    int max_retries = 3;
    /// Cap on the series truncation length.
    long max_terms = 200000;

    /// Throws InvalidArgument unless bits >= 64 (when set) and
    /// margin_log2 <= -20.
    void validate() const;
};

struct CMPoint
{
    QuadForm form;
    mp::Complex tau; ///< (-b + i sqrt(d')) / (2a)
};

CMPoint cm_point(QuadForm const & form, mpfr_prec_t prec);

/// ceil((pi sqrt(d') / ln 2) sum_Q 1/a_Q) + 64 + 10 h(-d').
long required_bits(Discriminant dprime);

/// Least N whose tail bound for the E_4 and eta series at |q| = 2^log2_q
/// is below 2^-(bits + 8). Throws PrecisionInfeasible above max_terms.
long truncation_length(double log2_q, long bits, long max_terms);

/// j(tau) for Im tau > 0, relative error about 2^-bits.
mp::Complex eval_j_at(mp::Complex const & tau, long bits, long max_terms = 200000);

/// eta(tau) = exp(2 pi i tau / 24) prod (1 - q^n).
mp::Complex eval_eta_at(mp::Complex const & tau, long bits, long max_terms = 200000);

/// j at the CM point of a reduced form. Uses ctx.bits when set, otherwise
/// required_bits of the form's discriminant.
mp::Complex eval_j(QuadForm const & form, PrecisionContext const & ctx);

/// f(j(tau)).
mp::Complex eval_poly_on_j(JPolynomial const & f, mp::Complex const & tau,
                           long bits, long max_terms = 200000);

/// sum over ad = m, 0 <= b < d of (j - 744)((a tau + b) / d).
mp::Complex hecke_coset_sum(int m, mp::Complex const & tau, long bits,
                            long max_terms = 200000);

/// Nearest integer to x, or RoundingFailure unless |x - n| < 2^margin_log2.
mpz_class round_checked(mp::Real const & x, int margin_log2);

struct HilbertResult
{
    IntPolynomial poly;
    long bits = 0; ///< precision of the accepted attempt
    /// log2 of the largest |Re c - round(Re c)| over the coefficients
    double max_distance_log2 = 0;
    /// log2 of the largest |Im c|
    double max_imag_log2 = 0;
};

/// H_{d'}(X) = prod_Q (X - j(tau_Q)). Results are memoised per
/// (d', ctx); throws RoundingFailure after ctx.max_retries doublings.
HilbertResult hilbert_class_poly(Discriminant dprime, PrecisionContext const & ctx);

} // namespace singmod
