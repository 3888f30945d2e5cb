#pragma once

/*
 * Weighted traces of singular moduli
 *
 *   t_f(d) = sum_{End(E) contains O_d} 2 f(j(E)) / #Aut(E),
 *
 * computed exactly by two routes that share the evaluation of j but not
 * the aggregation:
 *
 *   numeric: sum f(j(tau_Q)) over the forms of each sub-order directly in
 *            high precision, then round;
 *   exact:   power sums of the roots of the Hilbert class polynomials via
 *            Newton's identities, combined with the coefficients of f.
 *
 * The congruence verifier checks alpha(d) t_{F_m}(p^{2n} d) = 0 mod p^n
 * for primes p not dividing d that split in Q(sqrt(-d)).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "singmod/cmnum.hpp"
#include "singmod/qforms.hpp"
#include "singmod/series.hpp"

namespace singmod {

enum class Strategy { numeric, exact, both };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct PartContribution
{
    SubOrderPart part;
    std::size_t class_number = 0;
    mpq_class contribution;
};

struct TraceResult
{
    Discriminant d;
    JPolynomial f;
    mpq_class value;
    std::vector<PartContribution> parts;
    Strategy strategy = Strategy::both;
    long bits = 0; ///< largest working precision used
};

/// Working precision for summing f over the CM points of discriminant -d'.
long numeric_trace_bits(JPolynomial const & f, Discriminant dprime);

TraceResult trace_numeric(JPolynomial const & f, Discriminant d,
                          PrecisionContext const & ctx);

/// p_0 = deg H, p_1 .. p_kmax: power sums of the roots of a monic H.
std::vector<mpz_class> power_sums_from_poly(IntPolynomial const & H, unsigned kmax);

TraceResult trace_exact(JPolynomial const & f, Discriminant d,
                        PrecisionContext const & ctx);

/// Dispatch on strategy; `both` throws StrategyDisagreement unless the two
/// routes agree on every part.
TraceResult trace(JPolynomial const & f, Discriminant d, Strategy strategy,
                  PrecisionContext const & ctx);

enum class CongruenceStatus { holds, fails, hypothesis_violation, integrality_failure };

std::string_view to_string(CongruenceStatus s);

struct CongruenceReport
{
    std::int64_t d = 0;
    std::uint64_t p = 0;
    unsigned n = 0;
    int m = 0;
    int alpha = 0;
    std::int64_t D = 0; ///< p^(2n) d
    bool computed = false;
    mpq_class trace_value;
    mpz_class integer_value; ///< alpha(d) t_{F_m}(D), when integral
    std::optional<unsigned> valuation; ///< nullopt: zero value (infinite)
    bool holds = false;
    CongruenceStatus status = CongruenceStatus::hypothesis_violation;
    std::vector<std::pair<std::int64_t, std::size_t>> class_numbers; ///< (d', h)
    long bits = 0;
    Strategy strategy = Strategy::both;
    double millis = 0;
};

struct VerifyOptions
{
    Strategy strategy = Strategy::both;
    /// Evaluate the trace even when the hypotheses fail; the row keeps the
    /// hypothesis-violation status.
    bool diagnostics = false;
};

/// Throws InvalidArgument for malformed parameters (d not a discriminant,
/// p not prime, n < 1, m < 1); hypothesis violations are reported in the
/// returned status instead.
CongruenceReport verify_congruence(std::int64_t d, std::uint64_t p, unsigned n, int m,
                                   PrecisionContext const & ctx,
                                   VerifyOptions const & opts = {});

struct GridSpec
{
    std::int64_t dmax = 0;
    std::vector<std::uint64_t> primes;
    unsigned nmax = 0;
    int mmax = 0;
    std::optional<std::int64_t> max_D; ///< skip tuples with p^(2n) d above this
};

/// Rows in (d, prime list order, n, m) order. Only admissible tuples unless
/// opts.diagnostics, which adds the p-not-split rows.
std::vector<CongruenceReport> verify_grid(GridSpec const & grid,
                                          PrecisionContext const & ctx,
                                          VerifyOptions const & opts = {},
                                          unsigned jobs = 1);

} // namespace singmod
