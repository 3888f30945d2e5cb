#pragma once

/*
 * S(k, p, n) = sum over the p^n-th roots of unity x of (x - 1)^k.
 *
 * S is Galois-invariant, hence a rational integer, and it is divisible
 * by p^n for every k >= 0. Three independent routes compute it:
 *
 *   closed form:  p^n sum_{p^n | i} (-1)^(k-i) C(k, i)
 *   reduction:    p^n times the constant term of (X - 1)^k mod X^(p^n) - 1
 *   complex sum:  the defining sum in floating point, rounded
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace singmod {

mpz_class lemma_sum(unsigned k, std::uint64_t p, unsigned n);

mpz_class lemma_sum_by_reduction(unsigned k, std::uint64_t p, unsigned n);

/// Bounds on the complex-sum route; beyond them it is skipped.
struct LemmaBudget
{
    std::uint64_t max_roots = 4096;
    unsigned max_k = 4096;
};

bool oracle_in_budget(unsigned k, std::uint64_t p, unsigned n,
                      LemmaBudget const & budget = {});

/// Rounded complex sum. Throws PrecisionInfeasible outside the budget
/// and RoundingFailure when the sum is not within 1/4 of an integer.
mpz_class lemma_sum_oracle(unsigned k, std::uint64_t p, unsigned n,
                           LemmaBudget const & budget = {});

struct LemmaReport
{
    unsigned k = 0;
    std::uint64_t p = 0;
    unsigned n = 0;
    mpz_class sum;
    std::optional<unsigned> valuation; ///< nullopt for S = 0
    bool holds = false;        ///< v_p(S) >= n
    bool routes_agree = false; ///< every route that ran gave the same S
    bool oracle_used = false;
};

/// Reports for k = 0..kmax and each (p, n), in that nesting order
/// (prime powers outer).
std::vector<LemmaReport> check_lemma(unsigned kmax,
                                     std::vector<std::pair<std::uint64_t, unsigned>> const & pn_list,
                                     LemmaBudget const & budget = {});

} // namespace singmod
