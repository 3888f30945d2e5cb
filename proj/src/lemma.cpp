#include "singmod/lemma.hpp"

#include <cmath>

#include "singmod/arith.hpp"
#include "singmod/errors.hpp"
#include "singmod/mp.hpp"

namespace singmod {

namespace {

void check_args(std::uint64_t p, unsigned n)
{
    if (!is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    (void)checked_pow(p, n);
}

} // namespace

mpz_class lemma_sum(unsigned k, std::uint64_t p, unsigned n)
{
    check_args(p, n);
    std::uint64_t const q = checked_pow(p, n);
    mpz_class s = 0;
    mpz_class binom;
    for (std::uint64_t i = 0; i <= k; i += q) {
        mpz_bin_uiui(binom.get_mpz_t(), k, i);
        if ((k - i) % 2)
            s -= binom;
        else
            s += binom;
    }
    return s * static_cast<unsigned long>(q);
}

mpz_class lemma_sum_by_reduction(unsigned k, std::uint64_t p, unsigned n)
{
    check_args(p, n);
    std::uint64_t const q = checked_pow(p, n);
    // coefficients of (X - 1)^i mod X^q - 1, indexed by exponent mod q
    std::vector<mpz_class> c(q, 0);
    c[0] = 1;
    std::vector<mpz_class> next(q);
    for (unsigned i = 0; i < k; ++i) {
        for (std::uint64_t e = 0; e < q; ++e)
            next[e] = c[(e + q - 1) % q] - c[e];
        std::swap(c, next);
    }
    return c[0] * static_cast<unsigned long>(q);
}

bool oracle_in_budget(unsigned k, std::uint64_t p, unsigned n, LemmaBudget const & budget)
{
    if (k > budget.max_k)
        return false;
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > budget.max_roots)
            return false;
    }
    return true;
}

mpz_class lemma_sum_oracle(unsigned k, std::uint64_t p, unsigned n,
                           LemmaBudget const & budget)
{
    check_args(p, n);
    if (!oracle_in_budget(k, p, n, budget))
        throw PrecisionInfeasible("complex-sum oracle outside its budget");
    std::uint64_t const q = checked_pow(p, n);

    // terms have modulus at most 2^k; keep 64 bits below the unit
    mpfr_prec_t const prec = static_cast<mpfr_prec_t>(k)
                             + static_cast<mpfr_prec_t>(std::ceil(std::log2(q + 1))) + 64;
    using mp::Complex;
    using mp::Real;
    Real const step = Real(prec, 2) * Real::pi(prec) / Real(prec, static_cast<long>(q));
    Complex sum(prec);
    for (std::uint64_t i = 0; i < q; ++i) {
        Complex x = mp::exp_i(step * Real(prec, static_cast<long>(i)));
        mpfr_sub_ui(x.re.get(), x.re.get(), 1, MPFR_RNDN);
        sum = sum + mp::pow(x, k);
    }
    if (sum.im.log2_abs() >= -2)
        throw RoundingFailure("complex lemma sum has a non-negligible imaginary part");
    mpz_class const r = mp::round_to_integer(sum.re);
    if (mp::abs(sum.re - Real(prec, r)).log2_abs() >= -2)
        throw RoundingFailure("complex lemma sum is not near an integer");
    return r;
}

std::vector<LemmaReport> check_lemma(unsigned kmax,
                                     std::vector<std::pair<std::uint64_t, unsigned>> const & pn_list,
                                     LemmaBudget const & budget)
{
    std::vector<LemmaReport> out;
    for (auto [p, n] : pn_list) {
        check_args(p, n);
        for (unsigned k = 0; k <= kmax; ++k) {
            LemmaReport r;
            r.k = k;
            r.p = p;
            r.n = n;
            r.sum = lemma_sum(k, p, n);
            r.routes_agree = lemma_sum_by_reduction(k, p, n) == r.sum;
            if (oracle_in_budget(k, p, n, budget)) {
                r.oracle_used = true;
                r.routes_agree = r.routes_agree && lemma_sum_oracle(k, p, n, budget) == r.sum;
            }
            r.valuation = valuation(r.sum, p);
            r.holds = !r.valuation || *r.valuation >= n;
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace singmod
