#include "singmod/trace.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "singmod/arith.hpp"
#include "singmod/errors.hpp"
#include "singmod/qseries.hpp"

namespace singmod {

using mp::Complex;
using mp::Real;

std::string_view to_string(Strategy s)
{
    switch (s) {
    case Strategy::numeric:
        return "numeric";
    case Strategy::exact:
        return "exact";
    case Strategy::both:
        return "both";
    }
    return "?";
}

Strategy parse_strategy(std::string_view s)
{
    if (s == "numeric")
        return Strategy::numeric;
    if (s == "exact")
        return Strategy::exact;
    if (s == "both")
        return Strategy::both;
    throw InvalidArgument("unknown strategy '" + std::string(s) + "'");
}

std::string_view to_string(CongruenceStatus s)
{
    switch (s) {
    case CongruenceStatus::holds:
        return "holds";
    case CongruenceStatus::fails:
        return "fails";
    case CongruenceStatus::hypothesis_violation:
        return "hypothesis-violation";
    case CongruenceStatus::integrality_failure:
        return "integrality-failure";
    }
    return "?";
}

long numeric_trace_bits(JPolynomial const & f, Discriminant dprime)
{
    // |j(tau_Q)| <= exp(pi sqrt(d') / a) + 2100 for reduced Q
    double const log2_j = std::max(std::numbers::pi
                                           * std::sqrt(static_cast<double>(dprime.value()))
                                           / std::numbers::ln2,
                                   12.0)
                          + 1;
    double log2_f = 0;
    {
        mpz_class s = 1;
        for (auto const & c : f.coeffs())
            s += abs(c);
        log2_f = static_cast<double>(mpz_sizeinbase(s.get_mpz_t(), 2));
    }
    double const h = static_cast<double>(class_number(dprime));
    double const need = log2_f + std::max(f.degree(), 0) * log2_j + std::log2(h + 1);
    return std::max(64L, static_cast<long>(std::ceil(need)) + 64);
}

namespace {

mpz_class numeric_root_sum(JPolynomial const & f, Discriminant dprime, long bits,
                           PrecisionContext const & ctx)
{
    PrecisionContext at = ctx;
    at.bits = bits;
    Complex sum(bits);
    for (auto const & form : reduced_forms(dprime)) {
        Complex const j = eval_j(form, at);
        Complex v(j.prec());
        for (int k = f.degree(); k >= 0; --k)
            v = v * j + f.coeffs()[static_cast<std::size_t>(k)];
        sum = sum + v;
    }
    if (sum.im.log2_abs() >= ctx.margin_log2 + 1)
        throw RoundingFailure("imaginary part of a trace sum is not negligible");
    return round_checked(sum.re, ctx.margin_log2);
}

mpq_class weighted(mpz_class const & root_sum, int weight)
{
    mpq_class r(2 * root_sum, weight);
    r.canonicalize();
    return r;
}

} // namespace

TraceResult trace_numeric(JPolynomial const & f, Discriminant d,
                          PrecisionContext const & ctx)
{
    ctx.validate();
    TraceResult res{d, f, 0, {}, Strategy::numeric, 0};
    for (auto const & part : suborder_decomposition(d)) {
        long bits = ctx.bits ? *ctx.bits : numeric_trace_bits(f, part.dprime);
        mpz_class root_sum;
        for (int attempt = 0;; ++attempt) {
            try {
                root_sum = numeric_root_sum(f, part.dprime, bits, ctx);
                break;
            } catch (RoundingFailure const &) {
                if (attempt >= ctx.max_retries)
                    throw;
                bits *= 2;
            }
        }
        res.bits = std::max(res.bits, bits);
        mpq_class const c = weighted(root_sum, part.weight);
        res.parts.push_back({part, class_number(part.dprime), c});
        res.value += c;
    }
    return res;
}

std::vector<mpz_class> power_sums_from_poly(IntPolynomial const & H, unsigned kmax)
{
    if (!H.is_monic())
        throw InvalidArgument("power sums need a monic polynomial");
    auto const h = static_cast<unsigned>(H.degree());
    // elementary symmetric functions e_i = (-1)^i [X^(h-i)] H
    std::vector<mpz_class> e(h + 1);
    for (unsigned i = 0; i <= h; ++i)
        e[i] = (i % 2 ? -1 : 1) * H.coeff(h - i);

    std::vector<mpz_class> p(kmax + 1, 0);
    p[0] = h;
    for (unsigned k = 1; k <= kmax; ++k) {
        mpz_class s = 0;
        for (unsigned i = 1; i < k && i <= h; ++i) {
            if (i % 2)
                s += e[i] * p[k - i];
            else
                s -= e[i] * p[k - i];
        }
        if (k <= h)
            s += (k % 2 ? 1 : -1) * mpz_class(k) * e[k];
        p[k] = s;
    }
    return p;
}

TraceResult trace_exact(JPolynomial const & f, Discriminant d, PrecisionContext const & ctx)
{
    ctx.validate();
    TraceResult res{d, f, 0, {}, Strategy::exact, 0};
    unsigned const deg = static_cast<unsigned>(std::max(f.degree(), 0));
    for (auto const & part : suborder_decomposition(d)) {
        HilbertResult const H = hilbert_class_poly(part.dprime, ctx);
        auto const p = power_sums_from_poly(H.poly, deg);
        mpz_class root_sum = 0;
        for (unsigned k = 0; k < f.coeffs().size(); ++k)
            root_sum += f.coeffs()[k] * p[k];
        res.bits = std::max(res.bits, H.bits);
        mpq_class const c = weighted(root_sum, part.weight);
        res.parts.push_back({part, static_cast<std::size_t>(H.poly.degree()), c});
        res.value += c;
    }
    return res;
}

TraceResult trace(JPolynomial const & f, Discriminant d, Strategy strategy,
                  PrecisionContext const & ctx)
{
    switch (strategy) {
    case Strategy::numeric:
        return trace_numeric(f, d, ctx);
    case Strategy::exact:
        return trace_exact(f, d, ctx);
    case Strategy::both:
        break;
    }
    TraceResult num = trace_numeric(f, d, ctx);
    TraceResult const ex = trace_exact(f, d, ctx);
    bool agree = num.value == ex.value && num.parts.size() == ex.parts.size();
    for (std::size_t i = 0; agree && i < num.parts.size(); ++i)
        agree = num.parts[i].contribution == ex.parts[i].contribution
                && num.parts[i].class_number == ex.parts[i].class_number;
    if (!agree) {
        std::ostringstream os;
        os << "numeric and exact traces disagree for d = " << d.value() << ", f = "
           << f << ": " << num.value << " vs " << ex.value;
        throw StrategyDisagreement(os.str());
    }
    num.strategy = Strategy::both;
    num.bits = std::max(num.bits, ex.bits);
    return num;
}

CongruenceReport verify_congruence(std::int64_t d, std::uint64_t p, unsigned n, int m,
                                   PrecisionContext const & ctx,
                                   VerifyOptions const & opts)
{
    auto const start = std::chrono::steady_clock::now();
    Discriminant const disc(d);
    if (!is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    if (n < 1)
        throw InvalidArgument("n must be at least 1");
    if (m < 1)
        throw InvalidArgument("m must be at least 1");
    ctx.validate();

    CongruenceReport r;
    r.d = d;
    r.p = p;
    r.n = n;
    r.m = m;
    r.alpha = alpha(disc);
    r.strategy = opts.strategy;

    std::uint64_t const scale = checked_pow(p, 2 * n);
    if (scale > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / d))
        throw InvalidArgument("p^(2n) d overflows 64 bits");
    r.D = static_cast<std::int64_t>(scale) * d;

    bool const admissible = static_cast<std::uint64_t>(d) % p != 0 && is_split(p, disc);
    if (!admissible && !opts.diagnostics) {
        r.status = CongruenceStatus::hypothesis_violation;
        r.millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start).count();
        return r;
    }

    TraceResult const t = trace(faber_poly(m), Discriminant(r.D), opts.strategy, ctx);
    r.computed = true;
    r.trace_value = t.value;
    r.bits = t.bits;
    for (auto const & part : t.parts)
        r.class_numbers.emplace_back(part.part.dprime.value(), part.class_number);

    mpq_class const scaled = r.alpha * t.value;
    if (scaled.get_den() != 1) {
        r.status = admissible ? CongruenceStatus::integrality_failure
                              : CongruenceStatus::hypothesis_violation;
    } else {
        r.integer_value = scaled.get_num();
        r.valuation = valuation(r.integer_value, p);
        r.holds = !r.valuation || *r.valuation >= n;
        if (!admissible)
            r.status = CongruenceStatus::hypothesis_violation;
        else
            r.status = r.holds ? CongruenceStatus::holds : CongruenceStatus::fails;
    }
    r.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CongruenceReport> verify_grid(GridSpec const & grid,
                                          PrecisionContext const & ctx,
                                          VerifyOptions const & opts, unsigned jobs)
{
    struct Cell
    {
        std::int64_t d;
        std::uint64_t p;
        unsigned n;
        int m;
    };
    std::vector<Cell> cells;
    for (std::int64_t d = 3; d <= grid.dmax; ++d) {
        if (d % 4 != 0 && d % 4 != 3)
            continue;
        Discriminant const disc(d);
        for (std::uint64_t p : grid.primes) {
            if (!is_prime(p))
                throw InvalidArgument(std::to_string(p) + " is not prime");
            if (static_cast<std::uint64_t>(d) % p == 0)
                continue;
            if (!is_split(p, disc) && !opts.diagnostics)
                continue;
            for (unsigned n = 1; n <= grid.nmax; ++n) {
                if (grid.max_D) {
                    std::uint64_t const s = checked_pow(p, 2 * n);
                    if (s > static_cast<std::uint64_t>(*grid.max_D / d))
                        continue;
                }
                for (int m = 1; m <= grid.mmax; ++m)
                    cells.push_back({d, p, n, m});
            }
        }
    }

    std::vector<CongruenceReport> out(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                out[i] = verify_congruence(cells[i].d, cells[i].p, cells[i].n,
                                           cells[i].m, ctx, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1U, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace singmod
