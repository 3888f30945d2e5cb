#include "singmod/cmnum.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "singmod/arith.hpp"
#include "singmod/errors.hpp"

namespace singmod {

using mp::Complex;
using mp::Real;

namespace {

constexpr long guard_bits = 32;

// exp(2 pi i tau), and log2 |q|
std::pair<Complex, double> nome(Complex const & tau, mpfr_prec_t wp)
{
    if (mpfr_sgn(tau.im.get()) <= 0)
        throw InvalidArgument("tau must lie in the upper half plane");
    Real const two_pi = Real(wp, 2) * Real::pi(wp);
    Real const t_re = two_pi * tau.re;
    Real const t_im = two_pi * tau.im;
    Real m(wp);
    mpfr_neg(m.get(), t_im.get(), MPFR_RNDN);
    double const log2_q = m.to_double() / std::numbers::ln2;
    mpfr_exp(m.get(), m.get(), MPFR_RNDN);
    return {m * mp::exp_i(t_re), log2_q};
}

Complex with_prec(Complex const & z, mpfr_prec_t p)
{
    Complex r(p);
    mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
    return r;
}

// prod_{n>=1} (1 - q^n) through q^N by Horner over the pentagonal series
Complex euler_product(Complex const & q, long N)
{
    std::vector<signed char> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (long k = 1;; ++k) {
        long const e1 = k * (3 * k - 1) / 2;
        if (e1 > N)
            break;
        signed char const s = (k % 2) ? -1 : 1;
        c[e1] = s;
        long const e2 = k * (3 * k + 1) / 2;
        if (e2 <= N)
            c[e2] = s;
    }
    Complex acc(Real(q.prec(), c[N]), Real(q.prec(), 0));
    for (long n = N - 1; n >= 0; --n) {
        acc = acc * q;
        if (c[n] > 0)
            mpfr_add_ui(acc.re.get(), acc.re.get(), 1, MPFR_RNDN);
        else if (c[n] < 0)
            mpfr_sub_ui(acc.re.get(), acc.re.get(), 1, MPFR_RNDN);
    }
    return acc;
}

Complex eisenstein4(Complex const & q, long N)
{
    Complex acc(q.prec());
    for (long n = N; n >= 1; --n) {
        acc = acc * q + 240 * divisor_sigma(3, static_cast<std::uint64_t>(n));
    }
    acc = acc * q;
    mpfr_add_ui(acc.re.get(), acc.re.get(), 1, MPFR_RNDN);
    return acc;
}

} // namespace

void PrecisionContext::validate() const
{
    if (bits && *bits < 64)
        throw InvalidArgument("precision must be at least 64 bits");
    if (margin_log2 > -20)
        throw InvalidArgument("rounding margin must be at most 2^-20");
    if (max_retries < 0)
        throw InvalidArgument("retry count must be non-negative");
    if (max_terms < 1)
        throw InvalidArgument("term cap must be positive");
}

CMPoint cm_point(QuadForm const & form, mpfr_prec_t prec)
{
    std::int64_t const d = -form.discriminant();
    if (form.a <= 0 || d <= 0)
        throw InvalidArgument("CM point needs a positive definite form");
    Real const two_a(prec, 2 * form.a);
    Complex tau(prec);
    tau.re = Real(prec, -form.b) / two_a;
    tau.im = mp::sqrt(Real(prec, d)) / two_a;
    return {form, std::move(tau)};
}

long required_bits(Discriminant dprime)
{
    auto const forms = reduced_forms(dprime);
    double inv_a = 0;
    for (auto const & f : forms)
        inv_a += 1.0 / static_cast<double>(f.a);
    double const lead = std::numbers::pi * std::sqrt(static_cast<double>(dprime.value()))
                        / std::numbers::ln2 * inv_a;
    return static_cast<long>(std::ceil(lead)) + 64 + 10 * static_cast<long>(forms.size());
}

long truncation_length(double log2_q, long bits, long max_terms)
{
    if (!(log2_q < 0))
        throw PrecisionInfeasible("|q| must be below 1");
    double const target = -static_cast<double>(bits + 8);
    double const x = std::exp2(log2_q);
    // E_4 dominates: 240 sigma_3(n) <= 300 n^3, so the tail past N is at
    // most 300 (N+1)^3 x^(N+1) / (1 - r) with r the ratio of successive
    // bounds.
    for (long N = 1; N <= max_terms; ++N) {
        double const n1 = static_cast<double>(N + 1);
        double const r = std::pow((n1 + 1) / n1, 3) * x;
        if (r >= 1)
            continue;
        double const tail = std::log2(300.0) + 3 * std::log2(n1) + n1 * log2_q
                            - std::log2(1 - r);
        if (tail < target)
            return N;
    }
    throw PrecisionInfeasible("series truncation at " + std::to_string(bits)
                              + " bits needs more than "
                              + std::to_string(max_terms) + " terms");
}

Complex eval_j_at(Complex const & tau, long bits, long max_terms)
{
    mpfr_prec_t const wp = bits + guard_bits;
    auto const [q, log2_q] = nome(with_prec(tau, wp), wp);
    long const N = truncation_length(log2_q, wp, max_terms);

    Complex const prod = euler_product(q, N);
    Complex const p2 = mp::sqr(prod);
    Complex const p4 = mp::sqr(p2);
    Complex const p8 = mp::sqr(p4);
    Complex const p16 = mp::sqr(p8);
    Complex const delta = q * (p16 * p8);

    Complex const e4 = eisenstein4(q, N);
    Complex const j = (mp::sqr(e4) * e4) / delta;
    return with_prec(j, bits);
}

Complex eval_eta_at(Complex const & tau, long bits, long max_terms)
{
    mpfr_prec_t const wp = bits + guard_bits;
    Complex const t = with_prec(tau, wp);
    auto const [q, log2_q] = nome(t, wp);
    long const N = truncation_length(log2_q, wp, max_terms);

    // exp(2 pi i tau / 24) taken straight from tau
    Real const scale = Real(wp, 2) * Real::pi(wp) / Real(wp, 24);
    Complex const arg(-(scale * t.im), scale * t.re);
    return with_prec(mp::exp(arg) * euler_product(q, N), bits);
}

Complex eval_j(QuadForm const & form, PrecisionContext const & ctx)
{
    long const bits = ctx.bits ? *ctx.bits
                               : required_bits(Discriminant(-form.discriminant()));
    CMPoint const pt = cm_point(form, bits + guard_bits);
    return eval_j_at(pt.tau, bits, ctx.max_terms);
}

Complex eval_poly_on_j(JPolynomial const & f, Complex const & tau, long bits,
                       long max_terms)
{
    Complex const j = eval_j_at(tau, bits, max_terms);
    Complex acc(j.prec());
    for (int k = f.degree(); k >= 0; --k)
        acc = acc * j + f.coeffs()[static_cast<std::size_t>(k)];
    return acc;
}

Complex hecke_coset_sum(int m, Complex const & tau, long bits, long max_terms)
{
    if (m < 1)
        throw InvalidArgument("Hecke operator index must be positive");
    mpfr_prec_t const wp = bits + guard_bits;
    Complex const t = with_prec(tau, wp);
    Complex sum(wp);
    for (long a = 1; a <= m; ++a) {
        if (m % a)
            continue;
        long const d = m / a;
        for (long b = 0; b < d; ++b) {
            Real const inv_d = Real(wp, 1) / Real(wp, d);
            Complex const arg = inv_d * Complex(Real(wp, a) * t.re + Real(wp, b),
                                                Real(wp, a) * t.im);
            sum = sum + (eval_j_at(arg, bits, max_terms) + mpz_class(-744));
        }
    }
    return with_prec(sum, bits);
}

mpz_class round_checked(Real const & x, int margin_log2)
{
    mpz_class const n = mp::round_to_integer(x);
    Real dist = mp::abs(x - Real(x.prec(), n));
    if (mpfr_cmp_si_2exp(dist.get(), 1, margin_log2) >= 0) {
        throw RoundingFailure("value is not within 2^" + std::to_string(margin_log2)
                              + " of an integer (distance ~2^"
                              + std::to_string(dist.log2_abs()) + ")");
    }
    return n;
}

namespace {

std::vector<Complex> class_poly_product(Discriminant dprime, long bits,
                                        PrecisionContext const & ctx)
{
    mpfr_prec_t const wp = bits + guard_bits;
    PrecisionContext at = ctx;
    at.bits = bits;

    std::vector<Complex> poly{Complex(Real(wp, 1), Real(wp, 0))};
    auto multiply = [&](std::vector<Complex> const & factor) {
        std::vector<Complex> out(poly.size() + factor.size() - 1, Complex(wp));
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (std::size_t k = 0; k < factor.size(); ++k)
                out[i + k] = out[i + k] + poly[i] * factor[k];
        poly = std::move(out);
    };

    for (auto const & form : reduced_forms(dprime)) {
        if (form.b < 0 && !form.is_ambiguous())
            continue; // folded into its conjugate partner (a, -b, c)
        Complex const j = with_prec(eval_j(form, at), wp);
        Complex const one(Real(wp, 1), Real(wp, 0));
        if (form.is_ambiguous()) {
            multiply({Complex(-j.re, -j.im), one});
        } else {
            // (X - j)(X - conj j), formed in complex arithmetic
            Complex const jc = j.conj();
            multiply({j * jc, Complex(-(j.re + jc.re), -(j.im + jc.im)), one});
        }
    }
    return poly;
}

using HilbertKey = std::tuple<std::int64_t, long, int, int, long>;
std::mutex hilbert_mutex;
std::map<HilbertKey, HilbertResult> hilbert_memo;

} // namespace

HilbertResult hilbert_class_poly(Discriminant dprime, PrecisionContext const & ctx)
{
    ctx.validate();
    long const bits0 = ctx.bits ? *ctx.bits : required_bits(dprime);
    HilbertKey const key{dprime.value(), bits0, ctx.margin_log2, ctx.max_retries,
                         ctx.max_terms};
    {
        std::lock_guard lock(hilbert_mutex);
        if (auto it = hilbert_memo.find(key); it != hilbert_memo.end())
            return it->second;
    }

    std::string last_error;
    for (int attempt = 0; attempt <= ctx.max_retries; ++attempt) {
        long const bits = bits0 << attempt;
        auto const coeffs = class_poly_product(dprime, bits, ctx);

        HilbertResult res;
        res.bits = bits;
        res.max_distance_log2 = -std::numeric_limits<double>::infinity();
        res.max_imag_log2 = -std::numeric_limits<double>::infinity();
        std::vector<mpz_class> ints;
        try {
            for (auto const & c : coeffs) {
                double const im = c.im.log2_abs();
                if (im >= ctx.margin_log2 + 1)
                    throw RoundingFailure("imaginary residue 2^" + std::to_string(im)
                                          + " exceeds twice the margin");
                mpz_class const n = round_checked(c.re, ctx.margin_log2);
                res.max_distance_log2 = std::max(
                        res.max_distance_log2,
                        mp::abs(c.re - Real(c.prec(), n)).log2_abs());
                res.max_imag_log2 = std::max(res.max_imag_log2, im);
                ints.push_back(n);
            }
        } catch (RoundingFailure const & e) {
            last_error = e.what();
            continue;
        }
        res.poly = IntPolynomial(std::move(ints));
        std::lock_guard lock(hilbert_mutex);
        return hilbert_memo.emplace(key, std::move(res)).first->second;
    }
    throw RoundingFailure("Hilbert class polynomial of discriminant -"
                          + std::to_string(dprime.value()) + " failed after "
                          + std::to_string(ctx.max_retries) + " retries: "
                          + last_error);
}

} // namespace singmod
