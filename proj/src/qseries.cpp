#include "singmod/qseries.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "singmod/arith.hpp"
#include "singmod/errors.hpp"

namespace singmod {

LaurentSeries eta_series(long N)
{
    if (N < 0)
        throw InvalidArgument("eta_series: N must be non-negative");
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    // exponents k(3k-1)/2 and k(3k+1)/2 carry sign (-1)^k
    for (long k = 1;; ++k) {
        long const e1 = k * (3 * k - 1) / 2;
        if (e1 > N)
            break;
        int const s = (k % 2) ? -1 : 1;
        c[e1] += s;
        long const e2 = k * (3 * k + 1) / 2;
        if (e2 <= N)
            c[e2] += s;
    }
    return {0, std::move(c)};
}

LaurentSeries eisenstein(int k, long N)
{
    if (k != 4 && k != 6)
        throw InvalidArgument("eisenstein: weight must be 4 or 6");
    if (N < 0)
        throw InvalidArgument("eisenstein: N must be non-negative");
    long const scale = (k == 4) ? 240 : -504;
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (long n = 1; n <= N; ++n)
        c[n] = scale * divisor_sigma(static_cast<unsigned>(k - 1),
                                     static_cast<std::uint64_t>(n));
    return {0, std::move(c)};
}

LaurentSeries delta_series(long N)
{
    if (N < 1)
        throw InvalidArgument("delta_series: N must be at least 1");
    return eta_series(N - 1).pow(24).shifted(1);
}

namespace {

LaurentSeries compute_j(long N)
{
    LaurentSeries const delta = delta_series(N + 2);
    LaurentSeries const e4 = eisenstein(4, N + 1);
    LaurentSeries const e6 = eisenstein(6, N + 1);

    LaurentSeries const inv = delta.inverse();
    LaurentSeries const j = (e4.pow(3) * inv).truncated(N);
    LaurentSeries const check =
            (e6.pow(2) * inv + LaurentSeries::constant(1728, N)).truncated(N);
    if (j != check)
        throw ConsistencyFailure("j expansion: E4^3/Delta and E6^2/Delta + 1728 "
                                 "disagree through q^" + std::to_string(N));
    return j;
}

std::mutex j_memo_mutex;
std::shared_ptr<LaurentSeries const> j_memo;

} // namespace

LaurentSeries j_expansion(long N)
{
    if (N < 0)
        throw InvalidArgument("j_expansion: N must be non-negative");
    {
        std::lock_guard lock(j_memo_mutex);
        if (j_memo && j_memo->order() >= N)
            return j_memo->truncated(N);
    }
    auto fresh = std::make_shared<LaurentSeries const>(compute_j(N));
    std::lock_guard lock(j_memo_mutex);
    if (!j_memo || j_memo->order() < fresh->order())
        j_memo = fresh;
    return fresh->truncated(N);
}

JPolynomial faber_poly(int m)
{
    if (m < 0)
        throw InvalidArgument("faber_poly: m must be non-negative");
    if (m == 0)
        return JPolynomial::constant(1);

    // j^k through q^0, for k = 0..m
    LaurentSeries const j = j_expansion(m - 1);
    std::vector<LaurentSeries> powers{LaurentSeries::constant(1, m)};
    for (int k = 1; k <= m; ++k)
        powers.push_back(powers.back() * j);
    for (auto & p : powers)
        p = p.truncated(0);

    // unit-diagonal triangular solve: clear q^{-m+1} .. q^0 from j^m
    std::vector<mpz_class> c(static_cast<std::size_t>(m) + 1, 0);
    c[m] = 1;
    LaurentSeries s = powers[m];
    for (int e = -m + 1; e <= 0; ++e) {
        mpz_class const t = s.coeff(e);
        if (t == 0)
            continue;
        s = s - t * powers[-e];
        c[-e] -= t;
    }
    return JPolynomial(std::move(c));
}

LaurentSeries poly_expansion(JPolynomial const & f, long N)
{
    if (N < 0)
        throw InvalidArgument("poly_expansion: N must be non-negative");
    int const m = f.degree();
    if (m <= 0)
        return LaurentSeries::constant(f.coeff(0), N);

    LaurentSeries const j = j_expansion(N + m - 1);
    LaurentSeries acc = LaurentSeries::constant(f.coeff(m), N + m);
    for (int k = m - 1; k >= 0; --k)
        acc = acc * j + LaurentSeries::constant(f.coeff(k), N + m);
    return acc.truncated(N);
}

} // namespace singmod
