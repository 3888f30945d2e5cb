#include "singmod/arith.hpp"

#include <cmath>
#include <limits>

#include "singmod/errors.hpp"

namespace singmod {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(std::uint64_t n)
{
    auto r = isqrt(n);
    return r * r == n;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::uint64_t f = 5; f * f <= n; f += 6)
        if (n % f == 0 || n % (f + 2) == 0)
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        if (e)
            out.emplace_back(f, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

int kronecker(std::int64_t a, std::uint64_t n)
{
    if (n == 0)
        throw InvalidArgument("kronecker: modulus must be positive");

    int result = 1;
    // (a | 2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    std::int64_t const a8 = ((a % 8) + 8) % 8;
    while (n % 2 == 0) {
        n /= 2;
        if (a8 % 2 == 0)
            return 0;
        if (a8 == 3 || a8 == 5)
            result = -result;
    }
    if (n == 1)
        return result;

    // Jacobi symbol for odd n
    std::uint64_t m = static_cast<std::uint64_t>(
            ((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n))
            % static_cast<std::int64_t>(n));
    while (m != 0) {
        while (m % 2 == 0) {
            m /= 2;
            if (n % 8 == 3 || n % 8 == 5)
                result = -result;
        }
        std::swap(m, n);
        if (m % 4 == 3 && n % 4 == 3)
            result = -result;
        m %= n;
    }
    return n == 1 ? result : 0;
}

std::optional<unsigned> valuation(mpz_class const & x, std::uint64_t p)
{
    if (p < 2)
        throw InvalidArgument("valuation: p must be at least 2");
    if (x == 0)
        return std::nullopt;
    mpz_class y = abs(x);
    mpz_class const pz(static_cast<unsigned long>(p));
    unsigned v = 0;
    while (mpz_divisible_p(y.get_mpz_t(), pz.get_mpz_t())) {
        mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), pz.get_mpz_t());
        ++v;
    }
    return v;
}

std::uint64_t checked_pow(std::uint64_t p, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (p != 0 && r > std::numeric_limits<std::uint64_t>::max() / p)
            throw InvalidArgument("integer power overflows 64 bits");
        r *= p;
    }
    return r;
}

mpz_class divisor_sigma(unsigned k, std::uint64_t n)
{
    mpz_class s = 0;
    mpz_class t;
    for (std::uint64_t f = 1; f * f <= n; ++f) {
        if (n % f)
            continue;
        mpz_ui_pow_ui(t.get_mpz_t(), f, k);
        s += t;
        if (f * f != n) {
            mpz_ui_pow_ui(t.get_mpz_t(), n / f, k);
            s += t;
        }
    }
    return s;
}

} // namespace singmod
