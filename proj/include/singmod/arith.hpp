#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace singmod {

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Prime factorisation by trial division, as (prime, exponent) pairs in
/// increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n);

/// Kronecker symbol (a | n) for n >= 1.
int kronecker(std::int64_t a, std::uint64_t n);

/// p-adic valuation; std::nullopt stands for v_p(0) = infinity.
std::optional<unsigned> valuation(mpz_class const & x, std::uint64_t p);

/// p^e, throwing InvalidArgument on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t p, unsigned e);

/// Sum of k-th powers of the divisors of n.
mpz_class divisor_sigma(unsigned k, std::uint64_t n);

} // namespace singmod
