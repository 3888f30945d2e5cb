#include "singmod/qforms.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "singmod/arith.hpp"
#include "singmod/errors.hpp"

namespace singmod {

Discriminant::Discriminant(std::int64_t d)
    : d_(d)
{
    if (d < 1)
        throw InvalidArgument("discriminant must be positive, got "
                              + std::to_string(d));
    if (d % 4 != 0 && d % 4 != 3)
        throw InvalidArgument("d = " + std::to_string(d)
                              + " is not congruent to 0 or 3 mod 4");
}

Discriminant validate_discriminant(std::int64_t d)
{
    return Discriminant(d);
}

bool QuadForm::is_reduced() const
{
    if (a <= 0 || discriminant() >= 0)
        return false;
    return (-a < b && b <= a && a < c) || (0 <= b && b <= a && a == c);
}

bool QuadForm::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::ostream & operator<<(std::ostream & o, QuadForm const & f)
{
    return o << "(" << f.a << "," << f.b << "," << f.c << ")";
}

std::vector<QuadForm> reduced_forms(Discriminant dprime)
{
    std::int64_t const d = dprime.value();
    std::vector<QuadForm> out;
    // reduced forms have 3a^2 <= d
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t const num = b * b + d;
            if (num % (4 * a))
                continue;
            QuadForm f{a, b, num / (4 * a)};
            if (f.is_reduced() && f.is_primitive())
                out.push_back(f);
        }
    }
    return out;
}

std::size_t class_number(Discriminant dprime)
{
    return reduced_forms(dprime).size();
}

int automorphism_weight(Discriminant dprime)
{
    switch (dprime.value()) {
    case 3:
        return 6;
    case 4:
        return 4;
    default:
        return 2;
    }
}

std::vector<SubOrderPart> suborder_decomposition(Discriminant d)
{
    std::vector<SubOrderPart> parts;
    std::int64_t const dv = d.value();
    for (std::int64_t g = 1; g * g <= dv; ++g) {
        if (dv % (g * g))
            continue;
        std::int64_t const q = dv / (g * g);
        if (q % 4 != 0 && q % 4 != 3)
            continue;
        Discriminant const dp(q);
        parts.push_back({dp, g, automorphism_weight(dp)});
    }
    return parts;
}

namespace {

/// Squarefree kernel r with d = s^2 r.
std::uint64_t squarefree_part(std::uint64_t d)
{
    std::uint64_t r = 1;
    for (auto [p, e] : factor(d))
        if (e % 2)
            r *= p;
    return r;
}

} // namespace

int alpha(Discriminant d)
{
    auto const r = squarefree_part(static_cast<std::uint64_t>(d.value()));
    if (r == 1)
        return 2;
    if (r == 3)
        return 3;
    return 1;
}

std::int64_t fundamental_discriminant(Discriminant d)
{
    auto const r = static_cast<std::int64_t>(
            squarefree_part(static_cast<std::uint64_t>(d.value())));
    // -r = 1 mod 4 exactly when r = 3 mod 4
    return r % 4 == 3 ? -r : -4 * r;
}

bool is_split(std::uint64_t p, Discriminant d)
{
    if (!is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    if (static_cast<std::uint64_t>(d.value()) % p == 0)
        throw HypothesisViolation("p = " + std::to_string(p) + " divides d = "
                                  + std::to_string(d.value()));
    return kronecker(fundamental_discriminant(d), p) == 1;
}

} // namespace singmod
