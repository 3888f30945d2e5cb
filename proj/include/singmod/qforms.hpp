#pragma once

/*
 * Imaginary quadratic orders and their reduced binary quadratic forms.
 *
 * A positive integer d with d = 0, 3 mod 4 names the order O_d of
 * discriminant -d. The complex elliptic curves whose endomorphism ring
 * contains O_d are exactly those with End(E) = O_{d'} for some d = g^2 d',
 * and the curves with End(E) = O_{d'} are in bijection with the primitive
 * reduced forms of discriminant -d'.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace singmod {

class Discriminant
{
  public:
    /// Throws InvalidArgument unless d >= 1 and d = 0, 3 mod 4.
    explicit Discriminant(std::int64_t d);

    std::int64_t value() const { return d_; }

    auto operator<=>(Discriminant const &) const = default;

  private:
    std::int64_t d_;
};

Discriminant validate_discriminant(std::int64_t d);

struct QuadForm
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_primitive() const;
    /// Fixed by (a,b,c) -> (a,-b,c) up to equivalence; such forms have
    /// real j-invariant.
    bool is_ambiguous() const { return b == 0 || a == b || a == c; }

    auto operator<=>(QuadForm const &) const = default;
};

std::ostream & operator<<(std::ostream & o, QuadForm const & f);

struct SubOrderPart
{
    Discriminant dprime;
    std::int64_t conductor;
    int weight; ///< #Aut(E): 6, 4 or 2
};

/// Primitive reduced forms of discriminant -d', sorted by (a, b).
std::vector<QuadForm> reduced_forms(Discriminant dprime);

std::size_t class_number(Discriminant dprime);

/// All (d', g) with d = g^2 d' and d' a discriminant, by increasing g.
std::vector<SubOrderPart> suborder_decomposition(Discriminant d);

/// #Aut of a curve with End = O_{d'}.
int automorphism_weight(Discriminant dprime);

/// 3 for Q(sqrt(-3)), 2 for Q(i), 1 otherwise.
int alpha(Discriminant d);

/// Discriminant D_K (negative) of Q(sqrt(-d)).
std::int64_t fundamental_discriminant(Discriminant d);

/// Whether the prime p splits in Q(sqrt(-d)). Throws HypothesisViolation
/// when p | d and InvalidArgument when p is not prime.
bool is_split(std::uint64_t p, Discriminant d);

} // namespace singmod
