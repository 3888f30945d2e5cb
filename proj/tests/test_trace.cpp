#include <doctest.h>

#include <random>

#include "singmod/errors.hpp"
#include "singmod/qseries.hpp"
#include "singmod/trace.hpp"

using namespace singmod;

namespace {

JPolynomial const F1{-744, 1};
PrecisionContext const ctx;

mpq_class q(char const * s)
{
    mpq_class r(s);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("trace_numeric examples")
{
    CHECK(trace_numeric(F1, Discriminant(3), ctx).value == -248);
    CHECK(trace_numeric(F1, Discriminant(4), ctx).value == 492);
    CHECK(trace_numeric(JPolynomial{1}, Discriminant(3), ctx).value == q("1/3"));
    CHECK(trace_numeric(F1, Discriminant(12), ctx).value == 53008);
}

TEST_CASE("power_sums_from_poly")
{
    auto ps = [](IntPolynomial const & h, unsigned k) { return power_sums_from_poly(h, k); };
    CHECK(ps({-1728, 1}, 2) == std::vector<mpz_class>{1, 1728, 2985984});
    CHECK(ps({0, 1}, 3) == std::vector<mpz_class>{1, 0, 0, 0});
    CHECK(ps({6, -5, 1}, 2) == std::vector<mpz_class>{2, 5, 13});
    // roots 1, 2, 3, 4 by brute force
    IntPolynomial const h = IntPolynomial{-1, 1} * IntPolynomial{-2, 1} * IntPolynomial{-3, 1}
                            * IntPolynomial{-4, 1};
    auto const p = ps(h, 7);
    for (unsigned k = 0; k <= 7; ++k) {
        mpz_class s = 0, t;
        for (unsigned long r = 1; r <= 4; ++r) {
            mpz_ui_pow_ui(t.get_mpz_t(), r, k);
            s += t;
        }
        CHECK(p[k] == s);
    }
    CHECK_THROWS_AS(ps({1, 2}, 2), InvalidArgument);
}

TEST_CASE("trace_exact examples")
{
    CHECK(trace_exact(F1, Discriminant(7), ctx).value == -4119);
    CHECK(trace_exact(F1, Discriminant(3), ctx).value == -248);
    CHECK(trace_exact(JPolynomial{}, Discriminant(147), ctx).value == 0);
    CHECK(trace_exact(JPolynomial{}, Discriminant(3), ctx).value == 0);
}

TEST_CASE("trace dispatcher")
{
    TraceResult const t = trace(F1, Discriminant(3), Strategy::both, ctx);
    CHECK(t.value == -248);
    REQUIRE(t.parts.size() == 1);
    CHECK(t.parts[0].part.dprime.value() == 3);
    CHECK(t.parts[0].part.conductor == 1);
    CHECK(t.parts[0].part.weight == 6);
    CHECK(t.parts[0].contribution == -248);
    CHECK(t.strategy == Strategy::both);

    TraceResult const t147 = trace(F1, Discriminant(147), Strategy::both, ctx);
    REQUIRE(t147.parts.size() == 2);
    CHECK(t147.parts[0].part.dprime.value() == 147);
    CHECK(t147.parts[1].part.dprime.value() == 3);
    CHECK(t147.parts[1].contribution == -248);
    CHECK(t147.value == mpq_class(mpz_class("-34848505552897736")));

    TraceResult const t4 = trace(JPolynomial{1}, Discriminant(4), Strategy::both, ctx);
    CHECK(t4.value == q("1/2"));
    CHECK(mpq_class(alpha(Discriminant(4)) * t4.value).get_den() == 1);
}

TEST_CASE("trace values frozen from an independent mpmath evaluation")
{
    JPolynomial const F2 = faber_poly(2);
    CHECK(trace(F1, Discriminant(15), Strategy::both, ctx).value == -192513);
    CHECK(trace(F1, Discriminant(16), Strategy::both, ctx).value == 287244);
    CHECK(trace(F2, Discriminant(4), Strategy::both, ctx).value == 287244);
    CHECK(trace(F2, Discriminant(7), Strategy::both, ctx).value == 16572393);
    CHECK(trace(F2, Discriminant(16), Strategy::both, ctx).value == mpz_class("82226602980"));
    CHECK(trace(F1, Discriminant(100), Strategy::both, ctx).value
          == mpz_class("44031499225500"));
    CHECK(trace(F2, Discriminant(147), Strategy::both, ctx).value
          == mpz_class("1214418339247561600451288629620792"));
}

TEST_CASE("denominator law")
{
    for (std::int64_t d = 3; d <= 300; ++d) {
        if (d % 4 != 0 && d % 4 != 3)
            continue;
        Discriminant const disc(d);
        TraceResult const t = trace(JPolynomial{1, 1}, disc, Strategy::both, ctx);
        bool has3 = false, has4 = false;
        for (auto const & p : t.parts) {
            has3 |= p.part.dprime.value() == 3;
            has4 |= p.part.dprime.value() == 4;
        }
        mpz_class const den = t.value.get_den();
        CAPTURE(d);
        CHECK(6 % den == 0);
        if (!has4)
            CHECK(3 % den == 0);
        if (!has3)
            CHECK(2 % den == 0);
        CHECK(mpq_class(alpha(disc) * t.value).get_den() == 1);
    }
}

TEST_CASE("linearity in f")
{
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    for (int trial = 0; trial < 6; ++trial) {
        JPolynomial const f{coef(rng), coef(rng), coef(rng)};
        JPolynomial const g{coef(rng), coef(rng)};
        mpz_class const c = coef(rng);
        std::int64_t d = 3 + static_cast<std::int64_t>(rng() % 200);
        while (d % 4 != 0 && d % 4 != 3)
            ++d;
        Discriminant const disc(d);
        CAPTURE(d);
        mpq_class const tf = trace(f, disc, Strategy::both, ctx).value;
        mpq_class const tg = trace(g, disc, Strategy::both, ctx).value;
        CHECK(trace(f + g, disc, Strategy::both, ctx).value == tf + tg);
        CHECK(trace(c * f, disc, Strategy::both, ctx).value == c * tf);
    }
}

TEST_CASE("verify_congruence examples")
{
    CongruenceReport const r = verify_congruence(3, 7, 1, 1, ctx);
    CHECK(r.status == CongruenceStatus::holds);
    CHECK(r.holds);
    CHECK(r.alpha == 3);
    CHECK(r.D == 147);
    CHECK(r.integer_value == mpz_class("-104545516658693208"));
    REQUIRE(r.valuation);
    CHECK(*r.valuation >= 1);

    CongruenceReport const r4 = verify_congruence(4, 5, 1, 1, ctx);
    CHECK(r4.status == CongruenceStatus::holds);
    CHECK(r4.D == 100);
    CHECK(r4.integer_value == mpz_class("88062998451000"));

    CongruenceReport const bad = verify_congruence(3, 5, 1, 1, ctx);
    CHECK(bad.status == CongruenceStatus::hypothesis_violation);
    CHECK_FALSE(bad.computed);

    CongruenceReport const divides = verify_congruence(3, 3, 1, 1, ctx);
    CHECK(divides.status == CongruenceStatus::hypothesis_violation);

    CHECK_THROWS_AS(verify_congruence(5, 7, 1, 1, ctx), InvalidArgument);
    CHECK_THROWS_AS(verify_congruence(3, 8, 1, 1, ctx), InvalidArgument);
    CHECK_THROWS_AS(verify_congruence(3, 7, 0, 1, ctx), InvalidArgument);
    CHECK_THROWS_AS(verify_congruence(3, 7, 1, 0, ctx), InvalidArgument);
}

TEST_CASE("diagnostic runs on inert primes keep the hypothesis status")
{
    CongruenceReport const r = verify_congruence(3, 5, 1, 1, ctx, {Strategy::both, true});
    CHECK(r.computed);
    CHECK(r.status == CongruenceStatus::hypothesis_violation);
    CHECK(r.D == 75);
}

TEST_CASE("monotone consistency across n")
{
    CongruenceReport const r2 = verify_congruence(3, 7, 2, 1, ctx);
    CHECK(r2.holds);
    if (!r2.valuation || *r2.valuation >= 2)
        CHECK(mpz_divisible_ui_p(r2.integer_value.get_mpz_t(), 7));
}

TEST_CASE("verify_grid")
{
    auto const rows = verify_grid({10, {7}, 1, 1, std::nullopt}, ctx);
    std::vector<std::int64_t> ds;
    for (auto const & r : rows) {
        ds.push_back(r.d);
        CHECK(r.status == CongruenceStatus::holds);
        CHECK(is_split(7, Discriminant(r.d)));
    }
    // 7 divides d = 7 and is inert for d = 4 (-4 = 3 mod 7) and d = 8 (-8 = 6 mod 7)
    CHECK(ds == std::vector<std::int64_t>{3});
    CHECK(verify_grid({3, {5}, 1, 1, std::nullopt}, ctx).empty());
    CHECK(verify_grid({0, {2, 3}, 1, 1, std::nullopt}, ctx).empty());

    auto const diag = verify_grid({3, {5}, 1, 1, std::nullopt}, ctx, {Strategy::both, true});
    REQUIRE(diag.size() == 1);
    CHECK(diag[0].status == CongruenceStatus::hypothesis_violation);
}

TEST_CASE("verify_grid is independent of the number of workers")
{
    GridSpec const grid{40, {2, 3, 5}, 1, 2, std::int64_t{2000}};
    auto const a = verify_grid(grid, ctx, {}, 1);
    auto const b = verify_grid(grid, ctx, {}, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].d == b[i].d);
        CHECK(a[i].p == b[i].p);
        CHECK(a[i].n == b[i].n);
        CHECK(a[i].m == b[i].m);
        CHECK(a[i].integer_value == b[i].integer_value);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].status == CongruenceStatus::holds);
    }
}
