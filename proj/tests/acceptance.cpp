// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "singmod/arith.hpp"
#include "singmod/cmnum.hpp"
#include "singmod/errors.hpp"
#include "singmod/lemma.hpp"
#include "singmod/qforms.hpp"
#include "singmod/qseries.hpp"
#include "singmod/trace.hpp"

#include "oracles.hpp"

using namespace singmod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string why)
    {
        pass = false;
        if (failures.size() < 10)
            failures.push_back(std::move(why));
    }
};

// Congruence grid.
constexpr std::int64_t grid_dmax = 200;
constexpr std::int64_t grid_Dmax = 30000;
constexpr unsigned grid_nmax = 2;
constexpr int grid_mmax = 3;
std::vector<std::uint64_t> const grid_primes{2, 3, 5, 7, 11, 13};

struct GridCell
{
    std::int64_t d;
    std::uint64_t p;
    unsigned n;
    std::int64_t D;
};

std::vector<GridCell> grid_cells()
{
    std::vector<GridCell> cells;
    for (std::int64_t d = 3; d <= grid_dmax; ++d) {
        if (d % 4 != 0 && d % 4 != 3)
            continue;
        for (std::uint64_t p : grid_primes) {
            if (static_cast<std::uint64_t>(d) % p == 0 || !is_split(p, Discriminant(d)))
                continue;
            for (unsigned n = 1; n <= grid_nmax; ++n) {
                auto const D = static_cast<std::int64_t>(checked_pow(p, 2 * n)) * d;
                if (D <= grid_Dmax)
                    cells.push_back({d, p, n, D});
            }
        }
    }
    return cells;
}

Outcome ac1_small_values()
{
    Outcome o;
    PrecisionContext const ctx;
    JPolynomial const F1 = faber_poly(1);
    std::vector<std::pair<std::int64_t, long>> const expected{
            {3, -248}, {4, 492}, {7, -4119}, {12, 53008}};
    auto const t0 = Clock::now();
    for (auto [d, v] : expected) {
        mpq_class const num = trace_numeric(F1, Discriminant(d), ctx).value;
        mpq_class const ex = trace_exact(F1, Discriminant(d), ctx).value;
        if (num != v || ex != v)
            o.fail("d=" + std::to_string(d) + " numeric=" + num.get_str()
                   + " exact=" + ex.get_str() + " expected=" + std::to_string(v));
    }
    double const secs = seconds_since(t0);
    if (secs >= 1.0)
        o.fail("runtime " + std::to_string(secs) + " s >= 1 s");
    o.detail = "t_F1(3,4,7,12) = -248, 492, -4119, 53008 by both strategies in "
               + std::to_string(secs) + " s";
    return o;
}

struct GridOutcome
{
    Outcome congruence;
    Outcome strategies;
    std::set<std::int64_t> dprimes;
};

GridOutcome ac2_ac3_grid()
{
    GridOutcome g;
    PrecisionContext const ctx;
    auto const cells = grid_cells();
    std::size_t rows = 0, holds = 0, integral = 0, agree = 0;
    auto const t0 = Clock::now();
    for (auto const & c : cells) {
        for (auto const & part : suborder_decomposition(Discriminant(c.D)))
            g.dprimes.insert(part.dprime.value());
        for (int m = 1; m <= grid_mmax; ++m) {
            ++rows;
            std::string const tag = "d=" + std::to_string(c.d) + " p=" + std::to_string(c.p)
                                    + " n=" + std::to_string(c.n) + " m=" + std::to_string(m);
            JPolynomial const f = faber_poly(m);
            Discriminant const D(c.D);

            // strategy equivalence, on every part
            TraceResult const tn = trace_numeric(f, D, ctx);
            TraceResult const te = trace_exact(f, D, ctx);
            bool same = tn.value == te.value && tn.parts.size() == te.parts.size();
            for (std::size_t i = 0; same && i < tn.parts.size(); ++i)
                same = tn.parts[i].contribution == te.parts[i].contribution;
            if (same)
                ++agree;
            else
                g.strategies.fail(tag + ": numeric " + tn.value.get_str() + " vs exact "
                                  + te.value.get_str());

            CongruenceReport const r = verify_congruence(c.d, c.p, c.n, m, ctx,
                                                         {Strategy::exact, false});
            mpq_class const scaled = r.alpha * tn.value;
            if (scaled.get_den() == 1 && r.status != CongruenceStatus::integrality_failure)
                ++integral;
            else
                g.congruence.fail(tag + ": alpha*t = " + scaled.get_str() + " is not an integer");
            if (r.status == CongruenceStatus::holds && r.holds && r.computed)
                ++holds;
            else
                g.congruence.fail(tag + ": status " + std::string(to_string(r.status)) + " v_p="
                               + (r.valuation ? std::to_string(*r.valuation) : "inf"));
            if (r.integer_value != scaled.get_num())
                g.congruence.fail(tag + ": verifier value differs from the numeric trace");
        }
    }
    double const secs = seconds_since(t0);
    if (rows == 0)
        g.congruence.fail("empty grid");
    g.congruence.detail = std::to_string(holds) + "/" + std::to_string(rows)
                       + " admissible tuples hold, " + std::to_string(integral) + "/"
                       + std::to_string(rows) + " integral (" + std::to_string(cells.size())
                       + " (d,p,n) cells, " + std::to_string(secs) + " s)";
    g.strategies.detail = std::to_string(agree) + "/" + std::to_string(rows)
                          + " grid cells: numeric == exact on value and every part";
    return g;
}

Outcome ac4_precision(std::set<std::int64_t> const & dprimes)
{
    Outcome o;
    PrecisionContext const ctx;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::int64_t dp : dprimes) {
        Discriminant const disc(dp);
        HilbertResult const base = hilbert_class_poly(disc, ctx);
        PrecisionContext twice;
        twice.bits = 2 * base.bits;
        HilbertResult const dbl = hilbert_class_poly(disc, twice);
        worst = std::max({worst, base.max_distance_log2, dbl.max_distance_log2});
        if (!(base.poly == dbl.poly))
            o.fail("d'=" + std::to_string(dp) + ": polynomial changes at doubled precision");
        if (!(base.max_distance_log2 < -20) || !(dbl.max_distance_log2 < -20))
            o.fail("d'=" + std::to_string(dp) + ": rounding distance 2^"
                   + std::to_string(std::max(base.max_distance_log2, dbl.max_distance_log2)));
        if (static_cast<std::size_t>(base.poly.degree()) != class_number(disc))
            o.fail("d'=" + std::to_string(dp) + ": degree != class number");
    }
    std::ostringstream os;
    os << dprimes.size() << " class polynomials identical at doubled precision; worst distance 2^"
       << worst << " < 2^-20";
    o.detail = os.str();
    return o;
}

Outcome ac5_faber()
{
    Outcome o;
    for (int m = 0; m <= 20; ++m) {
        LaurentSeries const s = poly_expansion(faber_poly(m), 50);
        if (s.order() < 50)
            o.fail("m=" + std::to_string(m) + ": expansion not known through q^50");
        if (s.coeff(-m) != 1)
            o.fail("m=" + std::to_string(m) + ": leading coefficient is not 1");
        for (long e = -m + 1; e <= 0; ++e)
            if (s.coeff(e) != 0)
                o.fail("m=" + std::to_string(m) + ": nonzero coefficient at q^" + std::to_string(e));
        if (m == 0 && s.coeff(0) != 1)
            o.fail("F_0 is not 1");
    }

    long const bits = 160;
    double worst = -std::numeric_limits<double>::infinity();
    for (int m : {2, 3}) {
        JPolynomial const f = faber_poly(m);
        // two sample points with Im tau >= 1
        for (auto [re_num, im_num] : {std::pair{1, 10}, std::pair{-3, 13}}) {
            mp::Complex tau(bits);
            tau.re = mp::Real(bits, re_num) / mp::Real(bits, 10);
            tau.im = mp::Real(bits, im_num) / mp::Real(bits, 10);
            double const err = (eval_poly_on_j(f, tau, bits) - hecke_coset_sum(m, tau, bits))
                                       .log2_magnitude();
            worst = std::max(worst, err);
            if (!(err < -30))
                o.fail("Hecke check m=" + std::to_string(m) + ": error 2^" + std::to_string(err));
        }
    }
    std::ostringstream os;
    os << "F_0..F_20 expand to q^-m + O(q) through q^50; Hecke coset sums agree to 2^" << worst;
    o.detail = os.str();
    return o;
}

Outcome ac6_lemma()
{
    Outcome o;
    std::vector<std::pair<std::uint64_t, unsigned>> const pns{
            {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3},
            {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 1}};
    auto const rows = check_lemma(300, pns);
    std::size_t oracle = 0;
    for (auto const & r : rows) {
        oracle += r.oracle_used;
        if (!r.holds || !r.routes_agree)
            o.fail("k=" + std::to_string(r.k) + " p^n=" + std::to_string(r.p) + "^"
                   + std::to_string(r.n) + (r.holds ? " routes disagree" : " valuation < n"));
    }
    if (rows.size() != 301 * pns.size())
        o.fail("unexpected row count");
    o.detail = std::to_string(rows.size()) + " (k, p^n) pairs: v_p(S) >= n, closed form == "
               "reduction" + " == complex sum (" + std::to_string(oracle) + " budgeted)";
    return o;
}

Outcome ac7_structure(std::set<std::int64_t> const & dprimes)
{
    Outcome o;
    std::size_t checked = 0;
    for (std::int64_t d = 3; d <= 2000; ++d) {
        if (d % 4 != 0 && d % 4 != 3)
            continue;
        ++checked;
        if (reduced_forms(Discriminant(d)) != oracle::brute_force_classes(d))
            o.fail("reduced_forms mismatch at d'=" + std::to_string(d));
    }

    PrecisionContext const ctx;
    for (std::int64_t dp : dprimes) {
        Discriminant const disc(dp);
        if (static_cast<std::size_t>(hilbert_class_poly(disc, ctx).poly.degree())
            != reduced_forms(disc).size())
            o.fail("degree != class number at d'=" + std::to_string(dp));
    }

    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> coef(-10000, 10000);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<std::int64_t> dd(3, 400);
    for (int trial = 0; trial < 20; ++trial) {
        auto random_poly = [&] {
            std::vector<mpz_class> c;
            for (int k = 0, top = deg(rng); k <= top; ++k)
                c.emplace_back(coef(rng));
            return JPolynomial(std::move(c));
        };
        JPolynomial const f = random_poly();
        JPolynomial const g = random_poly();
        mpz_class const s = coef(rng);
        std::int64_t d = dd(rng);
        while (d % 4 != 0 && d % 4 != 3)
            ++d;
        Discriminant const disc(d);
        mpq_class const tf = trace(f, disc, Strategy::both, ctx).value;
        mpq_class const tg = trace(g, disc, Strategy::both, ctx).value;
        if (trace(f + g, disc, Strategy::both, ctx).value != tf + tg
            || trace(s * f, disc, Strategy::both, ctx).value != s * tf)
            o.fail("linearity fails at d=" + std::to_string(d));
    }
    o.detail = "reduced_forms == brute force for " + std::to_string(checked)
               + " discriminants d' <= 2000; deg H = h on " + std::to_string(dprimes.size())
               + " grid discriminants; linearity on 20 random (f, d)";
    return o;
}

} // namespace

int main()
{
    bool all = true;
    auto report = [&all](char const * id, char const * title, Outcome const & o) {
        all = all && o.pass;
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << o.detail
                  << std::endl;
        for (auto const & f : o.failures)
            std::cout << "       " << f << std::endl;
    };
    auto guarded = [](std::function<Outcome()> fn) {
        try {
            return fn();
        } catch (std::exception const & e) {
            Outcome o;
            o.fail(std::string("exception: ") + e.what());
            o.detail = "aborted";
            return o;
        }
    };

    report("AC1", "small-discriminant exact values", guarded(ac1_small_values));

    GridOutcome grid;
    try {
        grid = ac2_ac3_grid();
    } catch (std::exception const & e) {
        grid.congruence.fail(std::string("exception: ") + e.what());
        grid.strategies.fail(std::string("exception: ") + e.what());
    }
    report("AC2", "congruence grid", grid.congruence);
    report("AC3", "strategy equivalence", grid.strategies);
    report("AC4", "precision robustness", guarded([&] { return ac4_precision(grid.dprimes); }));
    report("AC5", "Faber self-check", guarded(ac5_faber));
    report("AC6", "lemma suite", guarded(ac6_lemma));
    report("AC7", "structural invariants", guarded([&] { return ac7_structure(grid.dprimes); }));

    std::cout << (all ? "ALL ACCEPTANCE CRITERIA PASSED" : "SOME ACCEPTANCE CRITERIA FAILED")
              << std::endl;
    return all ? 0 : 1;
}
