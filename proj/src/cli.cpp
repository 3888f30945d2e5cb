#include "singmod/cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "singmod/errors.hpp"
#include "singmod/qseries.hpp"
#include "singmod/report.hpp"

namespace singmod {

namespace {

struct RunConfig
{
    // shared
    std::optional<long> bits;
    std::string strategy = "both";
    std::string format = "text";
    unsigned jobs = 1;
    bool timing = false;

    // trace / verify / hilbert / classgroup
    std::int64_t d = 0;
    int m = 1;
    std::string poly;
    std::uint64_t p = 0;
    unsigned n = 0;

    // verify grid
    std::int64_t dmax = 0;
    std::vector<std::uint64_t> primes;
    unsigned nmax = 0;
    int mmax = 0;
    std::optional<std::int64_t> Dmax;
    bool diagnostics = false;

    // lemma
    unsigned kmax = 0;
    std::vector<std::string> pn;
};

PrecisionContext make_context(RunConfig const & cfg)
{
    PrecisionContext ctx;
    ctx.bits = cfg.bits;
    ctx.validate();
    return ctx;
}

JPolynomial parse_poly(std::string const & s)
{
    std::vector<mpz_class> c;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        mpz_class v;
        if (tok.empty() || v.set_str(tok, 10) != 0)
            throw InvalidArgument("bad polynomial coefficient '" + tok + "'");
        c.push_back(v);
    }
    if (c.empty())
        throw InvalidArgument("empty polynomial");
    return JPolynomial(std::move(c));
}

std::pair<std::uint64_t, unsigned> parse_prime_power(std::string const & s)
{
    auto const caret = s.find('^');
    std::string const base = s.substr(0, caret);
    std::string const exp = caret == std::string::npos ? "1" : s.substr(caret + 1);
    std::uint64_t p = 0;
    unsigned n = 0;
    auto r1 = std::from_chars(base.data(), base.data() + base.size(), p);
    auto r2 = std::from_chars(exp.data(), exp.data() + exp.size(), n);
    if (r1.ec != std::errc{} || r1.ptr != base.data() + base.size() || r2.ec != std::errc{}
        || r2.ptr != exp.data() + exp.size())
        throw InvalidArgument("bad prime power '" + s + "' (expected p^n)");
    return {p, n};
}

int cmd_trace(RunConfig const & cfg, std::ostream & out)
{
    PrecisionContext const ctx = make_context(cfg);
    Discriminant const d(cfg.d);
    JPolynomial const f = cfg.poly.empty() ? faber_poly(cfg.m) : parse_poly(cfg.poly);
    TraceResult const t = trace(f, d, parse_strategy(cfg.strategy), ctx);

    switch (parse_format(cfg.format)) {
    case Format::json:
        out << to_json(t).dump() << '\n';
        break;
    case Format::csv:
        out << csv_header_trace() << '\n' << to_csv(t);
        break;
    case Format::text:
        out << "d: " << d.value() << '\n'
            << "f: " << f.to_string() << '\n'
            << "value: " << t.value.get_str() << '\n'
            << "alpha: " << alpha(d) << '\n'
            << "alpha*value: " << mpq_class(alpha(d) * t.value).get_str() << '\n'
            << "strategy: " << to_string(t.strategy) << '\n'
            << "bits: " << t.bits << '\n';
        for (auto const & p : t.parts)
            out << "part: d'=" << p.part.dprime.value() << " g=" << p.part.conductor
                << " w=" << p.part.weight << " h=" << p.class_number
                << " contribution=" << p.contribution.get_str() << '\n';
        break;
    }
    return exit_ok;
}

int cmd_verify(RunConfig const & cfg, bool single, std::ostream & out, std::ostream & err)
{
    PrecisionContext const ctx = make_context(cfg);
    VerifyOptions const opts{parse_strategy(cfg.strategy), cfg.diagnostics};
    Format const fmt = parse_format(cfg.format);

    std::vector<CongruenceReport> rows;
    if (single) {
        rows.push_back(verify_congruence(cfg.d, cfg.p, cfg.n, cfg.m, ctx, opts));
    } else {
        GridSpec const grid{cfg.dmax, cfg.primes, cfg.nmax, cfg.mmax, cfg.Dmax};
        rows = verify_grid(grid, ctx, opts, cfg.jobs);
    }

    std::size_t admissible = 0, held = 0, failed = 0, violations = 0;
    for (auto const & r : rows) {
        switch (r.status) {
        case CongruenceStatus::holds:
            ++admissible;
            ++held;
            break;
        case CongruenceStatus::fails:
        case CongruenceStatus::integrality_failure:
            ++admissible;
            ++failed;
            break;
        case CongruenceStatus::hypothesis_violation:
            ++violations;
            break;
        }
    }

    if (fmt == Format::csv)
        out << csv_header_congruence() << '\n';
    for (auto const & r : rows) {
        switch (fmt) {
        case Format::json:
            out << to_json(r, cfg.timing).dump() << '\n';
            break;
        case Format::csv:
            out << to_csv(r, cfg.timing) << '\n';
            break;
        case Format::text:
            out << to_text(r, cfg.timing) << '\n';
            break;
        }
    }

    std::ostringstream summary;
    summary << "rows=" << rows.size() << " admissible=" << admissible << " holds=" << held
            << " fails=" << failed << " hypothesis-violations=" << violations;
    switch (fmt) {
    case Format::json:
        out << Json{{"summary",
                     {{"rows", rows.size()},
                      {"admissible", admissible},
                      {"holds", held},
                      {"fails", failed},
                      {"hypothesis_violations", violations}}}}
                        .dump()
            << '\n';
        break;
    case Format::csv:
        err << summary.str() << '\n';
        break;
    case Format::text:
        out << summary.str() << '\n';
        break;
    }
    if (failed) {
        err << "CONGRUENCE FAILURE: " << failed
            << " admissible row(s) violate the congruence; this indicates a bug\n";
        return exit_congruence_failure;
    }
    return exit_ok;
}

int cmd_hilbert(RunConfig const & cfg, std::ostream & out)
{
    PrecisionContext const ctx = make_context(cfg);
    Discriminant const d(cfg.d);
    HilbertResult const h = hilbert_class_poly(d, ctx);
    switch (parse_format(cfg.format)) {
    case Format::json:
        out << to_json(d, h).dump() << '\n';
        break;
    case Format::csv:
        out << "d,degree,power,coefficient,bits\n";
        for (int k = 0; k <= h.poly.degree(); ++k)
            out << d.value() << ',' << h.poly.degree() << ',' << k << ','
                << h.poly.coeff(static_cast<unsigned>(k)).get_str() << ',' << h.bits << '\n';
        break;
    case Format::text:
        out << "H_" << d.value() << "(X) = " << h.poly.to_string() << '\n'
            << "degree: " << h.poly.degree() << '\n'
            << "bits: " << h.bits << '\n';
        break;
    }
    return exit_ok;
}

int cmd_faber(RunConfig const & cfg, std::ostream & out)
{
    if (cfg.m < 0)
        throw InvalidArgument("m must be non-negative");
    JPolynomial const f = faber_poly(cfg.m);
    switch (parse_format(cfg.format)) {
    case Format::json: {
        Json c = Json::array();
        for (auto const & x : f.coeffs())
            c.push_back(x.get_str());
        out << Json{{"m", cfg.m}, {"coefficients", c}, {"polynomial", f.to_string()}}.dump()
            << '\n';
        break;
    }
    case Format::csv:
        out << "m,power,coefficient\n";
        for (int k = 0; k <= f.degree(); ++k)
            out << cfg.m << ',' << k << ',' << f.coeff(static_cast<unsigned>(k)).get_str()
                << '\n';
        break;
    case Format::text:
        out << "F_" << cfg.m << "(X) = " << f.to_string() << '\n';
        break;
    }
    return exit_ok;
}

int cmd_lemma(RunConfig const & cfg, std::ostream & out, std::ostream & err)
{
    std::vector<std::pair<std::uint64_t, unsigned>> pns;
    for (auto const & s : cfg.pn)
        pns.push_back(parse_prime_power(s));
    if (pns.empty())
        throw InvalidArgument("lemma needs at least one prime power (--pn)");
    auto const rows = check_lemma(cfg.kmax, pns);

    std::size_t bad = 0;
    for (auto const & r : rows)
        bad += (!r.holds || !r.routes_agree);

    Format const fmt = parse_format(cfg.format);
    if (fmt == Format::csv)
        out << csv_header_lemma() << '\n';
    for (auto const & r : rows) {
        if (fmt == Format::json)
            out << to_json(r).dump() << '\n';
        else if (fmt == Format::csv)
            out << to_csv(r) << '\n';
        else if (!r.holds || !r.routes_agree)
            out << "FAIL k=" << r.k << " p=" << r.p << " n=" << r.n
                << " S=" << r.sum.get_str() << " v_p=" << valuation_string(r.valuation)
                << " routes_agree=" << r.routes_agree << '\n';
    }
    if (fmt == Format::text) {
        for (auto const & [p, n] : pns) {
            std::size_t total = 0, ok = 0, oracle = 0;
            for (auto const & r : rows) {
                if (r.p != p || r.n != n)
                    continue;
                ++total;
                ok += r.holds && r.routes_agree;
                oracle += r.oracle_used;
            }
            out << p << "^" << n << ": k=0.." << cfg.kmax << " " << ok << "/" << total
                << " hold with all routes agreeing (complex oracle on " << oracle << ")\n";
        }
    }
    if (bad) {
        err << "LEMMA FAILURE: " << bad << " row(s) failed\n";
        return exit_congruence_failure;
    }
    return exit_ok;
}

int cmd_classgroup(RunConfig const & cfg, std::ostream & out)
{
    Discriminant const d(cfg.d);
    auto const parts = suborder_decomposition(d);
    Format const fmt = parse_format(cfg.format);
    if (fmt == Format::json) {
        Json jp = Json::array();
        for (auto const & part : parts) {
            Json forms = Json::array();
            for (auto const & f : reduced_forms(part.dprime))
                forms.push_back({f.a, f.b, f.c});
            jp.push_back({{"dprime", part.dprime.value()},
                          {"conductor", part.conductor},
                          {"weight", part.weight},
                          {"class_number", forms.size()},
                          {"forms", std::move(forms)}});
        }
        out << Json{{"d", d.value()},
                    {"alpha", alpha(d)},
                    {"fundamental_discriminant", fundamental_discriminant(d)},
                    {"parts", std::move(jp)}}
                        .dump()
            << '\n';
        return exit_ok;
    }
    if (fmt == Format::csv) {
        out << "d,dprime,conductor,weight,a,b,c\n";
        for (auto const & part : parts)
            for (auto const & f : reduced_forms(part.dprime))
                out << d.value() << ',' << part.dprime.value() << ',' << part.conductor
                    << ',' << part.weight << ',' << f.a << ',' << f.b << ',' << f.c << '\n';
        return exit_ok;
    }
    out << "d: " << d.value() << " alpha: " << alpha(d)
        << " D_K: " << fundamental_discriminant(d) << '\n';
    for (auto const & part : parts) {
        auto const forms = reduced_forms(part.dprime);
        out << "d'=" << part.dprime.value() << " g=" << part.conductor << " w=" << part.weight
            << " h=" << forms.size() << ":";
        for (auto const & f : forms)
            out << ' ' << f;
        out << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Traces of singular moduli and their p-adic congruences"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_shared = [&cfg](CLI::App * sub) {
        sub->add_option("--bits", cfg.bits, "working precision override (>= 64)");
        sub->add_option("--strategy", cfg.strategy, "numeric, exact or both")
                ->check(CLI::IsMember({"numeric", "exact", "both"}));
        sub->add_option("--format", cfg.format, "text, json or csv")
                ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    };

    auto * trace_cmd = app.add_subcommand("trace", "weighted trace t_f(d)");
    add_shared(trace_cmd);
    trace_cmd->add_option("--d", cfg.d, "discriminant d (d = 0, 3 mod 4)")->required();
    auto * m_opt = trace_cmd->add_option("--m", cfg.m, "use f = F_m");
    trace_cmd->add_option("--poly", cfg.poly, "f as comma-separated coefficients, constant first")
            ->excludes(m_opt);

    auto * verify_cmd = app.add_subcommand("verify", "check alpha(d) t(p^2n d) = 0 mod p^n");
    add_shared(verify_cmd);
    auto * vd = verify_cmd->add_option("--d", cfg.d);
    auto * vp = verify_cmd->add_option("--p", cfg.p);
    auto * vn = verify_cmd->add_option("--n", cfg.n);
    auto * vm = verify_cmd->add_option("--m", cfg.m);
    auto * gd = verify_cmd->add_option("--dmax", cfg.dmax);
    auto * gp = verify_cmd->add_option("--primes", cfg.primes)->delimiter(',');
    auto * gn = verify_cmd->add_option("--nmax", cfg.nmax);
    auto * gm = verify_cmd->add_option("--mmax", cfg.mmax);
    auto * gD = verify_cmd->add_option("--Dmax", cfg.Dmax, "skip tuples with p^2n d above this");
    verify_cmd->add_flag("--diagnostics", cfg.diagnostics,
                         "also evaluate tuples whose prime is not split");
    verify_cmd->add_flag("--timing", cfg.timing, "report wall-clock milliseconds per row");

    auto * hilbert_cmd = app.add_subcommand("hilbert", "Hilbert class polynomial H_d");
    add_shared(hilbert_cmd);
    hilbert_cmd->add_option("--d", cfg.d)->required();

    auto * faber_cmd = app.add_subcommand("faber", "Faber polynomial F_m");
    add_shared(faber_cmd);
    faber_cmd->add_option("--m", cfg.m)->required();

    auto * lemma_cmd = app.add_subcommand("lemma", "sum of (x-1)^k over p^n-th roots of unity");
    add_shared(lemma_cmd);
    lemma_cmd->add_option("--kmax", cfg.kmax)->required();
    lemma_cmd->add_option("--pn", cfg.pn, "prime powers such as 7^2,2^3")
            ->delimiter(',')
            ->required();

    auto * classgroup_cmd = app.add_subcommand("classgroup", "reduced forms per sub-order");
    add_shared(classgroup_cmd);
    classgroup_cmd->add_option("--d", cfg.d)->required();

    std::vector<char const *> argv{"singmod"};
    for (auto const & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return exit_ok;
    } catch (CLI::ParseError const & e) {
        err << "error: " << e.what() << '\n';
        if (e.get_exit_code() == 0)
            return exit_ok;
        return exit_usage;
    }

    try {
        if (*trace_cmd)
            return cmd_trace(cfg, out);
        if (*verify_cmd) {
            bool const single = vd->count() || vp->count() || vn->count() || vm->count();
            bool const grid = gd->count() || gp->count() || gn->count() || gm->count()
                              || gD->count();
            if (single == grid)
                throw InvalidArgument("verify takes either --d --p --n --m or "
                                      "--dmax --primes --nmax --mmax");
            if (single && !(vd->count() && vp->count() && vn->count() && vm->count()))
                throw InvalidArgument("single-tuple verify needs --d, --p, --n and --m");
            if (grid && !(gd->count() && gp->count() && gn->count() && gm->count()))
                throw InvalidArgument("grid verify needs --dmax, --primes, --nmax and --mmax");
            return cmd_verify(cfg, single, out, err);
        }
        if (*hilbert_cmd)
            return cmd_hilbert(cfg, out);
        if (*faber_cmd)
            return cmd_faber(cfg, out);
        if (*lemma_cmd)
            return cmd_lemma(cfg, out, err);
        if (*classgroup_cmd)
            return cmd_classgroup(cfg, out);
    } catch (InvalidArgument const & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (InternalCheckFailure const & e) {
        err << "internal check failed: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

} // namespace singmod
