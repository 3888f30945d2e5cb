#include "singmod/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "singmod/errors.hpp"

namespace singmod {

Format parse_format(std::string_view s)
{
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

std::string valuation_string(std::optional<unsigned> v)
{
    return v ? std::to_string(*v) : "inf";
}

namespace {

Json coefficient_array(IntPolynomial const & f)
{
    Json a = Json::array();
    for (auto const & c : f.coeffs())
        a.push_back(c.get_str());
    return a;
}

std::string millis_string(double ms, bool with_timing)
{
    if (!with_timing)
        return "0";
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << ms;
    return os.str();
}

mpq_class scaled_value(CongruenceReport const & r)
{
    return mpq_class(r.trace_value * r.alpha);
}

bool integral(CongruenceReport const & r)
{
    return r.computed && scaled_value(r).get_den() == 1;
}

Json log2_or_null(double x)
{
    return std::isfinite(x) ? Json(x) : Json(nullptr);
}

} // namespace

Json to_json(TraceResult const & t)
{
    Json parts = Json::array();
    for (auto const & p : t.parts) {
        parts.push_back({{"dprime", p.part.dprime.value()},
                         {"conductor", p.part.conductor},
                         {"weight", p.part.weight},
                         {"class_number", p.class_number},
                         {"contribution", p.contribution.get_str()}});
    }
    return {{"d", t.d.value()},
            {"f", coefficient_array(t.f)},
            {"value", t.value.get_str()},
            {"alpha", alpha(t.d)},
            {"parts", std::move(parts)},
            {"strategy", std::string(to_string(t.strategy))},
            {"bits", t.bits}};
}

Json to_json(CongruenceReport const & r, bool with_timing)
{
    Json classes = Json::array();
    for (auto const & [dp, h] : r.class_numbers)
        classes.push_back({{"dprime", dp}, {"h", h}});
    Json j{{"d", r.d},
           {"p", r.p},
           {"n", r.n},
           {"m", r.m},
           {"D", r.D},
           {"alpha", r.alpha}};
    if (r.computed) {
        j["trace"] = r.trace_value.get_str();
        j["value"] = scaled_value(r).get_str();
        j["valuation"] = integral(r) ? Json(valuation_string(r.valuation)) : Json(nullptr);
    } else {
        j["trace"] = nullptr;
        j["value"] = nullptr;
        j["valuation"] = nullptr;
    }
    j["holds"] = r.holds;
    j["status"] = std::string(to_string(r.status));
    j["class_numbers"] = std::move(classes);
    j["strategy"] = std::string(to_string(r.strategy));
    j["bits"] = r.bits;
    j["millis"] = with_timing ? Json(std::round(r.millis * 10) / 10) : Json(0);
    return j;
}

Json to_json(LemmaReport const & r)
{
    return {{"k", r.k},
            {"p", r.p},
            {"n", r.n},
            {"sum", r.sum.get_str()},
            {"valuation", valuation_string(r.valuation)},
            {"holds", r.holds},
            {"routes_agree", r.routes_agree},
            {"oracle", r.oracle_used ? "used" : "skipped"}};
}

Json to_json(Discriminant d, HilbertResult const & h)
{
    return {{"d", d.value()},
            {"degree", h.poly.degree()},
            {"coefficients", coefficient_array(h.poly)},
            {"polynomial", h.poly.to_string()},
            {"bits", h.bits},
            {"max_distance_log2", log2_or_null(h.max_distance_log2)}};
}

std::string csv_header_congruence()
{
    return "d,p,n,m,alpha,value,valuation,holds,status,bits,millis";
}

std::string to_csv(CongruenceReport const & r, bool with_timing)
{
    std::ostringstream os;
    os << r.d << ',' << r.p << ',' << r.n << ',' << r.m << ',' << r.alpha << ',';
    if (r.computed)
        os << scaled_value(r).get_str();
    os << ',';
    if (integral(r))
        os << valuation_string(r.valuation);
    os << ',' << (r.holds ? "true" : "false") << ',' << to_string(r.status) << ','
       << r.bits << ',' << millis_string(r.millis, with_timing);
    return os.str();
}

std::string csv_header_lemma()
{
    return "k,p,n,sum,valuation,holds,routes_agree,oracle";
}

std::string to_csv(LemmaReport const & r)
{
    std::ostringstream os;
    os << r.k << ',' << r.p << ',' << r.n << ',' << r.sum.get_str() << ','
       << valuation_string(r.valuation) << ',' << (r.holds ? "true" : "false") << ','
       << (r.routes_agree ? "true" : "false") << ','
       << (r.oracle_used ? "used" : "skipped");
    return os.str();
}

std::string csv_header_trace()
{
    return "d,dprime,conductor,weight,class_number,contribution,value,strategy,bits";
}

std::string to_csv(TraceResult const & t)
{
    std::ostringstream os;
    for (auto const & p : t.parts) {
        os << t.d.value() << ',' << p.part.dprime.value() << ',' << p.part.conductor
           << ',' << p.part.weight << ',' << p.class_number << ','
           << p.contribution.get_str() << ',' << t.value.get_str() << ','
           << to_string(t.strategy) << ',' << t.bits << '\n';
    }
    return os.str();
}

std::string to_text(CongruenceReport const & r, bool with_timing)
{
    std::ostringstream os;
    os << "d=" << r.d << " p=" << r.p << " n=" << r.n << " m=" << r.m << " D=" << r.D
       << " alpha=" << r.alpha << " status=" << to_string(r.status);
    if (r.computed) {
        os << " value=" << scaled_value(r).get_str();
        if (integral(r))
            os << " v_p=" << valuation_string(r.valuation);
        os << " bits=" << r.bits;
    }
    if (with_timing)
        os << " millis=" << millis_string(r.millis, true);
    return os.str();
}

} // namespace singmod
