#include "singmod/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "singmod/errors.hpp"

namespace singmod {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(mpz_class c)
{
    return IntPolynomial(std::vector<mpz_class>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(unsigned degree)
{
    std::vector<mpz_class> c(degree + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(unsigned k) const
{
    return k < coeffs_.size() ? coeffs_[k] : mpz_class(0);
}

mpz_class IntPolynomial::operator()(mpz_class const & x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial operator+(IntPolynomial const & f, IntPolynomial const & g)
{
    std::vector<mpz_class> c(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        c[i] += f.coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i)
        c[i] += g.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(IntPolynomial const & f, IntPolynomial const & g)
{
    return f + mpz_class(-1) * g;
}

IntPolynomial operator*(mpz_class const & s, IntPolynomial const & f)
{
    std::vector<mpz_class> c = f.coeffs_;
    for (auto & x : c)
        x *= s;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(IntPolynomial const & f, IntPolynomial const & g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    std::vector<mpz_class> c(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            c[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char const * var) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        mpz_class const & c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class const mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << "*";
        os << var;
        if (k > 1)
            os << "^" << k;
    }
    return os.str();
}

std::ostream & operator<<(std::ostream & o, IntPolynomial const & f)
{
    return o << f.to_string();
}

LaurentSeries::LaurentSeries(long lead, std::vector<mpz_class> coeffs)
    : lead_(lead)
    , coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("LaurentSeries: empty coefficient list");
}

LaurentSeries LaurentSeries::constant(mpz_class const & c, long order)
{
    if (order < 0)
        throw std::invalid_argument("LaurentSeries::constant: negative order");
    std::vector<mpz_class> v(static_cast<std::size_t>(order) + 1, 0);
    v[0] = c;
    return {0, std::move(v)};
}

mpz_class const & LaurentSeries::coeff(long e) const
{
    static mpz_class const zero = 0;
    if (e > order())
        throw std::out_of_range("coefficient of q^" + std::to_string(e)
                                + " is beyond the truncation order "
                                + std::to_string(order()));
    if (e < lead_)
        return zero;
    return coeffs_[static_cast<std::size_t>(e - lead_)];
}

LaurentSeries LaurentSeries::truncated(long N) const
{
    if (N < lead_)
        throw std::invalid_argument("truncation below the lead exponent");
    if (N > order())
        throw std::out_of_range("cannot extend a series past its order");
    return {lead_, {coeffs_.begin(), coeffs_.begin() + (N - lead_ + 1)}};
}

LaurentSeries LaurentSeries::shifted(long k) const
{
    return {lead_ + k, coeffs_};
}

long LaurentSeries::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return lead_ + static_cast<long>(i);
    return order() + 1;
}

LaurentSeries LaurentSeries::inverse() const
{
    long const v = valuation();
    if (v > order())
        throw std::domain_error("inverse of a series with no known nonzero coefficient");
    mpz_class const & u = coeff(v);
    if (u != 1 && u != -1)
        throw std::domain_error("series inverse needs a unit leading coefficient");

    // x = u q^v (1 + ...), known through order(); the inverse is known
    // through order() - 2v.
    std::size_t const off = static_cast<std::size_t>(v - lead_);
    std::size_t const len = coeffs_.size() - off;
    std::vector<mpz_class> r(len, 0);
    r[0] = u;
    for (std::size_t n = 1; n < len; ++n) {
        mpz_class s = 0;
        for (std::size_t k = 1; k <= n; ++k)
            s += coeffs_[off + k] * r[n - k];
        r[n] = -u * s;
    }
    return {-v, std::move(r)};
}

LaurentSeries LaurentSeries::pow(unsigned k) const
{
    if (k == 0)
        return constant(1, order() - lead_);
    LaurentSeries base = *this;
    while (!(k & 1U)) {
        base = base * base;
        k >>= 1;
    }
    LaurentSeries result = base;
    while (k >>= 1) {
        base = base * base;
        if (k & 1U)
            result = result * base;
    }
    return result;
}

LaurentSeries operator+(LaurentSeries const & x, LaurentSeries const & y)
{
    long const lead = std::min(x.lead_, y.lead_);
    long const ord = std::min(x.order(), y.order());
    std::vector<mpz_class> c(static_cast<std::size_t>(ord - lead + 1), 0);
    for (long e = lead; e <= ord; ++e)
        c[e - lead] = x.coeff(e) + y.coeff(e);
    return {lead, std::move(c)};
}

LaurentSeries operator-(LaurentSeries const & x, LaurentSeries const & y)
{
    return x + mpz_class(-1) * y;
}

LaurentSeries operator*(mpz_class const & s, LaurentSeries const & x)
{
    std::vector<mpz_class> c = x.coeffs_;
    for (auto & v : c)
        v *= s;
    return {x.lead_, std::move(c)};
}

LaurentSeries operator*(LaurentSeries const & x, LaurentSeries const & y)
{
    long const lead = x.lead_ + y.lead_;
    long const ord = std::min(x.order() + y.lead_, y.order() + x.lead_);
    std::size_t const len = static_cast<std::size_t>(ord - lead + 1);
    std::vector<mpz_class> c(len, 0);
    for (std::size_t i = 0; i < len && i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < len && j < y.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), x.coeffs_[i].get_mpz_t(),
                       y.coeffs_[j].get_mpz_t());
    }
    return {lead, std::move(c)};
}

LaurentSeries operator/(LaurentSeries const & x, LaurentSeries const & y)
{
    return x * y.inverse();
}

std::ostream & operator<<(std::ostream & o, LaurentSeries const & s)
{
    bool first = true;
    for (long e = s.lead_exponent(); e <= s.order(); ++e) {
        mpz_class const & c = s.coeff(e);
        if (c == 0)
            continue;
        o << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        mpz_class const mag = abs(c);
        if (e == 0) {
            o << mag;
            continue;
        }
        if (mag != 1)
            o << mag << "*";
        o << "q";
        if (e != 1)
            o << "^" << e;
    }
    if (first)
        o << "0";
    return o << " + O(q^" << s.order() + 1 << ")";
}

} // namespace singmod
