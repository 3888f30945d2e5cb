#pragma once

/*
 * Exact integer q-expansions of the classical modular forms and of the
 * j-function, and the Faber polynomials F_m in Z[j] characterised by
 *
 *   F_m(j(q)) = q^{-m} + O(q),
 *
 * i.e. (j - 744) | T_0(m) with the coset-sum normalisation.
 */

#include "singmod/series.hpp"

namespace singmod {

/// prod_{n>=1} (1 - q^n) through q^N, via Euler's pentagonal number
/// theorem. The q^{1/24} prefactor of eta is not included.
LaurentSeries eta_series(long N);

/// E_4 (k = 4) or E_6 (k = 6) through q^N.
LaurentSeries eisenstein(int k, long N);

/// Delta = q prod (1 - q^n)^24 through q^N.
LaurentSeries delta_series(long N);

/// j = E_4^3 / Delta from q^{-1} through q^N. Cross-checked against
/// E_6^2 / Delta + 1728; throws ConsistencyFailure on disagreement.
LaurentSeries j_expansion(long N);

/// Monic F_m with F_m(j) = q^{-m} + O(q); F_0 = 1.
JPolynomial faber_poly(int m);

/// f(j(q)) through q^N.
LaurentSeries poly_expansion(JPolynomial const & f, long N);

} // namespace singmod
