#pragma once

#include "zm/special_fn.hpp"

#include <cstddef>

namespace zm {

struct SeriesValue {
    double value = 0.0;
    double truncation = 0.0;  // estimated size of what was left out
};

// sum_{m>=0} ln((a)_m) ln(m+a) / (m+a)^{2 sigma}
SeriesValue series_logpoch_log(double sigma, double a);
// sum_{m>=0} ln((a)_m) / (m+a)^{2 sigma}
SeriesValue series_logpoch(double sigma, double a);
// sum_{m>=0} sum_{n<m} (-1)^{m+n} ln(n+a) / (m+a)^{2 sigma}, sigma > 1/2
SeriesValue series_alt_double(double sigma, double a);

// sum_{m>=1} mu(m) M(m-1) m^{-2 sigma}, summed in Abel form to the sieve limit
SeriesValue series_mobius(double sigma);
// the raw partial sum up to N together with an absolute-sum bound on the remainder
SeriesValue series_mobius_partial(double sigma, std::size_t N);
// sum_{m>=1} d(m) D(m-1) m^{-2 sigma} with the divisor-problem main terms summed in closed form
SeriesValue series_divisor(double sigma);
// sum_{m>=1} sum_{n<m} chi(n) chi*(m) m^{-2 sigma} through residue classes (complex)
Complex series_character(double sigma, const DirichletCharacter& chi);

// sieve limit used by the two arithmetic series
std::size_t arithmetic_sieve_limit();

}  // namespace zm
