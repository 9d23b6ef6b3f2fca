#pragma once

namespace wegner {

/* Error function and standard normal CDF, accurate to ~1e-15 absolute.
 * Two regimes: an all-positive-term power series for |x| < 2 and a Lentz
 * continued fraction for the complementary function beyond, so both tails
 * keep full absolute accuracy. */
double erf(double x);
double erfc(double x);

double normal_cdf(double x);
double normal_density(double x);

// P( N(0, variance) in [-halfwidth, halfwidth] )
double normal_symmetric_interval(double halfwidth, double variance);

// P( N(0, variance) in [lo, hi] )
double normal_interval(double lo, double hi, double variance);

}  // namespace wegner
