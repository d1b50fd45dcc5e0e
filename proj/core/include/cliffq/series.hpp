#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace cliffq {

/// numerator(t) / denominator(t) with integer coefficients, lowest power
/// first. The denominator's constant term must be a unit (+-1) so the
/// expansion stays integral.
struct RationalSeries {
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> denominator;

  std::string to_string() const;
};

/// (1 - t^step)^power as a coefficient vector.
std::vector<mpz_class> one_minus_t_power(unsigned step, unsigned power);

/// First order+1 power-series coefficients; NonExpandable when the
/// denominator's constant term is not +-1.
std::vector<mpz_class> series_expand(const RationalSeries& s, unsigned order);

}  // namespace cliffq
