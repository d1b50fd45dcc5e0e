#include "cliffq/series.hpp"

#include <sstream>

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

std::string render(const std::vector<mpz_class>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << 't';
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace

std::string RationalSeries::to_string() const {
  return "(" + render(numerator) + ")/(" + render(denominator) + ")";
}

std::vector<mpz_class> one_minus_t_power(unsigned step, unsigned power) {
  std::vector<mpz_class> result{1};
  for (unsigned i = 0; i < power; ++i) {
    std::vector<mpz_class> next(result.size() + step, 0);
    for (std::size_t k = 0; k < result.size(); ++k) {
      next[k] += result[k];
      next[k + step] -= result[k];
    }
    result = std::move(next);
  }
  return result;
}

std::vector<mpz_class> series_expand(const RationalSeries& s, unsigned order) {
  if (s.denominator.empty() || abs(s.denominator.front()) != 1) {
    throw NonExpandable("denominator " + s.to_string() + " does not have unit constant term");
  }
  const mpz_class& d0 = s.denominator.front();
  std::vector<mpz_class> out(order + 1, 0);
  for (unsigned n = 0; n <= order; ++n) {
    mpz_class acc = n < s.numerator.size() ? s.numerator[n] : mpz_class(0);
    for (std::size_t k = 1; k < s.denominator.size() && k <= n; ++k) {
      acc -= s.denominator[k] * out[n - k];
    }
    out[n] = acc * d0;  // d0 = +-1 is its own inverse
  }
  return out;
}

}  // namespace cliffq
