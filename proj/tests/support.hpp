#pragma once

#include <array>
#include <random>
#include <string>

#include "cliffq/poly.hpp"
#include "cliffq/poly_matrix.hpp"
#include "cliffq/qform.hpp"
#include "cliffq/scalar.hpp"

namespace cliffq::test {

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint64_t p) { return Field::prime(p); }

inline Poly P(const std::string& text, Field f = Field::rationals()) { return parse_poly(text, Ring::uvw(), f); }

inline Scalar S(long v, Field f = Field::rationals()) { return Scalar(f, v); }

inline FiberPoint pt(long x, long y, long z, Field f) { return FiberPoint(S(x, f), S(y, f), S(z, f)); }

inline PolyMatrix sym3(const std::array<std::string, 6>& upper, Field f = Field::rationals()) {
  std::array<Poly, 6> polys{};
  for (std::size_t i = 0; i < 6; ++i) polys[i] = P(upper[i], f);
  return PolyMatrix::symmetric3(polys);
}

inline QForm diag_uvw(Field f = Field::rationals()) {
  return QForm(DegreePattern{{0, 0, 0}, 1}, sym3({"u", "0", "0", "v", "0", "w"}, f));
}

/// Random point of P^2 over F_p (never all zero).
inline FiberPoint random_point(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<long> c(0, static_cast<long>(f.characteristic()) - 1);
  for (;;) {
    long x = c(rng), y = c(rng), z = c(rng);
    if (x != 0 || y != 0 || z != 0) return pt(x, y, z, f);
  }
}

inline std::vector<Scalar> coords(const FiberPoint& p) { return {p.coordinates().begin(), p.coordinates().end()}; }

}  // namespace cliffq::test
