#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cliffq/linalg.hpp"
#include "cliffq/poly_matrix.hpp"
#include "cliffq/qform.hpp"
#include "cliffq/series.hpp"

namespace cliffq {

// ------------------------------------------------------------ rewriting

/// Letters x, y, z are 0, 1, 2. A normal-form word is strictly increasing
/// and is identified with the bitmask of its letters (x = 1, y = 2, z = 4).
template <class Coeff>
struct CliffordWord {
  Coeff coefficient;
  std::vector<std::uint8_t> letters;
};

template <class Coeff>
using CliffordNormalForm = std::array<Coeff, 8>;

enum class RewriteOrder { Leftmost, Rightmost, Random };

struct RewriteStrategy {
  RewriteOrder order = RewriteOrder::Leftmost;
  std::uint64_t seed = 0;
};

/// Rewrites words in the Clifford algebra of a symmetric Gram matrix g with
/// x_i x_i -> g_ii and x_j x_i -> 2 g_ij - x_i x_j (i < j) until every word
/// is strictly increasing. Coeff is Scalar at a fiber or Poly over the base.
template <class Coeff>
class CliffordRewriter {
 public:
  CliffordRewriter(std::array<std::array<Coeff, 3>, 3> gram, Coeff zero)
      : gram_(std::move(gram)), zero_(std::move(zero)) {}

  const Coeff& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const Coeff& zero() const { return zero_; }

  CliffordNormalForm<Coeff> reduce(std::span<const CliffordWord<Coeff>> words,
                                   RewriteStrategy strategy = {}) const {
    CliffordNormalForm<Coeff> out;
    out.fill(zero_);
    std::mt19937_64 rng(strategy.seed);
    std::vector<CliffordWord<Coeff>> pending(words.begin(), words.end());
    std::vector<std::size_t> sites;
    while (!pending.empty()) {
      CliffordWord<Coeff> w = std::move(pending.back());
      pending.pop_back();
      sites.clear();
      for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (w.letters[i] >= w.letters[i + 1]) sites.push_back(i);
      }
      if (sites.empty()) {
        unsigned mask = 0;
        for (auto l : w.letters) mask |= 1U << l;
        out[mask] = out[mask] + w.coefficient;
        continue;
      }
      std::size_t at = sites.front();
      if (strategy.order == RewriteOrder::Rightmost) {
        at = sites.back();
      } else if (strategy.order == RewriteOrder::Random) {
        at = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
      }
      const auto a = w.letters[at];
      const auto b = w.letters[at + 1];
      std::vector<std::uint8_t> shorter;
      shorter.reserve(w.letters.size() - 2);
      shorter.insert(shorter.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(at));
      shorter.insert(shorter.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(at + 2), w.letters.end());
      if (a == b) {
        pending.push_back({w.coefficient * gram_[a][a], std::move(shorter)});
        continue;
      }
      const Coeff& g = gram_[a][b];
      pending.push_back({w.coefficient * (g + g), std::move(shorter)});
      std::swap(w.letters[at], w.letters[at + 1]);
      pending.push_back({zero_ - w.coefficient, std::move(w.letters)});
    }
    return out;
  }

  /// Product of two normal forms.
  CliffordNormalForm<Coeff> multiply(const CliffordNormalForm<Coeff>& lhs,
                                     const CliffordNormalForm<Coeff>& rhs) const {
    std::vector<CliffordWord<Coeff>> words;
    for (unsigned a = 0; a < 8; ++a) {
      if (is_zero(lhs[a])) continue;
      for (unsigned b = 0; b < 8; ++b) {
        if (is_zero(rhs[b])) continue;
        std::vector<std::uint8_t> letters = letters_of(a);
        auto tail = letters_of(b);
        letters.insert(letters.end(), tail.begin(), tail.end());
        words.push_back({lhs[a] * rhs[b], std::move(letters)});
      }
    }
    return reduce(words);
  }

  static std::vector<std::uint8_t> letters_of(unsigned mask) {
    std::vector<std::uint8_t> letters;
    for (std::uint8_t l = 0; l < 3; ++l) {
      if (mask & (1U << l)) letters.push_back(l);
    }
    return letters;
  }

 private:
  static bool is_zero(const Coeff& c) { return c.is_zero(); }

  std::array<std::array<Coeff, 3>, 3> gram_;
  Coeff zero_;
};

using ScalarWord = CliffordWord<Scalar>;

/// Normal form of a linear combination of words at a fiber with Gram matrix q.
CliffordNormalForm<Scalar> reduce_word(std::span<const ScalarWord> words, const ScalarMatrix& q,
                                       RewriteStrategy strategy = {});

/// "2*q12 - x*y" style rendering of a normal form.
std::string to_string(const CliffordNormalForm<Scalar>& element);

// ------------------------------------------------------- fiber algebras

/// Coordinates on the basis (1, e1, e2, e3).
using AlgebraElement = std::array<Scalar, 4>;

/// Rank-4 algebra given by structure constants on a basis whose first
/// element is the unit, together with a trace functional.
class FiberAlgebra {
 public:
  using Table = std::array<std::array<AlgebraElement, 4>, 4>;

  FiberAlgebra(Field field, Table products, AlgebraElement trace);

  Field field() const { return field_; }
  const AlgebraElement& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  const AlgebraElement& trace_vector() const { return trace_; }

  AlgebraElement basis(std::size_t i) const;
  AlgebraElement one() const { return basis(0); }
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  Scalar trace(const AlgebraElement& a) const;

  /// First violated invariant (unit, trace normalization, associativity,
  /// Cayley-Hamilton on the basis), or nullopt.
  std::optional<std::string> violated_invariant() const;

  Table& mutable_products() { return products_; }

 private:
  Field field_;
  Table products_;
  AlgebraElement trace_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Scalar& c, const AlgebraElement& a);
bool is_zero(const AlgebraElement& a);

/// Even Clifford algebra of a symmetric 3x3 scalar matrix on the basis
/// (1, yz - q23, zx - q13, xy - q12), products computed by rewriting.
FiberAlgebra fiber_algebra(const ScalarMatrix& q);

/// Path algebra of the Kronecker quiver on (1, e1 - e2, v1, v2).
FiberAlgebra kronecker_quiver_algebra(Field field);

/// P_ij = tr(e_i e_j) / 2 on the traceless basis (e1, e2, e3).
ScalarMatrix trace_pairing_fiber(const FiberAlgebra& alg);

/// The same pairing computed over k[u, v, w] by rewriting with the form's
/// polynomial entries as Gram matrix. Equals -adjugate3(q.entries()).
PolyMatrix trace_pairing_global(const QForm& q);

/// Q up to sign from its trace pairing: adjugate3(P) / sqrt(-det3(P)).
/// Throws NotRecoverable.
PolyMatrix recover_form(const PolyMatrix& pairing);

enum class AlgebraType {
  CentralSimple = 1,
  DegenerateClifford = 2,
  DoubleLineClifford = 3,
  LocalCommutative = 4,
  KroneckerQuiver = 5,
};
const char* to_string(AlgebraType type);
AlgebraType algebra_type_of_rank(std::size_t form_rank);

/// Case analysis on the rank of the trace pairing on the traceless part.
/// Throws InvalidAlgebra when the structure constants break an invariant.
AlgebraType classify(const FiberAlgebra& alg);

/// a^2 - tr(a) a + (tr(a)^2 - tr(a^2)) / 2 == 0.
bool cayley_hamilton_check(const FiberAlgebra& alg, const AlgebraElement& a);

/// discriminant(q)(p) != 0, cross-checked against classify.
bool azumaya_at(const QForm& q, const FiberPoint& p);

/// (1 + t^{2(a1+a2+d)} + t^{2(a2+a3+d)} + t^{2(a3+a1+d)}) / (1 - t^2)^3.
/// NonExpandable if a generator degree is negative.
RationalSeries gamma_hilbert_series(const DegreePattern& pattern);
inline RationalSeries gamma_hilbert_series(const QForm& q) { return gamma_hilbert_series(q.pattern()); }

/// Counts u^i v^j w^k * g of degree n (deg u = deg v = deg w = 2) over the
/// module generators g = 1, x1x2, x2x3, x3x1. OddDegree for odd n.
mpz_class gamma_dimension_bruteforce(const DegreePattern& pattern, int n);

}  // namespace cliffq
