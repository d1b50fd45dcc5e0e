#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliffq {

/// Summand of a vector bundle on P^2: O(n) or the cotangent twist Omega^1(n).
struct BundleItem {
  enum class Kind { LineBundle, CotangentTwist };
  Kind kind = Kind::LineBundle;
  int n = 0;

  static BundleItem line(int n) { return {Kind::LineBundle, n}; }
  static BundleItem cotangent(int n) { return {Kind::CotangentTwist, n}; }
  int rank() const { return kind == Kind::LineBundle ? 1 : 2; }

  friend bool operator==(const BundleItem&, const BundleItem&) = default;
};

struct BundleDescriptor {
  std::vector<BundleItem> summands;

  int rank() const;
  /// "Omega^1 + O(-2)", "O(-1)^3" style.
  std::string to_string() const;
  BundleDescriptor concat(const BundleDescriptor& other) const;

  friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;
};

enum class DelPezzoTag { F23, F24, F25plus, F25minus };

const char* to_string(DelPezzoTag tag);
/// Accepts F23, F24, F25plus, F25minus. Throws UnknownTag.
DelPezzoTag parse_tag(std::string_view text);
const std::vector<DelPezzoTag>& all_tags();

/// (n + 1)(n + 2) / 2.
std::int64_t chi_O(std::int64_t n);
/// Additive over summands; Omega^1(n) contributes 3 chi_O(n - 1) - chi_O(n).
std::int64_t chi_bundle(const BundleDescriptor& b, std::int64_t twist = 0);

struct ChernClasses {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
};
/// Whitney product over summands. A trivial extra summand changes nothing.
ChernClasses chern_c1_c2(const BundleDescriptor& b, bool plus_trivial_summand = false);

/// 48 - 6d + 2 chi(A/O), base P^2.
std::int64_t minus_k3_via_euler(std::int64_t d, std::int64_t chi_AO);
/// 6 K^2 + 3 K.D + D^2 - 2 c2.
std::int64_t minus_k3_via_chern(std::int64_t K2, std::int64_t KD, std::int64_t D2, std::int64_t c2);
/// Same with coefficient 1 on c2, kept for comparison.
std::int64_t minus_k3_via_chern_printed(std::int64_t K2, std::int64_t KD, std::int64_t D2, std::int64_t c2);
/// Base P^2 with a degree-d discriminant: 54 - 9d + d^2 - 2 c2.
std::int64_t minus_k3_via_chern_p2(std::int64_t d, std::int64_t c2);

std::int64_t chi_top_conic_bundle(std::int64_t chi_top_Z, std::int64_t chi_top_D);
/// 3d - d^2 + nodes. Throws IndexOutOfRange for d < 1 or nodes < 0.
std::int64_t chi_top_plane_curve(std::int64_t d, std::int64_t nodes);

struct InvariantReport {
  DelPezzoTag tag = DelPezzoTag::F23;
  BundleDescriptor vstar;
  std::int64_t d = 0;
  std::int64_t chi_AO = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t minus_K3 = 0;
  std::int64_t minus_K3_euler = 0;
  std::int64_t minus_K3_chern = 0;
  std::int64_t minus_K3_chern_printed = 0;
  std::int64_t h12 = 0;
};

/// Throws InconsistentInvariants when the two -K^3 paths disagree or
/// c1 differs from -d.
InvariantReport report(DelPezzoTag tag);

}  // namespace cliffq
