#include "cliffq/invariants.hpp"

#include <array>

#include "cliffq/catalog.hpp"
#include "cliffq/errors.hpp"

namespace cliffq {

int BundleDescriptor::rank() const {
  int r = 0;
  for (const auto& s : summands) r += s.rank();
  return r;
}

namespace {

std::string twist_suffix(int n) { return n == 0 ? "" : "(" + std::to_string(n) + ")"; }

std::string item_name(const BundleItem& item) {
  if (item.kind == BundleItem::Kind::CotangentTwist) return "Omega^1" + twist_suffix(item.n);
  return "O(" + std::to_string(item.n) + ")";
}

}  // namespace

std::string BundleDescriptor::to_string() const {
  if (summands.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands.size();) {
    std::size_t j = i;
    while (j < summands.size() && summands[j] == summands[i]) ++j;
    if (!out.empty()) out += " + ";
    out += item_name(summands[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

BundleDescriptor BundleDescriptor::concat(const BundleDescriptor& other) const {
  BundleDescriptor out = *this;
  out.summands.insert(out.summands.end(), other.summands.begin(), other.summands.end());
  return out;
}

const char* to_string(DelPezzoTag tag) {
  switch (tag) {
    case DelPezzoTag::F23: return "F23";
    case DelPezzoTag::F24: return "F24";
    case DelPezzoTag::F25plus: return "F25plus";
    case DelPezzoTag::F25minus: return "F25minus";
  }
  return "?";
}

DelPezzoTag parse_tag(std::string_view text) {
  for (auto tag : all_tags()) {
    if (text == to_string(tag)) return tag;
  }
  throw UnknownTag("unknown type tag '" + std::string(text) + "' (expected F23, F24, F25plus, F25minus)");
}

const std::vector<DelPezzoTag>& all_tags() {
  static const std::vector<DelPezzoTag> tags{DelPezzoTag::F23, DelPezzoTag::F24, DelPezzoTag::F25plus,
                                             DelPezzoTag::F25minus};
  return tags;
}

std::int64_t chi_O(std::int64_t n) { return (n + 1) * (n + 2) / 2; }

std::int64_t chi_bundle(const BundleDescriptor& b, std::int64_t twist) {
  std::int64_t total = 0;
  for (const auto& s : b.summands) {
    const std::int64_t n = s.n + twist;
    total += s.kind == BundleItem::Kind::LineBundle ? chi_O(n) : 3 * chi_O(n - 1) - chi_O(n);
  }
  return total;
}

ChernClasses chern_c1_c2(const BundleDescriptor& b, bool plus_trivial_summand) {
  // (1 + c1 h + c2 h^2) products truncated at h^2
  ChernClasses c;
  for (const auto& s : b.summands) {
    std::int64_t s1 = s.n, s2 = 0;
    if (s.kind == BundleItem::Kind::CotangentTwist) {
      s1 = 2 * std::int64_t{s.n} - 3;
      s2 = std::int64_t{s.n} * s.n - 3 * std::int64_t{s.n} + 3;
    }
    c = {c.c1 + s1, c.c2 + c.c1 * s1 + s2};
  }
  (void)plus_trivial_summand;  // c(O) = 1
  return c;
}

std::int64_t minus_k3_via_euler(std::int64_t d, std::int64_t chi_AO) { return 48 - 6 * d + 2 * chi_AO; }

std::int64_t minus_k3_via_chern(std::int64_t K2, std::int64_t KD, std::int64_t D2, std::int64_t c2) {
  return 6 * K2 + 3 * KD + D2 - 2 * c2;
}

std::int64_t minus_k3_via_chern_printed(std::int64_t K2, std::int64_t KD, std::int64_t D2, std::int64_t c2) {
  return 6 * K2 + 3 * KD + D2 - c2;
}

std::int64_t minus_k3_via_chern_p2(std::int64_t d, std::int64_t c2) {
  return minus_k3_via_chern(9, -3 * d, d * d, c2);
}

std::int64_t chi_top_conic_bundle(std::int64_t chi_top_Z, std::int64_t chi_top_D) {
  return 2 * chi_top_Z + chi_top_D;
}

std::int64_t chi_top_plane_curve(std::int64_t d, std::int64_t nodes) {
  if (d < 1) throw IndexOutOfRange("plane curve degree must be positive");
  if (nodes < 0) throw IndexOutOfRange("node count must be non-negative");
  return 3 * d - d * d + nodes;
}

InvariantReport report(DelPezzoTag tag) {
  const DelPezzoType& type = delpezzo_type(tag);
  InvariantReport r;
  r.tag = tag;
  r.vstar = type.vstar;
  r.d = type.discriminant_degree;
  r.chi_AO = chi_bundle(type.vstar);
  const auto c = chern_c1_c2(type.vstar, true);
  r.c1 = c.c1;
  r.c2 = c.c2;
  r.minus_K3_euler = minus_k3_via_euler(r.d, r.chi_AO);
  r.minus_K3_chern = minus_k3_via_chern_p2(r.d, r.c2);
  r.minus_K3_chern_printed = minus_k3_via_chern_printed(9, -3 * r.d, r.d * r.d, r.c2);
  r.h12 = type.h12;
  if (r.c1 != -r.d) {
    throw InconsistentInvariants(std::string(to_string(tag)) + ": c1 = " + std::to_string(r.c1) +
                                 " but the discriminant has degree " + std::to_string(r.d));
  }
  if (r.minus_K3_euler != r.minus_K3_chern) {
    throw InconsistentInvariants(std::string(to_string(tag)) + ": -K^3 via Euler characteristic is " +
                                 std::to_string(r.minus_K3_euler) + ", via Chern classes " +
                                 std::to_string(r.minus_K3_chern));
  }
  r.minus_K3 = r.minus_K3_euler;
  return r;
}

}  // namespace cliffq
