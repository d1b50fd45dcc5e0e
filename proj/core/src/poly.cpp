#include "cliffq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cliffq/errors.hpp"

namespace cliffq {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw IndexOutOfRange("monomial has more than " + std::to_string(kMaxVariables) +
                          " variables");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exponents_[i] = static_cast<std::uint16_t>(exponents[i]);
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw IndexOutOfRange("variable index " + std::to_string(index));
  Monomial m;
  m.exponents_[index] = static_cast<std::uint16_t>(power);
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exponents_[i] = static_cast<std::uint16_t>(exponents_[i] + rhs.exponents_[i]);
  }
  out.degree_ = degree_ + rhs.degree_;
  return out;
}

bool Monomial::divides(const Monomial& rhs) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] > rhs.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& rhs) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exponents_[i] = static_cast<std::uint16_t>(rhs.exponents_[i] - exponents_[i]);
  }
  out.degree_ = rhs.degree_ - degree_;
  return out;
}

Monomial Monomial::lowered(std::size_t index) const {
  Monomial out = *this;
  --out.exponents_[index];
  --out.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
  return lhs.exponents_ <=> rhs.exponents_;
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  if (names_->size() > kMaxVariables) {
    throw IndexOutOfRange("rings are limited to " + std::to_string(kMaxVariables) +
                          " variables");
  }
}

Ring Ring::uvw() {
  static const Ring ring(std::vector<std::string>{"u", "v", "w"});
  return ring;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- PolyBuilder

void PolyBuilder::add(const Monomial& monomial, const Scalar& coefficient) {
  if (coefficient.field() != field_) {
    throw DomainMismatch("coefficient in " + coefficient.field().name() + ", ring over " +
                         field_.name());
  }
  if (!coefficient.is_zero()) pending_.push_back({monomial, coefficient});
}

Poly PolyBuilder::build() && {
  std::sort(pending_.begin(), pending_.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.monomial > b.monomial; });
  Poly out(std::move(ring_), field_);
  for (auto& term : pending_) {
    if (!out.terms_.empty() && out.terms_.back().monomial == term.monomial) {
      out.terms_.back().coefficient += term.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(term));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
  return out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(Ring ring, Field field) : ring_(std::move(ring)), field_(field) {}

Poly Poly::constant(Ring ring, const Scalar& value) {
  return term(std::move(ring), Monomial{}, value);
}

Poly Poly::constant(Ring ring, Field field, long value) {
  return constant(std::move(ring), Scalar(field, value));
}

Poly Poly::variable(Ring ring, Field field, std::size_t index) {
  if (index >= ring.size()) throw IndexOutOfRange("variable index " + std::to_string(index));
  return term(std::move(ring), Monomial::variable(index), Scalar::one(field));
}

Poly Poly::term(Ring ring, const Monomial& monomial, const Scalar& coefficient) {
  Poly out(std::move(ring), coefficient.field());
  if (!coefficient.is_zero()) out.terms_.push_back({monomial, coefficient});
  return out;
}

std::optional<unsigned> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

bool Poly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return terms_.front();
}

Scalar Poly::coefficient(const Monomial& monomial) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const Term& t, const Monomial& m) { return t.monomial > m; });
  if (it != terms_.end() && it->monomial == monomial) return it->coefficient;
  return Scalar::zero(field_);
}

void Poly::require_compatible(const Poly& rhs) const {
  if (field_ != rhs.field_) {
    throw DomainMismatch("polynomials over " + field_.name() + " and " + rhs.field_.name());
  }
  if (!(ring_ == rhs.ring_)) throw DomainMismatch("polynomials in different rings");
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_compatible(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->coefficient + b->coefficient;
      if (!c.is_zero()) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.require_compatible(rhs);
  PolyBuilder builder(lhs.ring_, lhs.field_);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) builder.add(a.monomial * b.monomial, a.coefficient * b.coefficient);
  }
  return std::move(builder).build();
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& rhs) {
  if (rhs.field() != field_) throw DomainMismatch("scalar field differs from polynomial field");
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= rhs;
  return *this;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.field_ != rhs.field_ || !(lhs.ring_ == rhs.ring_)) return false;
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].monomial != rhs.terms_[i].monomial ||
        !(lhs.terms_[i].coefficient == rhs.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, field_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_.size()) {
    throw IndexOutOfRange("evaluation point has " + std::to_string(point.size()) +
                          " coordinates, ring has " + std::to_string(ring_.size()));
  }
  Scalar total = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar value = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] > 0) value *= point[i].pow(t.monomial[i]);
    }
    total += value;
  }
  return total;
}

Poly Poly::partial_derivative(std::size_t index) const {
  if (index >= ring_.size()) throw IndexOutOfRange("variable index " + std::to_string(index));
  PolyBuilder builder(ring_, field_);
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    builder.add(t.monomial.lowered(index), t.coefficient * Scalar(field_, static_cast<long>(e)));
  }
  return std::move(builder).build();
}

Poly Poly::embed(const Ring& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_.size()) throw IndexOutOfRange("embedding map has wrong length");
  PolyBuilder builder(target, field_);
  for (const auto& t : terms_) {
    std::vector<unsigned> exps(target.size(), 0);
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (index_map[i] >= target.size()) throw IndexOutOfRange("embedding target index");
      exps[index_map[i]] += t.monomial[i];
    }
    builder.add(Monomial(exps), t.coefficient);
  }
  return std::move(builder).build();
}

Poly Poly::change_field(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw DomainMismatch("can only reduce rational polynomials");
  PolyBuilder builder(ring_, target);
  for (const auto& t : terms_) {
    const auto& q = t.coefficient.rational();
    builder.add(t.monomial, Scalar::fraction(target, q.get_num(), q.get_den()));
  }
  return std::move(builder).build();
}

namespace {

// Magnitude and sign of a coefficient; F_p uses the symmetric representative.
std::pair<bool, std::string> signed_magnitude(const Scalar& c) {
  if (c.field().is_rational()) {
    mpq_class q = c.rational();
    bool negative = q < 0;
    return {negative, mpq_class(abs(q)).get_str()};
  }
  const auto p = c.field().characteristic();
  const auto r = c.residue();
  if (r > (p - 1) / 2) return {true, std::to_string(p - r)};
  return {false, std::to_string(r)};
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    auto [negative, magnitude] = signed_magnitude(t.coefficient);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_.name(i);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out << magnitude;
    } else if (magnitude == "1") {
      out << mono;
    } else {
      out << magnitude << '*' << mono;
    }
  }
  return out.str();
}

// ------------------------------------------------------------------ parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, Field field)
      : text_(text), ring_(ring), field_(field) {}

  Poly parse() {
    PolyBuilder builder(ring_, field_);
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_space();
    }
    parse_term(builder, negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_space();
      parse_term(builder, op == '-');
    }
    return std::move(builder).build();
  }

 private:
  void parse_term(PolyBuilder& builder, bool negative) {
    Scalar coeff = Scalar::one(field_);
    Monomial monomial;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_space();
      if (peek() == '*') {
        get();
        skip_space();
        monomial = parse_monomial();
      }
    } else {
      monomial = parse_monomial();
    }
    builder.add(monomial, negative ? -coeff : coeff);
  }

  Scalar parse_coefficient() {
    mpz_class num = parse_integer();
    mpz_class den = 1;
    skip_space();
    if (peek() == '/') {
      get();
      skip_space();
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    return Scalar::fraction(field_, num, den);
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial parse_monomial() {
    std::vector<unsigned> exps(ring_.size(), 0);
    while (true) {
      skip_space();
      const std::size_t index = parse_variable();
      unsigned power = 1;
      skip_space();
      if (peek() == '^') {
        get();
        skip_space();
        mpz_class e = parse_integer();
        if (e == 0 || e > 1000) fail("exponent must be a positive integer <= 1000");
        power = static_cast<unsigned>(e.get_ui());
      }
      exps[index] += power;
      skip_space();
      if (peek() != '*') break;
      get();
    }
    return Monomial(exps);
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail("expected a variable");
    }
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    auto index = ring_.index_of(name);
    if (!index) {
      throw UnknownVariable("unknown variable '" + std::string(name) + "' in \"" +
                            std::string(text_) + "\"");
    }
    return *index;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in \"" +
                      std::string(text_) + "\"");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const Ring& ring_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring, Field field) {
  Poly p = PolyParser(text, ring, field).parse();
  if (!p.is_homogeneous()) {
    throw InhomogeneousError("mixed-degree terms in \"" + std::string(text) + "\"");
  }
  return p;
}

// ---------------------------------------------------- division and sqrt

DivisionResult divide_with_remainder(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const auto& lead = g.leading_term();
  const Scalar lead_inverse = lead.coefficient.inverse();
  PolyBuilder quotient(f.ring(), f.field());
  PolyBuilder remainder(f.ring(), f.field());
  Poly rest = f;
  while (!rest.is_zero()) {
    const auto top = rest.leading_term();
    if (lead.monomial.divides(top.monomial)) {
      const Poly step =
          Poly::term(f.ring(), lead.monomial.quotient_of(top.monomial), top.coefficient * lead_inverse);
      quotient.add(step.leading_term().monomial, step.leading_term().coefficient);
      rest -= step * g;
    } else {
      remainder.add(top.monomial, top.coefficient);
      rest -= Poly::term(f.ring(), top.monomial, top.coefficient);
    }
  }
  return {std::move(quotient).build(), std::move(remainder).build()};
}

Poly divide_exact(const Poly& f, const Poly& g) {
  auto [quotient, remainder] = divide_with_remainder(f, g);
  if (!remainder.is_zero()) {
    throw NotDivisible("(" + f.to_string() + ") is not divisible by (" + g.to_string() +
                       "); remainder " + remainder.to_string());
  }
  return quotient;
}

Poly poly_sqrt(const Poly& f) {
  const Ring& ring = f.ring();
  if (f.is_zero()) return f;
  const auto& top = f.leading_term();
  auto fail = [&](const std::string& why) -> Poly {
    throw NotAPerfectSquare("(" + f.to_string() + ") is not a perfect square: " + why);
  };
  std::vector<unsigned> half(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (top.monomial[i] % 2 != 0) return fail("odd exponent in leading monomial");
    half[i] = top.monomial[i] / 2;
  }
  auto root = top.coefficient.sqrt();
  if (!root) return fail("leading coefficient is not a square");

  const Monomial lead_monomial(half);
  const Scalar twice_lead = *root + *root;
  Poly g = Poly::term(ring, lead_monomial, *root);
  Monomial last = lead_monomial;
  Poly rest = f - g * g;
  while (!rest.is_zero()) {
    const auto& r = rest.leading_term();
    if (!lead_monomial.divides(r.monomial)) return fail("remainder term not reachable");
    const Monomial next = lead_monomial.quotient_of(r.monomial);
    if (!(next < last)) return fail("remainder term out of order");
    const Poly t = Poly::term(ring, next, r.coefficient / twice_lead);
    // (g + t)^2 - g^2 = 2gt + t^2
    rest -= (g + g + t) * t;
    g += t;
    last = next;
  }
  if (g.leading_term().coefficient.sign() < 0) g = -g;
  return g;
}

}  // namespace cliffq
