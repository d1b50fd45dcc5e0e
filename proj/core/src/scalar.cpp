#include "cliffq/scalar.hpp"

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

// Tonelli-Shanks; caller guarantees a is a nonzero quadratic residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p >= (std::uint64_t{1} << 31U) || !cliffq::is_prime(p)) {
    throw InvalidField("field characteristic must be an odd prime below 2^31, got " +
                       std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(Field field, const mpz_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field.characteristic());
  }
}

Scalar Scalar::fraction(Field field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Scalar out;
    out.field_ = field;
    mpq_class q(num, den);
    q.canonicalize();
    out.value_ = q;
    return out;
  }
  Scalar d(field, den);
  if (d.is_zero()) {
    throw DivisionByZero("denominator " + den.get_str() + " vanishes in " + field.name());
  }
  return Scalar(field, num) / d;
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DomainMismatch("rational() on " + field_.name());
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw DomainMismatch("residue() on Q");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw DomainMismatch("mixing scalars of " + field_.name() + " and " + rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  } else {
    auto& r = std::get<std::uint64_t>(out.value_);
    if (r != 0) r = field_.characteristic() - r;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = mul_mod(r, std::get<std::uint64_t>(rhs.value_), field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  } else {
    const auto p = field_.characteristic();
    out.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return out;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  if (field_.is_rational()) {
    const auto& q = std::get<mpq_class>(value_);
    return q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
  }
  const auto p = field_.characteristic();
  return pow_mod(std::get<std::uint64_t>(value_), (p - 1) / 2, p) == 1;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (!is_square()) return std::nullopt;
  if (is_zero()) return *this;
  Scalar out = *this;
  if (field_.is_rational()) {
    const auto& q = std::get<mpq_class>(value_);
    mpz_class num;
    mpz_class den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    out.value_ = mpq_class(num, den);
    return out;
  }
  const auto p = field_.characteristic();
  std::uint64_t r = sqrt_mod(std::get<std::uint64_t>(value_), p);
  out.value_ = std::min(r, p - r);
  return out;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_));
  const auto r = std::get<std::uint64_t>(value_);
  if (r == 0) return 0;
  return r <= (field_.characteristic() - 1) / 2 ? 1 : -1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace cliffq
