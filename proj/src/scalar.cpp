#include "hopf/scalar.hpp"

#include <cctype>
#include <ostream>

namespace hopf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !hopf::is_prime(p))
    throw FieldError("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(Kind::Prime, p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

namespace {

std::uint64_t reduce(long v, std::uint64_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_prime())
    value_ = reduce(value, field.characteristic());
  else
    value_ = mpq_class(value);
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t num = reduce(value.get_num(), p);
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw FieldError("denominator vanishes in " + field.name());
  value_ = mul_mod(num, pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto fail = [&] { return FieldError("malformed scalar '" + std::string(text) + "' for field " + f.name()); };
  if (text.empty()) throw fail();
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw fail();
  mpz_class n(std::string(strip_plus(num)), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return Scalar(f, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw FieldError("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::check_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldError("mixed fields " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v) v = field_.characteristic() - v;
  } else {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_field(o);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(o.value_);
    if (v >= p) v -= p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_field(o);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    const std::uint64_t w = std::get<std::uint64_t>(o.value_);
    v = v >= w ? v - w : v + p - w;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_field(o);
  if (field_.is_prime()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(o.value_), field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    const std::uint64_t p = field_.characteristic();
    r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
  } else {
    r.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::str() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopf
