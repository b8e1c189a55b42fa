#include "hcs/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hcs {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ArityOverflow: return "ArityOverflow";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::UnknownAxiom: return "UnknownAxiom";
    case Errc::ShapeError: return "ShapeError";
    case Errc::NotEndomorphism: return "NotEndomorphism";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::CharacteristicConflict: return "CharacteristicConflict";
    case Errc::NotCocommutative: return "NotCocommutative";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::GuardViolation: return "GuardViolation";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::NoWitnesses: return "NoWitnesses";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
  }
  return "Unknown";
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p > (1u << 31)) throw Error(Errc::NonPrimeModulus, "modulus exceeds 2^31");
  if (!is_prime_u32(p)) throw Error(Errc::NonPrimeModulus, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::str() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

namespace {

std::uint64_t mod_reduce(long long v, std::uint32_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Scalar::Scalar(const FieldSpec& f, long long v) : field_(f), r_(0) {
  if (f.kind() == FieldKind::Rationals)
    q_ = Rational(v);
  else
    r_ = mod_reduce(v, f.p());
}

Scalar Scalar::ratio(const FieldSpec& f, long long num, long long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  if (f.kind() == FieldKind::Rationals) {
    Scalar s(f);
    s.q_ = Rational(num) / Rational(den);  // division normalizes: gcd 1, positive denominator
    return s;
  }
  return Scalar(f, num) / Scalar(f, den);
}

Scalar Scalar::from_rational(const FieldSpec& f, const Rational& q) {
  if (f.kind() == FieldKind::Rationals) {
    Scalar s(f);
    s.q_ = q;
    return s;
  }
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q);
  cpp_int den = boost::multiprecision::denominator(q);
  cpp_int p(f.p());
  cpp_int nm = num % p;
  if (nm < 0) nm += p;
  cpp_int dm = den % p;
  if (dm == 0) throw Error(Errc::CharacteristicConflict, "denominator divisible by field characteristic");
  Scalar n(f, static_cast<long long>(nm));
  Scalar d(f, static_cast<long long>(dm));
  return n / d;
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::Rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals)
    s.q_ = q_ + o.q_;
  else
    s.r_ = (r_ + o.r_) % field_.p();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals)
    s.q_ = q_ * o.q_;
  else
    s.r_ = r_ * o.r_ % field_.p();  // p < 2^31, products fit in 64 bits
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p() - r_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals)
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.p() - 2, field_.p());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.kind() == FieldKind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind() == FieldKind::PrimeField) return std::to_string(r_);
  auto num = boost::multiprecision::numerator(q_);
  auto den = boost::multiprecision::denominator(q_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  if (text.empty()) throw Error(Errc::SyntaxError, "empty scalar");
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> Rational {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) throw Error(Errc::SyntaxError, "bad scalar '" + s + "'");
    boost::multiprecision::cpp_int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(Errc::SyntaxError, "bad scalar '" + s + "'");
      v = v * 10 + (s[i] - '0');
    }
    return Rational(neg ? -v : v);
  };
  Rational q;
  if (slash == std::string::npos) {
    q = parse_int(text);
  } else {
    Rational num = parse_int(text.substr(0, slash));
    Rational den = parse_int(text.substr(slash + 1));
    if (den.is_zero()) throw Error(Errc::SyntaxError, "zero denominator in scalar");
    q = num / den;
  }
  return from_rational(f, q);
}

const Rational& Scalar::rational() const {
  if (field_.kind() != FieldKind::Rationals) throw Error(Errc::FieldMismatch, "not a rational scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::PrimeField) throw Error(Errc::FieldMismatch, "not a prime-field scalar");
  return r_;
}

}  // namespace hcs
