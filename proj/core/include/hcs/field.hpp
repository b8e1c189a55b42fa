#ifndef HCS_FIELD_HPP
#define HCS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcs {

enum class Errc {
  FieldMismatch,
  SignatureMismatch,
  ArityMismatch,
  ArityOverflow,
  EmptyInput,
  KindMismatch,
  UnknownAxiom,
  ShapeError,
  NotEndomorphism,
  UnsupportedKind,
  NotMultiplicative,
  WeightMismatch,
  CharacteristicConflict,
  NotCocommutative,
  BaseMismatch,
  NotEquivariant,
  ExponentOverflow,
  GuardViolation,
  SyntaxError,
  DimMismatch,
  NonPrimeModulus,
  UnknownKind,
  NoWitnesses,
  DivisionByZero,
  NotInvertible,
};

/// Every failure in the engine carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

const char* errc_name(Errc c);

enum class FieldKind { Rationals, PrimeField };

/// Scalar domain: the rationals or a prime field F_p with p prime, p <= 2^31.
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);  // throws NonPrimeModulus

  FieldKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return kind_ == FieldKind::Rationals ? 0 : p_; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;  // "Q" or "F<p>"

private:
  FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

using Rational = boost::multiprecision::cpp_rational;

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues in [0, p).
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()), r_(0) {}
  explicit Scalar(const FieldSpec& f, long long v = 0);
  static Scalar ratio(const FieldSpec& f, long long num, long long den);
  static Scalar from_rational(const FieldSpec& f, const Rational& q);  // reduces mod p for F_p
  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inv() const;  // throws DivisionByZero at 0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text: "a/b" or "a" over Q, the residue over F_p.
  std::string str() const;
  static Scalar parse(const FieldSpec& f, const std::string& text);  // throws SyntaxError

  // Q-only accessors (tests use these to assert canonical form).
  const Rational& rational() const;
  std::uint64_t residue() const;

private:
  void check_same_field(const Scalar& o) const;
  FieldSpec field_;
  Rational q_;        // Rationals payload
  std::uint64_t r_;   // PrimeField payload
};

}  // namespace hcs

#endif
