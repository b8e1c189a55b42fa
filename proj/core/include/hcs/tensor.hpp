#ifndef HCS_TENSOR_HPP
#define HCS_TENSOR_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcs/field.hpp"

namespace hcs {

/// A named finite-dimensional vector space with a fixed basis e1..e_dim.
struct SpaceId {
  std::string name;
  int dim = 0;

  bool operator==(const SpaceId& o) const { return name == o.name && dim == o.dim; }
  bool operator!=(const SpaceId& o) const { return !(*this == o); }
};

/// Permutation of the output legs of a tensor map. sigma[s] is the position
/// leg s is sent to, so applying the permutation realizes the convention
/// x1 (x) x2 (x) x3  ->  x_{sigma^-1(1)} (x) x_{sigma^-1(2)} (x) x_{sigma^-1(3)}.
class LegPermutation {
public:
  static LegPermutation identity(int arity);
  static LegPermutation tau();     // swap the two legs of an arity-2 output
  static LegPermutation tau_l();   // (tau (x) I) on three legs
  static LegPermutation tau_r();   // (I (x) tau) on three legs
  static LegPermutation xi();      // x(y(z -> y(z(x
  static LegPermutation xi2();     // x(y(z -> z(x(y
  static LegPermutation rev3();    // x(y(z -> z(y(x

  LegPermutation(int arity, std::array<int, 3> sigma);

  int arity() const { return arity_; }
  int sigma(int leg) const { return sigma_[leg]; }  // 0-based

  LegPermutation compose(const LegPermutation& inner) const;  // this after inner
  LegPermutation inverse() const;
  bool is_identity() const;
  bool operator==(const LegPermutation& o) const { return arity_ == o.arity_ && sigma_ == o.sigma_; }

private:
  int arity_;
  std::array<int, 3> sigma_;  // sigma_[s] = destination of leg s; entries beyond arity unused
};

/// A linear map dom -> cod[0] (x) ... (x) cod[k-1], 1 <= k <= 3, stored as
/// dense structure constants over an exact scalar field. Values are immutable
/// in practice: every operation returns a fresh map.
class TensorMap {
public:
  TensorMap(FieldSpec field, SpaceId dom, std::vector<SpaceId> cod);

  static TensorMap zero(const FieldSpec& f, const SpaceId& dom, std::vector<SpaceId> cod);
  static TensorMap identity(const FieldSpec& f, const SpaceId& s);
  static TensorMap scalar_diag(const FieldSpec& f, const SpaceId& s, const Scalar& c);

  const FieldSpec& field() const { return field_; }
  const SpaceId& dom() const { return dom_; }
  const std::vector<SpaceId>& cod() const { return cod_; }
  int arity() const { return static_cast<int>(cod_.size()); }

  // All indices are 0-based.
  const Scalar& at(int i, std::span<const int> js) const;
  void set(int i, std::span<const int> js, const Scalar& v);
  const Scalar& at1(int i, int j) const;
  const Scalar& at2(int i, int j1, int j2) const;
  const Scalar& at3(int i, int j1, int j2, int j3) const;

  const std::vector<Scalar>& coeffs() const { return c_; }
  std::vector<Scalar>& coeffs() { return c_; }

  bool is_zero() const;
  bool same_signature(const TensorMap& o) const;
  bool operator==(const TensorMap& o) const;
  bool operator!=(const TensorMap& o) const { return !(*this == o); }

  /// Domain basis index (0-based) of the first nonzero row, if any.
  std::optional<int> first_nonzero_row() const;
  int nonzero_count() const;

private:
  std::size_t flat(int i, std::span<const int> js) const;
  FieldSpec field_;
  SpaceId dom_;
  std::vector<SpaceId> cod_;
  std::vector<Scalar> c_;
};

// --- Core operations -------------------------------------------------------

/// Coefficientwise linear combination. All terms must share one signature.
TensorMap lincomb(std::span<const std::pair<Scalar, TensorMap>> terms);
TensorMap add(const TensorMap& a, const TensorMap& b);
TensorMap sub(const TensorMap& a, const TensorMap& b);
TensorMap scale(const Scalar& c, const TensorMap& t);
TensorMap negate(const TensorMap& t);

/// Apply a leg permutation to the output of T.
TensorMap permute(const LegPermutation& p, const TensorMap& t);

/// (h1 (x) h2) o D for a two-leg D; output arity |h1| + |h2| <= 3.
TensorMap compose_pair(const TensorMap& h1, const TensorMap& h2, const TensorMap& d);

/// D o f for an arity-1 f.
TensorMap precompose(const TensorMap& d, const TensorMap& f);

// --- Arity-1 (matrix) utilities -------------------------------------------

TensorMap mat_mul(const TensorMap& a, const TensorMap& b);          // a o b
TensorMap mat_pow(const TensorMap& a, std::uint64_t n);             // binary powering
TensorMap mat_inverse(const TensorMap& a);                          // exact Gaussian elimination
bool mat_is_invertible(const TensorMap& a);

}  // namespace hcs

#endif
