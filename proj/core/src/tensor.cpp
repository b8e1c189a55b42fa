#include "hcs/tensor.hpp"

#include <algorithm>

namespace hcs {

LegPermutation::LegPermutation(int arity, std::array<int, 3> sigma) : arity_(arity), sigma_(sigma) {
  if (arity != 2 && arity != 3) throw Error(Errc::ArityMismatch, "leg permutations act on 2 or 3 legs");
  std::array<bool, 3> seen{false, false, false};
  for (int s = 0; s < arity; ++s) {
    if (sigma_[s] < 0 || sigma_[s] >= arity || seen[sigma_[s]])
      throw Error(Errc::ArityMismatch, "not a bijection on legs");
    seen[sigma_[s]] = true;
  }
}

LegPermutation LegPermutation::identity(int arity) { return LegPermutation(arity, {0, 1, 2}); }
LegPermutation LegPermutation::tau() { return LegPermutation(2, {1, 0, 2}); }
LegPermutation LegPermutation::tau_l() { return LegPermutation(3, {1, 0, 2}); }
LegPermutation LegPermutation::tau_r() { return LegPermutation(3, {0, 2, 1}); }
// xi sends x(y(z to y(z(x: leg 1 ends third, legs 2,3 shift left.
LegPermutation LegPermutation::xi() { return LegPermutation(3, {2, 0, 1}); }
LegPermutation LegPermutation::xi2() { return LegPermutation(3, {1, 2, 0}); }
LegPermutation LegPermutation::rev3() { return LegPermutation(3, {2, 1, 0}); }

LegPermutation LegPermutation::compose(const LegPermutation& inner) const {
  if (arity_ != inner.arity_) throw Error(Errc::ArityMismatch, "composing permutations of different arity");
  std::array<int, 3> s{0, 1, 2};
  for (int i = 0; i < arity_; ++i) s[i] = sigma_[inner.sigma_[i]];
  return LegPermutation(arity_, s);
}

LegPermutation LegPermutation::inverse() const {
  std::array<int, 3> s{0, 1, 2};
  for (int i = 0; i < arity_; ++i) s[sigma_[i]] = i;
  return LegPermutation(arity_, s);
}

bool LegPermutation::is_identity() const {
  for (int i = 0; i < arity_; ++i)
    if (sigma_[i] != i) return false;
  return true;
}

TensorMap::TensorMap(FieldSpec field, SpaceId dom, std::vector<SpaceId> cod)
    : field_(field), dom_(std::move(dom)), cod_(std::move(cod)) {
  if (cod_.empty() || cod_.size() > 3) throw Error(Errc::ArityOverflow, "codomain arity must be 1..3");
  if (dom_.dim < 1) throw Error(Errc::DimMismatch, "empty domain space");
  std::size_t n = static_cast<std::size_t>(dom_.dim);
  for (const auto& s : cod_) {
    if (s.dim < 1) throw Error(Errc::DimMismatch, "empty codomain space");
    n *= static_cast<std::size_t>(s.dim);
  }
  c_.assign(n, Scalar::zero(field_));
}

TensorMap TensorMap::zero(const FieldSpec& f, const SpaceId& dom, std::vector<SpaceId> cod) {
  return TensorMap(f, dom, std::move(cod));
}

TensorMap TensorMap::identity(const FieldSpec& f, const SpaceId& s) {
  return scalar_diag(f, s, Scalar::one(f));
}

TensorMap TensorMap::scalar_diag(const FieldSpec& f, const SpaceId& s, const Scalar& c) {
  TensorMap t(f, s, {s});
  for (int i = 0; i < s.dim; ++i) {
    int j = i;
    t.set(i, std::span<const int>(&j, 1), c);
  }
  return t;
}

std::size_t TensorMap::flat(int i, std::span<const int> js) const {
  std::size_t idx = static_cast<std::size_t>(i);
  for (std::size_t t = 0; t < cod_.size(); ++t) idx = idx * cod_[t].dim + js[t];
  return idx;
}

const Scalar& TensorMap::at(int i, std::span<const int> js) const { return c_[flat(i, js)]; }
void TensorMap::set(int i, std::span<const int> js, const Scalar& v) { c_[flat(i, js)] = v; }

const Scalar& TensorMap::at1(int i, int j) const {
  int js[1] = {j};
  return at(i, js);
}
const Scalar& TensorMap::at2(int i, int j1, int j2) const {
  int js[2] = {j1, j2};
  return at(i, js);
}
const Scalar& TensorMap::at3(int i, int j1, int j2, int j3) const {
  int js[3] = {j1, j2, j3};
  return at(i, js);
}

bool TensorMap::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool TensorMap::same_signature(const TensorMap& o) const {
  return field_ == o.field_ && dom_ == o.dom_ && cod_ == o.cod_;
}

bool TensorMap::operator==(const TensorMap& o) const {
  if (!same_signature(o)) return false;
  return c_ == o.c_;
}

std::optional<int> TensorMap::first_nonzero_row() const {
  std::size_t row = c_.size() / dom_.dim;
  for (int i = 0; i < dom_.dim; ++i)
    for (std::size_t k = 0; k < row; ++k)
      if (!c_[i * row + k].is_zero()) return i;
  return std::nullopt;
}

int TensorMap::nonzero_count() const {
  int n = 0;
  for (const auto& s : c_)
    if (!s.is_zero()) ++n;
  return n;
}

TensorMap lincomb(std::span<const std::pair<Scalar, TensorMap>> terms) {
  if (terms.empty()) throw Error(Errc::EmptyInput, "lincomb over no terms");
  const TensorMap& head = terms[0].second;
  TensorMap out(head.field(), head.dom(), head.cod());
  for (const auto& [c, t] : terms) {
    if (!t.same_signature(head)) throw Error(Errc::SignatureMismatch, "lincomb over mixed signatures");
    for (std::size_t k = 0; k < out.coeffs().size(); ++k)
      out.coeffs()[k] = out.coeffs()[k] + c * t.coeffs()[k];
  }
  return out;
}

TensorMap add(const TensorMap& a, const TensorMap& b) {
  std::pair<Scalar, TensorMap> ts[2] = {{Scalar::one(a.field()), a}, {Scalar::one(a.field()), b}};
  return lincomb(ts);
}

TensorMap sub(const TensorMap& a, const TensorMap& b) {
  std::pair<Scalar, TensorMap> ts[2] = {{Scalar::one(a.field()), a}, {-Scalar::one(a.field()), b}};
  return lincomb(ts);
}

TensorMap scale(const Scalar& c, const TensorMap& t) {
  std::pair<Scalar, TensorMap> ts[1] = {{c, t}};
  return lincomb(ts);
}

TensorMap negate(const TensorMap& t) { return scale(-Scalar::one(t.field()), t); }

TensorMap permute(const LegPermutation& p, const TensorMap& t) {
  if (t.arity() != p.arity()) throw Error(Errc::ArityMismatch, "permutation arity does not match codomain");
  int k = t.arity();
  LegPermutation inv = p.inverse();
  std::vector<SpaceId> cod(k);
  for (int pos = 0; pos < k; ++pos) cod[pos] = t.cod()[inv.sigma(pos)];
  TensorMap out(t.field(), t.dom(), cod);
  std::vector<int> m(k), j(k);
  for (int i = 0; i < t.dom().dim; ++i) {
    // iterate output positions m, pull source coefficient at j_s = m_{sigma(s)}
    std::fill(m.begin(), m.end(), 0);
    while (true) {
      for (int s = 0; s < k; ++s) j[s] = m[p.sigma(s)];
      out.set(i, m, t.at(i, j));
      int t2 = k - 1;
      while (t2 >= 0 && ++m[t2] == cod[t2].dim) m[t2--] = 0;
      if (t2 < 0) break;
    }
  }
  return out;
}

TensorMap compose_pair(const TensorMap& h1, const TensorMap& h2, const TensorMap& d) {
  if (d.arity() != 2) throw Error(Errc::SignatureMismatch, "inner map must have two output legs");
  if (d.field() != h1.field() || d.field() != h2.field())
    throw Error(Errc::FieldMismatch, "compose_pair over mixed fields");
  if (h1.dom() != d.cod()[0] || h2.dom() != d.cod()[1])
    throw Error(Errc::SignatureMismatch, "leg domains do not match inner codomain");
  int k1 = h1.arity(), k2 = h2.arity();
  if (k1 + k2 > 3) throw Error(Errc::ArityOverflow, "output arity would exceed 3");

  std::vector<SpaceId> cod;
  cod.insert(cod.end(), h1.cod().begin(), h1.cod().end());
  cod.insert(cod.end(), h2.cod().begin(), h2.cod().end());
  TensorMap out(d.field(), d.dom(), cod);

  int n1 = d.cod()[0].dim, n2 = d.cod()[1].dim;
  std::vector<int> a(k1), b(k2), js(k1 + k2);
  for (int i = 0; i < d.dom().dim; ++i) {
    for (int j1 = 0; j1 < n1; ++j1) {
      for (int j2 = 0; j2 < n2; ++j2) {
        const Scalar& dij = d.at2(i, j1, j2);
        if (dij.is_zero()) continue;
        std::fill(a.begin(), a.end(), 0);
        while (true) {
          const Scalar& c1 = h1.at(j1, a);
          if (!c1.is_zero()) {
            std::fill(b.begin(), b.end(), 0);
            while (true) {
              const Scalar& c2 = h2.at(j2, b);
              if (!c2.is_zero()) {
                for (int t = 0; t < k1; ++t) js[t] = a[t];
                for (int t = 0; t < k2; ++t) js[k1 + t] = b[t];
                out.set(i, js, out.at(i, js) + dij * c1 * c2);
              }
              int t2 = k2 - 1;
              while (t2 >= 0 && ++b[t2] == h2.cod()[t2].dim) b[t2--] = 0;
              if (t2 < 0) break;
            }
          }
          int t1 = k1 - 1;
          while (t1 >= 0 && ++a[t1] == h1.cod()[t1].dim) a[t1--] = 0;
          if (t1 < 0) break;
        }
      }
    }
  }
  return out;
}

TensorMap precompose(const TensorMap& d, const TensorMap& f) {
  if (f.arity() != 1) throw Error(Errc::SignatureMismatch, "precompose needs an arity-1 inner map");
  if (f.field() != d.field()) throw Error(Errc::FieldMismatch, "precompose over mixed fields");
  if (f.cod()[0] != d.dom()) throw Error(Errc::SignatureMismatch, "inner codomain does not match outer domain");
  TensorMap out(d.field(), f.dom(), d.cod());
  std::size_t row = out.coeffs().size() / f.dom().dim;
  for (int i = 0; i < f.dom().dim; ++i)
    for (int m = 0; m < d.dom().dim; ++m) {
      const Scalar& fim = f.at1(i, m);
      if (fim.is_zero()) continue;
      for (std::size_t k = 0; k < row; ++k)
        out.coeffs()[i * row + k] = out.coeffs()[i * row + k] + fim * d.coeffs()[m * row + k];
    }
  return out;
}

TensorMap mat_mul(const TensorMap& a, const TensorMap& b) { return precompose(a, b); }

TensorMap mat_pow(const TensorMap& a, std::uint64_t n) {
  if (a.arity() != 1 || a.dom() != a.cod()[0])
    throw Error(Errc::SignatureMismatch, "matrix power needs an endomorphism signature");
  TensorMap acc = TensorMap::identity(a.field(), a.dom());
  TensorMap base = a;
  while (n) {
    if (n & 1) acc = mat_mul(base, acc);
    if (n >>= 1) base = mat_mul(base, base);
  }
  return acc;
}

bool mat_is_invertible(const TensorMap& a) {
  try {
    mat_inverse(a);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TensorMap mat_inverse(const TensorMap& a) {
  if (a.arity() != 1 || a.dom() != a.cod()[0])
    throw Error(Errc::SignatureMismatch, "matrix inverse needs an endomorphism signature");
  int n = a.dom().dim;
  // Augmented [A | I]; row-reduce. A[i][j] = coefficient of e_j in a(e_i), so the
  // matrix acting on coordinate columns is the transpose; invert the stored array
  // directly and read the result back with the same convention.
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(2 * n, Scalar::zero(a.field())));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at1(i, j);
    m[i][n + i] = Scalar::one(a.field());
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error(Errc::NotInvertible, "singular matrix");
    std::swap(m[col], m[pivot]);
    Scalar inv = m[col][col].inv();
    for (int j = 0; j < 2 * n; ++j) m[col][j] = m[col][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  TensorMap out(a.field(), a.dom(), {a.dom()});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int js[1] = {j};
      out.set(i, js, m[i][n + j]);
    }
  return out;
}

}  // namespace hcs
