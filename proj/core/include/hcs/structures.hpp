#ifndef HCS_STRUCTURES_HPP
#define HCS_STRUCTURES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcs/tensor.hpp"

namespace hcs {

enum class StructureKind {
  HomCoassoc,
  HomCoassocRB,
  HomLie,
  HomLieRB,
  HomPreLie,
  HomDendriform,
  HomTridendriform,
  CoCommHomTridendriform,
  PostHomLie,
  HomPoisson,
  PostHomPoisson,
};

const char* kind_name(StructureKind k);
std::optional<StructureKind> kind_from_name(const std::string& name);
std::vector<StructureKind> all_structure_kinds();

/// Comap names a kind carries, in canonical order.
std::vector<std::string> comap_names(StructureKind k);
bool kind_has_rb(StructureKind k);

struct RotaBaxter {
  TensorMap op;   // arity-1
  Scalar weight;  // lambda
};

/// A space, a twist map and the comultiplications of one structure kind.
struct StructurePackage {
  StructureKind kind;
  SpaceId space;
  FieldSpec field;
  TensorMap alpha;
  std::map<std::string, TensorMap> comaps;
  std::optional<RotaBaxter> rb;

  const TensorMap& comap(const std::string& name) const;
  void validate() const;  // throws KindMismatch / DimMismatch on malformed packages
};

/// Convenience builder: all comaps zero, alpha = id.
StructurePackage make_zero_package(StructureKind k, const FieldSpec& f, int dim);

struct AxiomInfo {
  std::string id;
  bool multiplicativity;  // comultiplicativity-style entry, reported under its own flag
  bool required;          // counts toward the pass verdict
};

std::vector<AxiomInfo> axioms_of(StructureKind k);

struct CheckEntry {
  std::string axiom_id;
  bool passed;
  TensorMap residual;
  std::optional<int> first_failing_basis_index;  // 1-based
  bool multiplicativity;
  bool required;
};

struct CheckReport {
  std::string kind_label;
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;
  bool structural_pass = true;  // all non-multiplicativity entries
  bool multiplicative = true;   // all multiplicativity entries
  bool passed = true;           // all required entries
  bool full_pass = true;        // every entry

  void finalize();
  const CheckEntry* entry(const std::string& id) const;
};

/// Evaluate every axiom (or the given subset) of the package's kind.
/// With elide_alpha, alpha-legs inside composed formulas are replaced by the
/// identity; used to cross-check that alpha = id reduces to the untwisted check.
CheckReport check_structure(const StructurePackage& s,
                            const std::vector<std::string>* subset = nullptr,
                            bool elide_alpha = false);

TensorMap axiom_residual(const StructurePackage& s, const std::string& axiom_id,
                         bool elide_alpha = false);

bool package_multiplicative(const StructurePackage& s);

/// tau-opposite of a Hom-tridendriform package.
StructurePackage opposite_tridend(const StructurePackage& s);

/// Structure constants of a finite-dimensional Hom-tridendriform algebra:
/// products stored as m(e_i, e_j) = sum_k m[i][j][k] e_k.
struct ProductTensor {
  FieldSpec field;
  SpaceId space;
  std::vector<Scalar> c;  // index ((i * d + j) * d + k)

  ProductTensor(const FieldSpec& f, const SpaceId& s);
  const Scalar& at(int i, int j, int k) const;
  void set(int i, int j, int k, const Scalar& v);
};

struct AlgebraConstants {
  FieldSpec field;
  SpaceId space;
  TensorMap alpha;
  ProductTensor m_left;   // dashv
  ProductTensor m_dot;    // cdot
  ProductTensor m_right;  // vdash

  bool operator==(const AlgebraConstants& o) const;
};

/// Dual coalgebra on the dual basis: comap D[k][i][j] = m[i][j][k], alpha transposed.
StructurePackage dualize_algebra(const AlgebraConstants& a);

/// Inverse transposition: view a Hom-tridendriform coalgebra as algebra constants.
AlgebraConstants dualize_package(const StructurePackage& s);

}  // namespace hcs

#endif
