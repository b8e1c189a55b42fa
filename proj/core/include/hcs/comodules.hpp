#ifndef HCS_COMODULES_HPP
#define HCS_COMODULES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcs/structures.hpp"

namespace hcs {

enum class ComoduleKind { TridendComodule, PostHomLieComodule };

const char* comodule_kind_name(ComoduleKind k);
std::optional<ComoduleKind> comodule_kind_from_name(const std::string& name);

/// Structure map names a comodule kind carries, in canonical order.
std::vector<std::string> comodule_map_names(ComoduleKind k);
StructureKind comodule_base_kind(ComoduleKind k);

/// A comodule (M, alpha_M) over a coalgebra package on L. All structure maps
/// go M -> L (x) M; printed compositions that only type under the order (M, L)
/// are mechanically reordered, and check reports note each reordering.
struct ComodulePackage {
  ComoduleKind kind;
  StructurePackage base;
  SpaceId mspace;
  TensorMap alpha_m;
  std::map<std::string, TensorMap> maps;

  const TensorMap& map(const std::string& name) const;
  void validate() const;
};

bool operator==(const StructurePackage& a, const StructurePackage& b);
bool operator==(const ComodulePackage& a, const ComodulePackage& b);

std::vector<AxiomInfo> comodule_axioms_of(ComoduleKind k);

TensorMap comodule_axiom_residual(const ComodulePackage& cm, const std::string& axiom_id);

CheckReport check_comodule(const ComodulePackage& cm, const std::vector<std::string>* subset = nullptr);

/// The coalgebra viewed as a comodule over itself.
ComodulePackage regular_comodule(const StructurePackage& base);

enum class ComoduleRule { DirectSum, RegularK, TensorK, TwistN0, Twist0K, TwistNK, TwistBeta };

const char* comodule_rule_name(ComoduleRule r);
std::optional<ComoduleRule> comodule_rule_from_name(const std::string& name);

struct ComoduleRuleParams {
  long long n = 0;
  long long k = 0;
  std::optional<TensorMap> beta;
  std::optional<TensorMap> beta_m;
  const ComodulePackage* other = nullptr;  // second comodule for DirectSum / TensorK
};

ComodulePackage comodule_derive(const ComodulePackage& cm, ComoduleRule rule,
                                const ComoduleRuleParams& params);

/// Prop-nph construction: structure maps (alpha^k (x) I) o gamma and
/// (alpha^k (x) I) o delta over a multiplicative post-Hom-Lie coalgebra.
ComodulePackage regular_k_comodule(const StructurePackage& base, long long k);

}  // namespace hcs

#endif
