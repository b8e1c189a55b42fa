#ifndef HCS_SEARCH_HPP
#define HCS_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "hcs/comodules.hpp"
#include "hcs/structures.hpp"

namespace hcs {

enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
  std::optional<StructureKind> kind;
  std::optional<ComoduleKind> comodule_kind;
  int dim = 2;
  FieldSpec field = FieldSpec::prime(5);
  SearchMode mode = SearchMode::Random;
  std::uint64_t budget = 20000;
  std::uint64_t seed = 0;
  std::map<std::string, TensorMap> fixed;  // fix named maps ("alpha", "gamma", "rb", ...)
  std::optional<Scalar> fixed_weight;
  const StructurePackage* fixed_base = nullptr;  // comodule searches over one base
  std::uint64_t max_witnesses = 0;               // 0 = unlimited
};

struct WitnessRecord {
  std::variant<StructurePackage, ComodulePackage> value;
  std::uint64_t seed = 0;
  std::uint64_t candidate_index = 0;
  CheckReport verdicts;
  bool minimized = false;

  const StructurePackage& package() const { return std::get<StructurePackage>(value); }
  const ComodulePackage& comodule() const { return std::get<ComodulePackage>(value); }
  bool is_comodule() const { return std::holds_alternative<ComodulePackage>(value); }
};

struct SearchResult {
  std::vector<WitnessRecord> witnesses;
  bool budget_exceeded = false;
  std::uint64_t candidates_tried = 0;
};

/// Deterministic witness search. Exhaustive mode visits every candidate of the
/// free-parameter space exactly once (guarded against blowup); random mode
/// draws sparse candidates from the seed. Every emitted record passes the full
/// check of its kind, multiplicativity entries included, and duplicates are
/// dropped.
SearchResult enumerate_instances(const SearchConfig& cfg);

/// Every axiom entry of the kind, multiplicativity entries included.
bool passes_full_check(const StructurePackage& s);
bool passes_full_check(const ComodulePackage& cm);  // includes the base's own check

/// Number of raw free coefficients the search ranges over for this config.
std::uint64_t free_parameter_count(const SearchConfig& cfg);

/// Greedy minimization: zero coefficients one at a time, then drop unused
/// basis vectors, as long as the predicate stays true. Idempotent at fixpoint.
StructurePackage minimize_package(const StructurePackage& s,
                                  const std::function<bool(const StructurePackage&)>& keep);
ComodulePackage minimize_comodule(const ComodulePackage& cm,
                                  const std::function<bool(const ComodulePackage&)>& keep);
WitnessRecord minimize_witness(const WitnessRecord& w,
                               const std::function<bool(const WitnessRecord&)>& keep);

/// Arbitrary (usually invalid) package with uniformly random coefficients;
/// skew/cocommutative comaps are NOT imposed. Fuel for the oracle-equivalence
/// and verdict-agreement campaigns.
StructurePackage random_raw_package(StructureKind k, int dim, const FieldSpec& f, std::mt19937_64& rng);
ComodulePackage random_raw_comodule(ComoduleKind k, int base_dim, int dim, const FieldSpec& f,
                                    std::mt19937_64& rng);

/// Maps commuting with alpha and comultiplicative for every comap, in a
/// deterministic order (identity first). Exhaustive for prime fields with
/// p^(dim^2) <= 2^20, sampled otherwise.
std::vector<TensorMap> structure_endomorphisms(const StructurePackage& s, std::size_t max_count,
                                               std::uint64_t seed);

/// (beta, beta_m) pairs satisfying the twist equivariance equations.
std::vector<std::pair<TensorMap, TensorMap>> comodule_twist_pairs(const ComodulePackage& cm,
                                                                  std::size_t max_count,
                                                                  std::uint64_t seed);

}  // namespace hcs

#endif
