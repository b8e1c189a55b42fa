#ifndef HCS_ORACLE_HPP
#define HCS_ORACLE_HPP

#include <string>

#include "hcs/comodules.hpp"
#include "hcs/structures.hpp"

namespace hcs {

struct OracleVerdict {
  bool passed;
  TensorMap residual;
};

/// Componentwise Sweedler-expansion evaluation of one axiom. This path expands
/// each comap on each basis vector into an explicit summand list and combines
/// the lists term by term; it shares no composition code with the tensor
/// calculus, so its verdicts cross-validate check_structure / check_comodule.
///
/// Besides the checker's axiom ids, the structure oracle also accepts the
/// rewritten forms "dplc3b" and "dplc4b".
OracleVerdict sweedler_oracle_check(const StructurePackage& s, const std::string& axiom_id);
OracleVerdict sweedler_oracle_check(const ComodulePackage& cm, const std::string& axiom_id);

}  // namespace hcs

#endif
