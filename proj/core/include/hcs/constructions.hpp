#ifndef HCS_CONSTRUCTIONS_HPP
#define HCS_CONSTRUCTIONS_HPP

#include "hcs/structures.hpp"

namespace hcs {

/// Twist by an endomorphism beta: every comap m becomes m o beta and the twist
/// map becomes beta o alpha. beta must commute with alpha and be
/// comultiplicative for every comap; violations raise NotEndomorphism naming
/// the failed equation. Supported kinds: HomCoassoc, HomLie, HomTridendriform,
/// PostHomLie.
StructurePackage yau_twist(const StructurePackage& s, const TensorMap& beta);

/// beta = alpha^n on a multiplicative package; n = 0 returns the input.
StructurePackage power_twist(const StructurePackage& s, long long n);

/// beta = alpha^-1 on a multiplicative package with invertible alpha; the
/// result carries the identity twist map.
StructurePackage inverse_twist(const StructurePackage& s);

/// gamma = (1 - tau) o delta on a Hom-coassociative package.
StructurePackage commutator_cobracket(const StructurePackage& s);

/// delta = delta_m1 + delta_0 + delta_1 on a Hom-tridendriform package.
StructurePackage tridend_sum(const StructurePackage& s);

enum class RbTarget { Tridend, Dendriform, Prelie0, PrelieM1, DendriformB };

/// Structures derived from a Hom-coassociative Rota-Baxter package. Prelie0
/// and PrelieM1 insist on weights 0 and -1 respectively (WeightMismatch).
StructurePackage rb_coassoc_derive(const StructurePackage& s, RbTarget target);

/// delta = delta_1 - tau o delta_m1 on a Hom-dendriform package.
StructurePackage dendriform_to_prelie(const StructurePackage& s);

enum class PostTarget { Tilde, Admissible, SubHomLie };

/// Tilde: (delta + gamma, -gamma, alpha), again post-Hom-Lie.
/// Admissible: the Hom-Lie candidate (1 - tau) o (delta + gamma/2); needs
/// characteristic != 2.
/// SubHomLie: the underlying (gamma, alpha) Hom-Lie package.
StructurePackage posthomlie_derive(const StructurePackage& s, PostTarget target);

/// Both candidate right-hand sides of the half-twist associator lemma,
/// evaluated on one package. No ground truth is asserted; campaigns record the
/// two equality verdicts per witness.
struct Le1Report {
  TensorMap lhs;            // as(delta + gamma/2) - (tau x I) as(delta + gamma/2)
  TensorMap rhs_statement;  // -1/2 (tau x I)(gamma x alpha) gamma
  TensorMap rhs_proof;      // -1/4 (alpha x gamma) gamma
  bool statement_matches;
  bool proof_matches;
};
Le1Report le1_report(const StructurePackage& s);

/// (lambda gamma, (R x I) o gamma, alpha) from a Rota-Baxter Hom-Lie package.
StructurePackage rb_homlie_to_posthomlie(const StructurePackage& s);

/// Post-Hom-Lie structure on Cprime (x) C from a post-Hom-Lie P on C and a
/// cocommutative Hom-coassociative Q on Cprime; basis ordered a-major.
StructurePackage tensor_posthomlie(const StructurePackage& p, const StructurePackage& q);

/// gamma = (1 - tau) o delta_0 and delta = delta_1 - tau o delta_m1.
StructurePackage tridend_to_posthomlie(const StructurePackage& s);

/// Delta_A = (1 - tau) o delta + gamma, Delta_R = (1 + tau) o delta_star +
/// delta_ast, packaged as HomPoisson (gamma / delta_ast slots).
StructurePackage postpoisson_to_homopoisson(const StructurePackage& s);

}  // namespace hcs

#endif
