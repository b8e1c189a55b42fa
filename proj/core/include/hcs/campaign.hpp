#ifndef HCS_CAMPAIGN_HPP
#define HCS_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcs/constructions.hpp"
#include "hcs/io.hpp"
#include "hcs/oracle.hpp"
#include "hcs/search.hpp"

namespace hcs {

struct TheoremInfo {
  std::string id;
  std::string summary;
  bool report_only;  // failures feed the discrepancy ledger instead of the exit code
};

/// One entry per verified statement; report-only entries cover the internal
/// inconsistencies and undefined-symbol readings that are surfaced, not judged.
const std::vector<TheoremInfo>& theorem_registry();
std::optional<TheoremInfo> theorem_info(const std::string& id);

struct CampaignConfig {
  int trials = 25;
  int max_dim = 2;
  std::optional<FieldSpec> field;  // search field; unset = F5 plus the Q fixture families
  std::uint64_t seed = 1;
  std::uint64_t budget = 60000;
  std::string out_dir = ".";
  bool write_counterexamples = true;
};

struct CampaignReport {
  std::string theorem;
  bool report_only = false;
  int trials = 0;
  int passes = 0;
  int fails = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> counterexample_files;
  std::vector<std::string> notes;   // deterministic per-trial annotations
  std::vector<std::string> ledger;  // lines for discrepancies.txt

  bool ok() const { return report_only || fails == 0; }
};

/// Generate/load hypothesis witnesses, apply the construction, check the
/// conclusion. Throws Error(NoWitnesses) when the hypothesis pool is empty.
CampaignReport verify_theorem(const std::string& id, const CampaignConfig& cfg);

std::string emit_campaign_report(const CampaignReport& rep);
std::string emit_discrepancies(const std::vector<CampaignReport>& reports);

/// Handcrafted witness families for one kind over one field, full-check
/// verified; families that need an unavailable characteristic are skipped.
std::vector<StructurePackage> builtin_structure_witnesses(StructureKind k, const FieldSpec& f);

/// Hypothesis pool: builtin families (Q and the search field) plus search
/// results, deduplicated, every entry passing the full check of its kind.
std::vector<StructurePackage> structure_pool(StructureKind k, const CampaignConfig& cfg,
                                             std::size_t want);
std::vector<ComodulePackage> comodule_pool(ComoduleKind k, const CampaignConfig& cfg,
                                           std::size_t want);

std::string witness_filename(const WitnessRecord& w);

}  // namespace hcs

#endif
