#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qr/cli/report.hpp"
#include "qr/size_caps.hpp"

namespace qr::cli {

enum class ClaimStatus { pass, fail, evidence_only };

std::string_view status_name(ClaimStatus s);

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::fail;
  std::string summary;
  Json artifacts = Json::object();
  double wall_time_s = 0.0;

  Json to_json() const;
};

// Claim ids in reporting order.
const std::vector<std::string_view>& claim_ids();
bool is_claim(std::string_view id);

// Throws InvalidParam for an unknown id.
ClaimReport run_claim(std::string_view id, const SizeCaps& caps = SizeCaps::defaults());
// Runs the claims on up to `jobs` threads; reports come back in input order.
std::vector<ClaimReport> run_claims(const std::vector<std::string_view>& ids, unsigned jobs,
                                    const SizeCaps& caps = SizeCaps::defaults());

// True when every claim that is not evidence-only passed.
bool all_passed(const std::vector<ClaimReport>& reports);

}  // namespace qr::cli
