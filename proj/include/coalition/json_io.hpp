#pragma once

#include <json.hpp>

#include "coalition/bounds.hpp"
#include "coalition/campaign.hpp"
#include "coalition/coalition.hpp"
#include "coalition/domination.hpp"

namespace coalition {

// Stable JSON shapes consumed by scripts: certificates carry their witness
// sets as sorted integer arrays, partitions as arrays of such arrays.
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const DominationCertificate& c);
nlohmann::json to_json(const DomaticCertificate& c);
nlohmann::json to_json(const CoalitionCertificate& c);
nlohmann::json to_json(const PartitionVerdict& v, const Partition& p);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const CampaignReport& r);

std::string part_status_name(PartStatus s);

}  // namespace coalition
