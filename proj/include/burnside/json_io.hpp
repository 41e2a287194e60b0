#pragma once

#include <string>

#include <json.hpp>

#include "burnside/burnside_ring.hpp"
#include "burnside/gmodule.hpp"
#include "burnside/stable_maps.hpp"

namespace burnside {

using Json = nlohmann::json;

// All JSON here is deterministic: objects serialize with sorted keys and
// every array is populated in a canonical order.

Json descriptor_json(const ProfiniteAbelianDescriptor& d);

Json marks_json(const TableOfMarks& t);
std::string marks_text(const TableOfMarks& t);

Json trichotomy_json(const std::string& group_name, const TrichotomyReport& r);
std::string trichotomy_text(const std::string& group_name, const TrichotomyReport& r);

Json tower_json(const QuotientTower& t);
std::string tower_level_text(const TowerLevel& level);

struct CompletionReport {
  std::string group_name;
  std::string module_kind;  // "regular" or "bundle"
  std::string target_name;  // bundle only
  QuotientTower tower;
  ProfiniteAbelianDescriptor tower_class;
  ProfiniteAbelianDescriptor closed_form;
  bool match = false;
};

Json completion_json(const CompletionReport& r);
std::string completion_text(const CompletionReport& r);

Json decomposition_json(const WedgeDecomposition& d);
std::string decomposition_text(const WedgeDecomposition& d);

Json crosscheck_json(const CrosscheckReport& r);
std::string crosscheck_text(const CrosscheckReport& r);

// Cache document for a subgroup classification; spec is the literal group
// spec string the classification was computed from.
Json classification_json(const std::string& spec, const SubgroupClassification& cls);

// Rebuilds a classification from a cache document, re-validating everything;
// throws on any mismatch with the group spec string, the format version or
// the group order.
ClassificationPtr classification_from_json(const std::string& spec, int order_bound,
                                           const Json& doc);

inline constexpr int kCacheFormatVersion = 1;

}  // namespace burnside
