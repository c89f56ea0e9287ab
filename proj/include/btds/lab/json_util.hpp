#ifndef BTDS_LAB_JSON_UTIL_HPP
#define BTDS_LAB_JSON_UTIL_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "btds/selection.hpp"

namespace btds::lab {

using json = nlohmann::json;

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// A point set as a sorted array of point labels.
json set_to_json(PointSet s, const std::vector<std::string>& labels);

// Default labels "0", "1", ... for unlabeled sweep spaces.
std::vector<std::string> numeric_labels(int n);

json anchor_to_json(const AnchorPair& a, const std::vector<std::string>& labels);
json anchors_to_json(const std::vector<AnchorPair>& anchors,
                     const std::vector<std::string>& labels);

json cover_to_json(const Cover& c, const std::vector<std::string>& labels);

// Full machine-checkable report: selections per cover on success, the
// refuting cover and uncoverable point on failure.
json selection_report_to_json(const SelectionReport& r,
                              const std::vector<std::string>& labels);
json property_report_to_json(const PropertyReport& r,
                             const std::vector<std::string>& labels);

}  // namespace btds::lab

#endif
