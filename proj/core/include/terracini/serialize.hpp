#pragma once

#include <string>

#include "terracini/analysis.hpp"

namespace terracini {

// JSON is the stable machine-readable surface: insertion-ordered fields,
// two-space indentation, no environment-dependent content.  Text output is
// human-oriented and may change.

std::string matroid_to_json(const Matroid& m, int cap, bool list_bases);
std::string matroid_with_defect_to_json(const Matroid& m, const DefectReport& d, int cap,
                                        bool list_bases);
std::string defect_to_json(const DefectReport& r);
std::string subset_rank_to_json(int rank, const DefectReport& projected, Mask subset,
                                const GroundSet& ground);
std::string union_check_to_json(const UnionCheckReport& r);
std::string subunion_to_json(const SubunionReport& r, const GroundSet& ground);
std::string cone_analysis_to_json(const ConeAnalysisReport& r, const GroundSet& ground);
std::string partition_to_json(const PartitionOutcome& outcome, Mask subset,
                              const GroundSet& ground);
std::string scan_to_json(const ScanReport& r, const GroundSet& ground);

std::vector<std::string> labels_of(Mask subset, const GroundSet& ground);

}  // namespace terracini
