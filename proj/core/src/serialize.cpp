#include "terracini/serialize.hpp"

#include <json.hpp>

namespace terracini {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json labels_json(Mask subset, const GroundSet& ground) {
  ordered_json out = ordered_json::array();
  for (int i : indices_of(subset)) out.push_back(ground.labels[i]);
  return out;
}

ordered_json defect_json(const DefectReport& r) {
  return ordered_json{{"expected_dim", r.expected_dim},
                      {"actual_dim", r.actual_dim},
                      {"defect", r.defect},
                      {"defective", r.defective}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<std::string> labels_of(Mask subset, const GroundSet& ground) {
  std::vector<std::string> out;
  for (int i : indices_of(subset)) out.push_back(ground.labels[i]);
  return out;
}

namespace {

ordered_json matroid_json(const Matroid& m, int cap, bool list_bases) {
  ordered_json j;
  j["ground"] = m.ground().labels;
  j["rank"] = m.rank();
  j["provenance"] = provenance_name(m.provenance());
  j["loops"] = labels_json(m.loops(), m.ground());
  j["coloops"] = labels_json(m.coloops(), m.ground());
  if (m.size() <= cap) {
    std::vector<Mask> bases = m.bases(cap);
    j["base_count"] = bases.size();
    if (list_bases) {
      ordered_json arr = ordered_json::array();
      for (Mask b : bases) arr.push_back(indices_of(b));
      j["bases"] = std::move(arr);
    }
  }
  return j;
}

}  // namespace

std::string matroid_to_json(const Matroid& m, int cap, bool list_bases) {
  return dump(matroid_json(m, cap, list_bases));
}

std::string matroid_with_defect_to_json(const Matroid& m, const DefectReport& d, int cap,
                                        bool list_bases) {
  ordered_json j = matroid_json(m, cap, list_bases);
  j["defect"] = defect_json(d);
  return dump(j);
}

std::string defect_to_json(const DefectReport& r) { return dump(defect_json(r)); }

std::string subset_rank_to_json(int rank, const DefectReport& projected, Mask subset,
                                const GroundSet& ground) {
  ordered_json j;
  j["subset"] = labels_json(subset, ground);
  j["subset_rank"] = rank;
  j["projected_defect"] = defect_json(projected);
  return dump(j);
}

std::string union_check_to_json(const UnionCheckReport& r) {
  ordered_json j;
  j["ground"] = r.ground.labels;
  j["summands"] = r.arity;
  j["union_rank"] = r.union_rank;
  j["join_rank"] = r.join_rank;
  j["rank_gap"] = r.union_rank - r.join_rank;
  j["union_base_count"] = r.union_base_count;
  j["join_base_count"] = r.join_base_count;
  j["is_terracini_union"] = r.is_terracini_union;
  j["join_defect"] = defect_json(r.join_defect);
  ordered_json missing = ordered_json::array();
  for (const auto& mb : r.missing_bases) {
    missing.push_back(ordered_json{{"basis", labels_json(mb.basis, r.ground)},
                                   {"witness", defect_json(mb.witness)}});
  }
  j["missing_bases"] = std::move(missing);
  j["anomaly"] = r.anomaly;
  return dump(j);
}

std::string subunion_to_json(const SubunionReport& r, const GroundSet& ground) {
  ordered_json j;
  j["certified_bases"] = r.certificates.size();
  ordered_json certs = ordered_json::array();
  for (const auto& c : r.certificates) {
    ordered_json parts = ordered_json::array();
    for (Mask p : c.parts) parts.push_back(labels_json(p, ground));
    certs.push_back(ordered_json{{"basis", labels_json(c.subset, ground)}, {"parts", parts}});
  }
  j["certificates"] = std::move(certs);
  ordered_json anomalies = ordered_json::array();
  for (Mask a : r.anomalies) anomalies.push_back(labels_json(a, ground));
  j["anomalies"] = std::move(anomalies);
  return dump(j);
}

std::string cone_analysis_to_json(const ConeAnalysisReport& r, const GroundSet& ground) {
  ordered_json j;
  j["dim"] = r.dim;
  j["ambient"] = r.ambient;
  j["loops"] = labels_json(r.loops, ground);
  j["coloops"] = labels_json(r.coloops, ground);
  if (r.has_coloop) {
    j["secant2_dim"] = r.secant2_dim;
    j["secant2_expected"] = r.secant2_expected;
    j["fills_ambient"] = r.fills_ambient;
    j["secant2_defective"] = r.secant2_defective;
    j["coloop_dichotomy_holds"] = r.dichotomy_holds;
  }
  return dump(j);
}

std::string partition_to_json(const PartitionOutcome& outcome, Mask subset,
                              const GroundSet& ground) {
  ordered_json j;
  j["subset"] = labels_json(subset, ground);
  j["union_rank"] = outcome.union_rank;
  j["independent_in_union"] = outcome.certificate.has_value();
  if (outcome.certificate) {
    ordered_json parts = ordered_json::array();
    for (Mask p : outcome.certificate->parts) parts.push_back(labels_json(p, ground));
    j["parts"] = std::move(parts);
  }
  return dump(j);
}

std::string scan_to_json(const ScanReport& r, const GroundSet& ground) {
  ordered_json j;
  j["union_rank"] = r.union_rank;
  j["join_rank"] = r.join_rank;
  j["match_count"] = r.matches.size();
  ordered_json matches = ordered_json::array();
  for (const auto& v : r.matches) {
    ordered_json m;
    m["offset"] = v.match.offset;
    m["labels"] = labels_json(mask_from_indices(v.match.indices), ground);
    m["union_basis"] = v.union_basis;
    m["join_dependent"] = v.join_dependent;
    m["missing_basis"] = v.union_basis && v.join_dependent;
    matches.push_back(std::move(m));
  }
  j["matches"] = std::move(matches);
  return dump(j);
}

}  // namespace terracini
