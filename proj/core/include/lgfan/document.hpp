/**
 * @file document.hpp
 * The FanDocument: a canonical, float-free description of a computed fan,
 * with JSON emission/parsing and a human-readable summary.
 */
#pragma once

#include <optional>

#include "lgfan/polyhedra.hpp"

namespace lgfan {

inline constexpr const char* kToolVersion = "lgfan 0.1.0";
inline constexpr const char* kFormat = "lgfan-fan/1";

struct ConeRecord {
  int id = 0;
  int dim = 0;
  std::vector<QVec> facets, equations, rays;
  QVec witness;
  std::vector<std::string> initial_ideal;  // maximal cones only
  std::optional<int> class_id;
  int members = 0;  // enumerated cones glued into this class
  bool maximal = false;
};

struct FanDocument {
  std::string mode;
  std::string region;
  int ambient_dim = 0;
  int parameter_dim = 0;
  std::vector<QVec> subspace;  // columns
  std::vector<QVec> lineality;
  std::vector<ConeRecord> cones;
  std::vector<std::pair<int, int>> incidence;  // (facet cone id, cone id)
  std::optional<FanReport> validation;
  std::optional<bool> equal;  // compare-initials only
  std::string input_sha256;
  std::string tool_version = kToolVersion;

  bool operator==(const FanDocument& o) const;
};

/// Fills cones (canonical order), incidence and lineality from a fan.
void set_fan(FanDocument& doc, const Fan& fan);
/// Rebuilds the HCones from the stored H-descriptions.
Fan document_fan(const FanDocument& doc);

std::string emit_json(const FanDocument& doc);
std::string emit_summary(const FanDocument& doc);
/// Throws std::invalid_argument on malformed documents.
FanDocument parse_document(const std::string& json);

std::string sha256_hex(const std::string& data);

}  // namespace lgfan
