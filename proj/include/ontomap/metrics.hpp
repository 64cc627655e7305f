#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontomap/ontology.hpp"

namespace ontomap {

// Ontology statistics in the layout of a Protégé metrics panel.
//
// axiom_count = logical_axiom_count + declaration_count + annotation_count,
// and the per-type counts sum to logical_axiom_count.
struct MetricsReport {
  std::size_t axiom_count = 0;
  std::size_t logical_axiom_count = 0;
  std::size_t declaration_count = 0;
  std::size_t annotation_count = 0;
  std::size_t class_count = 0;
  std::size_t object_property_count = 0;
  std::size_t data_property_count = 0;
  std::size_t individual_count = 0;
  // One entry per logical axiom keyword, in logical_axiom_keywords() order.
  std::vector<std::pair<std::string, std::size_t>> axiom_type_counts;
  std::string expressivity = "S";

  std::size_t count_of(std::string_view keyword) const;

  bool operator==(const MetricsReport&) const = default;
};

MetricsReport compute_metrics(const Ontology& ontology);

// Heuristic constructor-letter string. `S` always; `R` for irreflexive or
// asymmetric properties or property inclusions; `I` for inverse properties;
// `F` for (inverse-)functional properties; `(D)` when data properties are
// declared. Nominals (`O`) are never emitted because the class-expression
// subset has none.
std::string detect_expressivity(const Ontology& ontology);

// Two-column text report; parse_metrics_report reads it back.
std::string format_metrics_report(const MetricsReport& report);
// Throws Error(MalformedInput) when a required row is missing or malformed.
MetricsReport parse_metrics_report(std::string_view text);

}  // namespace ontomap
