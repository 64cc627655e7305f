#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ontomap/concept_graph.hpp"
#include "ontomap/louvain.hpp"

namespace ontomap {

enum class ExportFormat { GraphML, Dot, NodeLinkJson };

// "graphml", "dot", "nodelink-json"; anything else throws
// Error(UnknownFormat).
ExportFormat parse_export_format(std::string_view name);
std::string_view to_string(ExportFormat format);

// Byte-stable rendering. With a partition, nodes carry their cluster id
// (GraphML `cluster` key, DOT fillcolor from a 12-colour palette, JSON
// `cluster`); without one the JSON field is null and the others are absent.
std::string export_graph(const ConceptGraph& g, const std::optional<Partition>& partition,
                         ExportFormat format);

}  // namespace ontomap
