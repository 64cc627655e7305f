#include "ontomap/graph_export.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "ontomap/error.hpp"

namespace ontomap {

ExportFormat parse_export_format(std::string_view name) {
  if (name == "graphml") return ExportFormat::GraphML;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "nodelink-json") return ExportFormat::NodeLinkJson;
  throw Error(Errc::UnknownFormat, "unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(ExportFormat format) {
  switch (format) {
    case ExportFormat::GraphML: return "graphml";
    case ExportFormat::Dot: return "dot";
    case ExportFormat::NodeLinkJson: return "nodelink-json";
  }
  return "?";
}

namespace {

// ColorBrewer Set3.
constexpr std::array<std::string_view, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string number(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void check_partition(const ConceptGraph& g, const std::optional<Partition>& p) {
  if (p && p->assignment.size() != g.nodes.size())
    throw Error(Errc::PartitionMismatch, "partition does not cover the graph");
}

std::string graphml(const ConceptGraph& g, const std::optional<Partition>& p) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
         "  <key id=\"kind\" for=\"node\" attr.name=\"kind\" attr.type=\"string\"/>\n"
         "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
         "  <key id=\"cluster\" for=\"node\" attr.name=\"cluster\" attr.type=\"int\"/>\n"
         "  <key id=\"ekind\" for=\"edge\" attr.name=\"kind\" attr.type=\"string\"/>\n"
         "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
         "  <graph id=\"concepts\" edgedefault=\"directed\">\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    out << "    <node id=\"" << xml_escape(n.id) << "\">\n"
        << "      <data key=\"kind\">" << to_string(n.kind) << "</data>\n"
        << "      <data key=\"label\">" << xml_escape(n.label) << "</data>\n";
    if (p) out << "      <data key=\"cluster\">" << p->assignment[i] << "</data>\n";
    out << "    </node>\n";
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    out << "    <edge id=\"e" << i << "\" source=\"" << xml_escape(e.source) << "\" target=\""
        << xml_escape(e.target) << "\">\n"
        << "      <data key=\"ekind\">" << xml_escape(e.kind) << "</data>\n"
        << "      <data key=\"weight\">" << number(e.weight) << "</data>\n"
        << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string dot(const ConceptGraph& g, const std::optional<Partition>& p) {
  std::ostringstream out;
  out << "digraph concepts {\n  node [style=filled, fillcolor=\"#ffffff\"];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    out << "  " << dot_quote(n.id) << " [label=" << dot_quote(n.label)
        << ", shape=" << (n.kind == NodeKind::Class ? "ellipse" : "box");
    if (p)
      out << ", cluster=" << p->assignment[i] << ", fillcolor=\""
          << kPalette[p->assignment[i] % kPalette.size()] << "\"";
    out << "];\n";
  }
  for (const auto& e : g.edges)
    out << "  " << dot_quote(e.source) << " -> " << dot_quote(e.target)
        << " [label=" << dot_quote(e.kind) << ", weight=" << number(e.weight) << "];\n";
  out << "}\n";
  return out.str();
}

std::string node_link(const ConceptGraph& g, const std::optional<Partition>& p) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  doc["links"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    nlohmann::ordered_json j;
    j["id"] = n.id;
    j["kind"] = to_string(n.kind);
    j["label"] = n.label;
    j["cluster"] = p ? nlohmann::ordered_json(p->assignment[i]) : nlohmann::ordered_json(nullptr);
    doc["nodes"].push_back(std::move(j));
  }
  for (const auto& e : g.edges) {
    nlohmann::ordered_json j;
    j["source"] = e.source;
    j["target"] = e.target;
    j["kind"] = e.kind;
    j["weight"] = e.weight;
    doc["links"].push_back(std::move(j));
  }
  return doc.dump();
}

}  // namespace

std::string export_graph(const ConceptGraph& g, const std::optional<Partition>& partition,
                         ExportFormat format) {
  check_partition(g, partition);
  switch (format) {
    case ExportFormat::GraphML: return graphml(g, partition);
    case ExportFormat::Dot: return dot(g, partition);
    case ExportFormat::NodeLinkJson: return node_link(g, partition);
  }
  throw Error(Errc::UnknownFormat, "unknown graph format");
}

}  // namespace ontomap
