#include "ontomap/metrics.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "ontomap/error.hpp"

namespace ontomap {

namespace {

constexpr std::size_t kNameWidth = 36;

const char* const kAxiom = "Axiom";
const char* const kLogical = "Logical axiom count";
const char* const kDeclaration = "Declaration axioms count";
const char* const kAnnotation = "Annotation axioms count";
const char* const kClass = "Class count";
const char* const kObject = "Object property count";
const char* const kData = "Data property count";
const char* const kIndividual = "Individual count";
const char* const kExpressivity = "DL expressivity";

}  // namespace

std::size_t MetricsReport::count_of(std::string_view keyword) const {
  for (const auto& [name, count] : axiom_type_counts)
    if (name == keyword) return count;
  return 0;
}

MetricsReport compute_metrics(const Ontology& ontology) {
  MetricsReport r;
  for (const auto& d : ontology.declarations()) {
    switch (d.kind) {
      case EntityKind::Class: ++r.class_count; break;
      case EntityKind::ObjectProperty: ++r.object_property_count; break;
      case EntityKind::DataProperty: ++r.data_property_count; break;
      case EntityKind::Individual: ++r.individual_count; break;
    }
  }
  r.declaration_count = ontology.declarations().size();

  std::map<std::string_view, std::size_t> per_type;
  for (const auto& ax : ontology.axioms()) {
    if (is_logical(ax)) {
      ++r.logical_axiom_count;
      ++per_type[keyword(ax)];
    } else {
      ++r.annotation_count;
    }
  }
  for (auto kw : logical_axiom_keywords()) r.axiom_type_counts.emplace_back(kw, per_type[kw]);
  r.axiom_count = r.logical_axiom_count + r.declaration_count + r.annotation_count;
  r.expressivity = detect_expressivity(ontology);
  return r;
}

std::string detect_expressivity(const Ontology& ontology) {
  bool role_axioms = false, inverse = false, functional = false;
  for (const auto& ax : ontology.axioms()) {
    if (std::holds_alternative<axioms::SubObjectPropertyOf>(ax)) role_axioms = true;
    if (std::holds_alternative<axioms::InverseObjectProperties>(ax)) inverse = true;
    if (const auto* c = std::get_if<axioms::PropertyCharacteristic>(&ax)) {
      switch (c->characteristic) {
        case Characteristic::Irreflexive:
        case Characteristic::Asymmetric: role_axioms = true; break;
        case Characteristic::Functional:
        case Characteristic::InverseFunctional: functional = true; break;
        default: break;
      }
    }
  }
  std::string s = "S";
  if (role_axioms) s += 'R';
  if (inverse) s += 'I';
  if (functional) s += 'F';
  if (!ontology.entities(EntityKind::DataProperty).empty()) s += "(D)";
  return s;
}

std::string format_metrics_report(const MetricsReport& r) {
  std::ostringstream out;
  auto row = [&](std::string_view name, const auto& value) {
    out << name << std::string(kNameWidth - name.size(), ' ') << value << '\n';
  };
  out << "Ontology metrics:\n";
  row(kAxiom, r.axiom_count);
  row(kLogical, r.logical_axiom_count);
  row(kDeclaration, r.declaration_count);
  row(kAnnotation, r.annotation_count);
  row(kClass, r.class_count);
  row(kObject, r.object_property_count);
  row(kData, r.data_property_count);
  row(kIndividual, r.individual_count);
  row(kExpressivity, r.expressivity);
  out << "\nAxiom types:\n";
  for (const auto& [name, count] : r.axiom_type_counts) row(name, count);
  return out.str();
}

MetricsReport parse_metrics_report(std::string_view text) {
  static const std::regex row_re(R"(^(\S(?:.*\S)?) {2,}(\S+)\s*$)");
  std::map<std::string, std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_match(line, m, row_re)) rows[m[1]] = m[2];
  }
  auto number = [&](const std::string& name) -> std::size_t {
    auto it = rows.find(name);
    if (it == rows.end()) throw Error(Errc::MalformedInput, "metrics row missing: " + name);
    try {
      std::size_t used = 0;
      const auto v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::MalformedInput, "metrics row not a number: " + name);
    }
  };
  MetricsReport r;
  r.axiom_count = number(kAxiom);
  r.logical_axiom_count = number(kLogical);
  r.declaration_count = number(kDeclaration);
  r.annotation_count = number(kAnnotation);
  r.class_count = number(kClass);
  r.object_property_count = number(kObject);
  r.data_property_count = number(kData);
  r.individual_count = number(kIndividual);
  auto expr = rows.find(kExpressivity);
  if (expr == rows.end()) throw Error(Errc::MalformedInput, "metrics row missing: DL expressivity");
  r.expressivity = expr->second;
  for (auto kw : logical_axiom_keywords())
    r.axiom_type_counts.emplace_back(kw, number(std::string(kw)));
  return r;
}

}  // namespace ontomap
