#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontomap/ontology.hpp"

namespace ontomap {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::size_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);  // "error" / "warning"

// Codes are stable identifiers:
//   syntax, unterminated, unknown-keyword, arity, undeclared, kind-mismatch,
//   prefix, name, literal, datatype, union, duplicate-declaration,
//   duplicate-axiom, annotation, language-tag, invalid-axiom
struct ParseDiagnostic {
  Severity severity = Severity::Error;
  SourceSpan span;
  std::string code;
  std::string message;
};

// `severity:line:col:code:message`
std::string format_diagnostic(const ParseDiagnostic& diagnostic);

struct ParseResult {
  std::optional<Ontology> ontology;  // absent whenever an Error diagnostic exists
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return ontology.has_value(); }
  std::size_t error_count() const;
};

// Parses the functional-syntax subset:
//
//   Prefix(p:=<iri>)*
//   Ontology(<iri>? axiom* )
//
// `#` starts a comment running to end of line. After an error the parser
// resumes at the next top-level axiom, so independent mistakes are all
// reported.
ParseResult parse(std::string_view text);

// Canonical text: prefixes, then declarations sorted by kind and name, then
// logical axioms sorted by keyword and arguments, then labels. One axiom per
// line.
std::string serialize(const Ontology& ontology);

// Single axiom in functional syntax, as it appears in serialize().
std::string to_functional_syntax(const Axiom& axiom);

}  // namespace ontomap
