#include "ontomap/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ontomap/error.hpp"

namespace ontomap {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::string format_diagnostic(const ParseDiagnostic& d) {
  std::ostringstream out;
  out << to_string(d.severity) << ':' << d.span.line << ':' << d.span.column << ':' << d.code
      << ':' << d.message;
  return out.str();
}

std::size_t ParseResult::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const ParseDiagnostic& d) { return d.severity == Severity::Error; }));
}

namespace {

enum class TokenKind { LParen, RParen, Equals, Iri, Name, Literal, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;      // name, IRI body or literal lexical form
  std::string datatype;  // literal `^^` suffix, if any
  std::string language;  // literal `@` suffix, if any
  SourceSpan span;
};

bool is_name_byte(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.' ||
         c == ':';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseDiagnostic>& diagnostics)
      : text_(text), diagnostics_(diagnostics) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.span = {line_, column_, 0};
      if (at_end()) {
        t.kind = TokenKind::End;
        tokens.push_back(t);
        return tokens;
      }
      const std::size_t start = pos_;
      const char c = text_[pos_];
      bool ok = true;
      if (c == '(') {
        t.kind = TokenKind::LParen;
        advance();
      } else if (c == ')') {
        t.kind = TokenKind::RParen;
        advance();
      } else if (c == '=') {
        t.kind = TokenKind::Equals;
        advance();
      } else if (c == '<') {
        t.kind = TokenKind::Iri;
        ok = lex_iri(t);
      } else if (c == '"') {
        t.kind = TokenKind::Literal;
        ok = lex_literal(t);
      } else if (is_name_byte(c)) {
        t.kind = TokenKind::Name;
        while (!at_end() && is_name_byte(text_[pos_])) t.text += advance();
      } else {
        error(t.span, "syntax", std::string("unexpected character '") + c + "'");
        advance();
        continue;
      }
      t.span.length = pos_ - start;
      if (!ok) {
        // Unterminated IRI or literal swallows the rest of the input.
        Token end;
        end.span = {line_, column_, 0};
        tokens.push_back(end);
        return tokens;
      }
      tokens.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool lex_iri(Token& t) {
    advance();  // <
    while (!at_end() && text_[pos_] != '>' && text_[pos_] != '\n') t.text += advance();
    if (at_end() || text_[pos_] != '>') {
      error(t.span, "unterminated", "IRI is missing its closing '>'");
      return false;
    }
    advance();
    return true;
  }

  bool lex_literal(Token& t) {
    advance();  // opening quote
    while (true) {
      if (at_end()) {
        error(t.span, "unterminated", "string literal is missing its closing quote");
        return false;
      }
      char c = advance();
      if (c == '"') break;
      if (c == '\\' && !at_end()) c = advance();
      t.text += c;
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
      advance();
      advance();
      while (!at_end() && is_name_byte(text_[pos_])) t.datatype += advance();
      if (t.datatype.empty()) t.datatype = "^^";  // rejected later as an unknown datatype
    } else if (!at_end() && text_[pos_] == '@') {
      advance();
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '-'))
        t.language += advance();
    }
    return true;
  }

  void error(SourceSpan span, std::string code, std::string message) {
    span.length = std::max<std::size_t>(span.length, 1);
    diagnostics_.push_back({Severity::Error, span, std::move(code), std::move(message)});
  }

  std::string_view text_;
  std::vector<ParseDiagnostic>& diagnostics_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Generic parenthesized term: an atom, or `Name( term* )`.
struct Term {
  Token head;
  bool call = false;
  std::vector<Term> args;
  SourceSpan close;
};

struct Failure {
  ParseDiagnostic diagnostic;
};

Failure failure(const SourceSpan& span, std::string code, std::string message) {
  return Failure{{Severity::Error, span, std::move(code), std::move(message)}};
}

const std::map<std::string, EntityKind, std::less<>>& declaration_keywords() {
  static const std::map<std::string, EntityKind, std::less<>> m = {
      {"Class", EntityKind::Class},
      {"ObjectProperty", EntityKind::ObjectProperty},
      {"DataProperty", EntityKind::DataProperty},
      {"NamedIndividual", EntityKind::Individual},
  };
  return m;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    Lexer lexer(text, diagnostics_);
    tokens_ = lexer.run();
  }

  ParseResult run() {
    std::vector<Term> axioms;
    parse_document(axioms);
    interpret(axioms);
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                       return std::tie(a.span.line, a.span.column) <
                              std::tie(b.span.line, b.span.column);
                     });
    if (result.error_count() == 0) result.ontology = std::move(ontology_);
    return result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_name(std::string_view name) const { return at(TokenKind::Name) && peek().text == name; }

  void report(Severity severity, SourceSpan span, std::string code, std::string message) {
    span.length = std::max<std::size_t>(span.length, 1);
    diagnostics_.push_back({severity, span, std::move(code), std::move(message)});
  }
  void report(const Failure& f) { diagnostics_.push_back(f.diagnostic); }

  void expect(TokenKind kind, const char* what) {
    if (!at(kind)) {
      if (at(TokenKind::End)) throw failure(peek().span, "unterminated", std::string("expected ") + what + " before end of input");
      throw failure(peek().span, "syntax", std::string("expected ") + what);
    }
    take();
  }

  // ---------------------------------------------------------------------
  // Structure

  void parse_document(std::vector<Term>& axioms) {
    while (at_name("Prefix")) {
      const std::size_t start = pos_;
      try {
        parse_prefix();
      } catch (const Failure& f) {
        report(f);
        if (!skip_from(start)) return;
      }
    }
    if (!at_name("Ontology")) {
      if (at(TokenKind::End) && diagnostics_.empty())
        report(Severity::Error, peek().span, "syntax", "missing Ontology(...)");
      else if (!at(TokenKind::End))
        report(Severity::Error, peek().span, "syntax", "expected Prefix(...) or Ontology(...)");
      return;
    }
    const SourceSpan ontology_span = take().span;
    if (!at(TokenKind::LParen)) {
      report(Severity::Error, peek().span, "syntax", "expected '(' after Ontology");
      return;
    }
    take();
    if (at(TokenKind::Iri)) ontology_.set_id(take().text);
    while (true) {
      if (at(TokenKind::RParen)) {
        take();
        break;
      }
      if (at(TokenKind::End)) {
        report(Severity::Error, ontology_span, "unterminated",
               "Ontology( is missing its closing ')'");
        return;
      }
      const std::size_t start = pos_;
      try {
        Term t = parse_term();
        if (!t.call) throw failure(t.head.span, "syntax", "expected an axiom");
        axioms.push_back(std::move(t));
      } catch (const Failure& f) {
        report(f);
        if (!skip_from(start)) {
          report(Severity::Error, ontology_span, "unterminated",
                 "Ontology( is missing its closing ')'");
          return;
        }
      }
    }
    if (!at(TokenKind::End))
      report(Severity::Error, peek().span, "syntax", "unexpected content after Ontology(...)");
  }

  void parse_prefix() {
    take();  // Prefix
    expect(TokenKind::LParen, "'('");
    if (!at(TokenKind::Name) || peek().text.back() != ':' ||
        std::count(peek().text.begin(), peek().text.end(), ':') != 1)
      throw failure(peek().span, "syntax", "expected a prefix name such as 'p:'");
    const Token name = take();
    expect(TokenKind::Equals, "'='");
    if (!at(TokenKind::Iri)) throw failure(peek().span, "syntax", "expected <iri>");
    const Token iri = take();
    expect(TokenKind::RParen, "')'");
    const std::string prefix = name.text.substr(0, name.text.size() - 1);
    if (!is_valid_prefix_name(prefix))
      throw failure(name.span, "name", "malformed prefix name '" + prefix + "'");
    auto it = ontology_.prefixes().find(prefix);
    if (it != ontology_.prefixes().end() && it->second != iri.text)
      throw failure(name.span, "prefix", "prefix '" + prefix + ":' redefined");
    ontology_.set_prefix(prefix, iri.text);
  }

  // Skips the construct starting at token `start`. Returns false if the
  // input ended before the construct was closed.
  bool skip_from(std::size_t start) {
    pos_ = start;
    if (!(peek().kind == TokenKind::Name && peek(1).kind == TokenKind::LParen)) {
      if (!at(TokenKind::End)) take();
      return true;
    }
    take();
    take();
    int depth = 1;
    while (depth > 0) {
      if (at(TokenKind::End)) return false;
      if (at(TokenKind::LParen)) ++depth;
      if (at(TokenKind::RParen)) --depth;
      take();
    }
    return true;
  }

  Term parse_term() {
    Term t;
    switch (peek().kind) {
      case TokenKind::Name:
        t.head = take();
        if (!at(TokenKind::LParen)) return t;
        take();
        t.call = true;
        while (!at(TokenKind::RParen)) {
          if (at(TokenKind::End))
            throw failure(t.head.span, "unterminated", t.head.text + "( is missing its closing ')'");
          t.args.push_back(parse_term());
        }
        t.close = take().span;
        return t;
      case TokenKind::Iri:
      case TokenKind::Literal:
        t.head = take();
        return t;
      case TokenKind::End:
        throw failure(peek().span, "unterminated", "unexpected end of input");
      default:
        throw failure(peek().span, "syntax", "unexpected '" + token_text(peek()) + "'");
    }
  }

  static std::string token_text(const Token& t) {
    switch (t.kind) {
      case TokenKind::LParen: return "(";
      case TokenKind::RParen: return ")";
      case TokenKind::Equals: return "=";
      default: return t.text;
    }
  }

  // ---------------------------------------------------------------------
  // Interpretation

  void interpret(const std::vector<Term>& axioms) {
    for (const auto& t : axioms) {
      if (t.head.text != "Declaration") continue;
      try {
        declaration(t);
      } catch (const Failure& f) {
        report(f);
      }
    }
    for (const auto& t : axioms) {
      if (t.head.text == "Declaration") continue;
      try {
        failed_ = false;
        auto axiom = build_axiom(t);
        if (failed_ || !axiom) continue;
        try {
          if (!ontology_.add_axiom(std::move(*axiom)))
            report(Severity::Warning, t.head.span, "duplicate-axiom", "duplicate axiom ignored");
        } catch (const Error& e) {
          report(Severity::Error, t.head.span, "invalid-axiom", e.what());
        }
      } catch (const Failure& f) {
        report(f);
      }
    }
  }

  void expect_arity(const Term& t, std::size_t n) {
    if (t.args.size() > n)
      throw failure(t.args[n].head.span, "arity",
                    t.head.text + " takes " + std::to_string(n) + " argument(s), got " +
                        std::to_string(t.args.size()));
    if (t.args.size() < n)
      throw failure(t.close, "arity",
                    t.head.text + " takes " + std::to_string(n) + " argument(s), got " +
                        std::to_string(t.args.size()));
  }

  void expect_min_arity(const Term& t, std::size_t n) {
    if (t.args.size() < n)
      throw failure(t.close, "arity",
                    t.head.text + " takes at least " + std::to_string(n) + " arguments, got " +
                        std::to_string(t.args.size()));
  }

  EntityName name_of(const Term& t) {
    if (t.call || t.head.kind != TokenKind::Name)
      throw failure(t.head.span, "syntax", "expected an entity name");
    const std::string& text = t.head.text;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
      throw failure(t.head.span, "name", "'" + text + "' is not a prefixed name");
    EntityName name{text.substr(0, colon), text.substr(colon + 1)};
    if (!ontology_.prefixes().count(name.prefix))
      throw failure(t.head.span, "prefix", "undeclared prefix '" + name.prefix + ":'");
    if (!is_valid_local_name(name.local))
      throw failure(t.head.span, "name", "malformed local name '" + name.local + "'");
    return name;
  }

  EntityName entity(const Term& t, EntityKind kind) {
    EntityName name = name_of(t);
    if (ontology_.is_declared(name, kind)) return name;
    failed_ = true;
    if (ontology_.is_declared(name))
      report(Severity::Error, t.head.span, "kind-mismatch",
             name.qualified() + " is not declared as " + std::string(to_string(kind)));
    else
      report(Severity::Error, t.head.span, "undeclared", name.qualified() + " is not declared");
    return name;
  }

  ClassExpression class_expression(const Term& t) {
    if (!t.call) return ClassExpression::named(entity(t, EntityKind::Class));
    if (t.head.text != "ObjectUnionOf")
      throw failure(t.head.span, "unknown-keyword",
                    "unsupported class expression '" + t.head.text + "'");
    if (t.args.size() < 2)
      throw failure(t.close, "union", "ObjectUnionOf needs at least two classes");
    std::vector<EntityName> members;
    for (const auto& a : t.args) {
      if (a.call) throw failure(a.head.span, "union", "ObjectUnionOf members must be named classes");
      EntityName m = entity(a, EntityKind::Class);
      if (std::find(members.begin(), members.end(), m) != members.end())
        throw failure(a.head.span, "union", "duplicate ObjectUnionOf member " + m.qualified());
      members.push_back(std::move(m));
    }
    return ClassExpression::union_of(std::move(members));
  }

  std::vector<EntityName> distinct_classes(const Term& t, std::size_t first) {
    std::vector<EntityName> out;
    for (std::size_t i = first; i < t.args.size(); ++i) {
      EntityName c = entity(t.args[i], EntityKind::Class);
      if (std::find(out.begin(), out.end(), c) != out.end())
        throw failure(t.args[i].head.span, "invalid-axiom",
                      "class " + c.qualified() + " listed twice");
      out.push_back(std::move(c));
    }
    return out;
  }

  Literal literal(const Term& t) {
    if (t.call || t.head.kind != TokenKind::Literal)
      throw failure(t.head.span, "literal", "expected a quoted literal");
    Literal lit{t.head.text, Datatype::String};
    if (!t.head.datatype.empty()) {
      auto dt = parse_datatype(t.head.datatype);
      if (!dt)
        throw failure(t.head.span, "datatype", "unsupported datatype '" + t.head.datatype + "'");
      lit.type = *dt;
    } else if (!t.head.language.empty()) {
      report(Severity::Warning, t.head.span, "language-tag",
             "language tag @" + t.head.language + " dropped");
    }
    if (!is_valid_lexical_form(lit.lexical, lit.type))
      throw failure(t.head.span, "literal",
                    "'" + lit.lexical + "' is not a valid " + std::string(to_string(lit.type)));
    return lit;
  }

  void declaration(const Term& t) {
    expect_arity(t, 1);
    const Term& inner = t.args[0];
    if (!inner.call) throw failure(inner.head.span, "syntax", "expected Class(...), ObjectProperty(...), ...");
    auto it = declaration_keywords().find(inner.head.text);
    if (it == declaration_keywords().end())
      throw failure(inner.head.span, "unknown-keyword",
                    "unknown declaration type '" + inner.head.text + "'");
    expect_arity(inner, 1);
    EntityName name = name_of(inner.args[0]);
    if (!ontology_.declare(name, it->second))
      report(Severity::Warning, t.head.span, "duplicate-declaration",
             "duplicate declaration of " + name.qualified());
  }

  std::optional<Axiom> build_axiom(const Term& t) {
    const std::string& kw = t.head.text;
    const auto& a = t.args;
    if (kw == "SubClassOf") {
      expect_arity(t, 2);
      return axioms::SubClassOf{class_expression(a[0]), class_expression(a[1])};
    }
    if (kw == "EquivalentClasses") {
      expect_arity(t, 2);
      return axioms::EquivalentClasses{class_expression(a[0]), class_expression(a[1])};
    }
    if (kw == "DisjointClasses") {
      expect_min_arity(t, 2);
      return axioms::DisjointClasses{distinct_classes(t, 0)};
    }
    if (kw == "DisjointUnion") {
      expect_min_arity(t, 3);
      EntityName whole = entity(a[0], EntityKind::Class);
      return axioms::DisjointUnion{std::move(whole), distinct_classes(t, 1)};
    }
    if (kw == "ObjectPropertyDomain") {
      expect_arity(t, 2);
      return axioms::ObjectPropertyDomain{entity(a[0], EntityKind::ObjectProperty),
                                          class_expression(a[1])};
    }
    if (kw == "ObjectPropertyRange") {
      expect_arity(t, 2);
      return axioms::ObjectPropertyRange{entity(a[0], EntityKind::ObjectProperty),
                                         class_expression(a[1])};
    }
    if (kw == "DataPropertyDomain") {
      expect_arity(t, 2);
      return axioms::DataPropertyDomain{entity(a[0], EntityKind::DataProperty),
                                        class_expression(a[1])};
    }
    if (kw == "DataPropertyRange") {
      expect_arity(t, 2);
      EntityName p = entity(a[0], EntityKind::DataProperty);
      if (a[1].call || a[1].head.kind != TokenKind::Name)
        throw failure(a[1].head.span, "datatype", "expected a datatype");
      auto dt = parse_datatype(a[1].head.text);
      if (!dt)
        throw failure(a[1].head.span, "datatype", "unsupported datatype '" + a[1].head.text + "'");
      return axioms::DataPropertyRange{std::move(p), *dt};
    }
    if (kw == "SubObjectPropertyOf") {
      expect_arity(t, 2);
      return axioms::SubObjectPropertyOf{entity(a[0], EntityKind::ObjectProperty),
                                         entity(a[1], EntityKind::ObjectProperty)};
    }
    if (kw == "InverseObjectProperties") {
      expect_arity(t, 2);
      return axioms::InverseObjectProperties{entity(a[0], EntityKind::ObjectProperty),
                                             entity(a[1], EntityKind::ObjectProperty)};
    }
    if (auto c = characteristic_from_keyword(kw)) {
      expect_arity(t, 1);
      return axioms::PropertyCharacteristic{entity(a[0], EntityKind::ObjectProperty), *c};
    }
    if (kw == "ClassAssertion") {
      expect_arity(t, 2);
      ClassExpression type = class_expression(a[0]);
      return axioms::ClassAssertion{std::move(type), entity(a[1], EntityKind::Individual)};
    }
    if (kw == "ObjectPropertyAssertion") {
      expect_arity(t, 3);
      EntityName p = entity(a[0], EntityKind::ObjectProperty);
      EntityName s = entity(a[1], EntityKind::Individual);
      return axioms::ObjectPropertyAssertion{std::move(p), std::move(s),
                                             entity(a[2], EntityKind::Individual)};
    }
    if (kw == "DataPropertyAssertion") {
      expect_arity(t, 3);
      EntityName p = entity(a[0], EntityKind::DataProperty);
      EntityName s = entity(a[1], EntityKind::Individual);
      return axioms::DataPropertyAssertion{std::move(p), std::move(s), literal(a[2])};
    }
    if (kw == "AnnotationAssertion") {
      expect_arity(t, 3);
      if (a[0].call || a[0].head.kind != TokenKind::Name)
        throw failure(a[0].head.span, "syntax", "expected an annotation property");
      if (a[0].head.text != "rdfs:label") {
        report(Severity::Warning, a[0].head.span, "annotation",
               "annotation " + a[0].head.text + " dropped; only rdfs:label is kept");
        return std::nullopt;
      }
      EntityName subject = name_of(a[1]);
      if (!ontology_.is_declared(subject)) {
        failed_ = true;
        report(Severity::Error, a[1].head.span, "undeclared",
               subject.qualified() + " is not declared");
      }
      Literal text = literal(a[2]);
      if (text.type != Datatype::String)
        throw failure(a[2].head.span, "literal", "rdfs:label needs a string literal");
      return axioms::Label{std::move(subject), std::move(text.lexical)};
    }
    if (kw == "Declaration") return std::nullopt;
    throw failure(t.head.span, "unknown-keyword", "unknown axiom keyword '" + kw + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic> diagnostics_;
  Ontology ontology_;
  bool failed_ = false;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ontomap
