#include "ontomap/reasoner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <regex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ontomap/error.hpp"

namespace ontomap {

Fact Fact::is_a(EntityName individual, EntityName cls) {
  return Fact{FactKind::IsA, std::move(individual), std::move(cls), {}};
}
Fact Fact::rel(EntityName property, EntityName subject, EntityName object) {
  return Fact{FactKind::Rel, std::move(property), std::move(subject), std::move(object)};
}
Fact Fact::sub(EntityName sub, EntityName sup) {
  return Fact{FactKind::Sub, std::move(sub), std::move(sup), {}};
}

std::string to_string(const Fact& f) {
  switch (f.kind) {
    case FactKind::IsA: return "IsA(" + f.first.qualified() + " " + f.second.qualified() + ")";
    case FactKind::Sub: return "Sub(" + f.first.qualified() + " " + f.second.qualified() + ")";
    case FactKind::Rel:
      return "Rel(" + f.first.qualified() + " " + f.second.qualified() + " " +
             f.third.qualified() + ")";
  }
  return "?";
}

std::optional<Fact> parse_fact(std::string_view text) {
  static const std::regex re(R"(^\s*(IsA|Sub|Rel)\(\s*([^\s,()]+)[\s,]+([^\s,()]+)(?:[\s,]+([^\s,()]+))?\s*\)\s*$)");
  std::cmatch m;
  if (!std::regex_match(text.begin(), text.end(), m, re)) return std::nullopt;
  try {
    const std::string kind = m[1];
    if (kind == "Rel") {
      if (!m[4].matched) return std::nullopt;
      return Fact::rel(EntityName::parse(m[2].str()), EntityName::parse(m[3].str()),
                       EntityName::parse(m[4].str()));
    }
    if (m[4].matched) return std::nullopt;
    auto a = EntityName::parse(m[2].str());
    auto b = EntityName::parse(m[3].str());
    return kind == "IsA" ? Fact::is_a(a, b) : Fact::sub(a, b);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Asserted: return "asserted";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R3b: return "R3b";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
    case Rule::R7: return "R7";
    case Rule::R8: return "R8";
    case Rule::R9: return "R9";
    case Rule::R10: return "R10";
  }
  return "?";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DisjointMembership: return "DisjointMembership";
    case ViolationKind::IrreflexiveLoop: return "IrreflexiveLoop";
    case ViolationKind::AsymmetryBreach: return "AsymmetryBreach";
    case ViolationKind::FunctionalFanout: return "FunctionalFanout";
    case ViolationKind::UnsatisfiableClass: return "UnsatisfiableClass";
    case ViolationKind::DomainRangeMismatch: return "DomainRangeMismatch";
  }
  return "?";
}

std::string to_record(const Violation& v) {
  std::string out = std::string(to_string(v.kind)) + "\t" + std::string(to_string(v.severity)) + "\t";
  for (std::size_t i = 0; i < v.involved.size(); ++i) {
    if (i) out += ' ';
    out += v.involved[i].qualified();
  }
  out += '\t';
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
    if (i) out += "; ";
    out += to_string(v.witnesses[i]);
  }
  return out;
}

std::size_t InferredStore::asserted_count() const {
  return static_cast<std::size_t>(std::count_if(
      derivations_.begin(), derivations_.end(),
      [](const auto& kv) { return kv.second.rule == Rule::Asserted; }));
}

namespace {

struct IFact {
  FactKind kind;
  int a, b, c;
  bool operator==(const IFact&) const = default;
};

struct IFactHash {
  std::size_t operator()(const IFact& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.kind);
    for (int v : {f.a, f.b, f.c}) h = h * 1000003u ^ std::hash<int>{}(v);
    return h;
  }
};

struct IDerivation {
  IFact fact;
  Rule rule;
  std::vector<IFact> premises;
};

class Interner {
 public:
  explicit Interner(std::vector<EntityName> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) ids_[names_[i]] = static_cast<int>(i);
  }
  int id(const EntityName& n) const { return ids_.at(n); }
  const EntityName& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return names_.size(); }
  const std::vector<EntityName>& names() const { return names_; }

 private:
  std::vector<EntityName> names_;
  std::map<EntityName, int> ids_;
};

class Engine {
 public:
  explicit Engine(const Ontology& o)
      : classes_(o.entities(EntityKind::Class)),
        individuals_(o.entities(EntityKind::Individual)),
        properties_(o.entities(EntityKind::ObjectProperty)) {
    const std::size_t nc = classes_.size(), np = properties_.size(), ni = individuals_.size();
    sup_.resize(nc);
    sub_.resize(nc);
    members_.resize(nc);
    types_.resize(ni);
    out_.resize(np);
    in_.resize(np);
    domain_.resize(np);
    range_.resize(np);
    union_domains_.resize(np);
    union_ranges_.resize(np);
    inverse_.resize(np);
    super_props_.resize(np);
    for (auto* flags : {&symmetric_, &asymmetric_, &transitive_, &irreflexive_, &functional_,
                        &inverse_functional_})
      flags->assign(np, false);
    load(o);
  }

  void run() {
    while (!agenda_.empty()) {
      const IFact f = agenda_.front();
      agenda_.pop_front();
      switch (f.kind) {
        case FactKind::Sub: process_sub(f); break;
        case FactKind::IsA: process_is_a(f); break;
        case FactKind::Rel: process_rel(f); break;
      }
    }
  }


  std::vector<Violation> violations(bool strict) const;

  const Interner& classes() const { return classes_; }
  const Interner& individuals() const { return individuals_; }
  const Interner& properties() const { return properties_; }
  const std::vector<IDerivation>& derivations() const { return derivations_; }

  Fact to_fact(const IFact& f) const {
    switch (f.kind) {
      case FactKind::IsA: return Fact::is_a(individuals_.name(f.a), classes_.name(f.b));
      case FactKind::Sub: return Fact::sub(classes_.name(f.a), classes_.name(f.b));
      case FactKind::Rel:
        return Fact::rel(properties_.name(f.a), individuals_.name(f.b), individuals_.name(f.c));
    }
    return {};
  }

 private:
  static IFact sub_fact(int a, int b) { return {FactKind::Sub, a, b, -1}; }
  static IFact is_a_fact(int i, int c) { return {FactKind::IsA, i, c, -1}; }
  static IFact rel_fact(int p, int a, int b) { return {FactKind::Rel, p, a, b}; }

  void add(IFact f, Rule rule, std::vector<IFact> premises = {}) {
    if (!known_.insert(f).second) return;
    derivations_.push_back({f, rule, std::move(premises)});
    agenda_.push_back(f);
  }

  void add_disjoint(int a, int b) {
    if (a != b) disjoint_.insert({std::min(a, b), std::max(a, b)});
  }

  void load(const Ontology& o) {
    auto cls = [&](const EntityName& n) { return classes_.id(n); };
    auto prop = [&](const EntityName& n) { return properties_.id(n); };
    auto ind = [&](const EntityName& n) { return individuals_.id(n); };
    for (const auto& ax : o.axioms()) {
      if (const auto* a = std::get_if<axioms::SubClassOf>(&ax)) {
        if (a->sub.is_named() && a->sup.is_named()) {
          add(sub_fact(cls(a->sub.name()), cls(a->sup.name())), Rule::Asserted);
        } else if (a->sub.is_union() && a->sup.is_named()) {
          for (const auto& m : a->sub.members())
            add(sub_fact(cls(m), cls(a->sup.name())), Rule::R3b);
        }
      } else if (const auto* a = std::get_if<axioms::EquivalentClasses>(&ax)) {
        if (a->first.is_named() && a->second.is_named()) {
          const int x = cls(a->first.name()), y = cls(a->second.name());
          add(sub_fact(x, y), Rule::R2);
          add(sub_fact(y, x), Rule::R2);
        } else if (a->first.is_named() != a->second.is_named()) {
          const auto& named = a->first.is_named() ? a->first : a->second;
          const auto& un = a->first.is_named() ? a->second : a->first;
          for (const auto& m : un.members()) add(sub_fact(cls(m), cls(named.name())), Rule::R3b);
        }
      } else if (const auto* a = std::get_if<axioms::DisjointClasses>(&ax)) {
        for (std::size_t i = 0; i < a->classes.size(); ++i)
          for (std::size_t j = i + 1; j < a->classes.size(); ++j)
            add_disjoint(cls(a->classes[i]), cls(a->classes[j]));
      } else if (const auto* a = std::get_if<axioms::DisjointUnion>(&ax)) {
        for (const auto& part : a->parts) add(sub_fact(cls(part), cls(a->whole)), Rule::R3);
        for (std::size_t i = 0; i < a->parts.size(); ++i)
          for (std::size_t j = i + 1; j < a->parts.size(); ++j)
            add_disjoint(cls(a->parts[i]), cls(a->parts[j]));
      } else if (const auto* a = std::get_if<axioms::ObjectPropertyDomain>(&ax)) {
        if (a->domain.is_named())
          domain_[prop(a->property)].push_back(cls(a->domain.name()));
        else
          union_domains_[prop(a->property)].push_back(ids(a->domain));
      } else if (const auto* a = std::get_if<axioms::ObjectPropertyRange>(&ax)) {
        if (a->range.is_named())
          range_[prop(a->property)].push_back(cls(a->range.name()));
        else
          union_ranges_[prop(a->property)].push_back(ids(a->range));
      } else if (const auto* a = std::get_if<axioms::SubObjectPropertyOf>(&ax)) {
        super_props_[prop(a->sub)].push_back(prop(a->sup));
      } else if (const auto* a = std::get_if<axioms::InverseObjectProperties>(&ax)) {
        inverse_[prop(a->first)].push_back(prop(a->second));
        inverse_[prop(a->second)].push_back(prop(a->first));
      } else if (const auto* a = std::get_if<axioms::PropertyCharacteristic>(&ax)) {
        const auto p = static_cast<std::size_t>(prop(a->property));
        switch (a->characteristic) {
          case Characteristic::Symmetric: symmetric_[p] = true; break;
          case Characteristic::Asymmetric: asymmetric_[p] = true; break;
          case Characteristic::Transitive: transitive_[p] = true; break;
          case Characteristic::Irreflexive: irreflexive_[p] = true; break;
          case Characteristic::Functional: functional_[p] = true; break;
          case Characteristic::InverseFunctional: inverse_functional_[p] = true; break;
        }
      } else if (const auto* a = std::get_if<axioms::ClassAssertion>(&ax)) {
        if (a->type.is_named()) {
          const IFact f = is_a_fact(ind(a->individual), cls(a->type.name()));
          asserted_types_.push_back(f);
          add(f, Rule::Asserted);
        }
      } else if (const auto* a = std::get_if<axioms::ObjectPropertyAssertion>(&ax)) {
        add(rel_fact(prop(a->property), ind(a->subject), ind(a->object)), Rule::Asserted);
      }
    }
    for (auto* lists : {&domain_, &range_, &inverse_, &super_props_})
      for (auto& l : *lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
      }
  }

  std::vector<int> ids(const ClassExpression& e) const {
    std::vector<int> out;
    for (const auto& m : e.members()) out.push_back(classes_.id(m));
    return out;
  }

  void process_sub(const IFact& f) {
    const int a = f.a, b = f.b;
    sup_[a].push_back(b);
    sub_[b].push_back(a);
    for (std::size_t i = 0; i < sub_[a].size(); ++i) {
      const int x = sub_[a][i];
      add(sub_fact(x, b), Rule::R1, {sub_fact(x, a), f});
    }
    for (std::size_t i = 0; i < sup_[b].size(); ++i) {
      const int y = sup_[b][i];
      add(sub_fact(a, y), Rule::R1, {f, sub_fact(b, y)});
    }
    for (const int ind : members_[a]) add(is_a_fact(ind, b), Rule::R4, {is_a_fact(ind, a), f});
  }

  void process_is_a(const IFact& f) {
    types_[f.a].push_back(f.b);
    members_[f.b].push_back(f.a);
    for (const int b : sup_[f.b]) add(is_a_fact(f.a, b), Rule::R4, {f, sub_fact(f.b, b)});
  }

  void process_rel(const IFact& f) {
    const int p = f.a, a = f.b, b = f.c;
    out_[p][a].push_back(b);
    in_[p][b].push_back(a);
    for (const int c : domain_[p]) add(is_a_fact(a, c), Rule::R5, {f});
    for (const int c : range_[p]) add(is_a_fact(b, c), Rule::R6, {f});
    for (const int q : inverse_[p]) add(rel_fact(q, b, a), Rule::R7, {f});
    if (symmetric_[p]) add(rel_fact(p, b, a), Rule::R8, {f});
    if (transitive_[p]) {
      if (auto it = out_[p].find(b); it != out_[p].end()) {
        const auto targets = it->second;
        for (const int c : targets) add(rel_fact(p, a, c), Rule::R9, {f, rel_fact(p, b, c)});
      }
      if (auto it = in_[p].find(a); it != in_[p].end()) {
        const auto sources = it->second;
        for (const int z : sources) add(rel_fact(p, z, b), Rule::R9, {rel_fact(p, z, a), f});
      }
    }
    for (const int q : super_props_[p]) add(rel_fact(q, a, b), Rule::R10, {f});
  }

  Interner classes_, individuals_, properties_;

  std::deque<IFact> agenda_;
  std::unordered_set<IFact, IFactHash> known_;
  std::vector<IDerivation> derivations_;

  // Indexes over processed facts.
  std::vector<std::vector<int>> sup_, sub_, members_, types_;
  std::vector<std::unordered_map<int, std::vector<int>>> out_, in_;

  std::vector<std::vector<int>> domain_, range_, inverse_, super_props_;
  std::vector<std::vector<std::vector<int>>> union_domains_, union_ranges_;
  std::vector<bool> symmetric_, asymmetric_, transitive_, irreflexive_, functional_,
      inverse_functional_;
  std::set<std::pair<int, int>> disjoint_;
  std::vector<IFact> asserted_types_;
};

std::vector<Violation> Engine::violations(bool strict) const {
  std::set<Violation> found;
  const auto& C = classes_;
  const auto& I = individuals_;
  const auto& P = properties_;

  auto supers_or_self = [&](int c) {
    std::set<int> s(sup_[c].begin(), sup_[c].end());
    s.insert(c);
    return s;
  };

  for (const auto& [x, y] : disjoint_) {
    std::set<int> mx(members_[x].begin(), members_[x].end());
    for (const int ind : members_[y]) {
      if (!mx.count(ind)) continue;
      found.insert({ViolationKind::DisjointMembership,
                    Severity::Error,
                    {I.name(ind), C.name(x), C.name(y)},
                    {Fact::is_a(I.name(ind), C.name(x)), Fact::is_a(I.name(ind), C.name(y))}});
    }
  }

  for (std::size_t c = 0; c < C.size(); ++c) {
    const auto ups = supers_or_self(static_cast<int>(c));
    for (const auto& [x, y] : disjoint_) {
      if (!ups.count(x) || !ups.count(y)) continue;
      const auto& cn = C.name(static_cast<int>(c));
      Violation v{ViolationKind::UnsatisfiableClass, Severity::Warning, {cn, C.name(x), C.name(y)}, {}};
      for (const int d : {x, y}) {
        const auto s = Fact::sub(cn, C.name(d));
        if (std::find(sup_[c].begin(), sup_[c].end(), d) != sup_[c].end()) v.witnesses.push_back(s);
      }
      found.insert(std::move(v));
    }
  }

  for (std::size_t p = 0; p < P.size(); ++p) {
    const auto& pn = P.name(static_cast<int>(p));
    std::vector<std::pair<int, std::vector<int>>> edges(out_[p].begin(), out_[p].end());
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, targets] : edges) {
      std::vector<int> ts = targets;
      std::sort(ts.begin(), ts.end());
      for (const int b : ts) {
        if (irreflexive_[p] && a == b)
          found.insert({ViolationKind::IrreflexiveLoop, Severity::Error, {pn, I.name(a)},
                        {Fact::rel(pn, I.name(a), I.name(a))}});
        if (asymmetric_[p] && a < b) {
          auto back = out_[p].find(b);
          if (back != out_[p].end() &&
              std::find(back->second.begin(), back->second.end(), a) != back->second.end())
            found.insert({ViolationKind::AsymmetryBreach, Severity::Error, {pn, I.name(a), I.name(b)},
                          {Fact::rel(pn, I.name(a), I.name(b)), Fact::rel(pn, I.name(b), I.name(a))}});
        }
      }
      if (functional_[p] && ts.size() > 1) {
        Violation v{ViolationKind::FunctionalFanout, Severity::Error, {pn, I.name(a)}, {}};
        for (const int b : ts) {
          v.involved.push_back(I.name(b));
          v.witnesses.push_back(Fact::rel(pn, I.name(a), I.name(b)));
        }
        found.insert(std::move(v));
      }
    }
    if (inverse_functional_[p]) {
      for (const auto& [b, sources] : in_[p]) {
        if (sources.size() < 2) continue;
        std::vector<int> ss = sources;
        std::sort(ss.begin(), ss.end());
        Violation v{ViolationKind::FunctionalFanout, Severity::Error, {pn, I.name(b)}, {}};
        for (const int a : ss) {
          v.involved.push_back(I.name(a));
          v.witnesses.push_back(Fact::rel(pn, I.name(a), I.name(b)));
        }
        found.insert(std::move(v));
      }
    }
  }

  if (strict) {
    // Memberships entailed without R5/R6: asserted types closed under Sub.
    std::set<std::pair<int, int>> base;
    for (const auto& f : asserted_types_)
      for (const int c : supers_or_self(f.b)) base.insert({f.a, c});
    auto check = [&](int p, int ind, const std::vector<int>& allowed, const IFact& rel) {
      for (const int c : allowed)
        if (base.count({ind, c})) return;
      Violation v{ViolationKind::DomainRangeMismatch, Severity::Error,
                  {P.name(p), I.name(ind)}, {to_fact(rel)}};
      for (const int c : allowed) v.involved.push_back(C.name(c));
      found.insert(std::move(v));
    };
    for (const auto& d : derivations_) {
      if (d.fact.kind != FactKind::Rel) continue;
      const int p = d.fact.a;
      for (const int c : domain_[p]) check(p, d.fact.b, {c}, d.fact);
      for (const auto& u : union_domains_[p]) check(p, d.fact.b, u, d.fact);
      for (const int c : range_[p]) check(p, d.fact.c, {c}, d.fact);
      for (const auto& u : union_ranges_[p]) check(p, d.fact.c, u, d.fact);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

InferredStore saturate(const Ontology& ontology, ReasonerOptions options) {
  Engine engine(ontology);
  engine.run();
  InferredStore store;
  store.classes_ = engine.classes().names();
  store.individuals_ = engine.individuals().names();
  store.properties_ = engine.properties().names();
  for (const auto& d : engine.derivations()) {
    Derivation out{engine.to_fact(d.fact), d.rule, {}};
    for (const auto& p : d.premises) out.premises.push_back(engine.to_fact(p));
    store.facts_.insert(out.fact);
    store.derivations_.emplace(out.fact, std::move(out));
  }
  store.violations_ = engine.violations(options.strict);
  return store;
}

std::set<EntityName> instances_of(const InferredStore& store, const EntityName& cls) {
  if (!std::binary_search(store.classes().begin(), store.classes().end(), cls))
    throw Error(Errc::UndeclaredEntity, cls.qualified() + " is not a declared class");
  std::set<EntityName> out;
  for (auto it = store.facts().lower_bound(Fact{FactKind::IsA, {}, {}, {}});
       it != store.facts().end() && it->kind == FactKind::IsA; ++it)
    if (it->second == cls) out.insert(it->first);
  return out;
}

ExplanationNode explain(const InferredStore& store, const Fact& fact) {
  auto it = store.derivations().find(fact);
  if (it == store.derivations().end())
    throw Error(Errc::UnknownFact, to_string(fact) + " is not in the store");
  ExplanationNode node{fact, it->second.rule, {}};
  for (const auto& p : it->second.premises) node.premises.push_back(explain(store, p));
  return node;
}

std::string format_explanation(const ExplanationNode& node) {
  std::ostringstream out;
  std::function<void(const ExplanationNode&, int)> walk = [&](const ExplanationNode& n, int depth) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(n.fact) << "  ["
        << to_string(n.rule) << "]\n";
    for (const auto& p : n.premises) walk(p, depth + 1);
  };
  walk(node, 0);
  return out.str();
}

}  // namespace ontomap
