#include <gtest/gtest.h>

#include <algorithm>

#include "fixture.hpp"
#include "naive_reasoner.hpp"
#include "ontomap/parser.hpp"
#include "ontomap/reasoner.hpp"
#include "random_ontology.hpp"

using namespace ontomap;
namespace ot = ontomap::testing;
using ontomap::testing::error_code_of;
using ontomap::testing::n;

namespace {

const InferredStore& fixture_store() {
  static const InferredStore store = saturate(ot::fixture());
  return store;
}

std::vector<Violation> sorted(std::vector<Violation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t count_kind(const InferredStore& s, ViolationKind kind) {
  const auto& v = s.violations();
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const auto& x) { return x.kind == kind; }));
}

bool is_class_assertion(const Ontology& o, const Fact& f) {
  return o.contains(axioms::ClassAssertion{ClassExpression::named(f.second), f.first});
}

// Checks that every node of an explanation matches the premise pattern of
// its rule and that leaves come from the ontology.
void check_tree(const ExplanationNode& node, const InferredStore& store, const Ontology& o) {
  const Fact& f = node.fact;
  ASSERT_TRUE(store.contains(f)) << to_string(f);
  std::vector<Fact> p;
  for (const auto& child : node.premises) {
    p.push_back(child.fact);
    check_tree(child, store, o);
  }
  switch (node.rule) {
    case Rule::Asserted:
      EXPECT_TRUE(p.empty());
      if (f.kind == FactKind::IsA) {
        EXPECT_TRUE(is_class_assertion(o, f)) << to_string(f);
      }
      if (f.kind == FactKind::Rel) {
        EXPECT_TRUE(o.contains(axioms::ObjectPropertyAssertion{f.first, f.second, f.third}));
      }
      if (f.kind == FactKind::Sub) {
        EXPECT_TRUE(o.contains(axioms::SubClassOf{ClassExpression::named(f.first), ClassExpression::named(f.second)}));
      }
      break;
    case Rule::R2:
    case Rule::R3:
    case Rule::R3b:
      EXPECT_TRUE(p.empty());
      EXPECT_EQ(f.kind, FactKind::Sub);
      break;
    case Rule::R1:
      ASSERT_EQ(p.size(), 2u);
      EXPECT_EQ(p[0], Fact::sub(f.first, p[0].second));
      EXPECT_EQ(p[1], Fact::sub(p[0].second, f.second));
      break;
    case Rule::R4:
      ASSERT_EQ(p.size(), 2u);
      EXPECT_EQ(p[0], Fact::is_a(f.first, p[0].second));
      EXPECT_EQ(p[1], Fact::sub(p[0].second, f.second));
      break;
    case Rule::R5:
      ASSERT_EQ(p.size(), 1u);
      EXPECT_EQ(p[0].kind, FactKind::Rel);
      EXPECT_EQ(p[0].second, f.first);
      EXPECT_TRUE(o.contains(axioms::ObjectPropertyDomain{p[0].first, ClassExpression::named(f.second)}));
      break;
    case Rule::R6:
      ASSERT_EQ(p.size(), 1u);
      EXPECT_EQ(p[0].kind, FactKind::Rel);
      EXPECT_EQ(p[0].third, f.first);
      EXPECT_TRUE(o.contains(axioms::ObjectPropertyRange{p[0].first, ClassExpression::named(f.second)}));
      break;
    case Rule::R7:
      ASSERT_EQ(p.size(), 1u);
      EXPECT_EQ(p[0].second, f.third);
      EXPECT_EQ(p[0].third, f.second);
      EXPECT_TRUE(o.contains(axioms::InverseObjectProperties{p[0].first, f.first}) ||
                  o.contains(axioms::InverseObjectProperties{f.first, p[0].first}));
      break;
    case Rule::R8:
      ASSERT_EQ(p.size(), 1u);
      EXPECT_EQ(p[0], Fact::rel(f.first, f.third, f.second));
      break;
    case Rule::R9:
      ASSERT_EQ(p.size(), 2u);
      EXPECT_EQ(p[0], Fact::rel(f.first, f.second, p[0].third));
      EXPECT_EQ(p[1], Fact::rel(f.first, p[0].third, f.third));
      break;
    case Rule::R10:
      ASSERT_EQ(p.size(), 1u);
      EXPECT_EQ(p[0], Fact::rel(p[0].first, f.second, f.third));
      EXPECT_TRUE(o.contains(axioms::SubObjectPropertyOf{p[0].first, f.first}));
      break;
  }
}

Ontology with_axioms(Ontology o, std::initializer_list<Axiom> extra) {
  for (const auto& ax : extra) o.add_axiom(ax);
  return o;
}

}  // namespace

TEST(Fact, TextRoundTrip) {
  for (const auto& f : {Fact::is_a(n("Obesity"), n("Disease")), Fact::sub(n("A"), EntityName{"ex", "B"}),
                        Fact::rel(n("p"), n("a"), n("b"))}) {
    EXPECT_EQ(parse_fact(to_string(f)), f);
  }
  EXPECT_EQ(to_string(Fact::is_a(n("Obesity"), n("Disease"))), "IsA(:Obesity :Disease)");
  EXPECT_FALSE(parse_fact("IsA(:a)").has_value());
}

TEST(Reasoner, EmptyOntology) {
  const auto s = saturate(Ontology{});
  EXPECT_TRUE(s.facts().empty());
  EXPECT_TRUE(s.violations().empty());
  EXPECT_EQ(error_code_of([&] { instances_of(s, n("C")); }), Errc::UndeclaredEntity);
}

TEST(Reasoner, FixtureTaxonomyInferences) {
  const auto& s = fixture_store();
  EXPECT_TRUE(s.contains(Fact::is_a(n("Obesity"), n("Disease"))));
  EXPECT_TRUE(s.contains(Fact::is_a(n("Obesity"), n("PathologicalCondition"))));
  EXPECT_TRUE(s.contains(Fact::is_a(n("Obesity"), n("MedicalCondition"))));
  EXPECT_TRUE(s.contains(Fact::sub(n("Disease"), n("MedicalCondition"))));
  EXPECT_EQ(s.derivations().at(Fact::sub(n("Disease"), n("MedicalCondition"))).rule, Rule::R1);
  EXPECT_TRUE(s.contains(Fact::is_a(n("AbdominalPain"), n("Manifestation"))));
  EXPECT_TRUE(s.contains(Fact::sub(n("Diet"), n("Treatment"))));
  EXPECT_EQ(s.derivations().at(Fact::sub(n("Diet"), n("Treatment"))).rule, Rule::R3);
  EXPECT_EQ(s.derivations().at(Fact::sub(n("Symptom"), n("Manifestation"))).rule, Rule::R3b);
  EXPECT_TRUE(s.violations().empty());
  EXPECT_TRUE(saturate(ot::fixture(), {.strict = true}).violations().empty());
}

TEST(Reasoner, RangeTypingOfManifestation) {
  // Obtainable from the range of medConHasManifestation alone.
  auto o = ot::fixture();
  Ontology bare(o.id());
  for (const auto& d : o.declarations()) bare.declare(d.name, d.kind);
  bare.add_axiom(axioms::ObjectPropertyRange{n("medConHasManifestation"), ClassExpression::named(n("Manifestation"))});
  bare.add_axiom(axioms::ObjectPropertyAssertion{n("medConHasManifestation"), n("Hernia"), n("AbdominalPain")});
  const auto s = saturate(bare);
  const auto& d = s.derivations().at(Fact::is_a(n("AbdominalPain"), n("Manifestation")));
  EXPECT_EQ(d.rule, Rule::R6);
  EXPECT_EQ(d.premises, std::vector<Fact>{Fact::rel(n("medConHasManifestation"), n("Hernia"), n("AbdominalPain"))});
}

TEST(Reasoner, InstancesOf) {
  const auto& s = fixture_store();
  const auto conditions = instances_of(s, n("MedicalCondition"));
  for (const char* x : {"Obesity", "Type2Diabetes", "Hernia", "NightEatingSyndrome", "Hypoglycemia"})
    EXPECT_TRUE(conditions.count(n(x))) << x;
  const auto treatments = instances_of(s, n("Treatment"));
  for (const char* x : {"Liraglutide", "PhysicalActivity", "Low-CalorieDiet", "Roux-en-YGastricBypass",
                        "BehaviouralTherapy"})
    EXPECT_TRUE(treatments.count(n(x))) << x;
  // The two other diets of the inventory are treatments too.
  EXPECT_EQ(treatments.size(), 7u);
  EXPECT_EQ(error_code_of([&] { instances_of(s, n("Obesity2")); }), Errc::UndeclaredEntity);
}

TEST(Reasoner, IrreflexiveSelfLoop) {
  const auto o = with_axioms(ot::fixture(), {axioms::ObjectPropertyAssertion{
                                                     n("medCondMayLeadToMedCond"), n("Obesity"), n("Obesity")}});
  const auto s = saturate(o);
  ASSERT_EQ(s.violations().size(), 1u);
  const auto& v = s.violations()[0];
  EXPECT_EQ(v.kind, ViolationKind::IrreflexiveLoop);
  EXPECT_EQ(v.severity, Severity::Error);
  EXPECT_EQ(v.witnesses, std::vector<Fact>{Fact::rel(n("medCondMayLeadToMedCond"), n("Obesity"), n("Obesity"))});
  EXPECT_EQ(to_record(v).substr(0, 22), "IrreflexiveLoop\terror\t");
}

TEST(Reasoner, DietAndMedicationAreDisjoint) {
  auto o = ot::fixture();
  o.declare(n("x"), EntityKind::Individual);
  o.add_axiom(axioms::ClassAssertion{ClassExpression::named(n("Diet")), n("x")});
  o.add_axiom(axioms::ClassAssertion{ClassExpression::named(n("Medication")), n("x")});
  const auto s = saturate(o);
  ASSERT_EQ(s.violations().size(), 1u);
  const auto& v = s.violations()[0];
  EXPECT_EQ(v.kind, ViolationKind::DisjointMembership);
  for (const auto& w : v.witnesses) EXPECT_TRUE(s.contains(w));
  EXPECT_NE(std::find(v.involved.begin(), v.involved.end(), n("Diet")), v.involved.end());
  EXPECT_NE(std::find(v.involved.begin(), v.involved.end(), n("Medication")), v.involved.end());
}

TEST(Reasoner, OtherViolationKinds) {
  Ontology o("http://ex");
  o.set_prefix("", "http://ex#");
  for (const char* c : {"A", "B", "C"}) o.declare(n(c), EntityKind::Class);
  for (const char* i : {"a", "b", "c"}) o.declare(n(i), EntityKind::Individual);
  for (const char* p : {"asym", "fun", "ifun"}) o.declare(n(p), EntityKind::ObjectProperty);
  o.add_axiom(axioms::PropertyCharacteristic{n("asym"), Characteristic::Asymmetric});
  o.add_axiom(axioms::PropertyCharacteristic{n("fun"), Characteristic::Functional});
  o.add_axiom(axioms::PropertyCharacteristic{n("ifun"), Characteristic::InverseFunctional});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("asym"), n("a"), n("b")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("asym"), n("b"), n("a")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("fun"), n("a"), n("b")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("fun"), n("a"), n("c")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("ifun"), n("a"), n("c")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("ifun"), n("b"), n("c")});
  o.add_axiom(axioms::SubClassOf{ClassExpression::named(n("C")), ClassExpression::named(n("A"))});
  o.add_axiom(axioms::SubClassOf{ClassExpression::named(n("C")), ClassExpression::named(n("B"))});
  o.add_axiom(axioms::DisjointClasses{{n("A"), n("B")}});
  const auto s = saturate(o);
  EXPECT_EQ(count_kind(s, ViolationKind::AsymmetryBreach), 1u);
  EXPECT_EQ(count_kind(s, ViolationKind::FunctionalFanout), 2u);
  EXPECT_EQ(count_kind(s, ViolationKind::UnsatisfiableClass), 1u);
  for (const auto& v : s.violations()) {
    EXPECT_EQ(v.severity, v.kind == ViolationKind::UnsatisfiableClass ? Severity::Warning : Severity::Error);
    for (const auto& w : v.witnesses) EXPECT_TRUE(s.contains(w));
  }
}

TEST(Reasoner, StrictModeFlagsUntypedEndpoints) {
  auto o = ot::fixture();
  o.declare(n("Mystery"), EntityKind::Individual);
  o.add_axiom(axioms::ObjectPropertyAssertion{n("canBeTreated"), n("Mystery"), n("Liraglutide")});
  EXPECT_TRUE(saturate(o).violations().empty());
  const auto s = saturate(o, {.strict = true});
  ASSERT_EQ(s.violations().size(), 1u);
  EXPECT_EQ(s.violations()[0].kind, ViolationKind::DomainRangeMismatch);
  EXPECT_TRUE(s.contains(Fact::is_a(n("Mystery"), n("MedicalCondition"))));
}

TEST(Reasoner, InverseSymmetricTransitiveAndSubProperty) {
  Ontology o("http://ex");
  for (const char* i : {"a", "b", "c"}) o.declare(n(i), EntityKind::Individual);
  for (const char* p : {"p", "q", "s", "t", "top"}) o.declare(n(p), EntityKind::ObjectProperty);
  o.add_axiom(axioms::InverseObjectProperties{n("p"), n("q")});
  o.add_axiom(axioms::PropertyCharacteristic{n("s"), Characteristic::Symmetric});
  o.add_axiom(axioms::PropertyCharacteristic{n("t"), Characteristic::Transitive});
  o.add_axiom(axioms::SubObjectPropertyOf{n("t"), n("top")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("p"), n("a"), n("b")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("s"), n("a"), n("c")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("t"), n("a"), n("b")});
  o.add_axiom(axioms::ObjectPropertyAssertion{n("t"), n("b"), n("c")});
  const auto s = saturate(o);
  EXPECT_EQ(s.derivations().at(Fact::rel(n("q"), n("b"), n("a"))).rule, Rule::R7);
  EXPECT_EQ(s.derivations().at(Fact::rel(n("s"), n("c"), n("a"))).rule, Rule::R8);
  EXPECT_EQ(s.derivations().at(Fact::rel(n("t"), n("a"), n("c"))).rule, Rule::R9);
  EXPECT_TRUE(s.contains(Fact::rel(n("top"), n("a"), n("c"))));
  EXPECT_EQ(s.facts(), ot::naive_closure(o));
}

TEST(Reasoner, MatchesNaiveOracle) {
  Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    const auto o = ot::random_ontology(rng);
    ASSERT_EQ(saturate(o).facts(), ot::naive_closure(o)) << serialize(o);
  }
  EXPECT_EQ(fixture_store().facts(), ot::naive_closure(ot::fixture()));
}

TEST(Reasoner, Monotone) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto o = ot::random_ontology(rng);
    const auto before = saturate(o).facts();
    const auto inds = o.entities(EntityKind::Individual);
    const auto classes = o.entities(EntityKind::Class);
    const auto props = o.entities(EntityKind::ObjectProperty);
    if (inds.empty()) continue;
    const auto& a = inds[rng.below(inds.size())];
    if (!classes.empty()) o.add_axiom(axioms::ClassAssertion{ClassExpression::named(classes[rng.below(classes.size())]), a});
    if (!props.empty())
      o.add_axiom(axioms::ObjectPropertyAssertion{props[rng.below(props.size())], a, inds[rng.below(inds.size())]});
    const auto after = saturate(o).facts();
    EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST(Reasoner, IndependentOfAxiomOrder) {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto o = ot::random_ontology(rng);
    const auto a = saturate(o), b = saturate(ot::shuffled_copy(o, rng));
    EXPECT_EQ(a.facts(), b.facts());
    EXPECT_EQ(sorted(a.violations()), sorted(b.violations()));
    const auto sa = saturate(o, {.strict = true}), sb = saturate(ot::shuffled_copy(o, rng), {.strict = true});
    EXPECT_EQ(sorted(sa.violations()), sorted(sb.violations()));
  }
}

TEST(Reasoner, ClosureSizeBound) {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto o = ot::random_ontology(rng);
    const auto s = saturate(o);
    const std::size_t c = o.entities(EntityKind::Class).size();
    const std::size_t p = o.entities(EntityKind::ObjectProperty).size();
    const std::size_t ind = o.entities(EntityKind::Individual).size();
    EXPECT_LE(s.facts().size(), c * c + p * ind * ind + c * ind);
  }
}

TEST(Reasoner, DerivationsAreWellFormed) {
  const auto& s = fixture_store();
  for (const auto& f : s.facts()) check_tree(explain(s, f), s, ot::fixture());
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto o = ot::random_ontology(rng);
    const auto r = saturate(o);
    for (const auto& f : r.facts()) check_tree(explain(r, f), r, o);
  }
}

TEST(Explain, AssertedFactIsLeaf) {
  const auto node = explain(fixture_store(), Fact::is_a(n("Obesity"), n("Disease")));
  EXPECT_EQ(node.rule, Rule::Asserted);
  EXPECT_TRUE(node.premises.empty());
  EXPECT_EQ(format_explanation(node), "IsA(:Obesity :Disease)  [asserted]\n");
}

TEST(Explain, ObesityIsAMedicalCondition) {
  const auto& s = fixture_store();
  const auto node = explain(s, Fact::is_a(n("Obesity"), n("MedicalCondition")));
  check_tree(node, s, ot::fixture());
  EXPECT_NE(node.rule, Rule::Asserted);
  // The taxonomy route is available too: R4 over the R1 fact.
  EXPECT_EQ(s.derivations().at(Fact::sub(n("Disease"), n("MedicalCondition"))).rule, Rule::R1);
}

TEST(Explain, UnknownFact) {
  EXPECT_EQ(error_code_of([] { explain(fixture_store(), Fact::is_a(n("Obesity"), n("Diet"))); }),
            Errc::UnknownFact);
}

TEST(Taxonomy, FixtureChain) {
  const auto t = classify(fixture_store());
  EXPECT_EQ(t.direct_supers(n("Disease")), std::vector<EntityName>{n("PathologicalCondition")});
  EXPECT_EQ(t.direct_supers(n("PathologicalCondition")), std::vector<EntityName>{n("MedicalCondition")});
  const auto subs = t.direct_subs(n("Treatment"));
  EXPECT_EQ(subs.size(), 5u);
  EXPECT_TRUE(t.diagnostics.empty());
  EXPECT_EQ(error_code_of([&] { t.direct_supers(n("Nope")); }), Errc::UndeclaredEntity);
}

TEST(Taxonomy, SingleClass) {
  Ontology o;
  o.declare(n("A"), EntityKind::Class);
  const auto t = classify(saturate(o));
  EXPECT_TRUE(t.direct_supers(n("A")).empty());
  EXPECT_TRUE(t.direct_subs(n("A")).empty());
}

TEST(Taxonomy, EquivalenceCycleIsMerged) {
  Ontology o;
  for (const char* c : {"A", "B", "Top"}) o.declare(n(c), EntityKind::Class);
  o.add_axiom(axioms::EquivalentClasses{ClassExpression::named(n("A")), ClassExpression::named(n("B"))});
  o.add_axiom(axioms::SubClassOf{ClassExpression::named(n("A")), ClassExpression::named(n("Top"))});
  const auto t = classify(saturate(o));
  EXPECT_EQ(t.nodes.size(), 2u);
  EXPECT_EQ(t.node_of.at(n("A")), t.node_of.at(n("B")));
  ASSERT_EQ(t.diagnostics.size(), 1u);
  EXPECT_EQ(t.diagnostics[0].code, "CyclicHierarchy");
  EXPECT_EQ(t.direct_supers(n("B")), std::vector<EntityName>{n("Top")});
}
