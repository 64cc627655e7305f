#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>

#include "fixture.hpp"
#include "ontomap/lexicon.hpp"
#include "ontomap/metrics.hpp"
#include "ontomap/parser.hpp"
#include "ontomap/text.hpp"
#include "random_ontology.hpp"

using namespace ontomap;
namespace ot = ontomap::testing;
using ontomap::testing::error_code_of;
using ontomap::testing::n;

namespace {

Ontology declared(std::initializer_list<const char*> classes) {
  Ontology o("http://ex");
  o.set_prefix("", "http://ex#");
  for (const char* c : classes) o.declare(n(c), EntityKind::Class);
  return o;
}

}  // namespace

TEST(EntityName, ParsesAndValidates) {
  const auto name = EntityName::parse(":Low-CalorieDiet");
  EXPECT_EQ(name.prefix, "");
  EXPECT_EQ(name.local, "Low-CalorieDiet");
  EXPECT_EQ(name.display(), "Low-CalorieDiet");
  EXPECT_EQ(EntityName::parse("ex:A").display(), "ex:A");
  EXPECT_EQ(error_code_of([] { EntityName::parse("NoColon"); }), Errc::InvalidName);
  EXPECT_EQ(error_code_of([] { EntityName::parse(":9lives"); }), Errc::InvalidName);
  EXPECT_FALSE(is_valid_local_name(""));
  EXPECT_TRUE(is_valid_prefix_name(""));
}

TEST(ClassExpression, UnionNeedsTwoDistinctMembers) {
  EXPECT_EQ(error_code_of([] { ClassExpression::union_of({n("A")}); }), Errc::InvalidAxiom);
  EXPECT_EQ(error_code_of([] { ClassExpression::union_of({n("A"), n("A")}); }), Errc::InvalidAxiom);
  EXPECT_TRUE(ClassExpression::union_of({n("A"), n("B")}).is_union());
}

TEST(Ontology, AddsAxiomOnce) {
  auto o = declared({"Disease", "PathologicalCondition"});
  const Axiom ax = axioms::SubClassOf{ClassExpression::named(n("Disease")),
                                      ClassExpression::named(n("PathologicalCondition"))};
  const auto once = add_axiom(o, ax);
  EXPECT_EQ(once.axioms().size(), 1u);
  EXPECT_EQ(compute_metrics(once).logical_axiom_count, 1u);
  const auto twice = add_axiom(once, ax);
  EXPECT_EQ(twice, once);
  EXPECT_EQ(twice.declarations(), o.declarations());
}

TEST(Ontology, RejectsUndeclaredAndMiskindedReferences) {
  auto o = declared({"Disease"});
  EXPECT_EQ(error_code_of([&] {
              o.add_axiom(axioms::ClassAssertion{ClassExpression::named(n("Disease")), n("Obesity")});
            }),
            Errc::UndeclaredEntity);
  o.declare(n("Obesity"), EntityKind::Individual);
  EXPECT_EQ(error_code_of([&] {
              o.add_axiom(axioms::SubClassOf{ClassExpression::named(n("Obesity")),
                                             ClassExpression::named(n("Disease"))});
            }),
            Errc::KindMismatch);
  EXPECT_EQ(error_code_of([&] { o.add_axiom(axioms::DisjointClasses{{n("Disease"), n("Disease")}}); }),
            Errc::InvalidAxiom);
  o.declare(n("limit"), EntityKind::DataProperty);
  EXPECT_EQ(error_code_of([&] {
              o.add_axiom(axioms::DataPropertyAssertion{n("limit"), n("Obesity"), {"1.x", Datatype::Decimal}});
            }),
            Errc::InvalidAxiom);
}

TEST(Ontology, DeclarationsAreUniquePerKind) {
  Ontology o;
  EXPECT_TRUE(o.declare(n("Fat"), EntityKind::Class));
  EXPECT_FALSE(o.declare(n("Fat"), EntityKind::Class));
  EXPECT_TRUE(o.declare(n("Fat"), EntityKind::Individual));
  EXPECT_EQ(o.declarations().size(), 2u);
}

TEST(Ontology, DedupIsIdempotentOnRandomOntologies) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto o = ot::random_ontology(rng);
    for (const auto& ax : o.axioms()) EXPECT_EQ(add_axiom(o, ax), o);
  }
}

TEST(Metrics, EmptyOntologyIsAllZero) {
  const auto r = compute_metrics(Ontology{});
  EXPECT_EQ(r.axiom_count, 0u);
  EXPECT_EQ(r.class_count, 0u);
  EXPECT_EQ(r.individual_count, 0u);
  for (const auto& [kw, count] : r.axiom_type_counts) EXPECT_EQ(count, 0u) << kw;
  EXPECT_EQ(r.expressivity, "S");
}

TEST(Metrics, FixtureCounts) {
  const auto r = compute_metrics(ot::fixture());
  EXPECT_EQ(r.class_count, 20u);
  EXPECT_EQ(r.object_property_count, 6u);
  EXPECT_EQ(r.data_property_count, 1u);
  EXPECT_EQ(r.individual_count, 17u);
  EXPECT_EQ(r.expressivity, "SR(D)");
  EXPECT_EQ(r.count_of("DisjointUnion"), 1u);
  EXPECT_EQ(r.count_of("IrreflexiveObjectProperty"), 1u);
}

TEST(Metrics, ExpressivityRuleTable) {
  auto o = declared({});
  o.declare(n("p"), EntityKind::ObjectProperty);
  o.declare(n("q"), EntityKind::ObjectProperty);
  o.add_axiom(axioms::InverseObjectProperties{n("p"), n("q")});
  EXPECT_EQ(detect_expressivity(o), "SI");
  o.add_axiom(axioms::PropertyCharacteristic{n("p"), Characteristic::Functional});
  EXPECT_EQ(detect_expressivity(o), "SIF");
  o.add_axiom(axioms::PropertyCharacteristic{n("q"), Characteristic::Asymmetric});
  EXPECT_EQ(detect_expressivity(o), "SRIF");
  o.declare(n("d"), EntityKind::DataProperty);
  EXPECT_EQ(detect_expressivity(o), "SRIF(D)");

  auto f = ot::fixture();
  f.add_axiom(axioms::InverseObjectProperties{n("canBeTreated"), n("mayCauseSideEffect")});
  EXPECT_EQ(detect_expressivity(f), "SRI(D)");
}

TEST(Metrics, InvariantsHoldAndOrderDoesNotMatter) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto o = ot::random_ontology(rng);
    const auto r = compute_metrics(o);
    EXPECT_EQ(r.axiom_count, r.logical_axiom_count + r.declaration_count + r.annotation_count);
    std::size_t sum = 0;
    for (const auto& [kw, count] : r.axiom_type_counts) sum += count;
    EXPECT_EQ(sum, r.logical_axiom_count);
    EXPECT_EQ(compute_metrics(ot::shuffled_copy(o, rng)), r);
  }
}

TEST(Metrics, ReportRoundTrips) {
  const auto r = compute_metrics(ot::fixture());
  const auto text = format_metrics_report(r);
  EXPECT_NE(text.find("Axiom"), std::string::npos);
  EXPECT_EQ(parse_metrics_report(text), r);
  EXPECT_EQ(error_code_of([] { parse_metrics_report("Axiom 3\n"); }), Errc::MalformedInput);
}

TEST(Text, SplitsIdentifiers) {
  using V = std::vector<std::string>;
  EXPECT_EQ(split_identifier("Low-CalorieDiet"), (V{"low", "calorie", "diet"}));
  EXPECT_EQ(split_identifier("Type2Diabetes"), (V{"type", "2", "diabetes"}));
  EXPECT_EQ(split_identifier("HTMLParser"), (V{"html", "parser"}));
  EXPECT_EQ(split_identifier("Roux-en-YGastricBypass"), (V{"roux", "en", "y", "gastric", "bypass"}));
  EXPECT_EQ(split_words("Obesity, obesity;OBESITY"), (V{"obesity", "obesity", "obesity"}));
  EXPECT_EQ(split_words("Café au lait", false), (V{"Café", "au", "lait"}));
}

TEST(Text, ReadsStopwordFiles) {
  std::istringstream in("# list\nThe\n\n  and \n");
  EXPECT_EQ(read_stopwords(in), (std::set<std::string>{"the", "and"}));
  EXPECT_TRUE(default_stopwords().count("the"));
}

TEST(Lexicon, TokenizesNamesAndLabels) {
  const auto lex = build_lexicon(ot::fixture(), default_stopwords());
  using S = std::set<std::string>;
  EXPECT_EQ(lex.tokens(n("Obesity")), S{"obesity"});
  EXPECT_EQ(lex.tokens(n("Low-CarbohydrateDiet")), (S{"low", "carbohydrate", "diet"}));
  EXPECT_EQ(lex.tokens(n("NightEatingSyndrome")), (S{"night", "eating", "syndrome"}));
  EXPECT_TRUE(lex.tokens(n("Hypoglycemia")).count("sugar"));
  EXPECT_TRUE(lex.tokens(n("Unknown")).empty());
  EXPECT_FALSE(lex.entries.count(n("canBeTreated")));  // properties have no entry
}

TEST(Lexicon, DropsStopwordsAndEmptyEntries) {
  auto o = declared({"TheAnd", "Diet"});
  const auto lex = build_lexicon(o, {"the", "and"});
  EXPECT_FALSE(lex.entries.count(n("TheAnd")));
  EXPECT_TRUE(lex.entries.count(n("Diet")));
}

TEST(Lexicon, TokensAreLowercaseWithoutWhitespace) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto o = ot::random_ontology(rng);
    for (const auto& [name, tokens] : build_lexicon(o, default_stopwords()).entries) {
      EXPECT_TRUE(o.is_declared(name));
      for (const auto& t : tokens) {
        EXPECT_FALSE(t.empty());
        EXPECT_TRUE(std::none_of(t.begin(), t.end(), [](unsigned char c) {
          return std::isupper(c) || std::isspace(c);
        })) << t;
      }
    }
  }
}
