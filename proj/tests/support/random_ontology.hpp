#pragma once

#include "ontomap/ontology.hpp"
#include "ontomap/random.hpp"

namespace ontomap::testing {

struct RandomOntologySpec {
  std::size_t max_classes = 12;
  std::size_t max_properties = 4;
  std::size_t max_individuals = 10;
  std::size_t max_data_properties = 2;
  std::size_t max_axioms = 40;
  bool annotations = true;       // labels with awkward characters
  bool extra_prefix = true;      // some names under an `ex:` prefix
  bool punning = true;           // some individuals share a class name
};

// A valid ontology drawing every axiom kind of the supported grammar.
Ontology random_ontology(Rng& rng, const RandomOntologySpec& spec = {});

// Same prefixes, declarations and axioms, with the axioms in shuffled order.
Ontology shuffled_copy(const Ontology& ontology, Rng& rng);

}  // namespace ontomap::testing
