#pragma once

#include <set>

#include "ontomap/ontology.hpp"
#include "ontomap/reasoner.hpp"

namespace ontomap::testing {

// Reference closure: seeds the asserted and axiom-sourced facts, then applies
// every rule to every combination of known facts until a full pass adds
// nothing. Quadratic-to-cubic per pass; meant for small ontologies only.
std::set<Fact> naive_closure(const Ontology& ontology);

}  // namespace ontomap::testing
