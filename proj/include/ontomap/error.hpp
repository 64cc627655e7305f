#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontomap {

enum class Errc {
  InvalidName,
  UndeclaredEntity,
  KindMismatch,
  InvalidAxiom,
  UnknownFact,
  EmptyGraph,
  PartitionMismatch,
  UnknownFormat,
  EmptyCorpus,
  MalformedInput,
  TooManyCliques,
  ConflictingConstraints,
  InvalidHyperparameter,
  ForestVocabMismatch,
};

std::string_view to_string(Errc code);

// Every recoverable failure in the library is reported as an Error carrying
// one of the codes above; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ontomap
