#include "ontomap/error.hpp"

namespace ontomap {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidName: return "InvalidName";
    case Errc::UndeclaredEntity: return "UndeclaredEntity";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::InvalidAxiom: return "InvalidAxiom";
    case Errc::UnknownFact: return "UnknownFact";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::PartitionMismatch: return "PartitionMismatch";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::TooManyCliques: return "TooManyCliques";
    case Errc::ConflictingConstraints: return "ConflictingConstraints";
    case Errc::InvalidHyperparameter: return "InvalidHyperparameter";
    case Errc::ForestVocabMismatch: return "ForestVocabMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ontomap
