#include "ontomap/synthetic.hpp"

#include <array>
#include <string>

#include "ontomap/random.hpp"

namespace ontomap {

PlantedCorpus planted_corpus(const PlantedCorpusSpec& spec) {
  Rng rng(spec.seed);
  PlantedCorpus out;
  for (std::size_t d = 0; d < spec.documents; ++d) {
    const std::size_t topic = d % spec.topics;
    std::string text;
    for (std::size_t i = 0; i < spec.document_length; ++i) {
      if (i) text += ' ';
      text += "t" + std::to_string(topic) + "w" + std::to_string(rng.below(spec.words_per_topic));
    }
    out.records.push_back({"doc" + std::to_string(d), std::move(text)});
    out.labels.push_back(topic);
  }
  return out;
}

namespace {

using Theme = std::vector<std::string_view>;

const std::array<Theme, 4>& themes() {
  static const std::array<Theme, 4> t = {{
      {"obesity", "obesity", "obesity", "disease", "diabetes", "type", "hernia", "hypoglycemia",
       "syndrome", "night", "eating", "condition", "medical", "pathological", "psychological",
       "disorder", "overeating", "sedentary", "lifestyle", "risk"},
      {"diet", "diet", "diet", "calorie", "carbohydrate", "fat", "low", "intake", "nutrient",
       "protein", "energy", "meal", "weight", "loss", "available", "behaviour", "exercise",
       "physical", "activity", "restriction"},
      {"surgery", "gastric", "bypass", "roux", "procedure", "medication", "liraglutide", "drug",
       "therapy", "treatment", "treatment", "dose", "side", "effect", "bariatric", "clinical",
       "trial", "outcome", "adverse", "orlistat"},
      {"symptom", "sign", "pain", "abdominal", "blood", "sugar", "manifestation", "glucose",
       "fatigue", "insulin", "level", "pressure", "hypertension", "inflammation", "marker",
       "measurement", "index", "body", "mass", "waist"},
  }};
  return t;
}

const Theme& filler() {
  static const Theme f = {"study", "patients", "results", "analysis", "cohort", "data",
                          "associated", "group", "years", "significant", "methods", "review"};
  return f;
}

const Theme& stopwords() {
  static const Theme s = {"the", "of", "and", "in", "with", "was", "for", "to", "a", "is"};
  return s;
}

}  // namespace

std::vector<DocumentRecord> obesity_corpus(std::size_t documents, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DocumentRecord> out;
  const auto& t = themes();
  for (std::size_t d = 0; d < documents; ++d) {
    const auto main = static_cast<std::size_t>(rng.below(t.size()));
    const auto second = static_cast<std::size_t>(rng.below(t.size()));
    const std::size_t length = 40 + static_cast<std::size_t>(rng.below(30));
    std::string text;
    for (std::size_t i = 0; i < length; ++i) {
      const double u = rng.uniform();
      const Theme& source = u < 0.6 ? t[main] : u < 0.8 ? t[second] : u < 0.9 ? filler() : stopwords();
      if (i) text += (i % 12 == 11) ? ". " : " ";
      text += source[rng.below(source.size())];
    }
    out.push_back({"abs" + std::to_string(d), text + "."});
  }
  return out;
}

}  // namespace ontomap
