#include "ontomap/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontomap/concept_graph.hpp"
#include "ontomap/constraints.hpp"
#include "ontomap/error.hpp"
#include "ontomap/forest.hpp"
#include "ontomap/graph_export.hpp"
#include "ontomap/lda.hpp"
#include "ontomap/lexicon.hpp"
#include "ontomap/louvain.hpp"
#include "ontomap/metrics.hpp"
#include "ontomap/model_io.hpp"
#include "ontomap/parser.hpp"
#include "ontomap/reasoner.hpp"
#include "ontomap/synthetic.hpp"
#include "ontomap/text.hpp"

namespace ontomap {

namespace {

// Thrown inside a command to end it with a specific status.
struct Exit {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    throw Exit{kExitIo};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write " << path << "\n";
    throw Exit{kExitIo};
  }
}

Ontology load_ontology(const std::string& path, std::ostream& err) {
  const auto text = read_file(path, err);
  auto result = parse(text);
  for (const auto& d : result.diagnostics) err << format_diagnostic(d) << "\n";
  if (!result.ok()) throw Exit{kExitInvalid};
  return std::move(*result.ontology);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::EmptyGraph: return kExitEmptyGraph;
    case Errc::EmptyCorpus: return kExitEmptyCorpus;
    case Errc::TooManyCliques: return kExitTooManyCliques;
    case Errc::InvalidHyperparameter:
    case Errc::UnknownFormat: return kExitUsage;
    default: return kExitInvalid;
  }
}

using ojson = nlohmann::ordered_json;

std::string reason_report(const Ontology& o, const InferredStore& store, bool strict) {
  std::size_t is_a = 0, rel = 0, sub = 0;
  for (const auto& f : store.facts()) {
    switch (f.kind) {
      case FactKind::IsA: ++is_a; break;
      case FactKind::Rel: ++rel; break;
      case FactKind::Sub: ++sub; break;
    }
  }
  ojson doc;
  doc["ontology"] = o.id();
  doc["strict"] = strict;
  const auto asserted = store.asserted_count();
  doc["facts"] = {{"total", store.facts().size()},
                  {"asserted", asserted},
                  {"inferred", store.facts().size() - asserted},
                  {"isa", is_a},
                  {"rel", rel},
                  {"sub", sub}};
  doc["violation_count"] = store.violations().size();
  doc["violations"] = ojson::array();
  for (const auto& v : store.violations()) {
    ojson j;
    j["kind"] = to_string(v.kind);
    j["severity"] = to_string(v.severity);
    j["entities"] = ojson::array();
    for (const auto& e : v.involved) j["entities"].push_back(e.qualified());
    j["witnesses"] = ojson::array();
    for (const auto& w : v.witnesses) j["witnesses"].push_back(to_string(w));
    doc["violations"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

struct LdaArgs {
  std::string corpus, ontology, constraints, constraints_out, stopwords, out;
  bool jsonl = false, constrained = false;
  std::size_t k = 2, iters = 1000, top = 10, min_df = 2, min_len = 3;
  std::uint64_t seed = 42;
  std::optional<double> alpha;
  double beta = 0.01, eta = 100.0, epsilon = 1e-6;
};

int run_lda(const LdaArgs& a, std::ostream& out, std::ostream& err) {
  CorpusConfig config = CorpusConfig::defaults();
  if (!a.stopwords.empty()) {
    std::istringstream in(read_file(a.stopwords, err));
    config.stopwords = read_stopwords(in);
  }
  config.min_df = a.min_df;
  config.min_token_len = a.min_len;

  std::istringstream records_in(read_file(a.corpus, err));
  const auto records = a.jsonl ? read_jsonl_records(records_in) : read_tsv_records(records_in);
  const Corpus corpus = ingest_corpus(records, config);
  for (const auto& w : corpus.warnings) err << "warning: " << w << "\n";

  std::optional<Ontology> ontology;
  std::optional<ConceptLexicon> lexicon;
  if (!a.ontology.empty()) {
    ontology = load_ontology(a.ontology, err);
    lexicon = build_lexicon(*ontology, config.stopwords);
  }

  LdaParams params = LdaParams::with_defaults(a.k);
  if (a.alpha) params.alpha = *a.alpha;
  params.beta = a.beta;
  params.iterations = a.iters;
  params.seed = a.seed;

  RunMetadata meta;
  meta.seed = a.seed;
  meta.iterations = a.iters;
  meta.topics = a.k;
  meta.alpha = params.alpha;
  meta.beta = a.beta;
  meta.documents = corpus.documents.size();
  meta.vocabulary = corpus.vocabulary.size();
  meta.tokens = corpus.token_count();

  TopicModelState state;
  if (a.constrained) {
    ConstraintSet cs = a.constraints.empty()
                           ? derive_constraints(*ontology, *lexicon, corpus.vocabulary)
                           : constraints_from_json(read_file(a.constraints, err), corpus.vocabulary);
    for (const auto& w : cs.warnings) err << "warning: " << w << "\n";
    if (!a.constraints_out.empty()) emit(a.constraints_out, constraints_to_json(cs, corpus.vocabulary), out, err);
    ForestParams fp;
    fp.beta = a.beta;
    fp.eta = a.eta;
    fp.epsilon = a.epsilon;
    const auto forest = build_forest(cs, corpus.vocabulary.size(), fp);
    state = dflda_gibbs(corpus, forest, params);
    meta.model = "dflda";
    meta.eta = a.eta;
    meta.epsilon = a.epsilon;
    meta.must_links = cs.must_links.size();
    meta.cannot_links = cs.cannot_links.size();
  } else {
    state = lda_gibbs(corpus, params);
    meta.model = "lda";
  }
  const auto report = summarize(state, corpus, meta, a.top, lexicon ? &*lexicon : nullptr);
  emit(a.out, to_json(report), out, err);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology reasoning, concept graphs and topic models", "ontomap"};
  app.require_subcommand(1);

  std::string path, out_path;

  auto* validate = app.add_subcommand("validate", "Parse an ontology and report diagnostics");
  validate->add_option("ontology", path, "Ontology file")->required();

  auto* metrics = app.add_subcommand("metrics", "Print ontology metrics");
  metrics->add_option("ontology", path, "Ontology file")->required();
  metrics->add_option("--out", out_path, "Output file (default: stdout)");

  bool strict = false;
  std::string records_path, explain_fact;
  auto* reason = app.add_subcommand("reason", "Saturate the ontology and report violations");
  reason->add_option("ontology", path, "Ontology file")->required();
  reason->add_flag("--strict", strict, "Also report domain/range typings not entailed by assertions");
  reason->add_option("--out", out_path, "JSON report file (default: stdout)");
  reason->add_option("--records", records_path, "Violation records, one per line");
  reason->add_option("--explain", explain_fact, "Print the derivation of a fact, e.g. 'IsA(:a :C)'");

  bool do_cluster = false, individuals = false;
  std::uint64_t seed = 42;
  std::string format = "dot";
  auto* graph = app.add_subcommand("graph", "Export the concept graph");
  graph->add_option("ontology", path, "Ontology file")->required();
  graph->add_flag("--cluster", do_cluster, "Cluster with Louvain and embed the partition");
  graph->add_option("--seed", seed, "Clustering seed")->capture_default_str();
  graph->add_option("--format", format, "dot, graphml or nodelink-json")
      ->check(CLI::IsMember({"dot", "graphml", "nodelink-json"}))
      ->capture_default_str();
  graph->add_flag("--individuals", individuals, "Include individuals");
  graph->add_option("--out", out_path, "Output file (default: stdout)");

  LdaArgs lda_args;
  auto* lda = app.add_subcommand("lda", "Fit a topic model to a corpus");
  lda->add_option("corpus", lda_args.corpus, "doc_id<TAB>text lines (or JSON lines with --jsonl)")->required();
  lda->add_flag("--jsonl", lda_args.jsonl, "Corpus is JSON lines");
  lda->add_option("--k", lda_args.k, "Topics")->capture_default_str()->check(CLI::PositiveNumber);
  lda->add_option("--iters", lda_args.iters, "Gibbs sweeps")->capture_default_str()->check(CLI::PositiveNumber);
  lda->add_option("--seed", lda_args.seed, "Sampler seed")->capture_default_str();
  lda->add_option("--alpha", lda_args.alpha, "Document-topic prior (default 50/k)");
  lda->add_option("--beta", lda_args.beta, "Topic-word prior")->capture_default_str();
  lda->add_option("--eta", lda_args.eta, "Must-link strength")->capture_default_str();
  lda->add_option("--epsilon", lda_args.epsilon, "Cannot-link suppression")->capture_default_str();
  lda->add_option("--top", lda_args.top, "Top words per topic")->capture_default_str()->check(CLI::PositiveNumber);
  lda->add_option("--min-df", lda_args.min_df, "Minimum document frequency")->capture_default_str();
  lda->add_option("--min-len", lda_args.min_len, "Minimum token length")->capture_default_str();
  lda->add_option("--stopwords", lda_args.stopwords, "Stopword file replacing the built-in list");
  auto* onto_opt = lda->add_option("--ontology", lda_args.ontology, "Ontology for tags and constraints");
  lda->add_flag("--constrained", lda_args.constrained, "Dirichlet-forest LDA with ontology constraints")
      ->needs(onto_opt);
  lda->add_option("--constraints", lda_args.constraints, "Constraint JSON used instead of derived ones");
  lda->add_option("--constraints-out", lda_args.constraints_out, "Write the constraint set as JSON");
  lda->add_option("--out", lda_args.out, "Model JSON file (default: stdout)");

  std::string model_path, tag_ontology;
  auto* tag = app.add_subcommand("tag", "Tag the topics of a model file with ontology concepts");
  tag->add_option("model", model_path, "Model JSON written by lda")->required();
  tag->add_option("--ontology", tag_ontology, "Ontology file")->required();
  tag->add_option("--out", out_path, "Output file (default: stdout)");

  std::string synth_kind = "obesity";
  std::size_t synth_docs = 200;
  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus");
  synth->add_option("--kind", synth_kind, "obesity or planted")
      ->check(CLI::IsMember({"obesity", "planted"}))
      ->capture_default_str();
  synth->add_option("--docs", synth_docs, "Documents")->capture_default_str();
  synth->add_option("--seed", seed, "Generator seed")->capture_default_str();
  synth->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<const char*> argv{"ontomap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      const auto text = read_file(path, err);
      const auto result = parse(text);
      for (const auto& d : result.diagnostics) err << format_diagnostic(d) << "\n";
      return result.ok() ? kExitOk : kExitInvalid;
    }
    if (*metrics) {
      const auto o = load_ontology(path, err);
      emit(out_path, format_metrics_report(compute_metrics(o)), out, err);
      return kExitOk;
    }
    if (*reason) {
      const auto o = load_ontology(path, err);
      const auto store = saturate(o, {strict});
      emit(out_path, reason_report(o, store, strict), out, err);
      if (!records_path.empty()) {
        std::string records;
        for (const auto& v : store.violations()) records += to_record(v) + "\n";
        emit(records_path, records, out, err);
      }
      if (!explain_fact.empty()) {
        const auto fact = parse_fact(explain_fact);
        if (!fact) {
          err << "error: cannot parse fact '" << explain_fact << "'\n";
          return kExitUsage;
        }
        out << format_explanation(explain(store, *fact));
      }
      return store.violations().empty() ? kExitOk : kExitViolations;
    }
    if (*graph) {
      const auto o = load_ontology(path, err);
      const auto g = build_concept_graph(saturate(o), o, individuals);
      if (g.empty()) throw Error(Errc::EmptyGraph, "the ontology yields an empty graph");
      std::optional<Partition> partition;
      if (do_cluster) partition = cluster(g, seed);
      emit(out_path, export_graph(g, partition, parse_export_format(format)), out, err);
      return kExitOk;
    }
    if (*lda) return run_lda(lda_args, out, err);
    if (*tag) {
      const auto report = model_report_from_json(read_file(model_path, err));
      const auto o = load_ontology(tag_ontology, err);
      const auto lexicon = build_lexicon(o, default_stopwords());
      emit(out_path, tags_to_json(tag_report(report, lexicon)), out, err);
      return kExitOk;
    }
    if (*synth) {
      std::vector<DocumentRecord> records;
      if (synth_kind == "planted") {
        PlantedCorpusSpec spec;
        spec.documents = synth_docs;
        spec.seed = seed;
        records = planted_corpus(spec).records;
      } else {
        records = obesity_corpus(synth_docs, seed);
      }
      std::string text;
      for (const auto& r : records) text += r.id + "\t" + r.text + "\n";
      emit(out_path, text, out, err);
      return kExitOk;
    }
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace ontomap
