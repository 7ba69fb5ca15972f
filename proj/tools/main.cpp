#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convgraph/chat.hpp"
#include "convgraph/embedding.hpp"
#include "convgraph/eval.hpp"
#include "convgraph/extract.hpp"
#include "convgraph/features_graph.hpp"
#include "convgraph/features_text.hpp"
#include "convgraph/fusion.hpp"
#include "convgraph/graph_io.hpp"
#include "convgraph/rng.hpp"
#include "convgraph/runconfig.hpp"
#include "convgraph/sentiment.hpp"
#include "convgraph/study.hpp"
#include "convgraph/synth.hpp"
#include "convgraph/wsgcn.hpp"

namespace fs = std::filesystem;
using namespace convgraph;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string join_args(int argc, char** argv) {
  std::string cmd;
  for (int i = 0; i < argc; ++i) {
    if (i) cmd.push_back(' ');
    cmd += argv[i];
  }
  return cmd;
}

void finish_output_dir(CLI::App& app, const fs::path& out_dir, const std::string& command,
                       const std::vector<fs::path>& inputs, double seconds) {
  write_text_file(out_dir / "run_config.ini", app.config_to_str(true, true));
  write_manifest(out_dir, command, inputs, seconds);
}

std::map<std::string, ClassLabel> load_labels(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open labels file: " + file.string());
  std::map<std::string, ClassLabel> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(file.string() + ": malformed label line '" + line + "'");
    }
    labels[line.substr(0, tab)] = class_label_from_string(line.substr(tab + 1));
  }
  return labels;
}

void save_labels(const std::vector<Conversation>& corpus, const fs::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  for (const Conversation& conv : corpus) {
    out << conv.id << '\t' << to_string(conv.label) << '\n';
  }
}

/// Labels aligned to the embedding rows; complains about every id present
/// on one side only.
std::vector<int> align_labels(const EmbeddingMatrix& embedding,
                              const std::map<std::string, ClassLabel>& labels) {
  std::vector<std::string> missing_in_embedding, missing_in_labels;
  for (const auto& [id, label] : labels) {
    if (!embedding.row_of(id)) missing_in_embedding.push_back(id);
  }
  std::vector<int> y;
  for (const std::string& id : embedding.ids) {
    auto it = labels.find(id);
    if (it == labels.end()) {
      missing_in_labels.push_back(id);
      continue;
    }
    y.push_back(it->second == ClassLabel::Abusive ? +1 : -1);
  }
  if (!missing_in_embedding.empty() || !missing_in_labels.empty()) {
    std::string message = "graph/label id mismatch:";
    for (const auto& id : missing_in_embedding) message += " embedding lacks '" + id + "'";
    for (const auto& id : missing_in_labels) message += " labels lack '" + id + "'";
    throw std::runtime_error(message);
  }
  return y;
}

SentimentScorer make_scorer(const std::string& lexicon_dir) {
  if (!lexicon_dir.empty()) return LexiconScorer::from_directory(lexicon_dir);
  if (const char* env = std::getenv("CONVGRAPH_LEXICON_DIR"); env && *env) {
    return LexiconScorer::from_directory(env);
  }
  return LexiconScorer::builtin();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conversation-graph embeddings and abuse-detection pipeline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "configuration file mirroring the flags (INI sections)");

  std::string out_dir;
  std::uint64_t seed = 42;
  const std::string command_line = join_args(argc, argv);

  // --- synth ---------------------------------------------------------
  auto* synth = app.add_subcommand("synth", "generate a synthetic annotated chat log");
  SynthConfig synth_cfg;
  synth->add_option("--out", out_dir, "output directory")->required();
  synth->add_option("--seed", seed, "top-level seed");
  synth->add_option("--n-abusive", synth_cfg.n_abusive, "abusive conversations");
  synth->add_option("--n-non-abusive", synth_cfg.n_non_abusive, "non-abusive conversations");
  synth->add_option("--mean-length", synth_cfg.mean_conversation_length, "mean messages");
  synth->add_option("--fan-in", synth_cfg.fan_in_multiplier, "abuser fan-in multiplier");
  synth->add_option("--neg-prob", synth_cfg.negative_interaction_prob,
                    "hostile reply probability");
  synth->add_option("--insult-rate", synth_cfg.insult_token_rate, "abuser insult rate");
  synth->add_option("--background-neg", synth_cfg.background_negative_rate,
                    "baseline hostility rate");
  synth->add_option("--subtle-fraction", synth_cfg.subtle_fraction,
                    "abusive conversations without lexical cues");

  // --- extract -------------------------------------------------------
  auto* extract = app.add_subcommand("extract", "extract conversational graphs from a log");
  std::string log_file, lexicon_dir, scope_name = "full";
  ExtractionConfig extract_cfg;
  bool unsigned_edges = false;
  extract->add_option("--log", log_file, "chat log file")->required();
  extract->add_option("--out", out_dir, "output directory")->required();
  extract->add_option("--seed", seed, "top-level seed");
  extract->add_option("--context-size", extract_cfg.context_size, "messages per side");
  extract->add_option("--window-size", extract_cfg.window_size, "sliding window length");
  extract->add_option("--scope", scope_name, "full, before or after");
  extract->add_flag("--unsigned", unsigned_edges, "skip sentiment scoring, all signs +");
  extract->add_option("--lexicon-dir", lexicon_dir,
                      "lexicon directory (default: $CONVGRAPH_LEXICON_DIR or built-in)");

  // --- embed ---------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "embed a graph directory");
  std::string graphs_dir, method_name = "wda_sg2v_n", scheme_name = "degree";
  std::string master_name = "plus_minus";
  EmbedConfig embed_cfg;
  WsgcnTrainConfig wsgcn_cfg;
  embed->add_option("--graphs", graphs_dir, "graph directory")->required();
  embed->add_option("--out", out_dir, "output directory")->required();
  embed->add_option("--seed", seed, "top-level seed");
  embed->add_option("--method", method_name,
                    "g2v, sg2v_n, wda_sg2v_n, sg2v_sb, wda_sg2v_sb, spectral, wsgcn or "
                    "wda_wsgcn");
  embed->add_option("--scheme", scheme_name, "initial labels: degree, author, distance, "
                                             "target or a +-composite");
  embed->add_option("--dim", embed_cfg.train.dimension, "embedding dimension");
  embed->add_option("--epochs", embed_cfg.train.epochs, "training epochs");
  embed->add_option("--lr", embed_cfg.train.learning_rate, "initial learning rate");
  embed->add_option("--negatives", embed_cfg.train.negatives, "negatives per positive");
  embed->add_option("--iterations", embed_cfg.wl_iterations, "WL iterations (T)");
  embed->add_flag("--channel-labels", embed_cfg.include_channel_labels,
                  "sb variants: include per-channel labels in documents");
  embed->add_option("--master-scheme", master_name, "wsgcn masters: plus, minus, plus_minus");
  embed->add_option("--wsgcn-epochs", wsgcn_cfg.epochs, "wsgcn training epochs");
  embed->add_option("--wsgcn-lr", wsgcn_cfg.learning_rate, "wsgcn learning rate");
  embed->add_option("--wsgcn-hidden", wsgcn_cfg.hidden, "wsgcn hidden width");

  // --- eval ----------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "10-fold evaluation of an embedding");
  std::string embedding_file, labels_file;
  LinearHyperparams hp;
  eval->add_option("--embedding", embedding_file, "embedding tsv")->required();
  eval->add_option("--labels", labels_file, "labels tsv")->required();
  eval->add_option("--out", out_dir, "output directory")->required();
  eval->add_option("--seed", seed, "top-level seed");
  eval->add_option("--c", hp.C, "margin softness C");

  // --- fuse ----------------------------------------------------------
  auto* fuse_cmd = app.add_subcommand("fuse", "combine two embeddings and evaluate");
  std::string emb_a_file, emb_b_file, strategy_name = "early";
  fuse_cmd->add_option("--emb-a", emb_a_file, "first embedding tsv")->required();
  fuse_cmd->add_option("--emb-b", emb_b_file, "second embedding tsv")->required();
  fuse_cmd->add_option("--labels", labels_file, "labels tsv")->required();
  fuse_cmd->add_option("--strategy", strategy_name, "early, late or hybrid");
  fuse_cmd->add_option("--out", out_dir, "output directory")->required();
  fuse_cmd->add_option("--seed", seed, "top-level seed");
  fuse_cmd->add_option("--c", hp.C, "margin softness C");

  // --- study ---------------------------------------------------------
  auto* study = app.add_subcommand("study", "best-feature capture analysis");
  std::string features_kind = "both";
  bool emit_plot = false;
  study->add_option("--embedding", embedding_file, "embedding tsv")->required();
  study->add_option("--labels", labels_file, "labels tsv")->required();
  study->add_option("--log", log_file, "chat log the graphs came from")->required();
  study->add_option("--out", out_dir, "output directory")->required();
  study->add_option("--seed", seed, "top-level seed");
  study->add_option("--features", features_kind, "text, graph or both");
  study->add_flag("--plot", emit_plot, "also write verdicts.svg");
  study->add_option("--c", hp.C, "margin softness C");
  study->add_option("--context-size", extract_cfg.context_size, "messages per side");
  study->add_option("--window-size", extract_cfg.window_size, "sliding window length");
  study->add_option("--lexicon-dir", lexicon_dir, "lexicon directory");

  CLI11_PARSE(app, argc, argv);

  try {
    Timer timer;
    fs::create_directories(out_dir);

    if (synth->parsed()) {
      synth_cfg.seed = derive_seed(seed, "synth");
      const auto corpus = generate_synthetic_corpus(synth_cfg);
      write_chat_log_file(corpus, fs::path(out_dir) / "chatlog.jsonl");
      save_labels(corpus, fs::path(out_dir) / "labels.tsv");
      std::cout << "wrote " << corpus.size() << " conversations to " << out_dir
                << "/chatlog.jsonl\n";
      finish_output_dir(app, out_dir, command_line, {}, timer.seconds());
      return 0;
    }

    if (extract->parsed()) {
      extract_cfg.scope = scope_from_string(scope_name);
      extract_cfg.signed_edges = !unsigned_edges;
      const ParseResult parsed = parse_chat_log_file(log_file);
      for (const std::string& diag : parsed.diagnostics) std::cerr << diag << '\n';
      const SentimentScorer scorer = make_scorer(lexicon_dir);

      const fs::path graph_dir = fs::path(out_dir) / "graphs";
      fs::create_directories(graph_dir);
      for (const Conversation& conv : parsed.conversations) {
        const ConvGraph g = extract_graph(conv, extract_cfg, scorer);
        save_graph(g, graph_dir / (conv.id + ".json"));
      }
      save_labels(parsed.conversations, fs::path(out_dir) / "labels.tsv");
      std::cout << "extracted " << parsed.conversations.size() << " graphs to "
                << graph_dir.string() << '\n';
      finish_output_dir(app, out_dir, command_line, {log_file}, timer.seconds());
      return 0;
    }

    if (embed->parsed()) {
      const auto graphs = load_graph_dir(graphs_dir);
      embed_cfg.train.seed = derive_seed(seed, "embed");
      EmbeddingMatrix matrix;
      if (method_name == "wsgcn" || method_name == "wda_wsgcn") {
        wsgcn_cfg.scheme = master_scheme_from_string(master_name);
        wsgcn_cfg.output = embed_cfg.train.dimension;
        wsgcn_cfg.seed = embed_cfg.train.seed;
        wsgcn_cfg.use_weights_and_directions = (method_name == "wda_wsgcn");
        WsgcnTrainResult trained = train_wsgcn(graphs, wsgcn_cfg);
        save_wsgcn_model(trained.model, fs::path(out_dir) / "wsgcn_model.txt");
        matrix = std::move(trained.embeddings);
      } else {
        embed_cfg.scheme = AttributeScheme::parse(scheme_name);
        matrix = embed_corpus(graphs, embed_method_from_string(method_name), embed_cfg);
      }
      save_embedding(matrix, fs::path(out_dir) / "embeddings.tsv");
      std::cout << "embedded " << matrix.ids.size() << " graphs (" << matrix.method
                << ", dim " << matrix.dimension << ")\n";
      finish_output_dir(app, out_dir, command_line, {graphs_dir}, timer.seconds());
      return 0;
    }

    if (eval->parsed()) {
      const EmbeddingMatrix embedding = load_embedding(embedding_file);
      const std::vector<int> y = align_labels(embedding, load_labels(labels_file));
      const FoldPlan plan = FoldPlan::stratified(y, derive_seed(seed, "folds"));
      hp.seed = derive_seed(seed, "svm");
      EvalReport report = kfold_evaluate(embedding.vectors, y, plan, hp);
      report.method = embedding.method;
      save_report(report, fs::path(out_dir) / "report.txt");
      std::cout << report_summary_line(report) << '\n';
      finish_output_dir(app, out_dir, command_line, {embedding_file, labels_file},
                        timer.seconds());
      return 0;
    }

    if (fuse_cmd->parsed()) {
      const FusionStrategy strategy = fusion_strategy_from_string(strategy_name);
      const EmbeddingMatrix emb_a = load_embedding(emb_a_file);
      const EmbeddingMatrix emb_b = load_embedding(emb_b_file);
      const std::vector<int> y = align_labels(emb_a, load_labels(labels_file));
      const Matrix b_rows = align_embedding_rows(emb_b, emb_a.ids);

      const FoldPlan plan = FoldPlan::stratified(y, derive_seed(seed, "folds"));
      hp.seed = derive_seed(seed, "svm");
      EvalReport report_a = kfold_evaluate(emb_a.vectors, y, plan, hp);
      EvalReport report_b = kfold_evaluate(b_rows, y, plan, hp);

      const Matrix fused =
          fuse(emb_a.vectors, b_rows, report_a.scores, report_b.scores, strategy);
      EvalReport report = kfold_evaluate(fused, y, plan, hp);
      report.method = to_string(strategy) + "(" + emb_a.method + "+" + emb_b.method + ")";
      save_report(report, fs::path(out_dir) / "report.txt");
      std::cout << report_summary_line(report) << '\n';
      finish_output_dir(app, out_dir, command_line, {emb_a_file, emb_b_file, labels_file},
                        timer.seconds());
      return 0;
    }

    if (study->parsed()) {
      const EmbeddingMatrix embedding = load_embedding(embedding_file);
      const std::vector<int> y = align_labels(embedding, load_labels(labels_file));
      const FoldPlan plan = FoldPlan::stratified(y, derive_seed(seed, "folds"));
      hp.seed = derive_seed(seed, "svm");

      const ParseResult parsed = parse_chat_log_file(log_file);
      std::map<std::string, const Conversation*> by_id;
      for (const Conversation& conv : parsed.conversations) by_id[conv.id] = &conv;
      std::vector<const Conversation*> conversations;
      for (const std::string& id : embedding.ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
          throw std::runtime_error("chat log lacks conversation '" + id + "'");
        }
        conversations.push_back(it->second);
      }

      StudyRow row;
      row.embedding_name = embedding.method;

      if (features_kind == "text" || features_kind == "both") {
        const Matrix columns = text_feature_columns_cross_fitted(conversations, plan);
        for (std::size_t f = 0; f < kTextFeatureNames.size(); ++f) {
          std::vector<double> column(columns.rows());
          for (std::size_t i = 0; i < columns.rows(); ++i) column[i] = columns(i, f);
          row.verdicts.push_back(capture_analysis(embedding.vectors, column,
                                                  kTextFeatureNames[f], y, plan, hp));
          std::cout << "feature " << kTextFeatureNames[f] << ": "
                    << to_string(row.verdicts.back().category) << '\n';
        }
      }
      if (features_kind == "graph" || features_kind == "both") {
        const SentimentScorer scorer = make_scorer(lexicon_dir);
        Matrix columns(conversations.size(), kGraphFeatureNames.size());
        for (std::size_t i = 0; i < conversations.size(); ++i) {
          ExtractionConfig cfg = extract_cfg;
          cfg.scope = Scope::Full;
          const ConvGraph full = extract_graph(*conversations[i], cfg, scorer);
          cfg.scope = Scope::Before;
          const ConvGraph before = extract_graph(*conversations[i], cfg, scorer);
          cfg.scope = Scope::After;
          const ConvGraph after = extract_graph(*conversations[i], cfg, scorer);
          const auto features = graph_best_features(&full, &before, &after);
          for (std::size_t f = 0; f < features.size(); ++f) columns(i, f) = features[f];
        }
        for (std::size_t f = 0; f < kGraphFeatureNames.size(); ++f) {
          std::vector<double> column(columns.rows());
          for (std::size_t i = 0; i < columns.rows(); ++i) column[i] = columns(i, f);
          row.verdicts.push_back(capture_analysis(embedding.vectors, column,
                                                  kGraphFeatureNames[f], y, plan, hp));
          std::cout << "feature " << kGraphFeatureNames[f] << ": "
                    << to_string(row.verdicts.back().category) << '\n';
        }
      }

      const std::vector<StudyRow> rows{row};
      write_text_file(fs::path(out_dir) / "verdicts.tsv", verdict_table(rows));
      if (emit_plot) save_verdict_svg(rows, fs::path(out_dir) / "verdicts.svg");
      finish_output_dir(app, out_dir, command_line,
                        {embedding_file, labels_file, log_file}, timer.seconds());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
