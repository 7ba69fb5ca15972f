#include "convgraph/embedding.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "convgraph/spectral.hpp"

namespace convgraph {

std::optional<std::size_t> EmbeddingMatrix::row_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == id) return i;
  }
  return std::nullopt;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_embedding(const EmbeddingMatrix& m, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << "#method\t" << m.method << "\tdim\t" << m.dimension << "\tseed\t" << m.seed
      << "\tepochs\t" << m.epochs << "\tfinal_loss\t" << format_double(m.final_loss) << '\n';
  for (std::size_t i = 0; i < m.ids.size(); ++i) {
    out << m.ids[i];
    for (std::size_t j = 0; j < m.dimension; ++j) {
      out << '\t' << format_double(m.vectors(i, j));
    }
    out << '\n';
  }
}

EmbeddingMatrix load_embedding(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embedding file: " + file.string());

  EmbeddingMatrix m;
  std::string line;
  if (!std::getline(in, line) || line.rfind("#method\t", 0) != 0) {
    throw std::runtime_error(file.string() + ": missing embedding header");
  }
  {
    std::stringstream header(line);
    std::string key, value;
    std::getline(header, key, '\t');  // "#method"
    std::getline(header, m.method, '\t');
    while (std::getline(header, key, '\t') && std::getline(header, value, '\t')) {
      if (key == "dim") m.dimension = std::stoul(value);
      if (key == "seed") m.seed = std::stoull(value);
      if (key == "epochs") m.epochs = std::stoi(value);
      if (key == "final_loss") m.final_loss = std::stod(value);
    }
  }
  if (m.dimension == 0) throw std::runtime_error(file.string() + ": header lacks dimension");

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::getline(ss, field, '\t');
    m.ids.push_back(field);
    std::vector<double> row;
    row.reserve(m.dimension);
    while (std::getline(ss, field, '\t')) row.push_back(std::stod(field));
    if (row.size() != m.dimension) {
      throw std::runtime_error(file.string() + ": row '" + m.ids.back() + "' has " +
                               std::to_string(row.size()) + " values, expected " +
                               std::to_string(m.dimension));
    }
    rows.push_back(std::move(row));
  }
  m.vectors = Matrix(rows.size(), m.dimension);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < m.dimension; ++j) m.vectors(i, j) = rows[i][j];
  }
  return m;
}

std::string to_string(EmbedMethod m) {
  switch (m) {
    case EmbedMethod::G2v:
      return "g2v";
    case EmbedMethod::Sg2vN:
      return "sg2v_n";
    case EmbedMethod::WdaSg2vN:
      return "wda_sg2v_n";
    case EmbedMethod::Sg2vSb:
      return "sg2v_sb";
    case EmbedMethod::WdaSg2vSb:
      return "wda_sg2v_sb";
    case EmbedMethod::Spectral:
      return "spectral";
  }
  return "g2v";
}

EmbedMethod embed_method_from_string(const std::string& text) {
  if (text == "g2v") return EmbedMethod::G2v;
  if (text == "sg2v_n") return EmbedMethod::Sg2vN;
  if (text == "wda_sg2v_n") return EmbedMethod::WdaSg2vN;
  if (text == "sg2v_sb") return EmbedMethod::Sg2vSb;
  if (text == "wda_sg2v_sb") return EmbedMethod::WdaSg2vSb;
  if (text == "spectral") return EmbedMethod::Spectral;
  throw std::invalid_argument(
      "unknown embedding method '" + text +
      "' (valid: g2v, sg2v_n, wda_sg2v_n, sg2v_sb, wda_sg2v_sb, spectral)");
}

namespace {

WlVariant wl_variant_of(EmbedMethod m) {
  switch (m) {
    case EmbedMethod::G2v:
      return WlVariant::Plain;
    case EmbedMethod::Sg2vN:
      return WlVariant::SignedN;
    case EmbedMethod::WdaSg2vN:
      return WlVariant::WdaN;
    case EmbedMethod::Sg2vSb:
      return WlVariant::SignedSb;
    case EmbedMethod::WdaSg2vSb:
      return WlVariant::WdaSb;
    case EmbedMethod::Spectral:
      break;
  }
  throw std::logic_error("spectral has no WL variant");
}

}  // namespace

EmbeddingMatrix embed_corpus(const std::vector<ConvGraph>& graphs, EmbedMethod method,
                             const EmbedConfig& cfg) {
  if (graphs.empty()) throw std::invalid_argument("embed_corpus: empty corpus");

  EmbeddingMatrix out;
  out.method = to_string(method);
  out.dimension = cfg.train.dimension;
  out.seed = cfg.train.seed;
  for (const ConvGraph& g : graphs) out.ids.push_back(g.id());

  if (method == EmbedMethod::Spectral) {
    out.vectors = Matrix(graphs.size(), cfg.train.dimension);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto features = spectral_features(graphs[i], cfg.train.dimension);
      for (std::size_t j = 0; j < cfg.train.dimension; ++j) out.vectors(i, j) = features[j];
    }
    return out;
  }

  WlConfig wl;
  wl.variant = wl_variant_of(method);
  wl.scheme = cfg.scheme;
  wl.iterations = cfg.wl_iterations;
  wl.include_channel_labels = cfg.include_channel_labels;
  DocumentCorpus docs = build_documents(graphs, wl);

  PvdbowResult trained = train_pvdbow(docs.documents, cfg.train);
  out.vectors = std::move(trained.graph_vectors);
  out.epochs = cfg.train.epochs;
  out.final_loss = trained.epoch_losses.empty() ? 0.0 : trained.epoch_losses.back();
  return out;
}

}  // namespace convgraph
