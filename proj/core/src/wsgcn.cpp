#include "convgraph/wsgcn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "convgraph/rng.hpp"

namespace convgraph {

std::string to_string(MasterScheme scheme) {
  switch (scheme) {
    case MasterScheme::PlusOnly:
      return "plus";
    case MasterScheme::MinusOnly:
      return "minus";
    case MasterScheme::PlusMinus:
      return "plus_minus";
  }
  return "plus_minus";
}

MasterScheme master_scheme_from_string(const std::string& text) {
  if (text == "plus") return MasterScheme::PlusOnly;
  if (text == "minus") return MasterScheme::MinusOnly;
  if (text == "plus_minus") return MasterScheme::PlusMinus;
  throw std::invalid_argument("unknown master scheme '" + text +
                              "' (expected plus, minus or plus_minus)");
}

AugmentedGraph attach_master_nodes(const ConvGraph& g, MasterScheme scheme) {
  std::vector<VertexId> vertices = g.vertex_ids();
  std::map<VertexId, AttributeRecord> attributes;
  for (VertexId u : vertices) attributes[u] = g.attribute(u);
  std::map<EdgeKey, EdgeData> edges = g.edges();

  const VertexId base = vertices.empty() ? 0 : vertices.back() + 1;
  std::vector<VertexId> masters;

  auto add_master = [&](int sign, const std::string& author) {
    const VertexId m = base + static_cast<VertexId>(masters.size());
    masters.push_back(m);
    AttributeRecord rec;
    rec.author = author;
    rec.distance = kUnreachable;
    rec.target = false;
    attributes[m] = std::move(rec);
    for (VertexId u : g.vertex_ids()) {
      edges[{m, u}] = EdgeData{1, sign};
      edges[{u, m}] = EdgeData{1, sign};
    }
  };

  if (scheme == MasterScheme::PlusOnly || scheme == MasterScheme::PlusMinus) {
    add_master(+1, "master.pos");
  }
  if (scheme == MasterScheme::MinusOnly || scheme == MasterScheme::PlusMinus) {
    add_master(-1, "master.neg");
  }
  for (VertexId m : masters) vertices.push_back(m);

  AugmentedGraph aug{ConvGraph(g.id(), std::move(vertices), std::move(attributes),
                               std::move(edges), g.targeted_vertex()),
                     masters};
  return aug;
}

std::map<VertexId, double> normalized_in_weights(const ConvGraph& g, VertexId u) {
  std::map<VertexId, double> coefficients;
  double totals[2] = {0.0, 0.0};  // [positive, negative]
  for (const auto& [v, data] : g.neighbors(u, EdgeMode::In)) {
    totals[data.sign > 0 ? 0 : 1] += static_cast<double>(data.weight);
  }
  for (const auto& [v, data] : g.neighbors(u, EdgeMode::In)) {
    const double total = totals[data.sign > 0 ? 0 : 1];
    coefficients[v] = static_cast<double>(data.weight) / total;
  }
  return coefficients;
}

std::vector<double> wsgcn_input_features(const ConvGraph& g, VertexId u) {
  const AttributeRecord& rec = g.attribute(u);
  std::vector<double> x(kWsgcnInputDim, 0.0);
  x[0] = rec.target ? 1.0 : 0.0;
  if (rec.distance == kUnreachable) {
    x[1] = 0.0;
    x[2] = 1.0;
  } else {
    x[1] = 1.0 / (1.0 + static_cast<double>(rec.distance));
    x[2] = 0.0;
  }
  x[3 + fnv1a64(rec.author) % kWsgcnAuthorBuckets] = 1.0;
  return x;
}

namespace {

Matrix xavier(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_real(-bound, bound);
  }
  return m;
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// In-neighbor lists split by sign channel, with normalized coefficients.
struct ChannelIndex {
  // per vertex index: (neighbor index, coefficient)
  std::vector<std::vector<std::pair<std::size_t, double>>> pos_in;
  std::vector<std::vector<std::pair<std::size_t, double>>> neg_in;
};

ChannelIndex build_channel_index(const ConvGraph& g,
                                 const std::unordered_map<VertexId, std::size_t>& index) {
  ChannelIndex ci;
  const std::size_t n = g.vertex_count();
  ci.pos_in.resize(n);
  ci.neg_in.resize(n);
  for (VertexId u : g.vertex_ids()) {
    const std::size_t ui = index.at(u);
    double totals[2] = {0.0, 0.0};
    for (const auto& [v, data] : g.neighbors(u, EdgeMode::In)) {
      totals[data.sign > 0 ? 0 : 1] += static_cast<double>(data.weight);
    }
    for (const auto& [v, data] : g.neighbors(u, EdgeMode::In)) {
      const std::size_t vi = index.at(v);
      if (data.sign > 0) {
        ci.pos_in[ui].emplace_back(vi, static_cast<double>(data.weight) / totals[0]);
      } else {
        ci.neg_in[ui].emplace_back(vi, static_cast<double>(data.weight) / totals[1]);
      }
    }
  }
  return ci;
}

// y = W x + b, tanh applied in place by the caller when needed.
void affine(const Matrix& w, std::span<const double> x, const std::vector<double>& b,
            std::span<double> y) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    double acc = b[i];
    const double* row = w.data() + i * w.cols();
    for (std::size_t j = 0; j < w.cols(); ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

struct ForwardCache {
  std::vector<VertexId> order;
  std::unordered_map<VertexId, std::size_t> index;
  ChannelIndex channels;
  Matrix x;        // n x F
  Matrix in1_bal, in1_unb;   // n x 2F
  Matrix h1_bal, h1_unb;     // n x h
  Matrix in2_bal, in2_unb;   // n x 3h
  Matrix h2_bal, h2_unb;     // n x h
};

ForwardCache run_forward(const AugmentedGraph& aug, const WsgcnModel& model) {
  const ConvGraph& g = aug.graph;
  const std::size_t n = g.vertex_count();
  const std::size_t f = model.input_dim;
  const std::size_t h = model.hidden;

  ForwardCache c;
  c.order = g.vertex_ids();
  for (std::size_t i = 0; i < n; ++i) c.index[c.order[i]] = i;
  c.channels = build_channel_index(g, c.index);

  c.x = Matrix(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    const auto features = wsgcn_input_features(g, c.order[i]);
    for (std::size_t j = 0; j < f; ++j) c.x(i, j) = features[j];
  }

  // Layer 1: each channel aggregates its own sign's in-neighbors' features.
  c.in1_bal = Matrix(n, 2 * f);
  c.in1_unb = Matrix(n, 2 * f);
  c.h1_bal = Matrix(n, h);
  c.h1_unb = Matrix(n, h);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, coeff] : c.channels.pos_in[i]) {
      for (std::size_t k = 0; k < f; ++k) c.in1_bal(i, k) += coeff * c.x(j, k);
    }
    for (const auto& [j, coeff] : c.channels.neg_in[i]) {
      for (std::size_t k = 0; k < f; ++k) c.in1_unb(i, k) += coeff * c.x(j, k);
    }
    for (std::size_t k = 0; k < f; ++k) {
      c.in1_bal(i, f + k) = c.x(i, k);
      c.in1_unb(i, f + k) = c.x(i, k);
    }
    affine(model.w1_bal, c.in1_bal.row(i), model.b1_bal, c.h1_bal.row(i));
    affine(model.w1_unb, c.in1_unb.row(i), model.b1_unb, c.h1_unb.row(i));
    for (std::size_t k = 0; k < h; ++k) {
      c.h1_bal(i, k) = std::tanh(c.h1_bal(i, k));
      c.h1_unb(i, k) = std::tanh(c.h1_unb(i, k));
    }
  }

  // Layer 2: structural-balance crossing; balanced gathers balanced over +
  // and unbalanced over -, the unbalanced channel mirrors it.
  c.in2_bal = Matrix(n, 3 * h);
  c.in2_unb = Matrix(n, 3 * h);
  c.h2_bal = Matrix(n, h);
  c.h2_unb = Matrix(n, h);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, coeff] : c.channels.pos_in[i]) {
      for (std::size_t k = 0; k < h; ++k) {
        c.in2_bal(i, k) += coeff * c.h1_bal(j, k);
        c.in2_unb(i, k) += coeff * c.h1_unb(j, k);
      }
    }
    for (const auto& [j, coeff] : c.channels.neg_in[i]) {
      for (std::size_t k = 0; k < h; ++k) {
        c.in2_bal(i, h + k) += coeff * c.h1_unb(j, k);
        c.in2_unb(i, h + k) += coeff * c.h1_bal(j, k);
      }
    }
    for (std::size_t k = 0; k < h; ++k) {
      c.in2_bal(i, 2 * h + k) = c.h1_bal(i, k);
      c.in2_unb(i, 2 * h + k) = c.h1_unb(i, k);
    }
    affine(model.w2_bal, c.in2_bal.row(i), model.b2_bal, c.h2_bal.row(i));
    affine(model.w2_unb, c.in2_unb.row(i), model.b2_unb, c.h2_unb.row(i));
    for (std::size_t k = 0; k < h; ++k) {
      c.h2_bal(i, k) = std::tanh(c.h2_bal(i, k));
      c.h2_unb(i, k) = std::tanh(c.h2_unb(i, k));
    }
  }
  return c;
}

}  // namespace

WsgcnModel WsgcnModel::initialize(MasterScheme scheme, std::size_t hidden,
                                  std::size_t output, std::uint64_t seed) {
  WsgcnModel m;
  m.scheme = scheme;
  m.hidden = hidden;
  m.output = output;
  m.seed = seed;
  Rng rng(seed);
  m.w1_bal = xavier(hidden, 2 * m.input_dim, rng);
  m.w1_unb = xavier(hidden, 2 * m.input_dim, rng);
  m.b1_bal.assign(hidden, 0.0);
  m.b1_unb.assign(hidden, 0.0);
  m.w2_bal = xavier(hidden, 3 * hidden, rng);
  m.w2_unb = xavier(hidden, 3 * hidden, rng);
  m.b2_bal.assign(hidden, 0.0);
  m.b2_unb.assign(hidden, 0.0);
  m.theta.assign(4 * hidden, 0.0);
  for (double& t : m.theta) t = rng.uniform_real(-0.05, 0.05);
  m.theta_bias = 0.0;
  m.readout = xavier(output, 2 * hidden * m.master_count(), rng);
  return m;
}

WsgcnForward wsgcn_forward(const AugmentedGraph& aug, const WsgcnModel& model) {
  if (model.w1_bal.cols() != 2 * model.input_dim || model.w2_bal.cols() != 3 * model.hidden ||
      model.readout.cols() != 2 * model.hidden * model.master_count()) {
    throw std::invalid_argument("wsgcn_forward: model dimensions are inconsistent");
  }
  ForwardCache c = run_forward(aug, model);
  const std::size_t n = c.order.size();
  const std::size_t h = model.hidden;

  WsgcnForward out;
  out.vertex_order = c.order;
  out.vertex_representations = Matrix(n, 2 * h);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < h; ++k) {
      out.vertex_representations(i, k) = c.h2_bal(i, k);
      out.vertex_representations(i, h + k) = c.h2_unb(i, k);
    }
  }

  std::vector<double> master_concat;
  master_concat.reserve(2 * h * aug.masters.size());
  for (VertexId m : aug.masters) {
    const std::size_t mi = c.index.at(m);
    for (std::size_t k = 0; k < 2 * h; ++k) {
      master_concat.push_back(out.vertex_representations(mi, k));
    }
  }
  out.graph_representation.assign(model.output, 0.0);
  for (std::size_t i = 0; i < model.output; ++i) {
    double acc = 0.0;
    const double* row = model.readout.data() + i * model.readout.cols();
    for (std::size_t j = 0; j < master_concat.size(); ++j) acc += row[j] * master_concat[j];
    out.graph_representation[i] = acc;
  }
  return out;
}

double wsgcn_sign_loss(const AugmentedGraph& aug, const WsgcnModel& model,
                       WsgcnGradients* grads) {
  ForwardCache c = run_forward(aug, model);
  const ConvGraph& g = aug.graph;
  const std::size_t n = c.order.size();
  const std::size_t f = model.input_dim;
  const std::size_t h = model.hidden;

  // Only original edges carry a sign worth predicting; master edges are
  // scaffolding with a fixed sign.
  std::vector<std::pair<EdgeKey, int>> edges;
  for (const auto& [key, data] : g.edges()) {
    const bool master_edge =
        std::binary_search(aug.masters.begin(), aug.masters.end(), key.first) ||
        std::binary_search(aug.masters.begin(), aug.masters.end(), key.second);
    if (!master_edge) edges.emplace_back(key, data.sign);
  }
  if (edges.empty()) return 0.0;
  const double inv_edges = 1.0 / static_cast<double>(edges.size());

  if (grads) {
    grads->w1_bal = Matrix(h, 2 * f);
    grads->w1_unb = Matrix(h, 2 * f);
    grads->b1_bal.assign(h, 0.0);
    grads->b1_unb.assign(h, 0.0);
    grads->w2_bal = Matrix(h, 3 * h);
    grads->w2_unb = Matrix(h, 3 * h);
    grads->b2_bal.assign(h, 0.0);
    grads->b2_unb.assign(h, 0.0);
    grads->theta.assign(4 * h, 0.0);
    grads->theta_bias = 0.0;
  }

  Matrix d_h2_bal(n, h), d_h2_unb(n, h);
  double loss = 0.0;

  for (const auto& [key, sign] : edges) {
    const std::size_t ui = c.index.at(key.first);
    const std::size_t vi = c.index.at(key.second);
    double logit = model.theta_bias;
    for (std::size_t k = 0; k < h; ++k) {
      logit += model.theta[k] * c.h2_bal(ui, k) + model.theta[h + k] * c.h2_unb(ui, k) +
               model.theta[2 * h + k] * c.h2_bal(vi, k) +
               model.theta[3 * h + k] * c.h2_unb(vi, k);
    }
    const double p = sigmoid(logit);
    const double target = sign > 0 ? 1.0 : 0.0;
    loss -= inv_edges * (target > 0.5 ? std::log(std::max(p, 1e-12))
                                      : std::log(std::max(1.0 - p, 1e-12)));
    if (!grads) continue;

    const double dlogit = (p - target) * inv_edges;
    grads->theta_bias += dlogit;
    for (std::size_t k = 0; k < h; ++k) {
      grads->theta[k] += dlogit * c.h2_bal(ui, k);
      grads->theta[h + k] += dlogit * c.h2_unb(ui, k);
      grads->theta[2 * h + k] += dlogit * c.h2_bal(vi, k);
      grads->theta[3 * h + k] += dlogit * c.h2_unb(vi, k);
      d_h2_bal(ui, k) += dlogit * model.theta[k];
      d_h2_unb(ui, k) += dlogit * model.theta[h + k];
      d_h2_bal(vi, k) += dlogit * model.theta[2 * h + k];
      d_h2_unb(vi, k) += dlogit * model.theta[3 * h + k];
    }
  }
  if (!grads) return loss;

  // Backprop layer 2, accumulating into layer-1 outputs.
  Matrix d_h1_bal(n, h), d_h1_unb(n, h);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> dz_bal(h), dz_unb(h);
    for (std::size_t k = 0; k < h; ++k) {
      dz_bal[k] = d_h2_bal(i, k) * (1.0 - c.h2_bal(i, k) * c.h2_bal(i, k));
      dz_unb[k] = d_h2_unb(i, k) * (1.0 - c.h2_unb(i, k) * c.h2_unb(i, k));
    }
    for (std::size_t k = 0; k < h; ++k) {
      grads->b2_bal[k] += dz_bal[k];
      grads->b2_unb[k] += dz_unb[k];
      double* grow_bal = grads->w2_bal.data() + k * 3 * h;
      double* grow_unb = grads->w2_unb.data() + k * 3 * h;
      const double* in_bal = c.in2_bal.data() + i * 3 * h;
      const double* in_unb = c.in2_unb.data() + i * 3 * h;
      for (std::size_t j = 0; j < 3 * h; ++j) {
        grow_bal[j] += dz_bal[k] * in_bal[j];
        grow_unb[j] += dz_unb[k] * in_unb[j];
      }
    }
    // d input = W^T dz, split into the two aggregations and the self block.
    std::vector<double> din_bal(3 * h, 0.0), din_unb(3 * h, 0.0);
    for (std::size_t k = 0; k < h; ++k) {
      const double* wrow_bal = model.w2_bal.data() + k * 3 * h;
      const double* wrow_unb = model.w2_unb.data() + k * 3 * h;
      for (std::size_t j = 0; j < 3 * h; ++j) {
        din_bal[j] += wrow_bal[j] * dz_bal[k];
        din_unb[j] += wrow_unb[j] * dz_unb[k];
      }
    }
    for (const auto& [j, coeff] : c.channels.pos_in[i]) {
      for (std::size_t k = 0; k < h; ++k) {
        d_h1_bal(j, k) += coeff * din_bal[k];
        d_h1_unb(j, k) += coeff * din_unb[k];
      }
    }
    for (const auto& [j, coeff] : c.channels.neg_in[i]) {
      for (std::size_t k = 0; k < h; ++k) {
        d_h1_unb(j, k) += coeff * din_bal[h + k];
        d_h1_bal(j, k) += coeff * din_unb[h + k];
      }
    }
    for (std::size_t k = 0; k < h; ++k) {
      d_h1_bal(i, k) += din_bal[2 * h + k];
      d_h1_unb(i, k) += din_unb[2 * h + k];
    }
  }

  // Backprop layer 1.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < h; ++k) {
      const double dz_bal = d_h1_bal(i, k) * (1.0 - c.h1_bal(i, k) * c.h1_bal(i, k));
      const double dz_unb = d_h1_unb(i, k) * (1.0 - c.h1_unb(i, k) * c.h1_unb(i, k));
      grads->b1_bal[k] += dz_bal;
      grads->b1_unb[k] += dz_unb;
      double* grow_bal = grads->w1_bal.data() + k * 2 * f;
      double* grow_unb = grads->w1_unb.data() + k * 2 * f;
      const double* in_bal = c.in1_bal.data() + i * 2 * f;
      const double* in_unb = c.in1_unb.data() + i * 2 * f;
      for (std::size_t j = 0; j < 2 * f; ++j) {
        grow_bal[j] += dz_bal * in_bal[j];
        grow_unb[j] += dz_unb * in_unb[j];
      }
    }
  }
  return loss;
}

ConvGraph unweight_and_symmetrize(const ConvGraph& g) {
  std::map<EdgeKey, EdgeData> edges;
  for (const auto& [key, data] : g.edges()) {
    edges[key] = EdgeData{1, data.sign};
  }
  for (const auto& [key, data] : g.edges()) {
    const EdgeKey reverse{key.second, key.first};
    if (!edges.count(reverse)) edges[reverse] = EdgeData{1, data.sign};
  }
  std::map<VertexId, AttributeRecord> attributes;
  for (VertexId u : g.vertex_ids()) attributes[u] = g.attribute(u);
  return ConvGraph(g.id(), g.vertex_ids(), std::move(attributes), std::move(edges),
                   g.targeted_vertex());
}

WsgcnTrainResult train_wsgcn(const std::vector<ConvGraph>& graphs,
                             const WsgcnTrainConfig& cfg) {
  if (graphs.empty()) throw std::invalid_argument("train_wsgcn: empty corpus");

  std::vector<AugmentedGraph> augmented;
  augmented.reserve(graphs.size());
  std::size_t negative_edges = 0;
  for (const ConvGraph& g : graphs) {
    const ConvGraph prepared = cfg.use_weights_and_directions ? g : unweight_and_symmetrize(g);
    for (const auto& [key, data] : prepared.edges()) {
      if (data.sign < 0) ++negative_edges;
    }
    augmented.push_back(attach_master_nodes(prepared, cfg.scheme));
  }
  if (negative_edges == 0) {
    std::cerr << "warning: corpus has no negative edges; the sign predictor is degenerate\n";
  }

  WsgcnModel model = WsgcnModel::initialize(cfg.scheme, cfg.hidden, cfg.output, cfg.seed);
  Rng rng(cfg.seed ^ 0x5eed);

  std::vector<std::size_t> order(augmented.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  WsgcnTrainResult result;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t gi : order) {
      WsgcnGradients grads;
      epoch_loss += wsgcn_sign_loss(augmented[gi], model, &grads);

      const double lr = cfg.learning_rate;
      auto step_matrix = [&](Matrix& w, const Matrix& gw) {
        double* wd = w.data();
        const double* gd = gw.data();
        for (std::size_t i = 0; i < w.rows() * w.cols(); ++i) wd[i] -= lr * gd[i];
      };
      auto step_vector = [&](std::vector<double>& v, const std::vector<double>& gv) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= lr * gv[i];
      };
      step_matrix(model.w1_bal, grads.w1_bal);
      step_matrix(model.w1_unb, grads.w1_unb);
      step_vector(model.b1_bal, grads.b1_bal);
      step_vector(model.b1_unb, grads.b1_unb);
      step_matrix(model.w2_bal, grads.w2_bal);
      step_matrix(model.w2_unb, grads.w2_unb);
      step_vector(model.b2_bal, grads.b2_bal);
      step_vector(model.b2_unb, grads.b2_unb);
      step_vector(model.theta, grads.theta);
      model.theta_bias -= lr * grads.theta_bias;
    }
    result.epoch_losses.push_back(epoch_loss / static_cast<double>(augmented.size()));
  }

  EmbeddingMatrix embeddings;
  embeddings.method = cfg.use_weights_and_directions ? "wda_wsgcn" : "wsgcn";
  embeddings.dimension = cfg.output;
  embeddings.seed = cfg.seed;
  embeddings.epochs = cfg.epochs;
  embeddings.final_loss =
      result.epoch_losses.empty() ? 0.0 : result.epoch_losses.back();
  embeddings.vectors = Matrix(augmented.size(), cfg.output);
  for (std::size_t i = 0; i < augmented.size(); ++i) {
    embeddings.ids.push_back(augmented[i].graph.id());
    const WsgcnForward fwd = wsgcn_forward(augmented[i], model);
    for (std::size_t j = 0; j < cfg.output; ++j) {
      embeddings.vectors(i, j) = fwd.graph_representation[j];
    }
  }
  result.model = std::move(model);
  result.embeddings = std::move(embeddings);
  return result;
}

namespace {

void write_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
  out << "tensor " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
  char buf[32];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << (j ? " " : "") << buf;
    }
    out << '\n';
  }
}

void write_vector(std::ostream& out, const std::string& name, const std::vector<double>& v) {
  Matrix m(1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  write_matrix(out, name, m);
}

Matrix read_matrix(std::istream& in, const std::string& expected) {
  std::string tag, name;
  std::size_t rows, cols;
  in >> tag >> name >> rows >> cols;
  if (tag != "tensor" || name != expected) {
    throw std::runtime_error("model checkpoint: expected tensor '" + expected + "', got '" +
                             name + "'");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) in >> m(i, j);
  }
  return m;
}

std::vector<double> read_vector(std::istream& in, const std::string& expected) {
  Matrix m = read_matrix(in, expected);
  std::vector<double> v(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) v[i] = m(0, i);
  return v;
}

}  // namespace

void save_wsgcn_model(const WsgcnModel& model, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << "wsgcn-model\n";
  out << "scheme " << to_string(model.scheme) << '\n';
  out << "input " << model.input_dim << '\n';
  out << "hidden " << model.hidden << '\n';
  out << "output " << model.output << '\n';
  out << "seed " << model.seed << '\n';
  write_matrix(out, "w1_bal", model.w1_bal);
  write_vector(out, "b1_bal", model.b1_bal);
  write_matrix(out, "w1_unb", model.w1_unb);
  write_vector(out, "b1_unb", model.b1_unb);
  write_matrix(out, "w2_bal", model.w2_bal);
  write_vector(out, "b2_bal", model.b2_bal);
  write_matrix(out, "w2_unb", model.w2_unb);
  write_vector(out, "b2_unb", model.b2_unb);
  write_vector(out, "theta", model.theta);
  Matrix bias(1, 1);
  bias(0, 0) = model.theta_bias;
  write_matrix(out, "theta_bias", bias);
  write_matrix(out, "readout", model.readout);
}

WsgcnModel load_wsgcn_model(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model checkpoint: " + file.string());
  std::string magic;
  in >> magic;
  if (magic != "wsgcn-model") {
    throw std::runtime_error(file.string() + ": not a wsgcn model checkpoint");
  }
  WsgcnModel model;
  std::string key, scheme;
  in >> key >> scheme >> key >> model.input_dim >> key >> model.hidden >> key >>
      model.output >> key >> model.seed;
  model.scheme = master_scheme_from_string(scheme);
  model.w1_bal = read_matrix(in, "w1_bal");
  model.b1_bal = read_vector(in, "b1_bal");
  model.w1_unb = read_matrix(in, "w1_unb");
  model.b1_unb = read_vector(in, "b1_unb");
  model.w2_bal = read_matrix(in, "w2_bal");
  model.b2_bal = read_vector(in, "b2_bal");
  model.w2_unb = read_matrix(in, "w2_unb");
  model.b2_unb = read_vector(in, "b2_unb");
  model.theta = read_vector(in, "theta");
  Matrix bias = read_matrix(in, "theta_bias");
  model.theta_bias = bias(0, 0);
  model.readout = read_matrix(in, "readout");
  return model;
}

}  // namespace convgraph
