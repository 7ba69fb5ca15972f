#include "convgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace convgraph {

Matrix normalized_laplacian(const ConvGraph& g) {
  const auto& vertices = g.vertex_ids();
  const std::size_t n = vertices.size();
  std::unordered_map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[vertices[i]] = i;

  Matrix adj(n, n, 0.0);
  for (const auto& [key, data] : g.edges()) {
    const std::size_t i = index.at(key.first);
    const std::size_t j = index.at(key.second);
    adj(i, j) = 1.0;
    adj(j, i) = 1.0;
  }

  std::vector<double> degree(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj(i, j);
  }

  Matrix lap(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] <= 0.0) continue;  // isolated vertex: zero row
    lap(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj(i, j) > 0.0) {
        lap(i, j) -= 1.0 / std::sqrt(degree[i] * degree[j]);
      }
    }
  }
  return lap;
}

std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("jacobi: matrix must be square");
  if (n == 0) return {};

  constexpr int kMaxSweeps = 100;
  constexpr double kTolerance = 1e-14;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    }
    if (off < kTolerance * kTolerance) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

std::vector<double> spectral_features(const ConvGraph& g, std::size_t k,
                                      double zero_tolerance) {
  if (k < 1) throw std::invalid_argument("spectral_features: k must be >= 1");
  if (g.vertex_count() == 0) throw std::invalid_argument("spectral_features: empty graph");

  const std::vector<double> spectrum = jacobi_eigenvalues(normalized_laplacian(g));
  std::vector<double> features;
  features.reserve(k);
  for (double ev : spectrum) {
    if (ev > zero_tolerance) {
      features.push_back(ev);
      if (features.size() == k) break;
    }
  }
  features.resize(k, 0.0);
  return features;
}

}  // namespace convgraph
