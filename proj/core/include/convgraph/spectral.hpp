#pragma once

#include <vector>

#include "convgraph/graph.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

/// Symmetric normalized Laplacian of the undirected, unweighted, sign-blind
/// view of g. Rows of isolated vertices are zero.
Matrix normalized_laplacian(const ConvGraph& g);

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
/// rotations. Intended for the small dense matrices that occur here.
std::vector<double> jacobi_eigenvalues(Matrix a);

/// The k smallest eigenvalues of the normalized Laplacian that exceed
/// zero_tolerance, ascending, right-padded with zeros when fewer exist.
std::vector<double> spectral_features(const ConvGraph& g, std::size_t k,
                                      double zero_tolerance = 1e-9);

}  // namespace convgraph
