#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gsc/linalg.hpp"

namespace gsc {

struct Edge {
    int i = 0;
    int j = 0;
    double weight = 1.0;
};

/// Undirected weighted graph on n >= 2 nodes. The weight matrix is symmetric
/// with zero diagonal and nonnegative entries; this is checked at construction
/// and instances are immutable afterwards.
class Graph {
public:
    static Graph from_weights(Matrix weights);
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int size() const { return weights_.rows(); }
    double weight(int i, int j) const { return weights_(i, j); }
    const Matrix& weights() const { return weights_; }

    /// Edge list with i < j and weight > 0, in (i, j) lexicographic order.
    std::vector<Edge> edges() const;

private:
    explicit Graph(Matrix w) : weights_(std::move(w)) {}
    Matrix weights_;
};

/// L = D - A with D = diag of row sums. Symmetric, rows sum to zero.
Matrix laplacian(const Graph& g);

/// Largest weighted degree max_i sum_j a_ij.
double max_degree(const Graph& g);

/// Traversal over edges with weight strictly greater than zero.
bool is_connected(const Graph& g);

enum class GraphKind { cycle, path, complete, erdos_renyi };

struct GenerateOptions {
    double edge_probability = 0.5;  // erdos_renyi only
    std::uint64_t seed = 0;         // erdos_renyi only
    int max_attempts = 1000;
};

struct GeneratedGraph {
    Graph graph;
    int attempts = 1;  // erdos_renyi resamples until connected
};

/// Deterministic for fixed arguments. erdos_renyi draws edges independently
/// with the given probability and retries with a fresh seed-derived stream
/// until the sample is connected; throws once max_attempts is exhausted.
GeneratedGraph generate(GraphKind kind, int n, const GenerateOptions& opts = {});

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

}  // namespace gsc
