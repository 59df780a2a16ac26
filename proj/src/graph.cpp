#include "gsc/graph.hpp"

#include <stdexcept>
#include <string>

#include "gsc/random.hpp"

namespace gsc {

namespace {

void validate_weights(const Matrix& w) {
    if (w.rows() != w.cols()) throw std::invalid_argument("graph weights must be square");
    if (w.rows() < 2) throw std::invalid_argument("graph needs at least 2 nodes");
    for (int i = 0; i < w.rows(); ++i) {
        if (w(i, i) != 0.0) throw std::invalid_argument("self-edges are not allowed (nonzero diagonal)");
        for (int j = 0; j < w.cols(); ++j) {
            if (w(i, j) < 0.0) throw std::invalid_argument("edge weights must be nonnegative");
            if (w(i, j) != w(j, i)) throw std::invalid_argument("weight matrix must be symmetric");
        }
    }
}

}  // namespace

Graph Graph::from_weights(Matrix weights) {
    validate_weights(weights);
    return Graph(std::move(weights));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 2) throw std::invalid_argument("graph needs at least 2 nodes");
    Matrix w(n, n);
    for (const Edge& e : edges) {
        if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
            throw std::invalid_argument("edge index out of range: (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
        if (e.i == e.j) throw std::invalid_argument("self-edges are not allowed");
        if (e.weight <= 0.0) throw std::invalid_argument("edge weights must be positive");
        if (w(e.i, e.j) != 0.0) throw std::invalid_argument("duplicate edge: (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
        w(e.i, e.j) = e.weight;
        w(e.j, e.i) = e.weight;
    }
    return Graph(std::move(w));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (weights_(i, j) > 0.0) out.push_back({i, j, weights_(i, j)});
    return out;
}

Matrix laplacian(const Graph& g) {
    const int n = g.size();
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
        double degree = 0.0;
        for (int j = 0; j < n; ++j) {
            degree += g.weight(i, j);
            l(i, j) = -g.weight(i, j);
        }
        l(i, i) = degree;
    }
    return l;
}

double max_degree(const Graph& g) {
    double best = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        double d = 0.0;
        for (int j = 0; j < g.size(); ++j) d += g.weight(i, j);
        best = std::max(best, d);
    }
    return best;
}

bool is_connected(const Graph& g) {
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.weight(u, v) > 0.0) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

namespace {

Graph make_cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    if (n == 2) edges.pop_back();  // avoid the duplicate (0,1) pair
    return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return Graph::from_edges(n, edges);
}

}  // namespace

GeneratedGraph generate(GraphKind kind, int n, const GenerateOptions& opts) {
    if (n < 2) throw std::invalid_argument("graph needs at least 2 nodes");
    switch (kind) {
        case GraphKind::cycle:
            return {make_cycle(n), 1};
        case GraphKind::path:
            return {make_path(n), 1};
        case GraphKind::complete:
            return {make_complete(n), 1};
        case GraphKind::erdos_renyi:
            break;
    }
    if (!(opts.edge_probability > 0.0 && opts.edge_probability <= 1.0))
        throw std::invalid_argument("erdos_renyi needs edge probability in (0, 1]");
    for (int attempt = 1; attempt <= opts.max_attempts; ++attempt) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(attempt - 1));
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform01() < opts.edge_probability) edges.push_back({i, j, 1.0});
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return {std::move(g), attempt};
    }
    throw std::runtime_error("erdos_renyi: no connected sample after " + std::to_string(opts.max_attempts) +
                             " attempts; edge probability too small");
}

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "cycle") return GraphKind::cycle;
    if (name == "path") return GraphKind::path;
    if (name == "complete") return GraphKind::complete;
    if (name == "er" || name == "erdos_renyi") return GraphKind::erdos_renyi;
    throw std::invalid_argument("unknown graph kind: " + name);
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::cycle: return "cycle";
        case GraphKind::path: return "path";
        case GraphKind::complete: return "complete";
        case GraphKind::erdos_renyi: return "erdos_renyi";
    }
    return "unknown";
}

}  // namespace gsc
