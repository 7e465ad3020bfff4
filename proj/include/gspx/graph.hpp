#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

// Finite graphs, graph signals and the shift operator.
//
// Graphs are undirected, weighted, without self-loops; the weight matrix is
// stored dense and kept exactly symmetric. The shift operator is the weight
// matrix itself (no Laplacian variant).

namespace gspx {

struct Graph {
    int n = 0;
    Eigen::MatrixXd weights;  // n x n, symmetric, zero diagonal

    Graph() = default;
    Graph(int n_, Eigen::MatrixXd w);
};

// Builds a graph from an undirected edge list (i, j, w). Unlisted pairs get
// weight 0. Throws on out-of-range indices, self-loops, non-finite weights
// or duplicate edges with conflicting weights.
Graph new_graph(int n, const std::vector<std::tuple<int, int, double>>& edges);

struct GraphSignal {
    Eigen::VectorXd values;

    GraphSignal() = default;
    explicit GraphSignal(Eigen::VectorXd v);
};

// The shift operator under the default policy: the weight matrix.
const Eigen::MatrixXd& shift_operator(const Graph& g);

// Relabels nodes: weights'[pi(i)][pi(j)] = weights[i][j], values'[pi(i)] = values[i].
std::pair<Graph, GraphSignal> permute(const Graph& g, const GraphSignal& x,
                                      const std::vector<int>& pi);

struct RatingTable {
    struct Entry {
        int user;
        int item;
        double rating;  // in [1,5]
    };
    int num_users = 0;
    int num_items = 0;
    std::vector<Entry> entries;
};

// User-similarity graph: edge weight = Pearson correlation of the two users'
// ratings restricted to co-rated items. Pairs with fewer than 2 co-rated
// items, or with a constant restricted vector, get weight 0.
Graph pearson_similarity_graph(const RatingTable& ratings, const std::vector<int>& users);

}  // namespace gspx
