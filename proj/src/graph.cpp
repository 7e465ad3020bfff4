#include "gspx/graph.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gspx {

Graph::Graph(int n_, Eigen::MatrixXd w) : n(n_), weights(std::move(w)) {
    if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
    if (weights.rows() != n || weights.cols() != n)
        throw std::invalid_argument("Graph: weight matrix must be n x n");
    if (weights != weights.transpose())
        throw std::invalid_argument("Graph: weight matrix must be exactly symmetric");
}

Graph new_graph(int n, const std::vector<std::tuple<int, int, double>>& edges) {
    if (n < 1) throw std::invalid_argument("new_graph: n must be >= 1");
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    std::map<std::pair<int, int>, double> seen;
    for (const auto& [i, j, weight] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("new_graph: edge index out of range");
        if (i == j)
            throw std::invalid_argument("new_graph: self-loops are not allowed");
        if (!std::isfinite(weight))
            throw std::invalid_argument("new_graph: edge weight must be finite");
        auto key = std::minmax(i, j);
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (it->second != weight)
                throw std::invalid_argument("new_graph: duplicate edge with conflicting weight");
            continue;
        }
        seen.emplace(key, weight);
        w(i, j) = weight;
        w(j, i) = weight;
    }
    return Graph(n, std::move(w));
}

GraphSignal::GraphSignal(Eigen::VectorXd v) : values(std::move(v)) {
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (!std::isfinite(values(i)))
            throw std::invalid_argument("GraphSignal: entries must be finite");
}

const Eigen::MatrixXd& shift_operator(const Graph& g) { return g.weights; }

std::pair<Graph, GraphSignal> permute(const Graph& g, const GraphSignal& x,
                                      const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != g.n)
        throw std::invalid_argument("permute: permutation size mismatch");
    if (x.values.size() != g.n)
        throw std::invalid_argument("permute: signal size mismatch");
    std::vector<bool> hit(pi.size(), false);
    for (int p : pi) {
        if (p < 0 || p >= g.n || hit[p])
            throw std::invalid_argument("permute: not a bijection on {0..n-1}");
        hit[p] = true;
    }
    Eigen::MatrixXd w(g.n, g.n);
    Eigen::VectorXd v(g.n);
    for (int i = 0; i < g.n; ++i) {
        v(pi[i]) = x.values(i);
        for (int j = 0; j < g.n; ++j) w(pi[i], pi[j]) = g.weights(i, j);
    }
    return {Graph(g.n, std::move(w)), GraphSignal(std::move(v))};
}

namespace {

// Pearson correlation of two users' ratings over their co-rated items.
// Returns 0 when fewer than 2 co-rated items exist or a restricted vector
// is constant.
double pearson_pair(const std::map<int, double>& a, const std::map<int, double>& b) {
    std::vector<std::pair<double, double>> common;
    for (const auto& [item, ra] : a) {
        auto it = b.find(item);
        if (it != b.end()) common.emplace_back(ra, it->second);
    }
    const auto m = static_cast<double>(common.size());
    if (common.size() < 2) return 0.0;
    double ma = 0, mb = 0;
    for (const auto& [ra, rb] : common) { ma += ra; mb += rb; }
    ma /= m;
    mb /= m;
    double sab = 0, saa = 0, sbb = 0;
    for (const auto& [ra, rb] : common) {
        sab += (ra - ma) * (rb - mb);
        saa += (ra - ma) * (ra - ma);
        sbb += (rb - mb) * (rb - mb);
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

Graph pearson_similarity_graph(const RatingTable& ratings, const std::vector<int>& users) {
    const int k = static_cast<int>(users.size());
    if (k < 2) throw std::invalid_argument("pearson_similarity_graph: need at least 2 users");
    std::vector<std::map<int, double>> profile(users.size());
    for (int u = 0; u < k; ++u) {
        if (users[u] < 0 || users[u] >= ratings.num_users)
            throw std::invalid_argument("pearson_similarity_graph: user index out of range");
    }
    std::map<int, int> pos;  // global user id -> local index
    for (int u = 0; u < k; ++u) pos[users[u]] = u;
    for (const auto& e : ratings.entries) {
        auto it = pos.find(e.user);
        if (it != pos.end()) profile[it->second][e.item] = e.rating;
    }
    for (int u = 0; u < k; ++u)
        if (profile[u].size() < 2)
            throw std::invalid_argument("pearson_similarity_graph: every user needs >= 2 rated items");
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double r = pearson_pair(profile[i], profile[j]);
            w(i, j) = r;
            w(j, i) = r;
        }
    return Graph(k, std::move(w));
}

}  // namespace gspx
