#include <doctest.h>

#include "gspx/graph.hpp"
#include "gspx/sampling.hpp"

using namespace gspx;

TEST_CASE("new_graph places symmetric weights") {
    Graph g = new_graph(2, {{0, 1, 1.0}});
    CHECK(g.weights(0, 1) == 1.0);
    CHECK(g.weights(1, 0) == 1.0);
    CHECK(g.weights(0, 0) == 0.0);

    Graph empty = new_graph(3, {});
    CHECK(empty.weights.isZero(0.0));

    Graph k3 = new_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.weights(i, j) == (i == j ? 0.0 : 1.0));
}

TEST_CASE("new_graph rejects bad input") {
    CHECK_THROWS(new_graph(2, {{0, 2, 1.0}}));
    CHECK_THROWS(new_graph(2, {{0, 0, 1.0}}));
    CHECK_THROWS(new_graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}));
    CHECK_NOTHROW(new_graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}));  // consistent duplicate
    CHECK_THROWS(new_graph(0, {}));
}

TEST_CASE("shift operator is the weight matrix") {
    Graph g = new_graph(2, {{0, 1, 0.5}});
    CHECK(shift_operator(g)(0, 1) == 0.5);
    CHECK(shift_operator(new_graph(3, {})).isZero(0.0));
}

TEST_CASE("permute relabels weights and signal") {
    Graph p = new_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    GraphSignal x(Eigen::Vector3d(1.0, 2.0, 3.0));

    auto [pid, xid] = permute(p, x, {0, 1, 2});
    CHECK(pid.weights == p.weights);
    CHECK(xid.values == x.values);

    // reversal of the path 0-1-2: same path, signal reversed
    auto [pr, xr] = permute(p, x, {2, 1, 0});
    CHECK(pr.weights == p.weights);
    CHECK(xr.values == Eigen::Vector3d(3.0, 2.0, 1.0));

    // K2 swap is an automorphism
    Graph k2 = new_graph(2, {{0, 1, 1.0}});
    GraphSignal y(Eigen::Vector2d(5.0, 7.0));
    auto [ks, ys] = permute(k2, y, {1, 0});
    CHECK(ks.weights == k2.weights);
    CHECK(ys.values == Eigen::Vector2d(7.0, 5.0));

    CHECK_THROWS(permute(p, x, {0, 0, 1}));
}

TEST_CASE("permute with inverse permutation is the identity") {
    Rng rng(42);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 3 + int(rng.next_below(8));
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) {
            v(i) = rng.next_uniform();
            for (int j = i + 1; j < n; ++j) {
                w(i, j) = rng.next_uniform() < 0.5 ? rng.next_uniform() : 0.0;
                w(j, i) = w(i, j);
            }
        }
        Graph g(n, w);
        GraphSignal x(v);
        std::vector<int> pi(n), inv(n);
        for (int i = 0; i < n; ++i) pi[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(pi[i], pi[rng.next_below(i + 1)]);
        for (int i = 0; i < n; ++i) inv[pi[i]] = i;
        auto [g2, x2] = permute(g, x, pi);
        auto [g3, x3] = permute(g2, x2, inv);
        CHECK(g3.weights == g.weights);
        CHECK(x3.values == x.values);
    }
}

TEST_CASE("pearson similarity graph") {
    RatingTable r;
    r.num_users = 3;
    r.num_items = 3;
    // A:(item0->4, item1->2), B:(item0->2, item1->4), C shares no items with A or B.
    r.entries = {{0, 0, 4}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}, {2, 2, 5}, {2, 3, 3}};
    r.num_items = 4;
    Graph g = pearson_similarity_graph(r, {0, 1, 2});
    CHECK(g.weights(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g.weights(0, 2) == 0.0);
    CHECK(g.weights(1, 2) == 0.0);
    CHECK(g.weights.diagonal().isZero(0.0));
    CHECK(g.weights == g.weights.transpose());
}

TEST_CASE("pearson perfect and anti correlation") {
    RatingTable r;
    r.num_users = 2;
    r.num_items = 2;
    r.entries = {{0, 0, 3}, {0, 1, 5}, {1, 0, 2}, {1, 1, 4}};
    Graph g = pearson_similarity_graph(r, {0, 1});
    CHECK(g.weights(0, 1) == doctest::Approx(1.0).epsilon(1e-12));

    r.entries = {{0, 0, 5}, {0, 1, 1}, {1, 0, 1}, {1, 1, 5}};
    Graph h = pearson_similarity_graph(r, {0, 1});
    CHECK(h.weights(0, 1) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("pearson weights stay in [-1,1]") {
    Rng rng(7);
    RatingTable r;
    r.num_users = 12;
    r.num_items = 30;
    for (int u = 0; u < r.num_users; ++u)
        for (int it = 0; it < r.num_items; ++it)
            if (rng.next_uniform() < 0.4)
                r.entries.push_back({u, it, 1.0 + double(rng.next_below(5))});
    std::vector<int> users;
    for (int u = 0; u < r.num_users; ++u) users.push_back(u);
    Graph g = pearson_similarity_graph(r, users);
    CHECK(g.weights.maxCoeff() <= 1.0 + 1e-12);
    CHECK(g.weights.minCoeff() >= -1.0 - 1e-12);
}

TEST_CASE("pearson error paths") {
    RatingTable r;
    r.num_users = 2;
    r.num_items = 2;
    r.entries = {{0, 0, 3}, {0, 1, 5}, {1, 0, 2}, {1, 1, 4}};
    CHECK_THROWS(pearson_similarity_graph(r, {0}));      // too few users
    CHECK_THROWS(pearson_similarity_graph(r, {0, 5}));   // out of range
    RatingTable sparse;
    sparse.num_users = 2;
    sparse.num_items = 2;
    sparse.entries = {{0, 0, 3}, {0, 1, 5}, {1, 0, 2}};  // user 1 has one rating
    CHECK_THROWS(pearson_similarity_graph(sparse, {0, 1}));
}
