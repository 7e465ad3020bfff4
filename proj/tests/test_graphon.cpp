#include <doctest.h>

#include "gspx/graphon.hpp"
#include "gspx/sampling.hpp"

using namespace gspx;

TEST_CASE("kernel evaluation") {
    AnalyticKernel c = AnalyticKernel::constant(0.5);
    CHECK(c(0.1, 0.9) == 0.5);
    CHECK(c(1.0, 0.0) == 0.5);

    AnalyticKernel p = AnalyticKernel::product();
    CHECK(p(0.5, 0.4) == doctest::Approx(0.2).epsilon(1e-15));

    Eigen::MatrixXd v(2, 2);
    v << 0, 1, 1, 0;
    StepGraphon s(v);
    CHECK(s(0.25, 0.75) == 1.0);
    CHECK(s(0.25, 0.25) == 0.0);
    CHECK(s(1.0, 1.0) == 0.0);  // last interval closed at 1

    CHECK_THROWS(c(-0.1, 0.5));
    CHECK_THROWS(c(0.5, 1.1));
}

TEST_CASE("step graphon validation") {
    Eigen::MatrixXd bad(2, 2);
    bad << 0, 1, 0.5, 0;
    CHECK_THROWS(StepGraphon(bad));
    Eigen::MatrixXd out_of_range(1, 1);
    out_of_range << 2.0;
    CHECK_THROWS(StepGraphon(out_of_range, 0.0, 1.0));
    Eigen::MatrixXd signed_ok(2, 2);
    signed_ok << 0.5, -0.5, -0.5, 0.5;
    CHECK_NOTHROW(StepGraphon(signed_ok, -1.0, 1.0));
}

TEST_CASE("induced graphon reproduces the shift matrix bitwise") {
    Graph k2 = new_graph(2, {{0, 1, 1.0}});
    StepGraphon w = induce_graphon(k2);
    CHECK(w.block_count() == 2);
    CHECK(w.values() == k2.weights);

    Graph empty = new_graph(3, {});
    CHECK(induce_graphon(empty).values().isZero(0.0));

    Graph half = new_graph(2, {{0, 1, 0.5}});
    CHECK(induce_graphon(half).values()(0, 1) == 0.5);
}

TEST_CASE("induced signal") {
    GraphSignal x(Eigen::Vector2d(1.0, 2.0));
    StepSignal s = induce_signal(x);
    CHECK(s.block_count() == 2);
    CHECK(s.values() == x.values);

    GraphSignal z(Eigen::Vector3d(3.0, -1.0, 4.0));
    CHECK(induce_signal(z).values() == z.values);
}

TEST_CASE("step_graphon_from_matrix") {
    Eigen::MatrixXd m(1, 1);
    m << 0.5;
    CHECK(step_graphon_from_matrix(m, 0, 1).block_count() == 1);
    Eigen::MatrixXd d(2, 2);
    d << 0.5, 0, 0, 0.5;
    CHECK(step_graphon_from_matrix(d, 0, 1)(0.1, 0.1) == 0.5);
    Eigen::MatrixXd s(2, 2);
    s << 0.5, -0.5, -0.5, 0.5;
    CHECK(step_graphon_from_matrix(s, -1, 1)(0.1, 0.9) == -0.5);
}

TEST_CASE("midpoint discretization") {
    StepGraphon c = discretize(AnalyticKernel::constant(0.5), 4);
    CHECK(c.values() == Eigen::MatrixXd::Constant(4, 4, 0.5));

    StepGraphon p = discretize(AnalyticKernel::product(), 2);
    Eigen::MatrixXd expected(2, 2);
    expected << 1.0 / 16, 3.0 / 16, 3.0 / 16, 9.0 / 16;
    CHECK((p.values() - expected).cwiseAbs().maxCoeff() < 1e-15);

    StepSignal xs = discretize_signal(AnalyticSignal::identity(), 2);
    CHECK(xs.values()(0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(xs.values()(1) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("discretization is exactly symmetric") {
    // kernel with asymmetric floating-point evaluation hazard
    AnalyticKernel k("skew", [](double u, double v) {
        return (u * 0.1 + v * 0.7 + u * v) / (1.0 + u + v);
    }, 0.0, 1.0);
    StepGraphon d = discretize(k, 37);
    CHECK(d.values() == d.values().transpose());
}

TEST_CASE("step eval is constant on blocks") {
    Rng rng(3);
    Eigen::MatrixXd m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = rng.next_uniform();
    StepGraphon w(m);
    CHECK(w(0.26, 0.51) == w(0.49, 0.74));
    CHECK(w(0.01, 0.99) == w(0.20, 0.80));
}
