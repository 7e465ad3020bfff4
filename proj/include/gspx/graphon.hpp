#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>

#include "gspx/graph.hpp"

// Graphons and graphon signals.
//
// A graphon is a bounded symmetric kernel on [0,1]^2. Two concrete forms are
// supported: analytic kernels (named parametric families plus user-supplied
// evaluators) and step graphons (block-constant over the uniform N-partition,
// intervals right-open with the last one closed at 1). Kernel values may live
// in [-1,1]; sampling and homomorphism densities additionally require [0,1].

namespace gspx {

class Graphon {
public:
    virtual ~Graphon() = default;

    // Symmetric kernel value; throws if u or v is outside [0,1].
    double operator()(double u, double v) const;

    double range_lo() const { return lo_; }
    double range_hi() const { return hi_; }
    bool nonnegative_range() const { return lo_ >= 0.0; }

protected:
    Graphon(double lo, double hi);
    virtual double eval_impl(double u, double v) const = 0;

private:
    double lo_, hi_;
};

class StepGraphon final : public Graphon {
public:
    // Block-constant kernel over the uniform N-partition. The matrix must be
    // exactly symmetric with entries inside [lo, hi].
    StepGraphon(Eigen::MatrixXd values, double lo = 0.0, double hi = 1.0);

    int block_count() const { return N_; }
    const Eigen::MatrixXd& values() const { return values_; }

    // Index of the partition cell containing u.
    int block_of(double u) const;

private:
    double eval_impl(double u, double v) const override;

    int N_;
    Eigen::MatrixXd values_;
};

class AnalyticKernel final : public Graphon {
public:
    AnalyticKernel(std::string name, std::function<double(double, double)> f,
                   double lo = 0.0, double hi = 1.0);

    const std::string& name() const { return name_; }

    static AnalyticKernel constant(double p);
    static AnalyticKernel product();                  // W(u,v) = u*v
    static AnalyticKernel soft_geometric(double beta);  // W(u,v) = exp(-beta*|u-v|)

private:
    double eval_impl(double u, double v) const override;

    std::string name_;
    std::function<double(double, double)> f_;
};

class GraphonSignal {
public:
    virtual ~GraphonSignal() = default;
    double operator()(double u) const;
    double l2_bound() const { return l2_bound_; }

protected:
    explicit GraphonSignal(double l2_bound);
    virtual double eval_impl(double u) const = 0;

private:
    double l2_bound_;
};

class StepSignal final : public GraphonSignal {
public:
    explicit StepSignal(Eigen::VectorXd values);

    int block_count() const { return N_; }
    const Eigen::VectorXd& values() const { return values_; }

    // L2 norm on [0,1]: sqrt((1/N) * sum values^2).
    double l2_norm() const;

private:
    double eval_impl(double u) const override;

    int N_;
    Eigen::VectorXd values_;
};

class AnalyticSignal final : public GraphonSignal {
public:
    AnalyticSignal(std::string name, std::function<double(double)> f, double l2_bound);

    const std::string& name() const { return name_; }

    static AnalyticSignal constant(double c);
    static AnalyticSignal identity();  // X(u) = u

private:
    double eval_impl(double u) const override;

    std::string name_;
    std::function<double(double)> f_;
};

// Eq.-6-style induced objects: the step graphon W_G with values [S]_{jk} and
// the step signal with values [x]_k, both over the uniform n-partition.
StepGraphon induce_graphon(const Graph& g);
StepSignal induce_signal(const GraphSignal& x);

// StepGraphon over the uniform N-partition from an explicit matrix.
StepGraphon step_graphon_from_matrix(const Eigen::MatrixXd& values, double lo, double hi);

// Midpoint discretization: values[j][k] = W(m_j, m_k), m_j = (j - 1/2)/N.
// Only j <= k is evaluated and mirrored, so the output is exactly symmetric.
StepGraphon discretize(const Graphon& w, int N);
StepSignal discretize_signal(const GraphonSignal& x, int N);

}  // namespace gspx
