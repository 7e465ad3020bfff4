#include "gspx/graphon.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gspx {

namespace {
void check_unit(double t, const char* what) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}
}  // namespace

Graphon::Graphon(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Graphon: invalid range");
}

double Graphon::operator()(double u, double v) const {
    check_unit(u, "u");
    check_unit(v, "v");
    return eval_impl(u, v);
}

StepGraphon::StepGraphon(Eigen::MatrixXd values, double lo, double hi)
    : Graphon(lo, hi), N_(static_cast<int>(values.rows())), values_(std::move(values)) {
    if (N_ < 1 || values_.cols() != N_)
        throw std::invalid_argument("StepGraphon: values must be a square N x N matrix, N >= 1");
    if (values_ != values_.transpose())
        throw std::invalid_argument("StepGraphon: values must be exactly symmetric");
    for (int j = 0; j < N_; ++j)
        for (int k = 0; k < N_; ++k)
            if (!(values_(j, k) >= lo && values_(j, k) <= hi))
                throw std::invalid_argument("StepGraphon: entry outside declared range");
}

int StepGraphon::block_of(double u) const {
    check_unit(u, "u");
    const int j = static_cast<int>(u * N_);
    return j >= N_ ? N_ - 1 : j;  // u == 1 falls in the last (closed) interval
}

double StepGraphon::eval_impl(double u, double v) const {
    return values_(block_of(u), block_of(v));
}

AnalyticKernel::AnalyticKernel(std::string name, std::function<double(double, double)> f,
                               double lo, double hi)
    : Graphon(lo, hi), name_(std::move(name)), f_(std::move(f)) {
    if (!f_) throw std::invalid_argument("AnalyticKernel: evaluator required");
}

double AnalyticKernel::eval_impl(double u, double v) const { return f_(u, v); }

AnalyticKernel AnalyticKernel::constant(double p) {
    if (!(p >= -1.0 && p <= 1.0))
        throw std::invalid_argument("constant kernel: p must lie in [-1,1]");
    const double lo = std::min(p, 0.0);
    return AnalyticKernel("constant", [p](double, double) { return p; }, lo, std::max(p, 0.0));
}

AnalyticKernel AnalyticKernel::product() {
    return AnalyticKernel("product", [](double u, double v) { return u * v; }, 0.0, 1.0);
}

AnalyticKernel AnalyticKernel::soft_geometric(double beta) {
    if (!(beta > 0)) throw std::invalid_argument("soft_geometric kernel: beta must be > 0");
    return AnalyticKernel("soft-geometric",
                          [beta](double u, double v) { return std::exp(-beta * std::abs(u - v)); },
                          0.0, 1.0);
}

GraphonSignal::GraphonSignal(double l2_bound) : l2_bound_(l2_bound) {
    if (!(std::isfinite(l2_bound) && l2_bound >= 0))
        throw std::invalid_argument("GraphonSignal: finite L2 bound required");
}

double GraphonSignal::operator()(double u) const {
    check_unit(u, "u");
    return eval_impl(u);
}

StepSignal::StepSignal(Eigen::VectorXd values)
    : GraphonSignal(values.size() ? values.cwiseAbs().maxCoeff() : 0.0),
      N_(static_cast<int>(values.size())),
      values_(std::move(values)) {
    if (N_ < 1) throw std::invalid_argument("StepSignal: N >= 1 required");
    for (int k = 0; k < N_; ++k)
        if (!std::isfinite(values_(k)))
            throw std::invalid_argument("StepSignal: entries must be finite");
}

double StepSignal::l2_norm() const { return values_.norm() / std::sqrt(double(N_)); }

double StepSignal::eval_impl(double u) const {
    const int k = static_cast<int>(u * N_);
    return values_(k >= N_ ? N_ - 1 : k);
}

AnalyticSignal::AnalyticSignal(std::string name, std::function<double(double)> f, double l2_bound)
    : GraphonSignal(l2_bound), name_(std::move(name)), f_(std::move(f)) {
    if (!f_) throw std::invalid_argument("AnalyticSignal: evaluator required");
}

double AnalyticSignal::eval_impl(double u) const { return f_(u); }

AnalyticSignal AnalyticSignal::constant(double c) {
    return AnalyticSignal("constant", [c](double) { return c; }, std::abs(c));
}

AnalyticSignal AnalyticSignal::identity() {
    return AnalyticSignal("identity", [](double u) { return u; }, 1.0);
}

StepGraphon induce_graphon(const Graph& g) {
    const Eigen::MatrixXd& s = shift_operator(g);
    double lo = std::min(0.0, s.minCoeff());
    double hi = std::max(0.0, s.maxCoeff());
    return StepGraphon(s, lo, hi);
}

StepSignal induce_signal(const GraphSignal& x) { return StepSignal(x.values); }

StepGraphon step_graphon_from_matrix(const Eigen::MatrixXd& values, double lo, double hi) {
    return StepGraphon(values, lo, hi);
}

StepGraphon discretize(const Graphon& w, int N) {
    if (N < 1) throw std::invalid_argument("discretize: N >= 1 required");
    Eigen::MatrixXd values(N, N);
    for (int j = 0; j < N; ++j) {
        const double mj = (j + 0.5) / N;
        for (int k = j; k < N; ++k) {
            const double mk = (k + 0.5) / N;
            const double val = w(mj, mk);
            values(j, k) = val;
            values(k, j) = val;
        }
    }
    return StepGraphon(std::move(values), w.range_lo(), w.range_hi());
}

StepSignal discretize_signal(const GraphonSignal& x, int N) {
    if (N < 1) throw std::invalid_argument("discretize_signal: N >= 1 required");
    Eigen::VectorXd values(N);
    for (int k = 0; k < N; ++k) values(k) = x((k + 0.5) / N);
    return StepSignal(std::move(values));
}

}  // namespace gspx
