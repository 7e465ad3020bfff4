#include "gspx/homomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gspx/sampling.hpp"

namespace gspx {

Motif::Motif(int n, std::vector<std::pair<int, int>> e) : n_prime(n), edges(std::move(e)) {
    if (n_prime < 1) throw std::invalid_argument("Motif: n' >= 1 required");
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : edges) {
        if (i < 0 || i >= n_prime || j < 0 || j >= n_prime)
            throw std::invalid_argument("Motif: edge index out of range");
        if (i == j) throw std::invalid_argument("Motif: loops are not allowed");
        if (!seen.insert(std::minmax(i, j)).second)
            throw std::invalid_argument("Motif: duplicate edge");
    }
}

Motif Motif::single_node() { return Motif(1, {}); }
Motif Motif::edge() { return Motif(2, {{0, 1}}); }
Motif Motif::triangle() { return cycle(3); }

Motif Motif::cycle(int k) {
    if (k < 2) throw std::invalid_argument("Motif::cycle: k >= 2 required");
    // C_2 collapses to the single edge; on unweighted graphs its
    // homomorphism count still equals trace(S^2).
    if (k == 2) return edge();
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Motif(k, std::move(e));
}

Motif Motif::named(const std::string& name) {
    if (name == "edge") return edge();
    if (name == "triangle") return triangle();
    if (name == "C4") return cycle(4);
    if (name == "C5") return cycle(5);
    throw std::invalid_argument("Motif::named: unknown motif '" + name + "'");
}

namespace {
double pow_int(double base, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
}
}  // namespace

double hom_count(const Motif& f, const Graph& g) {
    const int np = f.n_prime;
    const double total_maps = pow_int(double(g.n), np);
    if (np > 6 || total_maps > 1e8)
        throw std::invalid_argument(
            "hom_count: enumeration budget exceeded (n^{n'} > 1e8 or n' > 6); "
            "use cycle_density_graph for cycle motifs");
    std::vector<int> beta(np, 0);
    double total = 0;
    while (true) {
        double prod = 1;
        for (const auto& [i, j] : f.edges) {
            prod *= g.weights(beta[i], beta[j]);
            if (prod == 0) break;
        }
        total += prod;
        int pos = np - 1;
        while (pos >= 0 && ++beta[pos] == g.n) beta[pos--] = 0;
        if (pos < 0) break;
    }
    return total;
}

double hom_density_graph(const Motif& f, const Graph& g) {
    return hom_count(f, g) / pow_int(double(g.n), f.n_prime);
}

McEstimate hom_density_graphon_mc(const Motif& f, const Graphon& w, std::int64_t samples,
                                  std::uint64_t seed) {
    if (samples < 100) throw std::invalid_argument("hom_density_graphon_mc: need >= 100 samples");
    McEstimate out;
    out.signed_kernel = !w.nonnegative_range();
    Rng rng(rng_stream(seed, 0));
    std::vector<double> u(f.n_prime);
    double sum = 0, sum_sq = 0;
    for (std::int64_t m = 0; m < samples; ++m) {
        for (auto& ui : u) ui = rng.next_uniform();
        double prod = 1;
        for (const auto& [i, j] : f.edges) prod *= w(u[i], u[j]);
        sum += prod;
        sum_sq += prod * prod;
    }
    const double mm = double(samples);
    out.estimate = sum / mm;
    const double var = std::max(0.0, (sum_sq - sum * sum / mm) / (mm - 1));
    out.stderr_ = std::sqrt(var / mm);
    return out;
}

double cycle_hom_count(int k, const Graph& g) {
    if (k < 2) throw std::invalid_argument("cycle_hom_count: k >= 2 required");
    const Eigen::MatrixXd& s = shift_operator(g);
    Eigen::MatrixXd p = s;
    for (int i = 1; i < k; ++i) p = (p * s).eval();
    return p.trace();
}

double cycle_density_graph(int k, const Graph& g) {
    return cycle_hom_count(k, g) / pow_int(double(g.n), k);
}

double cycle_density_graphon(int k, const SignedSpectrum& s) {
    if (k < 2) throw std::invalid_argument("cycle_density_graphon: k >= 2 required");
    double total = 0;
    for (const auto& [j, e] : s.entries) total += pow_int(e.sigma, k);
    return total;
}

CutNorm cut_norm_step(const StepGraphon& w) {
    const int n = w.block_count();
    if (n > 24) throw std::invalid_argument("cut_norm_step: N <= 24 required");
    const Eigen::MatrixXd& v = w.values();

    CutNorm best;
    Eigen::VectorXd colsum = Eigen::VectorXd::Zero(n);
    std::uint32_t mask = 0;
    // Gray-code walk over row subsets S; for each S the optimal T is the set
    // of columns whose partial sum shares one sign (checked for both signs).
    const std::uint32_t total = 1u << n;
    for (std::uint32_t g = 1; g < total; ++g) {
        const std::uint32_t gray = g ^ (g >> 1);
        const std::uint32_t flipped = gray ^ mask;
        const int row = __builtin_ctz(flipped);
        if (gray & (1u << row))
            colsum += v.row(row).transpose();
        else
            colsum -= v.row(row).transpose();
        mask = gray;

        double plus = 0, minus = 0;
        for (int k = 0; k < n; ++k) {
            if (colsum(k) > 0) plus += colsum(k);
            else minus += colsum(k);
        }
        const bool positive_side = plus >= -minus;
        const double cand = std::max(plus, -minus) / (double(n) * n);
        if (cand > best.value) {
            best.value = cand;
            best.row_blocks.clear();
            best.col_blocks.clear();
            for (int r = 0; r < n; ++r)
                if (gray & (1u << r)) best.row_blocks.push_back(r);
            for (int k = 0; k < n; ++k)
                if (positive_side ? colsum(k) > 0 : colsum(k) < 0) best.col_blocks.push_back(k);
        }
    }
    return best;
}

double l2_operator_norm(const SignedSpectrum& s) {
    double m = 0;
    for (const auto& [j, e] : s.entries) m = std::max(m, std::abs(e.sigma));
    return m;
}

NormSandwich check_norm_sandwich(const StepGraphon& w) {
    NormSandwich out;
    out.cut = cut_norm_step(w).value;
    out.opnorm = l2_operator_norm(step_spectrum(w));
    const double slack = 1e-9;
    out.holds = (out.cut <= out.opnorm + slack) &&
                (out.opnorm <= std::sqrt(8.0 * out.cut) + slack);
    return out;
}

std::vector<ConvergenceRow> homomorphism_convergence_trace(const Graphon& w,
                                                           const std::vector<Motif>& motifs,
                                                           const std::vector<int>& n_grid,
                                                           int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("homomorphism_convergence_trace: trials >= 1");

    // Reference densities: exact spectral sum for cycles on step graphons,
    // Monte Carlo otherwise.
    auto is_cycle = [](const Motif& f) {
        if (f.n_prime == 2 && f.edges.size() == 1) return 2;
        if (f.n_prime >= 3 && static_cast<int>(f.edges.size()) == f.n_prime) {
            Motif c = Motif::cycle(f.n_prime);
            std::set<std::pair<int, int>> a, b;
            for (auto [i, j] : f.edges) a.insert(std::minmax(i, j));
            for (auto [i, j] : c.edges) b.insert(std::minmax(i, j));
            if (a == b) return f.n_prime;
        }
        return 0;
    };

    std::vector<double> t_ref(motifs.size());
    const auto* step = dynamic_cast<const StepGraphon*>(&w);
    for (size_t m = 0; m < motifs.size(); ++m) {
        const int k = is_cycle(motifs[m]);
        if (k >= 2 && step) {
            t_ref[m] = cycle_density_graphon(k, step_spectrum(*step));
        } else {
            t_ref[m] = hom_density_graphon_mc(motifs[m], w, 200000, rng_stream(seed, ~0ULL)).estimate;
        }
    }

    std::vector<ConvergenceRow> rows;
    for (size_t ni = 0; ni < n_grid.size(); ++ni) {
        std::vector<double> acc(motifs.size(), 0.0);
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t stream = std::uint64_t(ni) * std::uint64_t(trials) + t;
            auto [g, labels] = sample_w_random_graph(w, n_grid[ni], seed, stream);
            for (size_t m = 0; m < motifs.size(); ++m) {
                const int k = is_cycle(motifs[m]);
                const double t_g = (k >= 2) ? cycle_density_graph(k, g)
                                            : hom_density_graph(motifs[m], g);
                acc[m] += std::abs(t_g - t_ref[m]);
            }
        }
        for (size_t m = 0; m < motifs.size(); ++m)
            rows.push_back({n_grid[ni], static_cast<int>(m), acc[m] / trials, t_ref[m]});
    }
    return rows;
}

}  // namespace gspx
