#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gspx/graph.hpp"
#include "gspx/graphon.hpp"
#include "gspx/spectral.hpp"

// Homomorphism densities into graphs and graphons, the cycle-density spectral
// shortcut, exact cut norm on step graphons, and the cut-norm / operator-norm
// sandwich check.

namespace gspx {

struct Motif {
    int n_prime = 0;
    std::vector<std::pair<int, int>> edges;

    Motif(int n, std::vector<std::pair<int, int>> e);

    static Motif single_node();
    static Motif edge();
    static Motif triangle();
    static Motif cycle(int k);        // C_k, k >= 3; cycle(2) is the doubled edge C_2
    static Motif named(const std::string& name);  // "edge", "triangle", "C4", "C5"
};

// Sum over all n^{n'} maps of the product of edge weights (Eq.-1-style count).
// Guarded: n' <= 6 and n^{n'} <= 1e8; larger inputs throw with a hint to use
// the cycle shortcut.
double hom_count(const Motif& f, const Graph& g);

// hom_count / n^{n'}.
double hom_density_graph(const Motif& f, const Graph& g);

struct McEstimate {
    double estimate = 0;
    double stderr_ = 0;
    bool signed_kernel = false;  // flagged: density semantics assume range [0,1]
};

// Monte-Carlo homomorphism density of f into w over `samples` i.i.d. label
// draws; deterministic under a fixed seed.
McEstimate hom_density_graphon_mc(const Motif& f, const Graphon& w, std::int64_t samples,
                                  std::uint64_t seed);

// trace(S^k), computed by repeated matrix multiplication so the count stays
// exact on integer-weighted graphs; equals hom_count(C_k, g).
double cycle_hom_count(int k, const Graph& g);

// t(C_k, G) = trace(S^k) / n^k.
double cycle_density_graph(int k, const Graph& g);

// t(C_k, W) = sum_j sigma_j^k over the available spectrum.
double cycle_density_graphon(int k, const SignedSpectrum& s);

struct CutNorm {
    double value = 0;
    std::vector<int> row_blocks;  // argmax S
    std::vector<int> col_blocks;  // argmax T
};

// Exact cut norm of a step graphon: the supremum over measurable S, T is
// attained on unions of blocks, so a 2^N enumeration of S with a sign-greedy
// choice of T (for both signs) is exact. Guarded at N <= 24.
CutNorm cut_norm_step(const StepGraphon& w);

// max_j |sigma_j|.
double l2_operator_norm(const SignedSpectrum& s);

struct NormSandwich {
    double cut = 0;
    double opnorm = 0;
    bool holds = false;  // cut <= opnorm <= sqrt(8*cut), with 1e-9 slack
};

NormSandwich check_norm_sandwich(const StepGraphon& w);

struct ConvergenceRow {
    int n = 0;
    int motif_index = 0;
    double mean_abs_diff = 0;  // mean |t(F, G_n) - t(F, W)| over trials
    double t_reference = 0;
};

// Empirical homomorphism-density convergence of W-random graphs: samples
// `trials` graphs per n and reports the mean absolute density gap per motif.
// The reference t(F, W) uses the cycle shortcut on step graphons when F is a
// cycle, Monte Carlo otherwise.
std::vector<ConvergenceRow> homomorphism_convergence_trace(const Graphon& w,
                                                           const std::vector<Motif>& motifs,
                                                           const std::vector<int>& n_grid,
                                                           int trials, std::uint64_t seed);

}  // namespace gspx
