#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gspx/graph.hpp"
#include "gspx/graphon.hpp"
#include "gspx/sampling.hpp"
#include "gspx/spectral.hpp"

// Experiment harnesses: GFT-convergence on soft geometric pollution networks,
// a direct spectral-convergence check against a high-resolution reference
// WFT, and GFT transferability on MovieLens user-similarity networks.

namespace gspx {

// Empirical quantiles with linear interpolation between order statistics.
std::vector<double> quantiles(std::vector<double> samples, const std::vector<double>& levels);

// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& a, const std::vector<double>& b);

// Soft geometric kernel exp(-beta*|u-v|) on normalized cross-wind positions.
AnalyticKernel pollution_graphon(double beta);

// Gaussian dispersion profile exp(-u^2/(2*sigma_y^2)), source at u = 0.
AnalyticSignal pollution_signal(double sigma_y);

// Normalized distance between descending-sorted coefficient magnitudes:
// || sort|a| - sort|b| ||_2 / || sort|a| ||_2. Invariant to index permutation
// and per-coefficient sign flips by construction.
double min_norm_gft_difference(const FourierCoefficients& a, const FourierCoefficients& b);

struct PollutionConfig {
    double beta = 3.0;
    double sigma_y = 0.3;
    std::vector<int> n_grid = {50, 100, 200, 400, 800};
    int trials = 50;
    std::uint64_t master_seed = 0;
};

struct QuantileRow {
    int n = 0;
    double q68 = 0;
    double q95 = 0;
    double q997 = 0;
};

struct PollutionResult {
    std::vector<QuantileRow> rows;
    // Raw per-trial differences, one vector per n (same order as rows).
    std::vector<std::vector<double>> samples;
};

// Per n and trial: two independent W-random graphs from the pollution kernel,
// pollution signals evaluated at the sampled labels, and the normalized
// sorted-GFT difference; reports 68/95/99.7% quantiles per n.
PollutionResult run_pollution_experiment(const PollutionConfig& cfg);

struct Theorem1Row {
    int n = 0;
    double median_error = 0;
    bool non_derogatory = true;  // reference-spectrum guard at the given tolerance
};

// Convergence of sorted |GFT|/sqrt(n) magnitudes toward the sorted reference
// WFT magnitudes restricted to |sigma| >= cutoff. The reference WFT is
// computed at resolution n_ref (must be >= 4 * max n).
std::vector<Theorem1Row> run_theorem1_check(const Graphon& w, const GraphonSignal& x,
                                            double cutoff, const std::vector<int>& n_grid,
                                            int trials, std::uint64_t seed, int n_ref);

struct TransferConfig {
    int movie_id = 0;  // 0-based internal id; Toy Story is id 0 in the standard file
    std::vector<int> n_grid = {50, 100, 200, 400};
    int trials = 10;
    std::uint64_t master_seed = 0;
    std::string imputation_policy = "user-mean";
};

struct TransferRow {
    int n = 0;
    double mean_rel_diff = 0;
    double std_rel_diff = 0;
};

// GFT transferability on user-similarity networks: compares the GFT of the
// reference rating signal restricted to n sampled users against the n
// largest-|sigma| coefficients of the full-network GFT.
std::vector<TransferRow> run_movielens_experiment(const TransferConfig& cfg,
                                                  const RatingTable& ratings);

// Reference signal for the transfer experiment: the ratings column of the
// configured movie, with missing entries filled per the imputation policy
// ("user-mean": the user's own mean rating).
GraphSignal movielens_reference_signal(const RatingTable& ratings, int movie_id,
                                       const std::string& policy);

}  // namespace gspx
