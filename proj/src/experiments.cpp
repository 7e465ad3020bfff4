#include "gspx/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gspx {

std::vector<double> quantiles(std::vector<double> samples, const std::vector<double>& levels) {
    if (samples.empty()) throw std::invalid_argument("quantiles: empty sample set");
    std::sort(samples.begin(), samples.end());
    std::vector<double> out;
    out.reserve(levels.size());
    for (double q : levels) {
        if (!(q > 0 && q < 1)) throw std::invalid_argument("quantiles: level outside (0,1)");
        const double pos = q * (samples.size() - 1);
        const auto lo = static_cast<size_t>(pos);
        const auto hi = std::min(lo + 1, samples.size() - 1);
        const double frac = pos - double(lo);
        out.push_back(samples[lo] + frac * (samples[hi] - samples[lo]));
    }
    return out;
}

namespace {
std::vector<double> ranks(const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t(0));
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> r(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double avg = 0.5 * (double(i) + double(j)) + 1.0;
        for (size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}
}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("spearman: need two equally sized lists, size >= 2");
    const auto ra = ranks(a), rb = ranks(b);
    const double n = double(a.size());
    double ma = 0, mb = 0;
    for (size_t i = 0; i < a.size(); ++i) { ma += ra[i]; mb += rb[i]; }
    ma /= n;
    mb /= n;
    double sab = 0, saa = 0, sbb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa == 0 || sbb == 0) throw std::invalid_argument("spearman: constant input");
    return sab / std::sqrt(saa * sbb);
}

AnalyticKernel pollution_graphon(double beta) { return AnalyticKernel::soft_geometric(beta); }

AnalyticSignal pollution_signal(double sigma_y) {
    if (!(sigma_y > 0)) throw std::invalid_argument("pollution_signal: sigma_y must be > 0");
    const double inv = 1.0 / (2.0 * sigma_y * sigma_y);
    return AnalyticSignal("pollution", [inv](double u) { return std::exp(-u * u * inv); }, 1.0);
}

double min_norm_gft_difference(const FourierCoefficients& a, const FourierCoefficients& b) {
    const auto ma = a.sorted_magnitudes();
    const auto mb = b.sorted_magnitudes();
    if (ma.size() != mb.size())
        throw std::invalid_argument("min_norm_gft_difference: coefficient count mismatch");
    double diff_sq = 0, ref_sq = 0;
    for (size_t i = 0; i < ma.size(); ++i) {
        diff_sq += (ma[i] - mb[i]) * (ma[i] - mb[i]);
        ref_sq += ma[i] * ma[i];
    }
    if (ref_sq == 0) throw std::invalid_argument("min_norm_gft_difference: zero reference norm");
    return std::sqrt(diff_sq / ref_sq);
}

PollutionResult run_pollution_experiment(const PollutionConfig& cfg) {
    if (cfg.trials < 1 || cfg.n_grid.empty())
        throw std::invalid_argument("run_pollution_experiment: invalid config");
    const AnalyticKernel w = pollution_graphon(cfg.beta);
    const AnalyticSignal sig = pollution_signal(cfg.sigma_y);

    PollutionResult result;
    for (size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        const int n = cfg.n_grid[ni];
        std::vector<double> diffs;
        diffs.reserve(cfg.trials);
        for (int t = 0; t < cfg.trials; ++t) {
            const std::uint64_t base = 2 * (std::uint64_t(ni) * cfg.trials + t);
            auto [g1, u1] = sample_w_random_graph(w, n, cfg.master_seed, base);
            auto [g2, u2] = sample_w_random_graph(w, n, cfg.master_seed, base + 1);
            const FourierCoefficients c1 = gft(g1, sample_graphon_signal(sig, u1));
            const FourierCoefficients c2 = gft(g2, sample_graphon_signal(sig, u2));
            diffs.push_back(min_norm_gft_difference(c1, c2));
        }
        const auto q = quantiles(diffs, {0.68, 0.95, 0.997});
        result.rows.push_back({n, q[0], q[1], q[2]});
        result.samples.push_back(std::move(diffs));
    }
    return result;
}

std::vector<Theorem1Row> run_theorem1_check(const Graphon& w, const GraphonSignal& x,
                                            double cutoff, const std::vector<int>& n_grid,
                                            int trials, std::uint64_t seed, int n_ref) {
    if (!(cutoff > 0 && cutoff < 1))
        throw std::invalid_argument("run_theorem1_check: cutoff must lie in (0,1)");
    if (n_grid.empty() || trials < 1)
        throw std::invalid_argument("run_theorem1_check: invalid grid/trials");
    const int n_max = *std::max_element(n_grid.begin(), n_grid.end());
    if (n_ref < 4 * n_max)
        throw std::invalid_argument("run_theorem1_check: n_ref must be >= 4 * max(n_grid)");

    auto [s_ref, c_ref] = wft_numeric(w, x, n_ref);

    // Reference magnitudes above the band cutoff, plus the distinctness guard
    // on those eigenvalues.
    std::vector<double> band_sigmas, ref_mags;
    for (const auto& [j, e] : s_ref.entries)
        if (std::abs(e.sigma) >= cutoff) {
            band_sigmas.push_back(e.sigma);
            ref_mags.push_back(std::abs(c_ref.at(j)));
        }
    if (ref_mags.empty())
        throw std::invalid_argument("run_theorem1_check: no reference eigenvalue above cutoff");
    std::sort(ref_mags.begin(), ref_mags.end(), std::greater<double>());
    std::sort(band_sigmas.begin(), band_sigmas.end());
    bool distinct = true;
    for (size_t i = 1; i < band_sigmas.size(); ++i)
        if (band_sigmas[i] - band_sigmas[i - 1] <= 1e-9) distinct = false;

    const size_t m = ref_mags.size();
    double ref_norm = 0;
    for (double v : ref_mags) ref_norm += v * v;
    ref_norm = std::sqrt(ref_norm);

    std::vector<Theorem1Row> rows;
    for (size_t ni = 0; ni < n_grid.size(); ++ni) {
        const int n = n_grid[ni];
        std::vector<double> errors;
        errors.reserve(trials);
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t stream = std::uint64_t(ni) * trials + t;
            auto [g, labels] = sample_w_random_graph(w, n, seed, stream);
            const FourierCoefficients c = gft(g, sample_graphon_signal(x, labels));
            auto mags = c.sorted_magnitudes();
            const double inv_sqrt_n = 1.0 / std::sqrt(double(n));
            double err_sq = 0;
            for (size_t i = 0; i < m; ++i) {
                const double mi = i < mags.size() ? mags[i] * inv_sqrt_n : 0.0;
                err_sq += (mi - ref_mags[i]) * (mi - ref_mags[i]);
            }
            errors.push_back(std::sqrt(err_sq) / ref_norm);
        }
        rows.push_back({n, quantiles(errors, {0.5})[0], distinct});
    }
    return rows;
}

GraphSignal movielens_reference_signal(const RatingTable& ratings, int movie_id,
                                       const std::string& policy) {
    if (policy != "user-mean")
        throw std::invalid_argument("movielens_reference_signal: unknown imputation policy '" +
                                    policy + "'");
    if (movie_id < 0 || movie_id >= ratings.num_items)
        throw std::invalid_argument("movielens_reference_signal: movie id out of range");
    Eigen::VectorXd x(ratings.num_users);
    std::vector<double> sum(ratings.num_users, 0.0);
    std::vector<int> count(ratings.num_users, 0);
    std::vector<bool> rated(ratings.num_users, false);
    for (const auto& e : ratings.entries) {
        sum[e.user] += e.rating;
        ++count[e.user];
        if (e.item == movie_id) {
            x(e.user) = e.rating;
            rated[e.user] = true;
        }
    }
    for (int u = 0; u < ratings.num_users; ++u) {
        if (rated[u]) continue;
        if (count[u] == 0)
            throw std::invalid_argument("movielens_reference_signal: user without any rating");
        x(u) = sum[u] / count[u];
    }
    return GraphSignal(std::move(x));
}

std::vector<TransferRow> run_movielens_experiment(const TransferConfig& cfg,
                                                  const RatingTable& ratings) {
    if (cfg.n_grid.empty() || cfg.trials < 1)
        throw std::invalid_argument("run_movielens_experiment: invalid config");
    for (int n : cfg.n_grid)
        if (n < 2 || n > ratings.num_users)
            throw std::invalid_argument("run_movielens_experiment: n outside [2, user count]");

    std::vector<int> all_users(ratings.num_users);
    std::iota(all_users.begin(), all_users.end(), 0);
    const Graph full = pearson_similarity_graph(ratings, all_users);
    const GraphSignal x = movielens_reference_signal(ratings, cfg.movie_id,
                                                     cfg.imputation_policy);
    const SignedSpectrum full_spectrum = graph_spectrum(full);
    const FourierCoefficients full_coeffs = gft(full_spectrum, x);

    // Coefficient magnitudes ordered by descending |sigma| of the full graph.
    std::vector<std::pair<double, double>> by_sigma;  // (|sigma|, |coeff|)
    for (const auto& [j, e] : full_spectrum.entries)
        by_sigma.emplace_back(std::abs(e.sigma), std::abs(full_coeffs.at(j)));
    std::sort(by_sigma.begin(), by_sigma.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<TransferRow> rows;
    for (size_t ni = 0; ni < cfg.n_grid.size(); ++ni) {
        const int n = cfg.n_grid[ni];

        std::vector<double> top(n);
        for (int i = 0; i < n; ++i) top[i] = by_sigma[i].second;
        std::sort(top.begin(), top.end(), std::greater<double>());
        double top_norm = 0;
        for (double v : top) top_norm += v * v;
        top_norm = std::sqrt(top_norm);
        if (top_norm == 0)
            throw std::invalid_argument("run_movielens_experiment: zero reference coefficients");

        std::vector<double> diffs;
        diffs.reserve(cfg.trials);
        for (int t = 0; t < cfg.trials; ++t) {
            Rng rng(rng_stream(cfg.master_seed, std::uint64_t(ni) * cfg.trials + t));
            // Partial Fisher-Yates draw of n users without replacement.
            std::vector<int> pool = all_users;
            std::vector<int> chosen(n);
            for (int i = 0; i < n; ++i) {
                const auto r = i + rng.next_below(pool.size() - i);
                std::swap(pool[i], pool[r]);
                chosen[i] = pool[i];
            }
            std::sort(chosen.begin(), chosen.end());

            Eigen::MatrixXd sub(n, n);
            Eigen::VectorXd xs(n);
            for (int i = 0; i < n; ++i) {
                xs(i) = x.values(chosen[i]);
                for (int j = 0; j < n; ++j) sub(i, j) = full.weights(chosen[i], chosen[j]);
            }
            const FourierCoefficients cn = gft(Graph(n, std::move(sub)), GraphSignal(std::move(xs)));
            const auto mags = cn.sorted_magnitudes();
            double err_sq = 0;
            for (int i = 0; i < n; ++i) err_sq += (mags[i] - top[i]) * (mags[i] - top[i]);
            diffs.push_back(std::sqrt(err_sq) / top_norm);
        }
        double mean = 0;
        for (double d : diffs) mean += d;
        mean /= diffs.size();
        double var = 0;
        for (double d : diffs) var += (d - mean) * (d - mean);
        const double stddev = diffs.size() > 1 ? std::sqrt(var / (diffs.size() - 1)) : 0.0;
        rows.push_back({n, mean, stddev});
    }
    return rows;
}

}  // namespace gspx
