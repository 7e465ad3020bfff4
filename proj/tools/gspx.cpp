// gspx command-line tool: sampling, transforms, densities, norms and the
// experiment harnesses, all reading/writing the JSON/CSV formats of gspx::io.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gspx/experiments.hpp"
#include "gspx/homomorphism.hpp"
#include "gspx/io.hpp"
#include "gspx/sampling.hpp"
#include "gspx/spectral.hpp"

using namespace gspx;

namespace {

// Graphon specs: "constant:p", "product", "soft-geometric:beta", or a path
// to a step-graphon JSON file.
std::unique_ptr<Graphon> parse_graphon(const std::string& spec) {
    if (spec == "product") return std::make_unique<AnalyticKernel>(AnalyticKernel::product());
    if (spec.rfind("constant:", 0) == 0)
        return std::make_unique<AnalyticKernel>(AnalyticKernel::constant(std::stod(spec.substr(9))));
    if (spec.rfind("soft-geometric:", 0) == 0)
        return std::make_unique<AnalyticKernel>(
            AnalyticKernel::soft_geometric(std::stod(spec.substr(15))));
    if (std::filesystem::exists(spec))
        return std::make_unique<StepGraphon>(load_step_graphon(spec));
    throw CLI::ValidationError("--graphon",
                               "expected constant:p, product, soft-geometric:beta or a step-graphon "
                               "JSON file, got '" + spec + "'");
}

// Signal specs: "constant:c", "identity", "pollution:sigma_y", or a path to a
// JSON array (step signal).
std::unique_ptr<GraphonSignal> parse_graphon_signal(const std::string& spec) {
    if (spec == "identity") return std::make_unique<AnalyticSignal>(AnalyticSignal::identity());
    if (spec.rfind("constant:", 0) == 0)
        return std::make_unique<AnalyticSignal>(AnalyticSignal::constant(std::stod(spec.substr(9))));
    if (spec.rfind("pollution:", 0) == 0)
        return std::make_unique<AnalyticSignal>(pollution_signal(std::stod(spec.substr(10))));
    if (std::filesystem::exists(spec))
        return std::make_unique<StepSignal>(StepSignal(load_signal(spec)));
    throw CLI::ValidationError("--signal",
                               "expected constant:c, identity, pollution:sigma_y or a signal JSON "
                               "file, got '" + spec + "'");
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        out << text;
    }
}

std::string coeff_text(const CoeffTable& t, const std::string& format) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : t.rows) rows.push_back({r.j, r.sigma, r.coeff});
        return nlohmann::json{{"origin", t.origin}, {"size", t.size}, {"rows", rows}}.dump(2) +
               "\n";
    }
    std::ostringstream ss;
    write_coefficients_csv(t, ss);
    return ss.str();
}

// Fills option values from a JSON config file for flags not given on the
// command line.
struct ConfigFile {
    nlohmann::json j = nlohmann::json::object();

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        in >> j;
    }
    template <typename T>
    void fill(const CLI::App& app, const std::string& flag, const std::string& key, T& value) const {
        const CLI::Option* opt = app.get_option(flag);
        if (opt->count() == 0 && j.contains(key)) value = j.at(key).get<T>();
    }
};

std::vector<int> parse_grid(const std::string& csv) {
    std::vector<int> grid;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) grid.push_back(std::stoi(tok));
    if (grid.empty()) throw std::runtime_error("empty n-grid");
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphon signal processing toolkit"};
    app.require_subcommand(1);

    std::string output, format = "csv", config_path;
    std::uint64_t seed = 0;
    app.add_option("--output", output, "output file (default: stdout)")->capture_default_str();
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "64-bit master seed")->capture_default_str();
    app.add_option("--config", config_path, "JSON config file supplying defaults");
    // Let global flags appear after the subcommand name.
    app.fallthrough();

    // ---- sample-graph ----
    auto* sample_cmd = app.add_subcommand("sample-graph", "draw a W-random graph");
    std::string sg_graphon = "constant:0.5";
    int sg_n = 50;
    std::uint64_t sg_stream = 0;
    sample_cmd->add_option("--graphon", sg_graphon, "kernel spec")->capture_default_str();
    sample_cmd->add_option("--n", sg_n, "node count")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--stream", sg_stream, "stream index")->capture_default_str();

    // ---- gft ----
    auto* gft_cmd = app.add_subcommand("gft", "graph Fourier transform of a signal file");
    std::string gft_graph, gft_signal;
    gft_cmd->add_option("--graph", gft_graph, "graph JSON file")->required();
    gft_cmd->add_option("--signal", gft_signal, "signal JSON file")->required();

    // ---- wft ----
    auto* wft_cmd = app.add_subcommand("wft", "graphon Fourier transform");
    std::string wft_graphon = "product", wft_signal = "identity";
    int wft_resolution = 500;
    wft_cmd->add_option("--graphon", wft_graphon, "kernel spec")->capture_default_str();
    wft_cmd->add_option("--signal", wft_signal, "signal spec")->capture_default_str();
    wft_cmd->add_option("--resolution", wft_resolution, "discretization resolution")
        ->check(CLI::PositiveNumber);

    // ---- hom-density ----
    auto* hom_cmd = app.add_subcommand("hom-density", "homomorphism density of a motif");
    std::string hom_motif = "edge", hom_graph, hom_graphon;
    std::int64_t hom_samples = 100000;
    hom_cmd->add_option("--motif", hom_motif, "edge|triangle|C4|C5 or a motif JSON file");
    hom_cmd->add_option("--graph", hom_graph, "graph JSON file (exact enumeration)");
    hom_cmd->add_option("--graphon", hom_graphon, "kernel spec (Monte Carlo)");
    hom_cmd->add_option("--samples", hom_samples, "Monte Carlo sample count");

    // ---- cycle-density ----
    auto* cyc_cmd = app.add_subcommand("cycle-density", "k-cycle density via the spectrum");
    int cyc_k = 3;
    std::string cyc_graph, cyc_graphon;
    cyc_cmd->add_option("--k", cyc_k, "cycle length >= 2");
    cyc_cmd->add_option("--graph", cyc_graph, "graph JSON file");
    cyc_cmd->add_option("--graphon", cyc_graphon, "kernel spec");
    int cyc_resolution = 500;
    cyc_cmd->add_option("--resolution", cyc_resolution, "resolution for analytic kernels");

    // ---- cut-norm ----
    auto* cut_cmd = app.add_subcommand("cut-norm", "exact cut norm of a step graphon");
    std::string cut_graphon;
    cut_cmd->add_option("--graphon", cut_graphon, "step-graphon JSON file")->required();

    // ---- norm-sandwich ----
    auto* sand_cmd = app.add_subcommand("norm-sandwich", "cut-norm / operator-norm bounds");
    std::string sand_graphon;
    sand_cmd->add_option("--graphon", sand_graphon, "step-graphon JSON file")->required();

    // ---- experiment ----
    auto* exp_cmd = app.add_subcommand("experiment", "experiment harnesses");
    exp_cmd->require_subcommand(1);

    auto* poll_cmd = exp_cmd->add_subcommand("pollution", "GFT convergence on pollution networks");
    double poll_beta = 3.0, poll_sigma = 0.3;
    std::string poll_grid = "50,100,200,400,800";
    int poll_trials = 50;
    poll_cmd->add_option("--beta", poll_beta, "kernel decay rate")->capture_default_str();
    poll_cmd->add_option("--sigma-y", poll_sigma, "cross-wind mixing")->capture_default_str();
    poll_cmd->add_option("--n-grid", poll_grid, "comma-separated sizes")->capture_default_str();
    poll_cmd->add_option("--trials", poll_trials, "trials per size")->capture_default_str();

    auto* movie_cmd = exp_cmd->add_subcommand("movielens", "GFT transferability on user networks");
    std::string movie_data = "data/ml-100k/u.data", movie_grid = "50,100,200,400";
    int movie_id = 1, movie_trials = 10;
    std::string movie_policy = "user-mean";
    movie_cmd->add_option("--data", movie_data, "MovieLens u.data path")->capture_default_str();
    movie_cmd->add_option("--movie-id", movie_id, "1-based movie id")->capture_default_str();
    movie_cmd->add_option("--n-grid", movie_grid, "comma-separated sizes")->capture_default_str();
    movie_cmd->add_option("--trials", movie_trials, "trials per size")->capture_default_str();
    movie_cmd->add_option("--imputation", movie_policy, "imputation policy")->capture_default_str();

    // ---- check theorem1 ----
    auto* check_cmd = app.add_subcommand("check", "convergence checks");
    check_cmd->require_subcommand(1);
    auto* thm_cmd = check_cmd->add_subcommand("theorem1", "GFT-to-WFT convergence check");
    double thm_beta = 3.0, thm_sigma = 0.3, thm_cutoff = 0.05;
    std::string thm_grid = "50,100,200,400,800";
    int thm_trials = 20, thm_nref = 4000;
    thm_cmd->add_option("--beta", thm_beta, "kernel decay rate")->capture_default_str();
    thm_cmd->add_option("--sigma-y", thm_sigma, "cross-wind mixing")->capture_default_str();
    thm_cmd->add_option("--cutoff", thm_cutoff, "band cutoff c")->capture_default_str();
    thm_cmd->add_option("--n-grid", thm_grid, "comma-separated sizes")->capture_default_str();
    thm_cmd->add_option("--trials", thm_trials, "trials per size")->capture_default_str();
    thm_cmd->add_option("--n-ref", thm_nref, "reference WFT resolution")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        ConfigFile cfg;
        if (!config_path.empty()) cfg.load(config_path);
        cfg.fill(app, "--seed", "seed", seed);
        cfg.fill(app, "--output", "output", output);
        cfg.fill(app, "--format", "format", format);

        if (*sample_cmd) {
            cfg.fill(*sample_cmd, "--graphon", "graphon", sg_graphon);
            cfg.fill(*sample_cmd, "--n", "n", sg_n);
            cfg.fill(*sample_cmd, "--stream", "stream", sg_stream);
            auto w = parse_graphon(sg_graphon);
            auto [g, labels] = sample_w_random_graph(*w, sg_n, seed, sg_stream);
            if (output.empty()) throw std::runtime_error("sample-graph requires --output");
            save_sampled_graph(g, labels, output);
        } else if (*gft_cmd) {
            Graph g = load_graph(gft_graph);
            GraphSignal x(load_signal(gft_signal));
            SignedSpectrum s = graph_spectrum(g);
            emit(coeff_text(CoeffTable::from(s, gft(s, x)), format), output);
        } else if (*wft_cmd) {
            cfg.fill(*wft_cmd, "--resolution", "resolution", wft_resolution);
            auto w = parse_graphon(wft_graphon);
            auto x = parse_graphon_signal(wft_signal);
            auto [s, c] = wft_numeric(*w, *x, wft_resolution);
            emit(coeff_text(CoeffTable::from(s, c), format), output);
        } else if (*hom_cmd) {
            Motif f = std::filesystem::exists(hom_motif) ? load_motif(hom_motif)
                                                         : Motif::named(hom_motif);
            if (!hom_graph.empty()) {
                emit(fmt12(hom_density_graph(f, load_graph(hom_graph))) + "\n", output);
            } else if (!hom_graphon.empty()) {
                auto w = parse_graphon(hom_graphon);
                McEstimate e = hom_density_graphon_mc(f, *w, hom_samples, seed);
                emit(fmt12(e.estimate) + " +- " + fmt12(e.stderr_) + "\n", output);
            } else {
                throw CLI::ValidationError("hom-density", "one of --graph or --graphon required");
            }
        } else if (*cyc_cmd) {
            if (!cyc_graph.empty()) {
                emit(fmt12(cycle_density_graph(cyc_k, load_graph(cyc_graph))) + "\n", output);
            } else if (!cyc_graphon.empty()) {
                auto w = parse_graphon(cyc_graphon);
                const auto* step = dynamic_cast<const StepGraphon*>(w.get());
                SignedSpectrum s =
                    step ? step_spectrum(*step) : step_spectrum(discretize(*w, cyc_resolution));
                emit(fmt12(cycle_density_graphon(cyc_k, s)) + "\n", output);
            } else {
                throw CLI::ValidationError("cycle-density", "one of --graph or --graphon required");
            }
        } else if (*cut_cmd) {
            StepGraphon w = load_step_graphon(cut_graphon);
            CutNorm c = cut_norm_step(w);
            if (format == "json") {
                nlohmann::json j{{"value", c.value},
                                 {"row_blocks", c.row_blocks},
                                 {"col_blocks", c.col_blocks}};
                emit(j.dump(2) + "\n", output);
            } else {
                emit(fmt12(c.value) + "\n", output);
            }
        } else if (*sand_cmd) {
            NormSandwich s = check_norm_sandwich(load_step_graphon(sand_graphon));
            emit("cut=" + fmt12(s.cut) + " opnorm=" + fmt12(s.opnorm) +
                     " holds=" + (s.holds ? "1" : "0") + "\n",
                 output);
        } else if (*poll_cmd) {
            cfg.fill(*poll_cmd, "--beta", "beta", poll_beta);
            cfg.fill(*poll_cmd, "--sigma-y", "sigma_y", poll_sigma);
            cfg.fill(*poll_cmd, "--n-grid", "n_grid", poll_grid);
            cfg.fill(*poll_cmd, "--trials", "trials", poll_trials);
            PollutionConfig pc{poll_beta, poll_sigma, parse_grid(poll_grid), poll_trials, seed};
            PollutionResult r = run_pollution_experiment(pc);
            std::ostringstream ss;
            write_pollution_csv(r.rows, ss);
            emit(ss.str(), output);
            if (!output.empty())
                save_manifest("experiment pollution",
                              {{"beta", fmt12(poll_beta)},
                               {"sigma_y", fmt12(poll_sigma)},
                               {"n_grid", poll_grid},
                               {"trials", std::to_string(poll_trials)}},
                              seed, output + ".manifest.json");
        } else if (*movie_cmd) {
            cfg.fill(*movie_cmd, "--data", "data", movie_data);
            cfg.fill(*movie_cmd, "--movie-id", "movie_id", movie_id);
            cfg.fill(*movie_cmd, "--n-grid", "n_grid", movie_grid);
            cfg.fill(*movie_cmd, "--trials", "trials", movie_trials);
            cfg.fill(*movie_cmd, "--imputation", "imputation", movie_policy);
            RatingTable r = parse_movielens(movie_data);
            TransferConfig tc{movie_id - 1, parse_grid(movie_grid), movie_trials, seed,
                              movie_policy};
            auto rows = run_movielens_experiment(tc, r);
            std::ostringstream ss;
            write_movielens_csv(rows, ss);
            emit(ss.str(), output);
            if (!output.empty())
                save_manifest("experiment movielens",
                              {{"data", movie_data},
                               {"movie_id", std::to_string(movie_id)},
                               {"n_grid", movie_grid},
                               {"trials", std::to_string(movie_trials)},
                               {"imputation", movie_policy}},
                              seed, output + ".manifest.json");
        } else if (*thm_cmd) {
            cfg.fill(*thm_cmd, "--beta", "beta", thm_beta);
            cfg.fill(*thm_cmd, "--sigma-y", "sigma_y", thm_sigma);
            cfg.fill(*thm_cmd, "--cutoff", "cutoff", thm_cutoff);
            cfg.fill(*thm_cmd, "--n-grid", "n_grid", thm_grid);
            cfg.fill(*thm_cmd, "--trials", "trials", thm_trials);
            cfg.fill(*thm_cmd, "--n-ref", "n_ref", thm_nref);
            AnalyticKernel w = pollution_graphon(thm_beta);
            AnalyticSignal x = pollution_signal(thm_sigma);
            auto rows =
                run_theorem1_check(w, x, thm_cutoff, parse_grid(thm_grid), thm_trials, seed,
                                   thm_nref);
            if (!rows.empty() && !rows.front().non_derogatory)
                std::cerr << "warning: reference eigenvalues above the cutoff are not all "
                             "distinct at resolution " << thm_nref << "\n";
            std::ostringstream ss;
            write_theorem1_csv(rows, ss);
            emit(ss.str(), output);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
