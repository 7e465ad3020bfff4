#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gspx/experiments.hpp"
#include "gspx/graph.hpp"
#include "gspx/graphon.hpp"
#include "gspx/homomorphism.hpp"
#include "gspx/sampling.hpp"
#include "gspx/spectral.hpp"

// Serialization: JSON for structured artifacts, CSV for tabular results, and
// MovieLens u.data ingestion. CSV numerics use 12 significant digits with C
// locale formatting and '\n' line endings, so outputs are byte-stable.

namespace gspx {

// 12-significant-digit decimal formatting, locale independent.
std::string fmt12(double v);

// Graph JSON: {"n": int, "edges": [[i, j, w], ...]} with 0-based indices.
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

// Sampled-graph dump including labels and seed provenance.
void save_sampled_graph(const Graph& g, const SampleLabels& labels, const std::string& path);

// Signal JSON: plain array of numbers.
void save_signal(const Eigen::VectorXd& values, const std::string& path);
Eigen::VectorXd load_signal(const std::string& path);

// StepGraphon JSON: {"N": int, "range": [lo, hi], "values": [[...], ...]}.
void save_step_graphon(const StepGraphon& w, const std::string& path);
StepGraphon load_step_graphon(const std::string& path);

// Motif JSON: {"n": int, "edges": [[i, j], ...]}.
void save_motif(const Motif& f, const std::string& path);
Motif load_motif(const std::string& path);

// Rows (j, sigma_j, coeff_j) sorted by descending |sigma| then by j.
struct CoeffTable {
    struct Row {
        int j;
        double sigma;
        double coeff;
    };
    std::string origin;  // "GFT" or "WFT"
    int size = 0;
    std::vector<Row> rows;

    static CoeffTable from(const SignedSpectrum& s, const FourierCoefficients& c);
};

void save_coefficients_json(const CoeffTable& t, const std::string& path);
CoeffTable load_coefficients_json(const std::string& path);
void write_coefficients_csv(const CoeffTable& t, std::ostream& out);

// MovieLens u.data: tab-separated "user<TAB>item<TAB>rating<TAB>timestamp",
// 1-based ids in the file, 0-based in the returned table.
RatingTable parse_movielens(const std::string& path);
void save_movielens(const RatingTable& r, const std::string& path);

void write_pollution_csv(const std::vector<QuantileRow>& rows, std::ostream& out);
void write_movielens_csv(const std::vector<TransferRow>& rows, std::ostream& out);
void write_theorem1_csv(const std::vector<Theorem1Row>& rows, std::ostream& out);

// Run manifest: configuration echo, master seed and library version.
void save_manifest(const std::string& command, const std::vector<std::pair<std::string, std::string>>& config,
                   std::uint64_t seed, const std::string& path);

}  // namespace gspx
