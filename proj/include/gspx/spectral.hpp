#pragma once

#include <Eigen/Dense>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gspx/graph.hpp"
#include "gspx/graphon.hpp"

// Spectral machinery: symmetric eigendecomposition with a canonical sign
// convention, the signed index ordering j in Z\{0} (positives descending from
// j=1, most negative at j=-1, zeros appended after the positives), GFT/iGFT,
// WFT/iWFT on step graphons, bandlimiting, and the graphon shift operator.

namespace gspx {

struct SpectrumEntry {
    double sigma;          // eigenvalue (operator eigenvalue for WFT spectra)
    Eigen::VectorXd vec;   // unit eigenvector; for a step spectrum of N blocks
                           // the eigenfunction value on block k is vec[k]*sqrt(N)
};

enum class SpectrumKind { Graph, Step };

struct SignedSpectrum {
    std::map<int, SpectrumEntry> entries;  // keyed by signed index j != 0
    SpectrumKind kind = SpectrumKind::Graph;
    int size = 0;  // n (graph) or N (step blocks)

    const SpectrumEntry& at(int j) const;
    std::vector<int> indices() const;  // ordering: j=1,2,... then j=-1,-2,...
    Eigen::VectorXd eigenvalues() const;
};

enum class CoeffOrigin { GFT, WFT };

struct FourierCoefficients {
    std::map<int, double> coeffs;  // keyed by signed index j
    CoeffOrigin origin = CoeffOrigin::GFT;
    int source_size = 0;

    double at(int j) const;  // 0 for indices outside the stored spectrum
    double l2_norm() const;
    // Coefficient magnitudes sorted descending.
    std::vector<double> sorted_magnitudes() const;
};

// Full dense eigendecomposition of a symmetric matrix. Eigenvectors are
// orthonormal and sign-normalized: the component of largest absolute value is
// positive, ties broken by lowest index. Near-degenerate groups (relative gap
// below 1e-12) are re-orthonormalized by modified Gram-Schmidt. Throws if the
// input is not symmetric within 1e-12 relative, or on solver failure.
std::vector<std::pair<double, Eigen::VectorXd>> eigendecompose_symmetric(const Eigen::MatrixXd& m);

// Assigns signed indices: strictly positive eigenvalues descending get
// j = 1, 2, ...; zeros follow on the positive side; strictly negative
// eigenvalues get j = -1 (most negative), -2, ... upward.
SignedSpectrum signed_index(const std::vector<std::pair<double, Eigen::VectorXd>>& pairs);

// Spectrum of a graph's shift operator under the signed index convention.
SignedSpectrum graph_spectrum(const Graph& g);

FourierCoefficients gft(const Graph& g, const GraphSignal& x);
FourierCoefficients gft(const SignedSpectrum& s, const GraphSignal& x);
GraphSignal igft(const Graph& g, const FourierCoefficients& c);
GraphSignal igft(const SignedSpectrum& s, const FourierCoefficients& c);

// WFT of a step graphon signal: operator eigenvalues eig(values)/N, step
// eigenfunctions v_j*sqrt(N), coefficients <X, phi_j> = (v_j . x)/sqrt(N).
std::pair<SignedSpectrum, FourierCoefficients> wft_step(const StepGraphon& w, const StepSignal& x);

// Numerical WFT of an analytic pair via midpoint discretization at resolution
// N; kernel-approximation error is O(1/N) for Lipschitz kernels.
std::pair<SignedSpectrum, FourierCoefficients> wft_numeric(const Graphon& w,
                                                           const GraphonSignal& x, int N);

// Eigendecomposition of a step graphon's integral operator (no signal).
SignedSpectrum step_spectrum(const StepGraphon& w);

StepSignal iwft(const SignedSpectrum& s, const FourierCoefficients& c);

FourierCoefficients bandlimit(const FourierCoefficients& c, const SignedSpectrum& s, double cutoff);
bool is_bandlimited(const FourierCoefficients& c, const SignedSpectrum& s, double cutoff,
                    double tol = 1e-12);

// (T_W X) evaluated on the uniform N-partition; exact for step inputs whose
// block count divides N.
StepSignal graphon_shift(const Graphon& w, const GraphonSignal& x, int N);

// True iff all pairwise gaps among nonzero eigenvalues exceed tol.
bool is_non_derogatory(const SignedSpectrum& s, double tol);

// Operator-norm distance between orthogonal projections onto
// span{phi_j : j in indices} for two step spectra on commensurable partitions.
double spectral_projection_distance(const SignedSpectrum& a, const SignedSpectrum& b,
                                    const std::set<int>& indices);

}  // namespace gspx
