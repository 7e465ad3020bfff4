#pragma once

#include <cstdint>
#include <utility>

#include "gspx/graph.hpp"
#include "gspx/graphon.hpp"

// Deterministic W-random sampling.
//
// All randomness comes from a fixed xoshiro256** generator seeded through a
// SplitMix64 finalizer, so results are bit-identical across platforms. The
// draw order is part of the contract: node labels first (ascending i), then
// edge coin flips over the upper triangle in lexicographic (i, j) order.

namespace gspx {

// SplitMix64 finalizer step (Steele, Lea, Flood 2014 constants).
std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent stream seed for a trial from the master seed;
// injective in trial_index for a fixed master seed.
std::uint64_t rng_stream(std::uint64_t master_seed, std::uint64_t trial_index);

// xoshiro256** (Blackman & Vigna), seeded via SplitMix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    // Uniform double in [0,1) with 53 random bits.
    double next_uniform();
    // Uniform integer in [0, bound) via rejection sampling (unbiased).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

struct SampleLabels {
    Eigen::VectorXd u;  // labels in [0,1]
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Draws an n-node W-random graph: labels u_i ~ U[0,1] i.i.d., then each edge
// (i, j), i < j, present with probability W(u_i, u_j). Requires a kernel with
// range inside [0,1]. Output is unweighted, simple and symmetric.
std::pair<Graph, SampleLabels> sample_w_random_graph(const Graphon& w, int n,
                                                     std::uint64_t seed, std::uint64_t stream);

// Evaluates a graphon signal at the labels shared with a sampled graph.
GraphSignal sample_graphon_signal(const GraphonSignal& x, const SampleLabels& labels);

}  // namespace gspx
