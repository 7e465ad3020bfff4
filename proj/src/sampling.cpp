#include "gspx/sampling.hpp"

#include <stdexcept>

namespace gspx {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rng_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
    // Golden-ratio spacing of the trial index before the finalizer keeps the
    // map injective in trial_index and decorrelates neighboring trials.
    std::uint64_t state = master_seed ^ (0x9E3779B97F4A7C15ULL * (trial_index + 1));
    return splitmix64(state);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::next_uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

std::pair<Graph, SampleLabels> sample_w_random_graph(const Graphon& w, int n,
                                                     std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("sample_w_random_graph: n must be >= 1");
    if (!w.nonnegative_range() || w.range_hi() > 1.0)
        throw std::invalid_argument("sample_w_random_graph: kernel range must lie in [0,1]");

    Rng rng(rng_stream(seed, stream));
    SampleLabels labels;
    labels.seed = seed;
    labels.stream = stream;
    labels.u.resize(n);
    for (int i = 0; i < n; ++i) labels.u(i) = rng.next_uniform();

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double p = w(labels.u(i), labels.u(j));
            if (rng.next_uniform() < p) {
                a(i, j) = 1.0;
                a(j, i) = 1.0;
            }
        }
    return {Graph(n, std::move(a)), std::move(labels)};
}

GraphSignal sample_graphon_signal(const GraphonSignal& x, const SampleLabels& labels) {
    Eigen::VectorXd v(labels.u.size());
    for (Eigen::Index i = 0; i < labels.u.size(); ++i) v(i) = x(labels.u(i));
    return GraphSignal(std::move(v));
}

}  // namespace gspx
