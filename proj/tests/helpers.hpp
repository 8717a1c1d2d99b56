#ifndef PCGEN_TESTS_HELPERS_HPP
#define PCGEN_TESTS_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "pcgen/enumerate.hpp"
#include "pcgen/generators.hpp"
#include "pcgen/matrix.hpp"

namespace testutil {

inline double rel_diff(double actual, double expected) {
    return std::abs(actual / expected - 1.0);
}

inline double max_rel_diff(const pcgen::PCMatrix& a, const pcgen::PCMatrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            worst = std::max(worst, rel_diff(a(i, j), b(i, j)));
        }
    }
    return worst;
}

inline pcgen::GeneratorSet make_set(int n, const std::vector<std::tuple<int, int, double>>& items) {
    pcgen::GeneratorSet b(n);
    for (const auto& [i, j, v] : items) b.add(i, j, v);
    return b;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Positive weights with ratios up to ~e^4.
inline pcgen::WeightVector random_weights(std::mt19937_64& rng, int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    for (auto& v : w) v = std::exp(uniform(rng, -2.0, 2.0));
    return pcgen::WeightVector(std::move(w));
}

/// Uniformly random labeled spanning tree of K_n via a random Pruefer
/// sequence (n >= 2).
inline pcgen::TreeEdgeSet random_tree(std::mt19937_64& rng, int n) {
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = uniform_int(rng, 0, n - 1);
    return pcgen::prufer_decode(seq, n);
}

/// Restrict a consistent matrix to the edges of a tree — the minimal
/// elicitation input that should reproduce the matrix.
inline pcgen::GeneratorSet restrict_to_tree(const pcgen::PCMatrix& m,
                                            const pcgen::TreeEdgeSet& tree) {
    pcgen::GeneratorSet b(m.order());
    for (const auto& [u, v] : tree.edges) b.add(u, v, m(u, v));
    return b;
}

/// Tree shape with random positive labels, as a generator set.
inline pcgen::GeneratorSet random_labeled_tree(std::mt19937_64& rng, int n) {
    const pcgen::TreeEdgeSet tree = random_tree(rng, n);
    pcgen::GeneratorSet b(n);
    for (const auto& [u, v] : tree.edges) b.add(u, v, std::exp(uniform(rng, -2.0, 2.0)));
    return b;
}

}  // namespace testutil

#endif  // PCGEN_TESTS_HELPERS_HPP
