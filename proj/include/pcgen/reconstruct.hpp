#ifndef PCGEN_RECONSTRUCT_HPP
#define PCGEN_RECONSTRUCT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "pcgen/generators.hpp"
#include "pcgen/matrix.hpp"

namespace pcgen {

/// The n-1 superdiagonal entries a(k,k+1), k = 0..n-2 — the chain of
/// successive ratios w_0/w_1, w_1/w_2, ... from which the whole matrix
/// follows by telescoping products.
class PrincipalGenerators {
public:
    PrincipalGenerators(int n, std::vector<double> values);  // values.size() == n-1, positive
    static PrincipalGenerators ones(int n);

    int order() const noexcept { return n_; }
    const std::vector<double>& values() const noexcept { return v_; }
    double operator[](int k) const { return v_[static_cast<std::size_t>(k)]; }

private:
    int n_;
    std::vector<double> v_;
};

/// Thrown when the supplied entries leave part of the matrix undetermined:
/// their graph does not reach every vertex. what() carries the phrase
/// "B does not generate A" plus the unreached vertices as one-based labels
/// (matching the input file format); unreached() holds the zero-based ids.
class NotGeneratingError : public std::runtime_error {
public:
    explicit NotGeneratingError(std::vector<int> unreached);
    const std::vector<int>& unreached() const noexcept { return unreached_; }

private:
    std::vector<int> unreached_;
};

/// m(i,j) for i < j is the product of the generators k = i..j-1; unit
/// diagonal, lower triangle by reciprocity. Materialized with prefix sums
/// of logs, so each entry costs O(1) and long products don't drift.
PCMatrix reconstruct_from_pgs(const PrincipalGenerators& pgs);

/// Recover the principal generators from any n-1 entries whose graph is a
/// tree. The defining relations log a(i,j) = sum of x_k, k = i..j-1, form a
/// linear system with a unique solution; the tree structure lets a single
/// depth-first traversal accumulate it (no elimination needed).
/// Throws std::invalid_argument when |b| != n-1, NotGeneratingError when
/// the graph is not a tree.
PrincipalGenerators solve_log_system(const GeneratorSet& b);

struct ReconstructionResult {
    PCMatrix matrix;
    PrincipalGenerators pgs;
    GeneratorSet used_entries;  // the spanning-tree subset actually used
    double residual;            // max relative disagreement of unused entries, 0 if none
};

/// Full pipeline: build the entry graph, take its depth-first spanning
/// tree, recover the principal generators, materialize the consistent
/// matrix. Supplying more than n-1 entries is fine — the extras are left
/// out of the solve and their disagreement with the reconstruction is
/// reported as `residual`. Throws NotGeneratingError when the graph does
/// not reach every vertex.
ReconstructionResult reconstruct(const GeneratorSet& b);

/// Independent reconstruction without logarithms: every entry is the plain
/// product of edge labels along the unique tree path (labels traversed
/// against their stored low->high orientation contribute reciprocals).
/// Agrees with reconstruct() and exists to cross-check it.
PCMatrix tree_path_reconstruct(const GeneratorSet& b);

}  // namespace pcgen

#endif  // PCGEN_RECONSTRUCT_HPP
