#ifndef PCGEN_ENUMERATE_HPP
#define PCGEN_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace pcgen {

/// A spanning tree of the complete graph on vertices 0..n-1, edges as
/// sorted (u,v) pairs with u < v. Pure shape — no entry values.
struct TreeEdgeSet {
    int n;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const TreeEdgeSet&, const TreeEdgeSet&) = default;
};

/// Decode a Pruefer sequence (n-2 labels in 0..n-1) into its unique tree.
/// Ranges over all n^(n-2) trees as the sequence ranges over all label
/// tuples. n >= 2; out-of-range labels throw.
TreeEdgeSet prufer_decode(const std::vector<int>& seq, int n);

/// Inverse of prufer_decode: strip the smallest leaf repeatedly, recording
/// its neighbor. Input must be a spanning tree.
std::vector<int> prufer_encode(const TreeEdgeSet& tree);

/// All spanning trees of K_n, one per Pruefer sequence, in lexicographic
/// sequence order. Lazy: O(n) state, stop whenever you like.
/// Guard: 2 <= n <= 9 (9^7 is about 4.8M trees).
class SpanningTreeStream {
public:
    explicit SpanningTreeStream(int n);
    std::optional<TreeEdgeSet> next();

private:
    int n_;
    std::vector<int> seq_;
    bool done_;
};

/// All Hamiltonian-path edge sets of K_n — exactly the minimal generator
/// sets with the smallest total handicap. Permutations are generated in
/// lexicographic order and emitted only when first < last, which yields
/// each path once (a path read backwards is the same edge set): n!/2 sets.
/// Guard: 2 <= n <= 9.
class HamiltonianPathStream {
public:
    explicit HamiltonianPathStream(int n);
    std::optional<TreeEdgeSet> next();

private:
    int n_;
    std::vector<int> perm_;
    bool fresh_;
    bool done_;
};

enum class SubsetClass {
    NotGenerating,      // graph misses at least one vertex
    SpanningConnected,  // connected on all vertices but not a tree
    Tree,               // spanning tree
    Path,               // spanning tree that is a Hamiltonian path
};

const char* to_string(SubsetClass c);

struct SubsetClassification {
    int n;
    int k;
    std::int64_t total;       // all k-subsets of the above-diagonal positions
    std::int64_t generating;  // graph connected on all n vertices
    std::int64_t trees;       // spanning trees
    std::int64_t paths;       // Hamiltonian paths
    std::int64_t cycles;      // subsets whose graph contains a cycle
};

/// Exhaustive scan of every k-subset of the n(n-1)/2 above-diagonal
/// positions, classifying each subset's graph. `visit`, when given, sees
/// each subset (edges sorted), its class, and whether it contains a cycle.
/// Guard: n <= 6 and C(n(n-1)/2, k) <= 10^6.
SubsetClassification classify_subsets(
    int n, int k,
    const std::function<void(const std::vector<std::pair<int, int>>&, SubsetClass, bool)>&
        visit = nullptr);

}  // namespace pcgen

#endif  // PCGEN_ENUMERATE_HPP
