#ifndef PCGEN_GENERATORS_HPP
#define PCGEN_GENERATORS_HPP

#include <utility>
#include <vector>

#include "pcgen/matrix.hpp"

namespace pcgen {

/// One above-diagonal matrix entry a(i,j) supplied as reconstruction input.
/// Zero-based, i < j, value > 0.
struct GeneratorEntry {
    int i;
    int j;
    double value;
};

/// A set of above-diagonal entries of an order-n matrix. Entries are kept
/// sorted by (i,j) and unique per pair.
///
/// add() normalizes orientation: an entry supplied as (j,i,v) with j > i is
/// stored as (i,j,1/v); i == j is rejected. A duplicate pair is rejected if
/// its value disagrees beyond `tol`, silently dropped otherwise.
class GeneratorSet {
public:
    explicit GeneratorSet(int n);

    void add(int i, int j, double value, double tol = kDefaultTol);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::vector<GeneratorEntry>& entries() const noexcept { return entries_; }

private:
    int n_;
    std::vector<GeneratorEntry> entries_;
};

/// Undirected labeled graph on vertices 0..n-1 with one edge per supplied
/// entry. Edge (u,v), u < v, carries the entry value as label; the
/// adjacency lists additionally store the directed ratio m(from,to), which
/// is the label when walking u->v and its reciprocal when walking v->u.
class ComparisonGraph {
public:
    struct Edge {
        int u;  // u < v
        int v;
        double label;
    };
    struct Arc {
        int to;
        double ratio;  // m(from, to)
    };

    explicit ComparisonGraph(int n);

    // rejects self-loops, parallel edges, non-positive labels
    void add_edge(int u, int v, double label);

    int order() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Neighbors of `v` in ascending vertex order.
    const std::vector<Arc>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;            // sorted by (u,v)
    std::vector<std::vector<Arc>> adj_;  // each list sorted by .to
};

ComparisonGraph build_graph(const GeneratorSet& b);

/// Connected on all n vertices with exactly n-1 edges (checked by
/// depth-first traversal).
bool is_tree(const ComparisonGraph& g);

/// Depth-first spanning tree of the component containing vertex 0; the
/// traversal starts at vertex 0 and takes neighbors in ascending order, so
/// the result is deterministic. Fewer than n-1 edges in the result means g
/// does not span all vertices.
ComparisonGraph spanning_tree(const ComparisonGraph& g);

/// Vertices not reachable from vertex 0.
std::vector<int> unreached_vertices(const ComparisonGraph& g);

/// All pairs (i,j), i < j, that lie in one connected component of the
/// entry graph; each component of v vertices contributes v*(v-1)/2 pairs,
/// every one recoverable as a path product.
std::vector<std::pair<int, int>> derivable_pairs(const GeneratorSet& b);

/// Number of entries of b mentioning entity i == degree of i in the graph.
int frequency(int i, const GeneratorSet& b);

/// Per-entity frequencies, the active set, and the total handicap
/// h = sum over active entities of (max frequency - own frequency).
struct HandicapReport {
    std::vector<int> frequencies;  // size n, zero for unmentioned entities
    std::vector<int> active;       // entities with positive frequency, ascending
    int max_frequency;
    int total;
};

HandicapReport total_handicap(const GeneratorSet& b);  // throws on empty b

/// True iff the entry graph is connected on all n vertices, i.e. every
/// matrix entry is recoverable from b.
bool generates(const GeneratorSet& b);

}  // namespace pcgen

#endif  // PCGEN_GENERATORS_HPP
