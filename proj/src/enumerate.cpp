#include "pcgen/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcgen {

namespace {

constexpr int kMaxStreamOrder = 9;  // 9^7 ~ 4.8M trees
constexpr std::int64_t kMaxScan = 1'000'000;

void check_stream_order(int n) {
    if (n < 2 || n > kMaxStreamOrder) {
        throw std::domain_error("enumeration order must be in 2.." +
                                std::to_string(kMaxStreamOrder));
    }
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void sort_edges(TreeEdgeSet& t) { std::sort(t.edges.begin(), t.edges.end()); }

}  // namespace

TreeEdgeSet prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) throw std::domain_error("tree order must be at least 2");
    if (seq.size() != static_cast<std::size_t>(n - 2)) {
        throw std::invalid_argument("sequence length must be order minus 2");
    }
    for (int label : seq) {
        if (label < 0 || label >= n) throw std::domain_error("sequence label out of range");
    }

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int label : seq) ++degree[static_cast<std::size_t>(label)];

    TreeEdgeSet tree{n, {}};
    tree.edges.reserve(static_cast<std::size_t>(n - 1));
    // join the smallest remaining leaf to the next sequence label
    for (int label : seq) {
        int leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        tree.edges.emplace_back(std::min(leaf, label), std::max(leaf, label));
        degree[static_cast<std::size_t>(leaf)] = 0;
        --degree[static_cast<std::size_t>(label)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) {
                a = v;
            } else {
                tree.edges.emplace_back(a, v);
            }
        }
    }
    sort_edges(tree);
    return tree;
}

std::vector<int> prufer_encode(const TreeEdgeSet& tree) {
    const int n = tree.n;
    if (n < 2) throw std::domain_error("tree order must be at least 2");
    if (tree.edges.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("not a spanning tree: wrong edge count");
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : tree.edges) {
        if (u < 0 || v >= n || u == v) throw std::domain_error("edge out of range");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n - 2));
    for (int step = 0; step < n - 2; ++step) {
        int leaf = 0;
        while (removed[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) {
            ++leaf;
            if (leaf == n) throw std::invalid_argument("not a spanning tree: no leaf found");
        }
        int neighbor = -1;
        for (int to : adj[static_cast<std::size_t>(leaf)]) {
            if (!removed[static_cast<std::size_t>(to)]) {
                neighbor = to;
                break;
            }
        }
        seq.push_back(neighbor);
        removed[static_cast<std::size_t>(leaf)] = 1;
        degree[static_cast<std::size_t>(leaf)] = 0;
        --degree[static_cast<std::size_t>(neighbor)];
    }
    return seq;
}

SpanningTreeStream::SpanningTreeStream(int n) : n_(n), done_(false) {
    check_stream_order(n);
    seq_.assign(static_cast<std::size_t>(n - 2), 0);
}

std::optional<TreeEdgeSet> SpanningTreeStream::next() {
    if (done_) return std::nullopt;
    TreeEdgeSet tree = prufer_decode(seq_, n_);
    // advance the sequence as an odometer, most significant digit first
    int pos = static_cast<int>(seq_.size()) - 1;
    while (pos >= 0 && seq_[static_cast<std::size_t>(pos)] == n_ - 1) {
        seq_[static_cast<std::size_t>(pos)] = 0;
        --pos;
    }
    if (pos < 0) {
        done_ = true;
    } else {
        ++seq_[static_cast<std::size_t>(pos)];
    }
    return tree;
}

HamiltonianPathStream::HamiltonianPathStream(int n) : n_(n), fresh_(true), done_(false) {
    check_stream_order(n);
    perm_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm_[static_cast<std::size_t>(v)] = v;
}

std::optional<TreeEdgeSet> HamiltonianPathStream::next() {
    while (!done_) {
        if (!fresh_ && !std::next_permutation(perm_.begin(), perm_.end())) {
            done_ = true;
            break;
        }
        fresh_ = false;
        if (perm_.front() > perm_.back()) continue;  // the reversal yields the same edge set
        TreeEdgeSet path{n_, {}};
        path.edges.reserve(static_cast<std::size_t>(n_ - 1));
        for (int i = 0; i + 1 < n_; ++i) {
            const int u = perm_[static_cast<std::size_t>(i)];
            const int v = perm_[static_cast<std::size_t>(i + 1)];
            path.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        sort_edges(path);
        return path;
    }
    return std::nullopt;
}

const char* to_string(SubsetClass c) {
    switch (c) {
        case SubsetClass::NotGenerating: return "not-generating";
        case SubsetClass::SpanningConnected: return "spanning-connected";
        case SubsetClass::Tree: return "tree";
        case SubsetClass::Path: return "path";
    }
    return "?";
}

SubsetClassification classify_subsets(
    int n, int k,
    const std::function<void(const std::vector<std::pair<int, int>>&, SubsetClass, bool)>& visit) {
    if (n < 1 || n > 6) throw std::domain_error("classification order must be in 1..6");
    const int positions = n * (n - 1) / 2;
    if (k < 0 || k > positions) {
        throw std::domain_error("subset size must be in 0.." + std::to_string(positions));
    }
    if (binomial(positions, k) > kMaxScan) {
        throw std::domain_error("subset scan too large (over 10^6 subsets)");
    }

    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    }

    SubsetClassification out{n, k, 0, 0, 0, 0, 0};
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;

    std::vector<std::pair<int, int>> subset(static_cast<std::size_t>(k));
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> stack;
    std::vector<char> visited(static_cast<std::size_t>(n));

    while (true) {
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = all_pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];

        std::fill(degree.begin(), degree.end(), 0);
        for (auto& list : adj) list.clear();
        for (const auto& [u, v] : subset) {
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(v)];
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }

        // component count via DFS over all vertices
        std::fill(visited.begin(), visited.end(), 0);
        int components = 0;
        for (int start = 0; start < n; ++start) {
            if (visited[static_cast<std::size_t>(start)]) continue;
            ++components;
            stack.assign(1, start);
            visited[static_cast<std::size_t>(start)] = 1;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int to : adj[static_cast<std::size_t>(v)]) {
                    if (!visited[static_cast<std::size_t>(to)]) {
                        visited[static_cast<std::size_t>(to)] = 1;
                        stack.push_back(to);
                    }
                }
            }
        }

        const bool connected = components == 1;
        const bool acyclic = k == n - components;  // forest criterion
        const bool tree = connected && acyclic;
        const bool path =
            tree && std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });

        ++out.total;
        if (connected) ++out.generating;
        if (tree) ++out.trees;
        if (path) ++out.paths;
        if (!acyclic) ++out.cycles;

        if (visit) {
            const SubsetClass cls = !connected ? SubsetClass::NotGenerating
                                  : path       ? SubsetClass::Path
                                  : tree       ? SubsetClass::Tree
                                               : SubsetClass::SpanningConnected;
            visit(subset, cls, !acyclic);
        }

        // next k-combination of position indices, lexicographic
        int pos = k - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == positions - k + pos) --pos;
        if (pos < 0) break;
        ++pick[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

}  // namespace pcgen
