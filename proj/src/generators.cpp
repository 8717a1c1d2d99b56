#include "pcgen/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcgen {

namespace {

std::string pair_str(int i, int j) {
    // one-based in messages, matching the input format
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

GeneratorSet::GeneratorSet(int n) : n_(n) {
    if (n < 1) throw std::domain_error("generator set order must be at least 1");
}

void GeneratorSet::add(int i, int j, double value, double tol) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::domain_error("entry value must be a positive finite number");
    }
    if (i == j) throw std::domain_error("diagonal entry " + pair_str(i, j) + " is not a generator");
    if (i > j) {
        std::swap(i, j);
        value = 1.0 / value;
    }
    if (i < 0 || j >= n_) {
        throw std::domain_error("entry " + pair_str(i, j) + " outside order " + std::to_string(n_));
    }
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(i, j),
                                [](const GeneratorEntry& e, const std::pair<int, int>& key) {
                                    return std::make_pair(e.i, e.j) < key;
                                });
    if (pos != entries_.end() && pos->i == i && pos->j == j) {
        if (std::abs(value / pos->value - 1.0) > tol) {
            throw std::domain_error("conflicting duplicate entry " + pair_str(i, j));
        }
        return;  // consistent duplicate, keep the first
    }
    entries_.insert(pos, GeneratorEntry{i, j, value});
}

ComparisonGraph::ComparisonGraph(int n) : n_(n) {
    if (n < 1) throw std::domain_error("graph order must be at least 1");
    adj_.resize(static_cast<std::size_t>(n));
}

void ComparisonGraph::add_edge(int u, int v, double label) {
    if (!(label > 0.0) || !std::isfinite(label)) {
        throw std::domain_error("edge label must be a positive finite number");
    }
    if (u == v) throw std::domain_error("self-loop " + pair_str(u, v));
    if (u > v) {
        std::swap(u, v);
        label = 1.0 / label;
    }
    if (u < 0 || v >= n_) {
        throw std::domain_error("edge " + pair_str(u, v) + " outside order " + std::to_string(n_));
    }
    if (has_edge(u, v)) throw std::domain_error("parallel edge " + pair_str(u, v));

    auto epos = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                                 [](const Edge& e, const std::pair<int, int>& key) {
                                     return std::make_pair(e.u, e.v) < key;
                                 });
    edges_.insert(epos, Edge{u, v, label});

    auto insert_arc = [this](int from, int to, double ratio) {
        auto& list = adj_[static_cast<std::size_t>(from)];
        auto pos = std::lower_bound(list.begin(), list.end(), to,
                                    [](const Arc& a, int key) { return a.to < key; });
        list.insert(pos, Arc{to, ratio});
    };
    insert_arc(u, v, label);
    insert_arc(v, u, 1.0 / label);
}

bool ComparisonGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::any_of(list.begin(), list.end(), [v](const Arc& a) { return a.to == v; });
}

ComparisonGraph build_graph(const GeneratorSet& b) {
    ComparisonGraph g(b.order());
    for (const auto& e : b.entries()) g.add_edge(e.i, e.j, e.value);
    return g;
}

namespace {

// Iterative depth-first traversal from `start`, taking neighbors in
// ascending order (same visiting order as the recursive form). Marks
// `visited` and reports each tree edge as (parent, child).
template <typename OnTreeEdge>
void dfs_from(const ComparisonGraph& g, int start, std::vector<char>& visited,
              OnTreeEdge on_tree_edge) {
    struct Frame {
        int vertex;
        std::size_t next;  // index into the adjacency list
    };
    std::vector<Frame> stack;
    visited[static_cast<std::size_t>(start)] = 1;
    stack.push_back({start, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& arcs = g.neighbors(f.vertex);
        if (f.next == arcs.size()) {
            stack.pop_back();
            continue;
        }
        const int to = arcs[f.next++].to;
        if (!visited[static_cast<std::size_t>(to)]) {
            visited[static_cast<std::size_t>(to)] = 1;
            on_tree_edge(f.vertex, to);
            stack.push_back({to, 0});
        }
    }
}

}  // namespace

bool is_tree(const ComparisonGraph& g) {
    const int n = g.order();
    if (g.edge_count() != n - 1) return false;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    int reached = 1;
    dfs_from(g, 0, visited, [&reached](int, int) { ++reached; });
    return reached == n;
}

ComparisonGraph spanning_tree(const ComparisonGraph& g) {
    ComparisonGraph tree(g.order());
    std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
    dfs_from(g, 0, visited, [&g, &tree](int parent, int child) {
        const int u = std::min(parent, child);
        const int v = std::max(parent, child);
        const auto& arcs = g.neighbors(u);
        auto arc = std::lower_bound(arcs.begin(), arcs.end(), v,
                                    [](const ComparisonGraph::Arc& a, int key) { return a.to < key; });
        tree.add_edge(u, v, arc->ratio);
    });
    return tree;
}

std::vector<int> unreached_vertices(const ComparisonGraph& g) {
    std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
    dfs_from(g, 0, visited, [](int, int) {});
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (!visited[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

std::vector<std::pair<int, int>> derivable_pairs(const GeneratorSet& b) {
    const ComparisonGraph g = build_graph(b);
    const int n = g.order();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    for (int start = 0, c = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        component[static_cast<std::size_t>(start)] = c;
        visited[static_cast<std::size_t>(start)] = 1;
        dfs_from(g, start, visited,
                 [&component, c](int, int child) { component[static_cast<std::size_t>(child)] = c; });
        ++c;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (component[static_cast<std::size_t>(i)] == component[static_cast<std::size_t>(j)]) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return pairs;
}

int frequency(int i, const GeneratorSet& b) {
    if (i < 0 || i >= b.order()) throw std::domain_error("entity index out of range");
    int count = 0;
    for (const auto& e : b.entries()) {
        if (e.i == i || e.j == i) ++count;
    }
    return count;
}

HandicapReport total_handicap(const GeneratorSet& b) {
    if (b.empty()) throw std::domain_error("total handicap of an empty set is undefined");
    HandicapReport report;
    report.frequencies.assign(static_cast<std::size_t>(b.order()), 0);
    for (const auto& e : b.entries()) {
        ++report.frequencies[static_cast<std::size_t>(e.i)];
        ++report.frequencies[static_cast<std::size_t>(e.j)];
    }
    report.max_frequency = 0;
    for (int v = 0; v < b.order(); ++v) {
        const int f = report.frequencies[static_cast<std::size_t>(v)];
        if (f > 0) report.active.push_back(v);
        report.max_frequency = std::max(report.max_frequency, f);
    }
    report.total = 0;
    for (int v : report.active) {
        report.total += report.max_frequency - report.frequencies[static_cast<std::size_t>(v)];
    }
    return report;
}

bool generates(const GeneratorSet& b) {
    return unreached_vertices(build_graph(b)).empty();
}

}  // namespace pcgen
