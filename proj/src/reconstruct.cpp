#include "pcgen/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcgen {

namespace {

std::string not_generating_message(const std::vector<int>& unreached) {
    std::string msg = "B does not generate A";
    if (!unreached.empty()) {
        msg += " (unreached vertices:";
        for (int v : unreached) msg += " " + std::to_string(v + 1);
        msg += ")";
    }
    return msg;
}

// Log-potentials over a spanning tree: lambda[0] = 0 and, for every tree
// edge, lambda[u] - lambda[v] = log m(u,v). Every entry then follows as
// m(i,j) = exp(lambda[i] - lambda[j]).
std::vector<double> tree_potentials(const ComparisonGraph& tree) {
    const int n = tree.order();
    std::vector<double> lambda(static_cast<std::size_t>(n), 0.0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    struct Frame {
        int vertex;
        std::size_t next;
    };
    std::vector<Frame> stack;
    visited[0] = 1;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& arcs = tree.neighbors(f.vertex);
        if (f.next == arcs.size()) {
            stack.pop_back();
            continue;
        }
        const auto& arc = arcs[f.next++];
        if (!visited[static_cast<std::size_t>(arc.to)]) {
            visited[static_cast<std::size_t>(arc.to)] = 1;
            // m(vertex, to) = arc.ratio  =>  lambda[to] = lambda[vertex] - log ratio
            lambda[static_cast<std::size_t>(arc.to)] =
                lambda[static_cast<std::size_t>(f.vertex)] - std::log(arc.ratio);
            stack.push_back({arc.to, 0});
        }
    }
    return lambda;
}

PCMatrix matrix_from_potentials(const std::vector<double>& lambda) {
    const int n = static_cast<int>(lambda.size());
    PCMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v =
                std::exp(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)]);
            m(i, j) = v;
            m(j, i) = 1.0 / v;
        }
    }
    return m;
}

PrincipalGenerators pgs_from_potentials(const std::vector<double>& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<double> values(static_cast<std::size_t>(n - 1));
    for (int k = 0; k + 1 < n; ++k) {
        values[static_cast<std::size_t>(k)] =
            std::exp(lambda[static_cast<std::size_t>(k)] - lambda[static_cast<std::size_t>(k + 1)]);
    }
    return PrincipalGenerators(n, std::move(values));
}

}  // namespace

PrincipalGenerators::PrincipalGenerators(int n, std::vector<double> values)
    : n_(n), v_(std::move(values)) {
    if (n < 1) throw std::domain_error("order must be at least 1");
    if (v_.size() != static_cast<std::size_t>(n - 1)) {
        throw std::invalid_argument("expected " + std::to_string(n - 1) +
                                    " principal generators, got " + std::to_string(v_.size()));
    }
    for (double v : v_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::domain_error("principal generator must be a positive finite number");
        }
    }
}

PrincipalGenerators PrincipalGenerators::ones(int n) {
    if (n < 1) throw std::domain_error("order must be at least 1");
    return PrincipalGenerators(n, std::vector<double>(static_cast<std::size_t>(n - 1), 1.0));
}

NotGeneratingError::NotGeneratingError(std::vector<int> unreached)
    : std::runtime_error(not_generating_message(unreached)), unreached_(std::move(unreached)) {}

PCMatrix reconstruct_from_pgs(const PrincipalGenerators& pgs) {
    const int n = pgs.order();
    // prefix sums of the log generators double as potentials
    std::vector<double> lambda(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k + 1 < n; ++k) {
        lambda[static_cast<std::size_t>(k + 1)] =
            lambda[static_cast<std::size_t>(k)] - std::log(pgs[k]);
    }
    return matrix_from_potentials(lambda);
}

PrincipalGenerators solve_log_system(const GeneratorSet& b) {
    const int n = b.order();
    if (b.size() != n - 1) {
        throw std::invalid_argument("expected exactly " + std::to_string(n - 1) +
                                    " entries, got " + std::to_string(b.size()));
    }
    const ComparisonGraph g = build_graph(b);
    if (!is_tree(g)) throw NotGeneratingError(unreached_vertices(g));
    return pgs_from_potentials(tree_potentials(g));
}

ReconstructionResult reconstruct(const GeneratorSet& b) {
    const int n = b.order();
    const ComparisonGraph g = build_graph(b);
    const ComparisonGraph tree = spanning_tree(g);
    if (tree.edge_count() != n - 1) throw NotGeneratingError(unreached_vertices(g));

    const std::vector<double> lambda = tree_potentials(tree);
    PCMatrix matrix = matrix_from_potentials(lambda);

    GeneratorSet used(n);
    for (const auto& e : tree.edges()) used.add(e.u, e.v, e.label);
    double residual = 0.0;
    for (const auto& e : b.entries()) {
        if (!tree.has_edge(e.i, e.j)) {
            residual = std::max(residual, std::abs(e.value / matrix(e.i, e.j) - 1.0));
        }
    }
    return ReconstructionResult{std::move(matrix), pgs_from_potentials(lambda), std::move(used),
                                residual};
}

PCMatrix tree_path_reconstruct(const GeneratorSet& b) {
    const int n = b.order();
    const ComparisonGraph g = build_graph(b);
    const ComparisonGraph tree = spanning_tree(g);
    if (tree.edge_count() != n - 1) throw NotGeneratingError(unreached_vertices(g));

    // From each root, walk the tree multiplying the directed edge ratios;
    // no logarithms anywhere, so this is an independent check on the
    // log-system route.
    PCMatrix m(n);
    std::vector<double> ratio(static_cast<std::size_t>(n), 1.0);
    std::vector<char> visited(static_cast<std::size_t>(n));
    struct Frame {
        int vertex;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        std::fill(visited.begin(), visited.end(), 0);
        ratio[static_cast<std::size_t>(root)] = 1.0;
        visited[static_cast<std::size_t>(root)] = 1;
        stack.clear();
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& arcs = tree.neighbors(f.vertex);
            if (f.next == arcs.size()) {
                stack.pop_back();
                continue;
            }
            const auto& arc = arcs[f.next++];
            if (!visited[static_cast<std::size_t>(arc.to)]) {
                visited[static_cast<std::size_t>(arc.to)] = 1;
                // m(root, to) = m(root, vertex) * m(vertex, to)
                ratio[static_cast<std::size_t>(arc.to)] =
                    ratio[static_cast<std::size_t>(f.vertex)] * arc.ratio;
                stack.push_back({arc.to, 0});
            }
        }
        for (int v = 0; v < n; ++v) m(root, v) = ratio[static_cast<std::size_t>(v)];
        m(root, root) = 1.0;
    }
    return m;
}

}  // namespace pcgen
