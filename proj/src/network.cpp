#include "cycloschur/unimodular.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace cycloschur {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

std::map<std::string, std::size_t> index_vertices(const std::vector<std::string>& vertices) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!index.emplace(vertices[i], i).second)
            throw std::invalid_argument("NetworkInstance: duplicate vertex '" + vertices[i] + "'");
    return index;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& name, const char* what) {
    auto it = index.find(name);
    if (it == index.end())
        throw std::invalid_argument(std::string("NetworkInstance: ") + what + " endpoint '" + name + "' is not a vertex");
    return it->second;
}

}  // namespace

NetworkInstance::NetworkInstance(std::vector<std::string> vertices, std::vector<Arc> tree, std::vector<Arc> edges)
    : vertices_(std::move(vertices)), tree_(std::move(tree)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw std::invalid_argument("NetworkInstance: no vertices");
    const auto index = index_vertices(vertices_);
    if (tree_.size() + 1 != vertices_.size())
        throw std::invalid_argument("NetworkInstance: a spanning tree on " + std::to_string(vertices_.size()) +
                                    " vertices needs " + std::to_string(vertices_.size() - 1) + " arcs, got " +
                                    std::to_string(tree_.size()));
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [u, v] : tree_) {
        const std::size_t a = find_root(parent, lookup(index, u, "tree arc"));
        const std::size_t b = find_root(parent, lookup(index, v, "tree arc"));
        if (a == b) throw std::invalid_argument("NetworkInstance: tree arcs contain a cycle at (" + u + ", " + v + ")");
        parent[a] = b;
    }
    for (const auto& [u, v] : edges_) {
        lookup(index, u, "graph arc");
        lookup(index, v, "graph arc");
    }
}

RationalMatrix network_matrix(const NetworkInstance& instance) {
    const auto& vertices = instance.vertices();
    const auto& tree = instance.tree();
    const auto& edges = instance.edges();
    const auto index = index_vertices(vertices);
    const std::size_t nv = vertices.size();

    // Undirected adjacency: (neighbour, tree arc index).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t t = 0; t < tree.size(); ++t) {
        const std::size_t a = index.at(tree[t].first), b = index.at(tree[t].second);
        adj[a].emplace_back(b, t);
        adj[b].emplace_back(a, t);
    }

    RationalMatrix m(tree.size(), edges.size());
    std::vector<std::size_t> via(nv), from(nv);
    std::vector<char> seen(nv);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::size_t u = index.at(edges[e].first), v = index.at(edges[e].second);
        // Search from u; walking back from v yields the path steps in the
        // u -> v direction.
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<std::size_t> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& [y, t] : adj[x]) {
                if (seen[y]) continue;
                seen[y] = 1;
                via[y] = t;
                from[y] = x;
                stack.push_back(y);
            }
        }
        for (std::size_t cur = v; cur != u; cur = from[cur]) {
            const std::size_t t = via[cur];
            const bool forward = index.at(tree[t].first) == from[cur] && index.at(tree[t].second) == cur;
            m(t, e) = forward ? 1 : -1;
        }
    }
    return m;
}

BipartiteConstruction bipartite_construction(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("bipartite_construction: m and n must be positive");
    const auto e = [](std::size_t i) { return "e" + std::to_string(i); };
    const auto f = [](std::size_t j) { return "f" + std::to_string(j); };
    const auto row = [m](std::size_t i, std::size_t j) { return (j - 1) * m + (i - 1); };

    RationalMatrix a(m * n, m + n + 1);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= m; ++i) {
            a(row(i, j), 0) = 1;           // e0 (x) f0 = sum of all e_i (x) f_j
            a(row(i, j), j) = -1;          // e0 (x) f_j = -sum_i e_i (x) f_j
            a(row(i, j), n + i) = -1;      // e_i (x) f0 = -sum_j e_i (x) f_j
        }

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i <= m; ++i) vertices.push_back(e(i));
    for (std::size_t j = 0; j <= n; ++j) vertices.push_back(f(j));
    std::vector<Arc> tree{{e(0), f(0)}};
    for (std::size_t j = 1; j <= n; ++j) tree.emplace_back(e(0), f(j));
    for (std::size_t i = 1; i <= m; ++i) tree.emplace_back(e(i), f(0));
    std::vector<Arc> edges;
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= m; ++i) edges.emplace_back(f(j), e(i));

    return BipartiteConstruction{std::move(a), NetworkInstance(std::move(vertices), std::move(tree), std::move(edges))};
}

}  // namespace cycloschur
