#include "hammock/sweep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hammock {

namespace {

std::vector<std::string> numbered(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return names;
}

std::vector<std::vector<int>> adjacency(int n, const EdgeList &edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::string ahu(const std::vector<std::vector<int>> &adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto &k : kids) s += k;
    return s + ")";
}

std::vector<int> centers(const std::vector<std::vector<int>> &adj) {
    const int n = static_cast<int>(adj.size());
    if (n <= 2) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(n);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) leaves.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(leaves.size());
        std::vector<int> next;
        for (int v : leaves)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        leaves = next;
    }
    return leaves;
}

std::string canonical_tree(int n, const EdgeList &edges) {
    auto adj = adjacency(n, edges);
    std::string best;
    for (int c : centers(adj)) {
        std::string s = ahu(adj, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

EdgeList prufer_decode(int n, const std::vector<int> &seq) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    EdgeList edges;
    for (int x : seq)
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) {
                edges.push_back({v, x});
                --degree[v];
                --degree[x];
                break;
            }
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) {
            if (u < 0)
                u = v;
            else
                edges.push_back({u, v});
        }
    return edges;
}

}  // namespace

std::vector<Quiver> all_orientations(int n, const EdgeList &edges) {
    if (edges.size() > 20) throw std::invalid_argument("too many edges to orient exhaustively");
    std::vector<Quiver> out;
    for (long long mask = 0; mask < (1LL << edges.size()); ++mask) {
        std::vector<Arrow> arrows;
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if ((mask >> e) & 1)
                arrows.push_back({b, a});
            else
                arrows.push_back({a, b});
        }
        out.emplace_back(numbered(n), arrows);
    }
    return out;
}

EdgeList path_edges(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return e;
}

EdgeList d_edges(int n) {
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    EdgeList e = path_edges(n - 1);
    e.push_back({n - 3, n - 1});
    return e;
}

std::vector<Quiver> type_a_quivers(int n) { return all_orientations(n, path_edges(n)); }
std::vector<Quiver> type_d_quivers(int n) { return all_orientations(n, d_edges(n)); }

std::vector<EdgeList> unlabeled_trees(int n) {
    if (n < 1) return {};
    if (n == 1) return {EdgeList{}};
    if (n == 2) return {EdgeList{{0, 1}}};
    std::set<std::string> seen;
    std::vector<EdgeList> out;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        EdgeList e = prufer_decode(n, seq);
        if (seen.insert(canonical_tree(n, e)).second) {
            std::sort(e.begin(), e.end());
            out.push_back(e);
        }
        int k = 0;
        while (k < n - 2 && seq[k] == n - 1) seq[k++] = 0;
        if (k == n - 2) break;
        ++seq[k];
    }
    return out;
}

std::vector<Quiver> tree_quivers(int max_n) {
    std::vector<Quiver> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto &t : unlabeled_trees(n))
            for (auto &q : all_orientations(n, t)) out.push_back(q);
    return out;
}

Quiver random_acyclic_quiver(std::mt19937_64 &rng, int n, double p) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<Arrow> arrows;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) arrows.push_back({order[a], order[b]});
    return Quiver(numbered(n), arrows);
}

std::string quiver_string(const Quiver &q) {
    std::string s;
    for (auto &a : q.arrows()) {
        if (!s.empty()) s += ",";
        s += q.name(a.source) + "->" + q.name(a.target);
    }
    if (s.empty()) {
        for (int v = 0; v < q.size(); ++v) s += (v ? " " : "vertices: ") + q.name(v);
    }
    return s;
}

}  // namespace hammock
