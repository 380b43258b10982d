#include "pgt/graph.hpp"

#include <algorithm>
#include <queue>

#include "pgt/errors.hpp"

namespace pgt {

int AdjGraph::m() const {
    int total = 0;
    for (const auto& a : adj_) total += static_cast<int>(a.size());
    return total / 2;
}

bool AdjGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void AdjGraph::add_edge(int u, int v) {
    check_arg(u != v, "self loops are not allowed");
    check_arg(u >= 0 && v >= 0 && u < n() && v < n(), "vertex id out of range");
    check_arg(!has_edge(u, v), "duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

std::vector<std::pair<int, int>> AdjGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool connected(const AdjGraph& g) {
    if (g.n() == 0) return false;
    auto dist = bfs_dist(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> bfs_dist(const AdjGraph& g, int src) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<Triangle> triangles(const AdjGraph& g) {
    std::vector<Triangle> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.has_edge(u, w)) out.push_back({u, v, w});
            }
        }
    return out;
}

std::optional<int> triangle_distance(const AdjGraph& g) {
    auto tris = triangles(g);
    if (tris.size() < 2) return std::nullopt;
    // All-pairs via one BFS per vertex; instances are desk scale.
    std::vector<std::vector<int>> dist(g.n());
    for (int v = 0; v < g.n(); ++v) dist[v] = bfs_dist(g, v);
    int best = -1;
    for (size_t i = 0; i < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j)
            for (int a : tris[i])
                for (int b : tris[j]) {
                    int d = dist[a][b];
                    if (d >= 0 && (best < 0 || d < best)) best = d;
                }
    check_internal(best >= 0, "triangle pair in disconnected components");
    return best;
}

namespace {

void cycle_dfs(const AdjGraph& g, int start, std::vector<int>& path,
               std::vector<char>& on_path, int max_len,
               std::vector<std::vector<int>>& out) {
    int cur = path.back();
    for (int w : g.neighbors(cur)) {
        if (w == start && path.size() >= 3) {
            if (path[1] < path.back()) out.push_back(path);  // reflection canon
            continue;
        }
        if (w <= start || on_path[w]) continue;
        if (static_cast<int>(path.size()) == max_len) continue;
        path.push_back(w);
        on_path[w] = 1;
        cycle_dfs(g, start, path, on_path, max_len, out);
        on_path[w] = 0;
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> cycles_up_to(const AdjGraph& g, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<char> on_path(g.n(), 0);
    std::vector<int> path;
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        on_path[s] = 1;
        cycle_dfs(g, s, path, on_path, max_len, out);
        on_path[s] = 0;
    }
    return out;
}

std::optional<std::vector<int>> find_cycle_of_length(const AdjGraph& g, int len) {
    for (auto& c : cycles_up_to(g, len))
        if (static_cast<int>(c.size()) == len) return c;
    return std::nullopt;
}

bool on_triangle(const AdjGraph& g, int v) {
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) return true;
    return false;
}

IdentifyResult identify(const AdjGraph& g, const std::vector<std::vector<int>>& parts) {
    std::vector<int> group(g.n(), -1);  // part index per vertex, -1 = singleton
    for (size_t i = 0; i < parts.size(); ++i) {
        check_arg(!parts[i].empty(), "empty identification part");
        for (int v : parts[i]) {
            check_arg(v >= 0 && v < g.n(), "identification vertex out of range");
            check_arg(group[v] < 0, "identification parts are not disjoint");
            group[v] = static_cast<int>(i);
        }
        for (int a : parts[i])
            for (int b : parts[i])
                if (a < b)
                    check_arg(!g.has_edge(a, b), "identification creates a loop");
    }

    // Groups ordered by their smallest original vertex id.
    std::vector<int> rep(parts.size(), g.n());
    for (size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) rep[i] = std::min(rep[i], v);

    std::vector<std::pair<int, int>> order;  // (smallest original id, part or ~v)
    for (int v = 0; v < g.n(); ++v)
        if (group[v] < 0) order.emplace_back(v, ~v);
    for (size_t i = 0; i < parts.size(); ++i) order.emplace_back(rep[i], static_cast<int>(i));
    std::sort(order.begin(), order.end());

    IdentifyResult res;
    res.vmap.assign(g.n(), -1);
    for (size_t newid = 0; newid < order.size(); ++newid) {
        int tag = order[newid].second;
        if (tag < 0) {
            res.vmap[~tag] = static_cast<int>(newid);
        } else {
            for (int v : parts[tag]) res.vmap[v] = static_cast<int>(newid);
        }
    }

    res.graph = AdjGraph(static_cast<int>(order.size()));
    for (auto [u, v] : g.edges()) {
        int a = res.vmap[u], b = res.vmap[v];
        check_internal(a != b, "loop after identification");
        if (!res.graph.has_edge(a, b)) res.graph.add_edge(a, b);
    }
    return res;
}

}  // namespace pgt
