#include "pgt/canonical.hpp"

#include <algorithm>

namespace pgt {

namespace {

// Colors refined by (color, sorted multiset of neighbor colors) until stable.
void refine(const AdjGraph& g, std::vector<int>& color) {
    const int n = g.n();
    std::vector<std::vector<int>> sig(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (int u : g.neighbors(v)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

std::string key_for_order(const AdjGraph& g, const std::vector<int>& pos) {
    const int n = g.n();
    std::vector<int> at(n);  // at[position] = vertex
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            key.push_back(g.has_edge(at[i], at[j]) ? '1' : '0');
    return key;
}

void search(const AdjGraph& g, std::vector<int> color, std::string& best, bool& have) {
    refine(g, color);
    const int n = g.n();
    // First non-singleton color class, smallest color.
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        std::string key = key_for_order(g, color);
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        auto next = color;
        // Individualize v: give it its own class just below its cell.
        for (int u = 0; u < n; ++u)
            if (next[u] >= target) ++next[u];
        next[v] = target;
        search(g, std::move(next), best, have);
    }
}

}  // namespace

std::string canonical_key(const AdjGraph& g) {
    const int n = g.n();
    std::string best;
    bool have = false;
    std::vector<int> color(n, 0);
    search(g, std::move(color), best, have);
    std::string out = std::to_string(n);
    out.push_back('|');
    out += best;
    return out;
}

}  // namespace pgt
