#include "pgt/plane_graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "pgt/errors.hpp"

namespace pgt {

bool Face::contains(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<int>> rot) {
    PlaneGraph g;
    g.rot_ = std::move(rot);
    const int n = g.n();
    check_input(n >= 1, "graph must have at least one vertex");

    g.skel_ = AdjGraph(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> seen = g.rot_[v];
        std::sort(seen.begin(), seen.end());
        for (size_t i = 0; i < seen.size(); ++i) {
            int u = seen[i];
            check_input(u >= 0 && u < n, "neighbor id out of range");
            check_input(u != v, "loop in rotation of vertex " + std::to_string(v));
            check_input(i == 0 || seen[i] != seen[i - 1],
                        "repeated neighbor in rotation of vertex " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u : g.rot_[v]) {
            const auto& ru = g.rot_[u];
            check_input(std::find(ru.begin(), ru.end(), v) != ru.end(),
                        "asymmetric adjacency between " + std::to_string(v) + " and " +
                            std::to_string(u));
        }
    for (int v = 0; v < n; ++v)
        for (int u : g.rot_[v])
            if (v < u) {
                g.skel_.add_edge(v, u);
                ++g.m_;
            }

    check_input(connected(g.skel_), "graph is disconnected");
    g.trace_faces();
    const int euler = n - g.m_ + static_cast<int>(g.faces_.size());
    check_input(euler == 2, "Euler check failed: V-E+F = " + std::to_string(euler) +
                                " (rotation system is not planar or is corrupted)");
    return g;
}

void PlaneGraph::trace_faces() {
    faces_.clear();
    edge_face_.assign(n(), {});
    for (int v = 0; v < n(); ++v) edge_face_[v].assign(degree(v), -1);

    if (m_ == 0) {
        // Single isolated vertex: one face containing it, empty walk.
        Face f;
        f.id = 0;
        f.verts = {0};
        faces_.push_back(std::move(f));
        return;
    }

    for (int v0 = 0; v0 < n(); ++v0) {
        for (int i0 = 0; i0 < degree(v0); ++i0) {
            if (edge_face_[v0][i0] >= 0) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            int v = v0, i = i0;
            do {
                edge_face_[v][i] = f.id;
                f.walk.push_back(v);
                int u = rot_[v][i];
                // Arrived at u along (v,u): continue to the neighbor right
                // after v in u's clockwise rotation.
                int j = pos_in_rot(u, v);
                int k = (j + 1) % degree(u);
                v = u;
                i = k;
            } while (!(v == v0 && i == i0));
            f.verts = f.walk;
            std::sort(f.verts.begin(), f.verts.end());
            f.verts.erase(std::unique(f.verts.begin(), f.verts.end()), f.verts.end());
            faces_.push_back(std::move(f));
        }
    }
}

int PlaneGraph::pos_in_rot(int v, int u) const {
    const auto& r = rot_[v];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    throw ArgError("edge (" + std::to_string(v) + "," + std::to_string(u) + ") not present");
}

int PlaneGraph::face_of(int u, int v) const {
    return edge_face_[u][pos_in_rot(u, v)];
}

int PlaneGraph::corner_face(int v, int i) const {
    // The corner between rot(v)[i] and rot(v)[i+1] lies on the face whose
    // walk contains ... rot(v)[i] -> v -> rot(v)[i+1] ...
    return face_of(v, rot_[v][(i + 1) % degree(v)]);
}

std::vector<int> PlaneGraph::faces_at(int v) const {
    std::vector<int> out;
    if (degree(v) == 0) {
        out.push_back(0);
        return out;
    }
    for (int i = 0; i < degree(v); ++i) out.push_back(edge_face_[v][i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int PlaneGraph::outer() const {
    check_arg(outer_ >= 0, "outer face (C0) is not designated");
    return outer_;
}

bool PlaneGraph::on_outer(int v) const {
    return faces_[outer()].contains(v);
}

void PlaneGraph::set_outer_face(int face_id) {
    check_arg(face_id >= 0 && face_id < static_cast<int>(faces_.size()),
              "outer face id out of range");
    outer_ = face_id;
}

namespace {

bool cyclic_match(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const size_t k = a.size();
    if (k == 0) return true;
    for (int dir : {1, -1})
        for (size_t s = 0; s < k; ++s) {
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i) {
                size_t j = (s + dir * i + dir * k * k) % k;
                if (a[i] != b[j]) ok = false;
            }
            if (ok) return true;
        }
    return false;
}

}  // namespace

void PlaneGraph::set_outer_walk(const std::vector<int>& walk) {
    for (const auto& f : faces_)
        if (cyclic_match(walk, f.walk)) {
            outer_ = f.id;
            return;
        }
    throw ArgError("outer walk does not match any traced face");
}

bool is_cycle_of(const AdjGraph& g, const std::vector<int>& cycle) {
    const size_t k = cycle.size();
    if (k < 3) return false;
    std::vector<int> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : cycle)
        if (v < 0 || v >= g.n()) return false;
    for (size_t i = 0; i < k; ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
    return true;
}

CycleRef classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    check_arg(is_cycle_of(g.skeleton(), cycle), "argument is not a simple cycle of the graph");
    const int outer = g.outer();

    std::vector<char> on_cycle(g.n(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    auto cycle_edge = [&](int u, int v) {
        if (!on_cycle[u] || !on_cycle[v]) return false;
        const size_t k = cycle.size();
        for (size_t i = 0; i < k; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % k];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    };

    // Union faces across every edge not on the cycle; the cycle leaves
    // exactly two regions (Jordan), and the outer face marks "exterior".
    const int nf = static_cast<int>(g.faces().size());
    std::vector<int> comp(nf);
    for (int i = 0; i < nf; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.rot(v)) {
            if (v > u || cycle_edge(v, u)) continue;
            int a = find(g.face_of(v, u));
            int b = find(g.face_of(u, v));
            if (a != b) comp[a] = b;
        }

    int ext_comp = find(outer);
    CycleRef ref;
    ref.cycle = cycle;
    for (int v = 0; v < g.n(); ++v) {
        if (on_cycle[v]) continue;
        int fc = find(g.faces_at(v).front());
        if (fc == ext_comp)
            ref.exterior.push_back(v);
        else
            ref.interior.push_back(v);
    }
    return ref;
}

// ---- text formats ------------------------------------------------------

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct ParsedText {
    bool plane = false;
    int n = 0;
    std::vector<std::vector<int>> rows;
    std::vector<int> outer;
    std::vector<std::pair<int, int>> precolor;
};

ParsedText parse_graph_text(const std::string& text) {
    ParsedText p;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        if (!header) {
            std::string kw;
            ls >> kw;
            if (kw == "vertices")
                p.plane = true;
            else if (kw == "graph")
                p.plane = false;
            else
                throw ParseError("expected 'vertices N' or 'graph N', got: " + s);
            if (!(ls >> p.n) || p.n < 1) throw ParseError("bad vertex count in header");
            p.rows.assign(p.n, {});
            seen.assign(p.n, 0);
            header = true;
            continue;
        }
        if (s.rfind("outer:", 0) == 0) {
            std::istringstream os(s.substr(6));
            int v;
            while (os >> v) p.outer.push_back(v);
            if (p.outer.empty()) throw ParseError("empty outer line");
            continue;
        }
        if (s.rfind("precolor:", 0) == 0) {
            std::istringstream os(s.substr(9));
            std::string tok;
            while (os >> tok) {
                size_t eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError("bad precolor token: " + tok);
                int v = std::stoi(tok.substr(0, eq));
                int c = std::stoi(tok.substr(eq + 1));
                if (c < 1 || c > 3) throw ParseError("precolor color out of range: " + tok);
                p.precolor.emplace_back(v, c);
            }
            continue;
        }
        size_t colon = s.find(':');
        if (colon == std::string::npos) throw ParseError("expected '<id>: neighbors', got: " + s);
        int id;
        try {
            id = std::stoi(s.substr(0, colon));
        } catch (...) {
            throw ParseError("bad vertex id in line: " + s);
        }
        if (id < 0 || id >= p.n) throw ParseError("vertex id out of range: " + std::to_string(id));
        if (seen[id]) throw ParseError("duplicate row for vertex " + std::to_string(id));
        seen[id] = 1;
        std::istringstream ns(s.substr(colon + 1));
        int u;
        while (ns >> u) p.rows[id].push_back(u);
        if (!ns.eof()) throw ParseError("bad neighbor list in line: " + s);
    }
    if (!header) throw ParseError("empty graph file");
    for (int v = 0; v < p.n; ++v)
        if (!seen[v]) throw ParseError("missing row for vertex " + std::to_string(v));
    return p;
}

}  // namespace

PlaneGraph load_plane_text(const std::string& text) {
    ParsedText p = parse_graph_text(text);
    if (!p.plane) throw ParseError("expected a plane-graph file ('vertices N' header)");
    try {
        PlaneGraph g = PlaneGraph::from_rotation(p.rows);
        if (!p.outer.empty()) g.set_outer_walk(p.outer);
        for (auto [v, c] : p.precolor)
            check_input(v >= 0 && v < g.n(), "precolor vertex out of range");
        g.set_precolors(std::move(p.precolor));
        return g;
    } catch (const ArgError& e) {
        throw ParseError(e.what());
    }
}

PlaneGraph load_plane(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_plane_text(ss.str());
}

PlaneGraph load_plane_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return load_plane(in);
}

AdjGraph load_abstract_text(const std::string& text) {
    ParsedText p = parse_graph_text(text);
    AdjGraph g(p.n);
    for (int v = 0; v < p.n; ++v)
        for (int u : p.rows[v]) {
            check_input(u >= 0 && u < p.n, "neighbor id out of range");
            check_input(u != v, "loop in adjacency list");
            if (v < u) g.add_edge(v, u);
        }
    // Symmetry check: every listed arc must have its reverse.
    for (int v = 0; v < p.n; ++v)
        for (int u : p.rows[v])
            check_input(std::find(p.rows[u].begin(), p.rows[u].end(), v) != p.rows[u].end(),
                        "asymmetric adjacency between " + std::to_string(v) + " and " +
                            std::to_string(u));
    return g;
}

LoadedGraph load_auto_text(const std::string& text) {
    ParsedText p = parse_graph_text(text);
    LoadedGraph out;
    if (p.plane)
        out.plane = load_plane_text(text);
    else
        out.abstract_graph = load_abstract_text(text);
    return out;
}

LoadedGraph load_auto_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_auto_text(ss.str());
}

std::string to_pg(const PlaneGraph& g) {
    std::ostringstream out;
    out << "vertices " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << v << ":";
        for (int u : g.rot(v)) out << " " << u;
        out << "\n";
    }
    if (g.has_outer()) {
        out << "outer:";
        for (int v : g.outer_face().walk) out << " " << v;
        out << "\n";
    }
    if (!g.precolors().empty()) {
        out << "precolor:";
        for (auto [v, c] : g.precolors()) out << " " << v << "=" << c;
        out << "\n";
    }
    return out.str();
}

std::string to_adj_text(const AdjGraph& g) {
    std::ostringstream out;
    out << "graph " << g.n() << "\n";
    for (int v = 0; v < g.n(); ++v) {
        out << v << ":";
        for (int u : g.neighbors(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

}  // namespace pgt
