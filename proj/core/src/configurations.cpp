#include "pgt/configurations.hpp"

#include <algorithm>
#include <set>

#include "pgt/errors.hpp"

namespace pgt {

std::vector<Element> ConfigurationMatch::elements() const {
    std::vector<Element> out;
    for (const auto& [r, v] : vroles) out.push_back(vert_el(v));
    for (const auto& [r, f] : froles) out.push_back(face_el(f));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool ConfigurationMatch::covers(const Element& e) const {
    auto els = elements();
    return std::binary_search(els.begin(), els.end(), e);
}

std::string ConfigurationMatch::key() const {
    std::string k = lemma;
    for (const auto& e : elements()) k += "|" + element_key(e);
    return k;
}

namespace {

struct Scanner {
    const PlaneGraph& g;
    const Taxonomy& tax;
    std::vector<ConfigurationMatch> out;
    std::set<std::string> seen;

    int deg(int v) const { return g.degree(v); }
    bool internal(int v) const { return !tax.vert[v].on_c0; }
    bool tri(int v) const { return tax.vert[v].triangle_incident; }
    bool is_f3(int f) const {
        return g.face(f).degree() == 3 && tax.face[f].fclass == FClass::internal;
    }
    bool is_f4(int f) const {
        return g.face(f).degree() == 4 && tax.face[f].fclass == FClass::internal;
    }
    int tri_count(std::initializer_list<int> vs) const {
        int c = 0;
        for (int v : vs)
            if (tri(v)) ++c;
        return c;
    }
    bool parts_ok(const std::vector<std::vector<int>>& parts) const {
        for (const auto& p : parts)
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = i + 1; j < p.size(); ++j)
                    if (g.skeleton().has_edge(p[i], p[j])) return false;
        return true;
    }

    void emit(ConfigurationMatch m) {
        // Survivor roles outside the identified parts may be recolored by
        // the completion step.
        if (m.has_recipe()) {
            std::set<int> fixed(m.recipe.del.begin(), m.recipe.del.end());
            for (const auto& p : m.recipe.parts) fixed.insert(p.begin(), p.end());
            std::set<int> free;
            for (const auto& [r, v] : m.vroles)
                if (!fixed.count(v) && !tax.vert[v].on_c0) free.insert(v);
            m.free_vertices.assign(free.begin(), free.end());
        }
        if (seen.insert(m.key()).second) out.push_back(std::move(m));
    }

    // Opposite vertex of v on a simple 4-face.
    int opposite(int fid, int v) const {
        const auto& w = g.face(fid).walk;
        for (int i = 0; i < 4; ++i)
            if (w[i] == v) return w[(i + 2) % 4];
        throw InternalError("vertex not on face");
    }

    void prop31a() {
        for (int v = 0; v < g.n(); ++v)
            if (internal(v) && deg(v) <= 2) {
                ConfigurationMatch m;
                m.lemma = "prop-3-1-a";
                m.vroles = {{"v", v}};
                // The configuration is the vertex together with its faces:
                // the reduction deletes v and rewrites exactly those.
                for (int f : g.faces_at(v)) m.froles.emplace_back("f", f);
                emit(std::move(m));
            }
    }

    void prop31b() {
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> f3s;
            for (int f : tax.vert[v].faces)
                if (g.face(f).degree() == 3) f3s.push_back(f);
            if (f3s.size() >= 2) {
                ConfigurationMatch m;
                m.lemma = "prop-3-1-b";
                m.vroles = {{"v", v}};
                for (int f : f3s) m.froles.emplace_back("f", f);
                emit(std::move(m));
            }
        }
    }

    void prop31c() {
        for (int v = 0; v < g.n(); ++v)
            for (int u : g.rot(v)) {
                if (v > u) continue;
                int f1 = g.face_of(v, u), f2 = g.face_of(u, v);
                int d1 = g.face(f1).degree(), d2 = g.face(f2).degree();
                if ((d1 == 3 && d2 == 4) || (d1 == 4 && d2 == 3)) {
                    ConfigurationMatch m;
                    m.lemma = "prop-3-1-c";
                    m.vroles = {{"u", v}, {"v", u}};
                    m.froles = {{"f3", d1 == 3 ? f1 : f2}, {"f4", d1 == 4 ? f1 : f2}};
                    emit(std::move(m));
                }
            }
    }

    void separating_cycles() {
        auto audit = separating_cycle_audit(g);
        auto cyc_match = [&](const char* lemma, const std::vector<int>& cyc) {
            ConfigurationMatch m;
            m.lemma = lemma;
            for (size_t i = 0; i < cyc.size(); ++i)
                m.vroles.emplace_back("c" + std::to_string(i), cyc[i]);
            emit(std::move(m));
        };
        for (const auto& f : audit.triangles) cyc_match("separating-cycle", f.cycle);
        for (const auto& f : audit.seven_cycles) cyc_match("separating-cycle", f.cycle);
        bool unique = audit.four_cycles.size() <= 1;
        for (const auto& f : audit.four_cycles)
            if (!f.shape_ok || !unique) cyc_match("separating-4-cycle", f.cycle);
    }

    void c0_chords() {
        const auto& c0 = g.face(tax.c0).walk;
        const size_t k = c0.size();
        std::set<std::pair<int, int>> c0_edges;
        for (size_t i = 0; i < k; ++i) {
            int a = c0[i], b = c0[(i + 1) % k];
            c0_edges.insert({std::min(a, b), std::max(a, b)});
        }
        const auto& verts = g.outer_face().verts;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                int x = verts[i], y = verts[j];
                if (c0_edges.count({x, y})) continue;
                if (g.skeleton().has_edge(x, y)) {
                    ConfigurationMatch m;
                    m.lemma = "c0-chord";
                    m.vroles = {{"x", x}, {"y", y}};
                    m.froles = {{"f1", g.face_of(x, y)}, {"f2", g.face_of(y, x)}};
                    emit(std::move(m));
                }
                for (int z : g.skeleton().neighbors(x)) {
                    if (internal(z) && g.skeleton().has_edge(y, z)) {
                        ConfigurationMatch m;
                        m.lemma = "c0-chord";
                        m.vroles = {{"x", x}, {"y", y}, {"z", z}};
                        // Faces at the common neighbor's two spokes; a face
                        // starved by the forbidden shape flanks one of them.
                        std::set<int> fs{g.face_of(x, z), g.face_of(z, x),
                                         g.face_of(y, z), g.face_of(z, y)};
                        int idx = 0;
                        for (int f : fs) m.froles.emplace_back("f" + std::to_string(idx++), f);
                        emit(std::move(m));
                    }
                }
            }
    }

    void diagonal_identification() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 4 || !f.simple() || f.id == tax.c0) continue;
            for (int d = 0; d < 2; ++d) {
                int u = f.walk[d], w = f.walk[d + 2];
                if (g.skeleton().has_edge(u, w)) continue;
                if (tri(u) && tri(w)) continue;
                ConfigurationMatch m;
                m.lemma = "diagonal-identification";
                m.violation = false;
                m.vroles = {{"u", u}, {"w", w}};
                m.froles = {{"f", f.id}};
                m.recipe.parts = {{u, w}};
                emit(std::move(m));
            }
        }
    }

    void four_face_1() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 4 || !f.simple() || tax.face[f.id].fclass != FClass::one)
                continue;
            int u = -1;
            for (int v : f.verts)
                if (!internal(v)) u = v;
            check_internal(u >= 0, "F4' face without a C0 vertex");
            int w = opposite(f.id, u);
            if (tri(u) && tri(w)) continue;
            int p = f.walk[(std::find(f.walk.begin(), f.walk.end(), u) - f.walk.begin() + 1) % 4];
            int q = f.walk[(std::find(f.walk.begin(), f.walk.end(), u) - f.walk.begin() + 3) % 4];
            ConfigurationMatch m;
            m.lemma = "4-face-1";
            m.vroles = {{"u", u}, {"w", w}, {"a", p}, {"b", q}};
            m.froles = {{"f", f.id}};
            if (!g.skeleton().has_edge(u, w)) m.recipe.parts = {{u, w}};
            emit(std::move(m));
        }
    }

    void four_face_2() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 4 || !f.simple() || !is_f4(f.id)) continue;
            for (int d = 0; d < 2; ++d) {
                int u = f.walk[d], w = f.walk[d + 2];
                int v = f.walk[d + 1], x = f.walk[(d + 3) % 4];
                if (deg(u) != 3 || deg(w) != 3) continue;
                if (tri(v) && tri(x)) continue;
                ConfigurationMatch m;
                m.lemma = "4-face-2";
                m.vroles = {{"u", u}, {"v", v}, {"w", w}, {"x", x}};
                m.froles = {{"f", f.id}};
                if (!g.skeleton().has_edge(v, x)) m.recipe.parts = {{v, x}};
                emit(std::move(m));
            }
        }
    }

    void no_333() {
        for (int u = 0; u < g.n(); ++u) {
            if (!internal(u) || deg(u) != 3) continue;
            for (int v : g.rot(u)) {
                if (v < u || !internal(v) || deg(v) != 3) continue;
                auto witness = [&](int w) {
                    if (w == u || w == v || !internal(w) || deg(w) != 3) return;
                    ConfigurationMatch m;
                    m.lemma = "no-333-path";
                    m.vroles = {{"u", u}, {"v", v}, {"w", w}};
                    m.recipe.del = {u, v};
                    emit(std::move(m));
                };
                for (int w : g.rot(u)) witness(w);
                for (int w : g.rot(v)) witness(w);
            }
        }
    }

    void three_face_1() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 3 || !is_f3(f.id)) continue;
            std::vector<int> threes, rest;
            for (int v : f.walk)
                (deg(v) == 3 ? threes : rest).push_back(v);
            if (threes.size() < 2) continue;
            int u, v, w;
            if (threes.size() == 3) {
                u = threes[0], v = threes[1], w = threes[2];
            } else {
                u = threes[0], v = threes[1], w = rest[0];
                if (deg(w) > 4) continue;
            }
            ConfigurationMatch m;
            m.lemma = "3-face-1";
            m.vroles = {{"u", u}, {"v", v}, {"w", w}};
            m.froles = {{"f", f.id}};
            m.recipe.del = {u, v};
            emit(std::move(m));
        }
    }

    int pendant_neighbor(const Face& f, int v) const {
        // The unique neighbor of a 3-vertex on a 3-face that is off the face.
        for (int u : g.rot(v))
            if (!f.contains(u)) return u;
        return -1;
    }

    void three_face_2() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 3 || !is_f3(f.id)) continue;
            if (!face_matches(g, f.id, {deg3_spec(), deg3_spec(), deg_plus(5)})) continue;
            std::vector<int> threes;
            int w = -1;
            for (int v : f.walk) {
                if (deg(v) == 3)
                    threes.push_back(v);
                else
                    w = v;
            }
            for (int t : threes) {
                int tp = pendant_neighbor(f, t);
                if (tp < 0 || !internal(tp) || deg(tp) != 3) continue;
                ConfigurationMatch m;
                m.lemma = "3-face-2";
                m.vroles = {{"u", threes[0]}, {"v", threes[1]}, {"w", w}, {"u_prime", tp}};
                m.froles = {{"f", f.id}};
                m.recipe.del = {threes[0], threes[1]};
                emit(std::move(m));
            }
        }
    }

    void three_face_3() {
        for (const auto& f : g.faces()) {
            if (f.degree() != 3 || !is_f3(f.id)) continue;
            if (!face_matches(g, f.id, {deg3_spec(), deg_exact(4), deg_exact(4)})) continue;
            int u = -1, v = -1, w = -1;
            for (int x : f.walk) {
                if (deg(x) == 3) u = x;
                else if (v < 0) v = x;
                else w = x;
            }
            int up = pendant_neighbor(f, u);
            if (up >= 0 && internal(up) && deg(up) == 3) {
                ConfigurationMatch m;
                m.lemma = "3-face-3";
                m.vroles = {{"u", u}, {"v", v}, {"w", w}, {"u_prime", up}};
                m.froles = {{"f", f.id}};
                m.recipe.del = {u, up};
                emit(std::move(m));
            }
            for (int y : {v, w}) {
                std::vector<int> off;
                for (int z : g.rot(y))
                    if (!f.contains(z)) off.push_back(z);
                if (off.size() != 2) continue;
                if (internal(off[0]) && deg(off[0]) <= 3 && internal(off[1]) &&
                    deg(off[1]) <= 3) {
                    ConfigurationMatch m;
                    m.lemma = "3-face-3";
                    m.vroles = {{"u", u}, {"v", y}, {"w", y == v ? w : v},
                                {"v1", off[0]}, {"v2", off[1]}};
                    m.froles = {{"f", f.id}};
                    m.recipe.del = {u, v, w, off[0], off[1]};
                    emit(std::move(m));
                }
            }
        }
    }

    static DegSpec deg3_spec() { return pgt::deg(3); }
    static DegSpec deg_exact(int k) { return pgt::deg(k); }

    void three_face_and_four_face() {
        for (int v = 0; v < g.n(); ++v) {
            if (!internal(v)) continue;
            const int d = deg(v);
            if (d != 4 && d != 5) continue;
            for (int i = 0; i < d; ++i) {
                int f3 = g.corner_face(v, i);
                if (!is_f3(f3)) continue;
                int v1 = g.rot(v)[i], v2 = g.rot(v)[(i + 1) % d];
                if (d == 4) {
                    if (!face_matches(g, f3, {deg_exact(3), deg_exact(4), deg_exact(4)}, v))
                        continue;
                    for (int j = 0; j < d; ++j) {
                        if (j == i) continue;
                        int f4 = g.corner_face(v, j);
                        if (!is_f4(f4) || !g.face(f4).simple() || f4 == f3) continue;
                        int v3 = g.rot(v)[j], v4 = g.rot(v)[(j + 1) % d];
                        int u = opposite(f4, v);
                        if (deg(u) != 3) continue;
                        if (tri(v3) && tri(v4)) continue;
                        ConfigurationMatch m;
                        m.lemma = "3-face-4-face-1";
                        m.vroles = {{"v", v}, {"v1", v1}, {"v2", v2},
                                    {"v3", v3}, {"v4", v4}, {"u", u}};
                        m.froles = {{"f1", f3}, {"f2", f4}};
                        if (!g.skeleton().has_edge(v3, v4)) {
                            m.recipe.parts = {{v3, v4}};
                            m.recipe.del = {v, v1, v2, u};
                        }
                        emit(std::move(m));
                    }
                } else {
                    if (!face_matches(g, f3, {deg_exact(3), deg_minus(4), deg_exact(5)}, v))
                        continue;
                    for (int j = 0; j < d; ++j) {
                        int ja = j, jb = (j + 1) % d;
                        if (ja == i || jb == i) continue;
                        int fa = g.corner_face(v, ja), fb = g.corner_face(v, jb);
                        if (!is_f4(fa) || !is_f4(fb) || fa == fb) continue;
                        if (!g.face(fa).simple() || !g.face(fb).simple()) continue;
                        int v3 = g.rot(v)[ja], v4 = g.rot(v)[jb], v5 = g.rot(v)[(jb + 1) % d];
                        int u = opposite(fa, v), w = opposite(fb, v);
                        if (deg(u) != 3 || deg(w) != 3) continue;
                        if (tri_count({v3, v4, v5}) >= 2) continue;
                        ConfigurationMatch m;
                        m.lemma = "3-face-4-face-2";
                        m.vroles = {{"v", v}, {"v1", v1}, {"v2", v2}, {"v3", v3},
                                    {"v4", v4}, {"v5", v5}, {"u", u}, {"w", w}};
                        m.froles = {{"f1", f3}, {"f2", fa}, {"f3", fb}};
                        std::vector<std::vector<int>> parts = {{v3, v4, v5}};
                        if (parts_ok(parts)) {
                            m.recipe.parts = parts;
                            m.recipe.del = {v, u, w};
                        }
                        emit(std::move(m));
                    }
                }
            }
        }
    }

    bool shares_edge_pair(int v) const {
        for (int i = 0; i < deg(v); ++i) {
            int fa = g.corner_face(v, i), fb = g.corner_face(v, (i + 1) % deg(v));
            if (fa != fb && g.face(fa).degree() == 4 && g.face(fb).degree() == 4)
                return true;
        }
        return false;
    }

    void t_path() {
        for (int v = 0; v < g.n(); ++v) {
            if (!internal(v) || deg(v) != 4 || !shares_edge_pair(v)) continue;
            for (int k = 0; k < 2; ++k) {
                int a = g.rot(v)[k], b = g.rot(v)[k + 2];
                auto path = short_path(a, b, v);
                if (path.empty()) continue;
                ConfigurationMatch m;
                m.lemma = "t-path";
                m.vroles = {{"v", v}, {"a", a}, {"b", b}};
                for (size_t i = 1; i + 1 < path.size(); ++i)
                    m.vroles.emplace_back("p" + std::to_string(i), path[i]);
                emit(std::move(m));
            }
        }
    }

    // First simple a-b path with t in {1,2,3,5} edges avoiding `avoid`.
    std::vector<int> short_path(int a, int b, int avoid) const {
        for (int t : {1, 2, 3, 5}) {
            std::vector<int> path{a};
            std::vector<char> used(g.n(), 0);
            used[a] = 1;
            used[avoid] = 1;
            if (dfs_path(path, used, b, t)) return path;
        }
        return {};
    }

    bool dfs_path(std::vector<int>& path, std::vector<char>& used, int goal,
                  int t) const {
        int cur = path.back();
        if (static_cast<int>(path.size()) == t) {
            if (g.skeleton().has_edge(cur, goal)) {
                path.push_back(goal);
                return true;
            }
            return false;
        }
        for (int w : g.rot(cur)) {
            if (used[w] || w == goal) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs_path(path, used, goal, t)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }

    // Corner faces around an internal poor vertex in paper labeling:
    // f_i = v v_i u_i v_{i+1}. Returns false when the picture is not clean
    // (faces repeated or boundary walks not simple).
    bool wheel(int v, std::vector<int>& vs, std::vector<int>& us,
               std::vector<int>& fs) const {
        const int d = deg(v);
        vs.resize(d);
        us.resize(d);
        fs.resize(d);
        std::set<int> distinct;
        for (int i = 0; i < d; ++i) {
            vs[i] = g.rot(v)[i];
            fs[i] = g.corner_face(v, i);
            distinct.insert(fs[i]);
            const Face& f = g.face(fs[i]);
            if (f.degree() != 4 || !f.simple() || !is_f4(fs[i])) return false;
            us[i] = opposite(fs[i], v);
        }
        return static_cast<int>(distinct.size()) == d;
    }

    bool behaved_at(int x, int ua, int ub) const {
        if (deg(x) != 4) return false;
        int ia = g.pos_in_rot(x, ua), ib = g.pos_in_rot(x, ub);
        if ((ia + 2) % 4 != ib && (ib + 2) % 4 != ia) return false;
        return tri_count({ua, ub}) <= 1;
    }

    // degree 3, or degree 4 and behaved on the flanking opposite pair.
    bool soft(int x, int ua, int ub) const {
        return deg(x) == 3 || (deg(x) == 4 && behaved_at(x, ua, ub));
    }

    void poor4_lemma() {
        for (int v = 0; v < g.n(); ++v) {
            if (!internal(v) || deg(v) != 4 || !tax.vert[v].poor) continue;
            std::vector<int> vs, us, fs;
            if (!wheel(v, vs, us, fs)) continue;
            for (int s = 0; s < 4; ++s)
                for (int dir : {1, -1}) {
                    auto V = [&](int t) { return vs[((s + dir * t) % 4 + 4) % 4]; };
                    auto U = [&](int t) {
                        int idx = dir == 1 ? s + t : s - t - 1;
                        return us[((idx % 4) + 4) % 4];
                    };
                    auto F = [&](int t) {
                        int idx = dir == 1 ? s + t : s - t - 1;
                        return fs[((idx % 4) + 4) % 4];
                    };
                    if (tri_count({V(0), V(2)}) > 1) continue;        // (v1,v3)-behaved
                    if (!soft(V(1), U(0), U(1))) continue;            // hypothesis side
                    if (!soft(V(3), U(2), U(3))) continue;            // violated conclusion
                    ConfigurationMatch m;
                    m.lemma = "poor-4";
                    m.vroles = {{"v", v}};
                    for (int t = 0; t < 4; ++t) {
                        m.vroles.emplace_back("v" + std::to_string(t + 1), V(t));
                        m.vroles.emplace_back("u" + std::to_string(t + 1), U(t));
                        m.froles.emplace_back("f" + std::to_string(t + 1), F(t));
                    }
                    Recipe r;
                    if (deg(V(1)) == 3 && deg(V(3)) == 3) {
                        r.del = {v};
                        r.parts = {{V(0), V(2)}};
                    } else if (deg(V(1)) == 3) {
                        r.del = {v, V(3)};
                        r.parts = {{V(0), V(2)}, {U(2), U(3)}};
                    } else if (deg(V(3)) == 3) {
                        r.del = {v, V(1)};
                        r.parts = {{V(0), V(2)}, {U(0), U(1)}};
                    } else {
                        r.del = {v, V(1), V(3)};
                        r.parts = {{U(0), U(1)}, {V(0), V(2)}, {U(2), U(3)}};
                    }
                    if (parts_ok(r.parts)) m.recipe = std::move(r);
                    emit(std::move(m));
                }
        }
    }

    void poor5_lemmas() {
        for (int v = 0; v < g.n(); ++v) {
            if (!internal(v) || deg(v) != 5 || !tax.vert[v].poor) continue;
            std::vector<int> vs, us, fs;
            if (!wheel(v, vs, us, fs)) continue;
            int tri_nbrs = tri_count({vs[0], vs[1], vs[2], vs[3], vs[4]});
            if (tri_nbrs > 1) continue;
            for (int s = 0; s < 5; ++s)
                for (int dir : {1, -1}) {
                    auto V = [&](int t) { return vs[((s + dir * t) % 5 + 5) % 5]; };
                    auto U = [&](int t) {
                        int idx = dir == 1 ? s + t : s - t - 1;
                        return us[((idx % 5) + 5) % 5];
                    };
                    auto F = [&](int t) {
                        int idx = dir == 1 ? s + t : s - t - 1;
                        return fs[((idx % 5) + 5) % 5];
                    };
                    auto base_roles = [&](ConfigurationMatch& m) {
                        m.vroles = {{"v", v}};
                        for (int t = 0; t < 5; ++t) {
                            m.vroles.emplace_back("v" + std::to_string(t + 1), V(t));
                            m.vroles.emplace_back("u" + std::to_string(t + 1), U(t));
                            m.froles.emplace_back("f" + std::to_string(t + 1), F(t));
                        }
                    };

                    // (1): u_i and v_i both 3-vertices force every other
                    // u_j up to degree 4.
                    if (deg(U(0)) == 3 && deg(V(0)) == 3)
                        for (int t = 1; t < 5; ++t) {
                            if (deg(U(t)) != 3) continue;
                            ConfigurationMatch m;
                            m.lemma = "poor-5-1";
                            base_roles(m);
                            Recipe r;
                            if (t == 4) {
                                r.del = {V(0), U(0)};  // adjacent 3-vertices
                            } else {
                                r.del = {v};
                                r.parts = {{V(t), V((t + 1) % 5), V((t + 3) % 5)}};
                            }
                            if (parts_ok(r.parts)) m.recipe = std::move(r);
                            emit(std::move(m));
                        }

                    // (2): at most two of the u_i may be 3-vertices.
                    if (deg(U(0)) == 3 && deg(U(1)) == 3 &&
                        (deg(U(2)) == 3 || deg(U(3)) == 3)) {
                        ConfigurationMatch m;
                        m.lemma = "poor-5-2";
                        base_roles(m);
                        Recipe r;
                        if (deg(U(2)) == 3)
                            r.parts = {{V(0), V(1), V(2), V(3)}};
                        else
                            r.parts = {{V(0), V(1), V(2)}, {V(3), V(4)}};
                        if (parts_ok(r.parts)) m.recipe = std::move(r);
                        emit(std::move(m));
                    }

                    // (3): with u_i a 3-vertex, the positions i-1 and i+2
                    // cannot both be soft.
                    if (deg(U(0)) == 3 && soft(V(4), U(3), U(4)) &&
                        soft(V(2), U(1), U(2))) {
                        ConfigurationMatch m;
                        m.lemma = "poor-5-3";
                        base_roles(m);
                        Recipe r;
                        r.del = {U(0)};
                        r.parts = {{V(0), V(1)}};
                        if (parts_ok(r.parts)) m.recipe = std::move(r);
                        emit(std::move(m));
                    }
                }
        }
    }

    void behaved_lemmas() {
        for (int v = 0; v < g.n(); ++v) {
            if (!internal(v) || deg(v) != 4) continue;
            auto corner = [&](int i) { return g.corner_face(v, ((i % 4) + 4) % 4); };
            auto rotv = [&](int i) { return g.rot(v)[((i % 4) + 4) % 4]; };

            // (1) consecutive F4 faces, both opposite vertices of degree 3.
            for (int i = 0; i < 4; ++i) {
                int fa = corner(i), fb = corner(i + 1);
                if (fa == fb || !is_f4(fa) || !is_f4(fb)) continue;
                if (!g.face(fa).simple() || !g.face(fb).simple()) continue;
                int a = rotv(i), b = rotv(i + 1), c = rotv(i + 2);
                int p = opposite(fa, v), q = opposite(fb, v);
                if (tri_count({a, b, c}) > 1) continue;
                if (deg(p) != 3 || deg(q) != 3) continue;
                ConfigurationMatch m;
                m.lemma = "behaved-1";
                m.vroles = {{"v", v}, {"v_i", a}, {"v_i1", b}, {"v_i2", c},
                            {"u_i", p}, {"u_i1", q}};
                m.froles = {{"f_i", fa}, {"f_i1", fb}};
                std::vector<std::vector<int>> parts = {{a, b, c}};
                if (parts_ok(parts)) m.recipe.parts = parts;
                emit(std::move(m));
            }

            // (2) opposite F4 faces, both opposite vertices of degree 3.
            for (int i = 0; i < 4; ++i) {
                int fa = corner(i), fc = corner(i + 2);
                if (fa == fc || !is_f4(fa) || !is_f4(fc)) continue;
                if (!g.face(fa).simple() || !g.face(fc).simple()) continue;
                int a = rotv(i), b = rotv(i + 1), c = rotv(i + 2), dd = rotv(i + 3);
                int p = opposite(fa, v), q = opposite(fc, v);
                if (tri_count({a, b}) > 1 || tri_count({c, dd}) > 1) continue;
                if (deg(p) != 3 || deg(q) != 3) continue;
                ConfigurationMatch m;
                m.lemma = "behaved-2";
                m.vroles = {{"v", v}, {"v_i", a}, {"v_i1", b}, {"v_i2", c},
                            {"v_i3", dd}, {"u_i", p}, {"u_i2", q}};
                m.froles = {{"f_i", fa}, {"f_i2", fc}};
                std::vector<std::vector<int>> parts = {{a, b}, {c, dd}};
                if (parts_ok(parts)) m.recipe.parts = parts;
                emit(std::move(m));
            }

            // (3) two (3,3,4,4+)-faces from F4 at one 4-vertex.
            std::vector<int> bad;
            for (int i = 0; i < 4; ++i) {
                int f = corner(i);
                if (is_f4(f) && g.face(f).simple() &&
                    face_matches(g, f, {deg_exact(3), deg_exact(3), deg_exact(4), deg_plus(4)},
                                 v) &&
                    std::find(bad.begin(), bad.end(), f) == bad.end())
                    bad.push_back(f);
            }
            if (bad.size() >= 2) {
                ConfigurationMatch m;
                m.lemma = "behaved-3";
                m.vroles = {{"v", v}};
                for (size_t t = 0; t < bad.size(); ++t) {
                    m.froles.emplace_back("f" + std::to_string(t + 1), bad[t]);
                    for (int x : g.face(bad[t]).verts)
                        if (x != v)
                            m.vroles.emplace_back(
                                "w" + std::to_string(t + 1) + "_" + std::to_string(x), x);
                }
                m.recipe = behaved3_recipe(v);
                emit(std::move(m));
            }

            // (4) edge-sharing 4-faces at a doubly behaved vertex, one of
            // them a (3,3,4,4+)-face from F4.
            bool doubly = tri_count({rotv(0), rotv(2)}) <= 1 &&
                          tri_count({rotv(1), rotv(3)}) <= 1;
            if (doubly)
                for (int i = 0; i < 4; ++i) {
                    int fa = corner(i), fb = corner(i + 1);
                    if (fa == fb || g.face(fa).degree() != 4 || g.face(fb).degree() != 4)
                        continue;
                    for (int f : {fa, fb}) {
                        if (!is_f4(f) || !g.face(f).simple() ||
                            !face_matches(g, f,
                                          {deg_exact(3), deg_exact(3), deg_exact(4),
                                           deg_plus(4)},
                                          v))
                            continue;
                        // Identify the diagonal pair of v's neighborhood
                        // avoiding the face's 3-vertices.
                        int pos = -1;
                        for (int t = 0; t < 4; ++t)
                            if (g.face(f).contains(rotv(t)) && deg(rotv(t)) == 3) pos = t;
                        if (pos < 0) continue;  // the two 3s are u and the far one
                        int keep1 = rotv(pos + 1), keep2 = rotv(pos + 3);
                        if (!g.face(f).contains(keep1) && !g.face(f).contains(keep2))
                            continue;
                        ConfigurationMatch m;
                        m.lemma = "behaved-4";
                        m.vroles = {{"v", v}, {"v1", rotv(0)}, {"v2", rotv(1)},
                                    {"v3", rotv(2)}, {"v4", rotv(3)},
                                    {"u1", opposite(f, v)}};
                        m.froles = {{"f1", f}, {"f2", f == fa ? fb : fa}};
                        std::vector<std::vector<int>> parts = {{keep1, keep2}};
                        if (parts_ok(parts)) {
                            m.recipe.parts = parts;
                            m.recipe.del = {v};
                        }
                        emit(std::move(m));
                    }
                }
        }
    }

    Recipe behaved3_recipe(int v) {
        auto corner = [&](int i) { return g.corner_face(v, ((i % 4) + 4) % 4); };
        auto rotv = [&](int i) { return g.rot(v)[((i % 4) + 4) % 4]; };
        auto bad34 = [&](int f) {
            return is_f4(f) && g.face(f).simple() &&
                   face_matches(g, f,
                                {deg_exact(3), deg_exact(3), deg_exact(4), deg_plus(4)}, v);
        };
        // Adjacent pair first.
        for (int i = 0; i < 4; ++i) {
            int fa = corner(i), fb = corner(i + 1);
            if (fa == fb || !bad34(fa) || !bad34(fb)) continue;
            int v2 = rotv(i + 1);
            int u1 = opposite(fa, v), u2 = opposite(fb, v);
            Recipe r;
            if (deg(v2) == 3) {
                r.del = {u1, v2};
            } else {
                r.parts = {{rotv(i), v2, rotv(i + 2)}};
                if (!parts_ok(r.parts)) r = {};
            }
            if (!r.empty() || deg(v2) == 3) return r;
        }
        for (int i = 0; i < 2; ++i) {
            int fa = corner(i), fc = corner(i + 2);
            if (fa == fc || !bad34(fa) || !bad34(fc)) continue;
            Recipe r;
            r.parts = {{rotv(i), rotv(i + 1)}, {rotv(i + 2), rotv(i + 3)}};
            if (parts_ok(r.parts)) return r;
        }
        return {};
    }

    void trivial_c0() {
        if (static_cast<int>(g.outer_face().verts.size()) != g.n()) return;
        ConfigurationMatch m;
        m.lemma = "trivial-c0";
        for (int v = 0; v < g.n(); ++v) m.vroles.emplace_back("v" + std::to_string(v), v);
        for (const auto& f : g.faces()) m.froles.emplace_back("f" + std::to_string(f.id), f.id);
        emit(std::move(m));
    }

    void run() {
        prop31a();
        prop31b();
        prop31c();
        separating_cycles();
        c0_chords();
        diagonal_identification();
        four_face_1();
        four_face_2();
        no_333();
        three_face_1();
        three_face_2();
        three_face_3();
        three_face_and_four_face();
        t_path();
        behaved_lemmas();
        poor4_lemma();
        poor5_lemmas();
        trivial_c0();
    }
};

}  // namespace

std::vector<ConfigurationMatch> scan(const PlaneGraph& g, const Taxonomy& tax) {
    Scanner s{g, tax};
    s.run();
    return std::move(s.out);
}

std::vector<ConfigurationMatch> scan(const PlaneGraph& g) {
    Taxonomy tax = classify(g);
    return scan(g, tax);
}

std::vector<ConfigurationMatch> explain_negative_charge(
    const std::vector<ConfigurationMatch>& scanned, const Element& element) {
    std::vector<ConfigurationMatch> out;
    for (const auto& m : scanned)
        if (m.violation && m.covers(element)) out.push_back(m);
    return out;
}

const std::vector<std::string>& plantable_lemmas() {
    static const std::vector<std::string> ids = {
        "no-333-path",     "3-face-1",        "3-face-2",        "3-face-3",
        "3-face-4-face-1", "3-face-4-face-2", "behaved-1",       "behaved-2",
        "behaved-3",       "behaved-4",       "poor-4",          "poor-5-1",
        "poor-5-2",        "poor-5-3",        "4-face-1",        "4-face-2",
        "diagonal-identification"};
    return ids;
}

}  // namespace pgt
