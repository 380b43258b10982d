#include "pgt/taxonomy.hpp"

#include <algorithm>

#include "pgt/errors.hpp"

namespace pgt {

bool face_matches(const PlaneGraph& g, int face_id, const FacePattern& pat, int anchor) {
    const Face& f = g.face(face_id);
    const int k = f.degree();
    if (k != static_cast<int>(pat.size())) return false;
    for (int dir : {1, -1}) {
        for (int s = 0; s < k; ++s) {
            bool ok = true;
            bool anchored = anchor < 0;
            for (int i = 0; i < k && ok; ++i) {
                int v = f.walk[((s + dir * i) % k + k) % k];
                if (!pat[i].ok(g.degree(v))) ok = false;
                else if (v == anchor) anchored = true;
            }
            if (ok && anchored) return true;
        }
    }
    return false;
}

bool behaved_pair(const PlaneGraph& g, const Taxonomy& tax, int v, int a, int b) {
    check_arg(g.degree(v) == 4, "behaved is defined for 4-vertices");
    int ia = g.pos_in_rot(v, a), ib = g.pos_in_rot(v, b);
    check_arg((ia + 2) % 4 == ib || (ib + 2) % 4 == ia,
              "behaved pair must be rotation-opposite");
    return !(tax.vert[a].triangle_incident && tax.vert[b].triangle_incident);
}

Taxonomy classify(const PlaneGraph& g) {
    Taxonomy tax;
    tax.c0 = g.outer();
    tax.c0_verts = g.outer_face().verts;

    const int n = g.n();
    const int nf = static_cast<int>(g.faces().size());
    tax.vert.resize(n);
    tax.face.resize(nf);

    for (const auto& t : triangles(g.skeleton()))
        for (int v : t) tax.vert[v].triangle_incident = true;

    for (int v = 0; v < n; ++v) {
        auto& vt = tax.vert[v];
        vt.degree = g.degree(v);
        vt.on_c0 = g.on_outer(v);
        vt.faces = g.faces_at(v);
        if (vt.on_c0) {
            if (vt.degree == 2) ++tax.t2;
            if (vt.degree == 3) ++tax.t3;
            if (vt.degree == 4) ++tax.t4;
        }
    }

    for (int fid = 0; fid < nf; ++fid) {
        const Face& f = g.face(fid);
        auto& ft = tax.face[fid];
        if (fid == tax.c0) {
            ft.fclass = FClass::outer;
            continue;
        }
        int meet = 0;
        for (int v : f.verts)
            if (tax.vert[v].on_c0) ++meet;
        ft.fclass = meet == 0   ? FClass::internal
                    : meet == 1 ? FClass::one
                    : meet == 2 ? FClass::two
                                : FClass::heavy;
        if (f.degree() == 3)
            for (int v : f.verts) tax.vert[v].facial_triangle_incident = true;
    }

    // Poor vertices: internal 4-/5-vertices whose every corner is a
    // distinct internal 4-face.
    for (int v = 0; v < n; ++v) {
        auto& vt = tax.vert[v];
        for (int fid : vt.faces)
            if (g.face(fid).degree() == 4 && tax.face[fid].fclass == FClass::internal)
                ++vt.f4_internal;
        vt.poor = !vt.on_c0 && (vt.degree == 4 || vt.degree == 5) &&
                  vt.f4_internal == vt.degree &&
                  static_cast<int>(vt.faces.size()) == vt.degree;
    }

    // Pendant 3-faces: f is a pendant 3-face of v when v is not on f but
    // is adjacent to a 3-vertex on f.
    std::vector<int> three_faces;
    for (int fid = 0; fid < nf; ++fid)
        if (g.face(fid).degree() == 3 && fid != tax.c0) three_faces.push_back(fid);
    for (int v = 0; v < n; ++v) {
        auto& vt = tax.vert[v];
        for (int fid : three_faces) {
            const Face& f = g.face(fid);
            if (f.contains(v)) continue;
            bool pendant = false;
            for (int w : f.verts)
                if (g.degree(w) == 3 && g.skeleton().has_edge(v, w)) {
                    pendant = true;
                    break;
                }
            if (!pendant) continue;
            vt.pendant3_any.push_back(fid);
            if (tax.face[fid].fclass == FClass::internal) vt.pendant3_f3.push_back(fid);
        }
    }

    // §4 special-face taxonomy on internal 4-faces.
    for (int fid = 0; fid < nf; ++fid) {
        const Face& f = g.face(fid);
        auto& ft = tax.face[fid];
        if (f.degree() != 4 || ft.fclass != FClass::internal || !f.simple()) continue;

        int rich_heavy = 0;
        for (int v : f.verts) {
            int d = g.degree(v);
            if (d >= 6 || (d == 5 && tax.rich_vertex(v))) ++rich_heavy;
        }
        ft.rich = rich_heavy >= 2;

        auto all_poor = [&](int d) {
            for (int v : f.verts)
                if (g.degree(v) == d && !tax.vert[v].poor) return false;
            return true;
        };

        if (face_matches(g, fid, {deg(3), deg(4), deg(4), deg(5)})) {
            int tri_fours = 0;
            for (int v : f.verts)
                if (g.degree(v) == 4 && tax.vert[v].triangle_incident) ++tri_fours;
            ft.special_3445 = tri_fours == 0;
            ft.weak_3445 = tri_fours == 1;
        }
        if ((face_matches(g, fid, {deg(3), deg(4), deg(5), deg(5)}) ||
             face_matches(g, fid, {deg(3), deg(5), deg(4), deg(5)}) ||
             face_matches(g, fid, {deg(3), deg(5), deg(5), deg(5)})) &&
            all_poor(5))
            ft.special_multi5 = true;
        if (face_matches(g, fid, {deg(4), deg(4), deg(5), deg(5)}) && all_poor(5) &&
            all_poor(4))
            ft.special_multi5 = true;
        if (face_matches(g, fid, {deg(4), deg(4), deg(4), deg(5)})) {
            // Special when the 5-vertex and the two 4-vertices beside it
            // are poor; the opposite 4-vertex is unconstrained.
            int five = -1;
            for (int i = 0; i < 4; ++i)
                if (g.degree(f.walk[i]) == 5) five = i;
            if (five >= 0 && tax.vert[f.walk[five]].poor &&
                tax.vert[f.walk[(five + 1) % 4]].poor &&
                tax.vert[f.walk[(five + 3) % 4]].poor)
                ft.special_multi5 = true;
        }
    }

    return tax;
}

}  // namespace pgt
