#include "pgt/discharge.hpp"

#include <algorithm>

#include "pgt/errors.hpp"

namespace pgt {

std::string element_key(const Element& e) {
    return (e.kind == Element::Kind::vertex ? "v" : "f") + std::to_string(e.id);
}

Rational ChargeLedger::initial_sum() const {
    Rational s = 0;
    for (const auto& [e, q] : initial) s += q;
    return s;
}

Rational ChargeLedger::final_sum() const {
    Rational s = 0;
    for (const auto& [e, q] : final_charges) s += q;
    return s;
}

Rational ChargeLedger::outflow(const Element& e) const {
    Rational s = 0;
    for (const auto& t : transfers)
        if (t.from == e) s += t.amount;
    return s;
}

Rational ChargeLedger::inflow(const Element& e) const {
    Rational s = 0;
    for (const auto& t : transfers)
        if (t.to == e) s += t.amount;
    return s;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    const int outer = g.outer();
    ChargeLedger led;
    for (int v = 0; v < g.n(); ++v) led.initial[vert_el(v)] = rat(2 * g.degree(v) - 6);
    for (const auto& f : g.faces())
        led.initial[face_el(f.id)] =
            f.id == outer ? rat(f.degree() + 6) : rat(f.degree() - 6);
    led.final_charges = led.initial;
    check_internal(led.initial_sum() == 0, "initial charges do not sum to zero");
    return led;
}

namespace {

struct Engine {
    const PlaneGraph& g;
    const Taxonomy& tax;
    ChargeLedger led;
    std::map<int, Rational> face_inflow;
    std::map<int, Rational> phase1_inflow;  // snapshot before poor 4-vertices act

    void give(Element from, Element to, const Rational& amount, const char* rule) {
        if (amount == 0) return;
        check_internal(amount > 0, "negative transfer amount");
        led.transfers.push_back({from, to, amount, rule});
        led.final_charges[from] -= amount;
        led.final_charges[to] += amount;
        if (to.kind == Element::Kind::face) face_inflow[to.id] += amount;
    }

    bool is_f3(int fid) const {
        return g.face(fid).degree() == 3 && tax.face[fid].fclass == FClass::internal;
    }
    bool is_f4(int fid) const {
        return g.face(fid).degree() == 4 && tax.face[fid].fclass == FClass::internal;
    }

    std::vector<int> incident_4faces(int v) const {  // any class, never C0
        std::vector<int> out;
        for (int fid : tax.vert[v].faces)
            if (g.face(fid).degree() == 4 && fid != tax.c0) out.push_back(fid);
        return out;
    }

    std::vector<int> incident_f4_faces(int v) const {  // b(f) disjoint from C0
        std::vector<int> out;
        for (int fid : tax.vert[v].faces)
            if (is_f4(fid)) out.push_back(fid);
        return out;
    }

    void split_evenly(int v, const Rational& remaining, const std::vector<int>& faces,
                      const char* rule) {
        if (faces.empty() || remaining <= 0) return;
        Rational each = remaining / static_cast<int>(faces.size());
        for (int fid : faces) give(vert_el(v), face_el(fid), each, rule);
    }

    // The "furthermore" branches of R1.1.1 and R1.2.1 distribute whatever
    // is left of the initial charge evenly; a donor on a triangle feeds
    // every incident 4-face, one off a triangle feeds F4 faces only. The
    // derived bounds (a rich 4-vertex on a triangle pays a lone 4-face
    // 2 - 5/4 = 3/4, a rich 5-vertex pays 4 - 2 = 2, and so on) all come
    // out of this split.
    void rich_4(int v) {
        const char* rule = "R1.1.1";
        Rational given = 0;
        std::vector<int> fixed;
        auto pay = [&](int fid, const Rational& q) {
            give(vert_el(v), face_el(fid), q, rule);
            given += q;
        };
        for (int fid : tax.vert[v].faces)
            if (is_f3(fid))
                pay(fid, face_matches(g, fid, {deg(3), deg(4), deg(4)}, v) ? rat(5, 4)
                                                                           : rat(1));
        for (int fid : tax.vert[v].pendant3_f3) pay(fid, rat(1, 2));
        for (int fid : tax.vert[v].faces)
            if (is_f4(fid) && face_matches(g, fid, {deg(3), deg(3), deg(4), deg_plus(4)}, v)) {
                pay(fid, rat(1));
                fixed.push_back(fid);
            }
        std::vector<int> qual;
        for (int fid : tax.vert[v].triangle_incident ? incident_4faces(v)
                                                     : incident_f4_faces(v))
            if (std::find(fixed.begin(), fixed.end(), fid) == fixed.end())
                qual.push_back(fid);
        split_evenly(v, rat(2) - given, qual, rule);
    }

    void rich_5(int v) {
        const char* rule = "R1.2.1";
        Rational given = 0;
        auto pay = [&](int fid, const Rational& q) {
            give(vert_el(v), face_el(fid), q, rule);
            given += q;
        };
        for (int fid : tax.vert[v].faces)
            if (is_f3(fid))
                pay(fid, face_matches(g, fid, {deg(3), deg_minus(4), deg(5)}, v) ? rat(2)
                                                                                 : rat(3, 2));
        for (int fid : tax.vert[v].pendant3_f3) pay(fid, rat(1, 2));
        split_evenly(v, rat(4) - given,
                     tax.vert[v].triangle_incident ? incident_4faces(v)
                                                   : incident_f4_faces(v),
                     rule);
    }

    void poor_5(int v) {
        const char* rule = "R1.2.2";
        for (int fid : tax.vert[v].faces) {
            check_internal(is_f4(fid), "poor 5-vertex with a non-F4 corner");
            const auto& ft = tax.face[fid];
            Rational q;
            if (face_matches(g, fid, {deg(3), deg(3), deg(5), deg_plus(4)}, v) ||
                face_matches(g, fid, {deg(3), deg(4), deg(5), deg(4)}, v) ||
                ft.special_3445)
                q = rat(1);
            else if (ft.special_multi5 || ft.weak_3445)
                q = rat(3, 4);
            else if (ft.rich)
                q = rat(0);
            else
                q = rat(1, 2);
            give(vert_el(v), face_el(fid), q, rule);
        }
    }

    void big_vertex(int v) {
        const char* rule = "R1.3";
        Rational given = 0;
        auto pay = [&](int fid, const Rational& q) {
            give(vert_el(v), face_el(fid), q, rule);
            given += q;
        };
        for (int fid : tax.vert[v].faces)
            if (g.face(fid).degree() == 3 && fid != tax.c0) pay(fid, rat(2));
        for (int fid : tax.vert[v].pendant3_any) pay(fid, rat(1, 2));
        split_evenly(v, rat(2 * g.degree(v) - 6) - given, incident_4faces(v), rule);
    }

    void c0_vertex(int v) {
        const char* rule = "R2";
        for (int fid : tax.vert[v].pendant3_f3) give(vert_el(v), face_el(fid), rat(1, 2), rule);
        for (int fid : tax.vert[v].faces) {
            const int fd = g.face(fid).degree();
            const FClass fc = tax.face[fid].fclass;
            if (fd == 4 && fc == FClass::two) give(vert_el(v), face_el(fid), rat(1), rule);
            if ((fd == 3 && fc == FClass::two) || (fd == 4 && fc == FClass::one))
                give(vert_el(v), face_el(fid), rat(3, 2), rule);
            if (fd == 3 && fc == FClass::one) give(vert_el(v), face_el(fid), rat(3), rule);
        }
    }

    void c0_face() {
        const char* rule = "R3";
        for (int v : tax.c0_verts) {
            int d = g.degree(v);
            if (d == 2) give(face_el(tax.c0), vert_el(v), rat(2), rule);
            if (d == 3) give(face_el(tax.c0), vert_el(v), rat(3, 2), rule);
            if (d == 4) give(face_el(tax.c0), vert_el(v), rat(1), rule);
        }
        const Face& c0 = g.face(tax.c0);
        if (c0.degree() == 7 && tax.t2 == 6) {
            // The compensating face: shares an edge with C0, largest
            // degree, lowest id on ties.
            int best = -1;
            const auto& w = c0.walk;
            for (size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                int f = g.face_of(b, a);
                if (f == tax.c0) continue;
                if (best < 0 || g.face(f).degree() > g.face(best).degree() ||
                    (g.face(f).degree() == g.face(best).degree() && f < best))
                    best = f;
            }
            check_internal(best >= 0, "no inner face shares an edge with C0");
            give(face_el(best), face_el(tax.c0), rat(1), rule);
        }
    }

    void poor_4_phase(int v) {
        // R1.1.2: top the face up to zero, split over the poor 4-vertices
        // on it, never negative. w(f) is the inflow from donors outside Q,
        // i.e. everything phase 1 delivered.
        for (int fid : tax.vert[v].faces) {
            check_internal(is_f4(fid), "poor 4-vertex with a non-F4 corner");
            std::vector<int> q_set;
            for (int u : g.face(fid).verts)
                if (g.degree(u) == 4 && tax.vert[u].poor) q_set.push_back(u);
            check_internal(!q_set.empty(), "poor 4-vertex missing from its own face");
            Rational w = 0;
            if (auto it = phase1_inflow.find(fid); it != phase1_inflow.end()) w = it->second;
            Rational amt = (rat(2) - w) / static_cast<int>(q_set.size());
            if (amt < 0) amt = 0;
            give(vert_el(v), face_el(fid), amt, "R1.1.2");
        }
    }

    void run() {
        led = initial_charges(g);
        const Face& c0 = g.face(tax.c0);
        check_arg(c0.degree() == 3 || c0.degree() == 7, "C0 must be a 3- or 7-face");
        check_arg(c0.simple(), "C0 boundary walk must be a simple cycle");

        std::vector<int> poor4;
        for (int v = 0; v < g.n(); ++v) {
            const auto& vt = tax.vert[v];
            if (vt.on_c0) {
                c0_vertex(v);
                continue;
            }
            if (vt.degree == 4 && vt.poor) {
                poor4.push_back(v);
                continue;  // phase 2
            }
            if (vt.degree == 4) rich_4(v);
            else if (vt.degree == 5 && vt.poor) poor_5(v);
            else if (vt.degree == 5) rich_5(v);
            else if (vt.degree >= 6) big_vertex(v);
        }
        c0_face();
        phase1_inflow = face_inflow;
        for (int v : poor4) poor_4_phase(v);

        check_internal(led.final_sum() == 0, "transfers broke the zero sum");
    }
};

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, const Taxonomy& tax) {
    Engine e{g, tax};
    e.run();
    return std::move(e.led);
}

ChargeLedger discharge(const PlaneGraph& g) {
    Taxonomy tax = classify(g);
    return apply_rules(g, tax);
}

Audit audit_final(const ChargeLedger& ledger) {
    Audit audit;
    audit.total = ledger.final_sum();
    for (const auto& [e, q] : ledger.final_charges)
        if (q < 0) audit.negatives.push_back({e, q});
    return audit;
}

}  // namespace pgt
