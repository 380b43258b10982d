#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pgt/plane_graph.hpp"
#include "pgt/rational.hpp"
#include "pgt/taxonomy.hpp"

namespace pgt {

struct Element {
    enum class Kind { vertex, face };
    Kind kind = Kind::vertex;
    int id = 0;
    auto operator<=>(const Element&) const = default;
};

inline Element vert_el(int v) { return {Element::Kind::vertex, v}; }
inline Element face_el(int f) { return {Element::Kind::face, f}; }
std::string element_key(const Element& e);  // "v3" / "f2"

struct Transfer {
    Element from;
    Element to;
    Rational amount;
    std::string rule;
};

/// Exact charge ledger: initial charges, itemized rule-tagged transfers,
/// and the resulting final charges. Both initial and final sum to zero on
/// every run; this is asserted, not hoped for.
struct ChargeLedger {
    std::map<Element, Rational> initial;
    std::vector<Transfer> transfers;
    std::map<Element, Rational> final_charges;

    Rational initial_sum() const;
    Rational final_sum() const;
    Rational outflow(const Element& e) const;
    Rational inflow(const Element& e) const;
};

/// Initial charges for any designated outer face: mu(v) = 2d(v) - 6,
/// mu(f) = d(f) - 6 for inner faces, mu(C0) = d(C0) + 6. The zero sum is
/// Euler's formula in disguise and holds for every connected plane graph.
ChargeLedger initial_charges(const PlaneGraph& g);

/// Runs rules R1-R3 and fills the transfer list and final charges.
/// Requires C0 to be a simple 3- or 7-cycle face. Two-phase evaluation:
/// every donor except poor 4-vertices acts first, so the weight w(f) that
/// poor 4-vertices top up against is well defined.
ChargeLedger apply_rules(const PlaneGraph& g, const Taxonomy& tax);

/// classify + apply_rules in one call.
ChargeLedger discharge(const PlaneGraph& g);

struct AuditFinding {
    Element element;
    Rational final_charge;
};

struct Audit {
    std::vector<AuditFinding> negatives;  // ascending element order
    Rational total;                       // always 0
};

Audit audit_final(const ChargeLedger& ledger);

}  // namespace pgt
