#pragma once

#include <string>
#include <vector>

#include "pgt/coloring.hpp"
#include "pgt/discharge.hpp"
#include "pgt/graph_class.hpp"
#include "pgt/plane_graph.hpp"
#include "pgt/taxonomy.hpp"

namespace pgt {

/// Reduction recipe: delete the listed vertices, then identify each part.
struct Recipe {
    std::vector<int> del;
    std::vector<std::vector<int>> parts;
    bool empty() const { return del.empty() && parts.empty(); }
};

/// A located instance of a structural configuration. `violation` matches
/// are patterns a minimal counterexample cannot contain (finding one means
/// the instance is reducible there); `tool` matches are applicability
/// records for the identification lemma.
struct ConfigurationMatch {
    std::string lemma;
    bool violation = true;
    std::vector<std::pair<std::string, int>> vroles;  // role label -> vertex
    std::vector<std::pair<std::string, int>> froles;  // role label -> face
    Recipe recipe;
    /// Vertices the completion step may recolor (survivors outside the
    /// identified parts). Deleted vertices are always free.
    std::vector<int> free_vertices;

    bool has_recipe() const { return !recipe.empty(); }
    std::vector<Element> elements() const;
    bool covers(const Element& e) const;
    std::string key() const;  // dedup key: lemma + sorted matched elements
};

/// Locates every occurrence of the §3 catalogue in (g, C0). Requires the
/// outer face. Matches are deduplicated up to relabeling of symmetric
/// roles and reported in a deterministic order.
std::vector<ConfigurationMatch> scan(const PlaneGraph& g);
std::vector<ConfigurationMatch> scan(const PlaneGraph& g, const Taxonomy& tax);

/// Straight-line re-check of the lemma hypotheses against the match's
/// roles, independent of the scanner's search logic.
bool revalidate(const PlaneGraph& g, const Taxonomy& tax, const ConfigurationMatch& m);

struct OracleResult {
    enum class Verdict { pass, fail, class_contradiction };
    Verdict verdict = Verdict::fail;
    int sigma_before = 0;
    int sigma_after = 0;
    bool reduced_in_class = false;
    int boundaries = 0;  // boundary colorings tried
    int extended = 0;    // boundary colorings whose completion succeeded
    SolveStats stats;
    std::string note;
};

/// Brute-force reducibility check for a scanned match: applies the recipe,
/// asserts sigma-descent, checks the reduced graph's class membership, and
/// for every boundary coloring of C0 solves the reduced instance and then
/// re-solves g with the reduced coloring pinned everywhere except the
/// deleted and recolor-allowed vertices. PASS means every boundary
/// coloring completes.
OracleResult verify_reduction(const PlaneGraph& g, const ConfigurationMatch& m,
                              const ColoringSpec& spec);

/// Matches whose elements include the given element. Violation matches
/// only; an empty result for a negatively charged element is the
/// "theorem gap" signal callers must report loudly.
std::vector<ConfigurationMatch> explain_negative_charge(
    const std::vector<ConfigurationMatch>& scanned, const Element& element);

/// Lemma ids with a planted-instance constructor and a reduction recipe.
const std::vector<std::string>& plantable_lemmas();

}  // namespace pgt
