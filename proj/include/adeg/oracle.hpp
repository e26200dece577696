#pragma once

#include "adeg/gram.hpp"
#include "adeg/graph.hpp"
#include "adeg/reducer.hpp"
#include "adeg/result.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace adeg {

struct EnumerationSpec {
    int max_vertices = 6;
    bool connected = true;
    enum class Modulo { none, iso, iso_switching } modulo = Modulo::iso_switching;
    enum class Signing { all, positive_cycles_only, unsigned_only } signing = Signing::all;
};

/// Exhaustive, duplicate-free stream of graphs on 1..max_vertices vertices
/// modulo the requested quotient, in a deterministic order. The callback may
/// return false to stop early. Returns the number of graphs visited.
Result<size_t> enumerate_graphs(const EnumerationSpec& spec,
                                const std::function<bool(const SignedGraph&)>& fn);

/// Connected underlying graphs on exactly n vertices up to isomorphism
/// (all-positive signs, ids 0..n-1). Cached; n <= 8.
const std::vector<SignedGraph>& connected_graphs(int n);

/// Independent definiteness oracle: all-principal-minors Sylvester test via
/// memoized cofactor expansion (no elimination). n <= 10.
Result<DefinitenessReport> brute_force_definiteness(const GramMatrix& m);

struct EquivalenceReport {
    int max_n = 0;
    size_t graphs = 0;
    size_t positive = 0;
    std::map<std::string, size_t> type_counts;
    size_t failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions
    bool ok = true;
};

/// Executable content of the classification theorems: over every connected
/// signed graph on <= max_n vertices (mod iso + switching), the reducer
/// succeeds iff the Gram form is positive definite, in both move modes, with
/// verified certificates and matching (rank, det).
EquivalenceReport exhaustive_equivalence_check(int max_n);

struct DefinitenessAgreementReport {
    int max_n = 0;
    size_t graphs = 0;
    size_t disagreements = 0;
    std::vector<std::string> notes;
    bool ok = true;
};

DefinitenessAgreementReport definiteness_agreement(int max_n);

struct PlanarSuiteReport {
    int max_n = 0;
    size_t positive_classes = 0;
    size_t embeddable_classes = 0;
    int max_degree_seen = 0;
    size_t violations = 0;
    std::vector<std::string> notes;
    bool ok = true;
};

/// Positive signed graphs admitting a plane checkerboard embedding:
/// max degree <= 6, and for n >= 3 some vertex has degree 2 or 3.
/// Embeddability is decided by direct rotation-system enumeration.
PlanarSuiteReport checkerboard_degree_suite(int max_n);

struct CoherenceReport {
    int max_n = 0;
    size_t embeddings = 0;
    size_t agreements = 0;
    size_t disagreements = 0;
    std::string first_disagreement;
};

/// Compares the face-based checkerboard validation against the literal
/// "every cycle is coherently directed" condition over all small plane
/// embeddings with all edge orientations. The outcome is reported, not
/// assumed anywhere.
CoherenceReport coherence_check(int max_n);

/// Does the underlying graph admit a plane checkerboard embedding?
/// Exhaustive over rotation systems and outer-face choices.
bool checkerboard_embeddable(const SignedGraph& g);

}  // namespace adeg
