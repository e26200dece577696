#pragma once

#include "adeg/certificates.hpp"
#include "adeg/exact.hpp"
#include "adeg/gram.hpp"
#include "adeg/graph.hpp"
#include "adeg/moves.hpp"
#include "adeg/result.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace adeg {

enum class ADEFamily { A, D, E };

/// Canonical diagram layouts, by position:
///   A_n: path 0-1-...-(n-1)
///   D_n: path 0..n-2 with the extra leaf n-1 attached to position 1
///   E_n: path 0..n-2 with the extra leaf n-1 attached to position 2
struct ADEType {
    ADEFamily family = ADEFamily::A;
    int rank = 0;
    /// canonical diagram position -> vertex id
    std::vector<int> vertex_map;
};

std::string ade_name(const ADEType& t);

/// The type and vertex map iff the underlying graph is exactly one of the
/// diagrams (signs arbitrary).
std::optional<ADEType> recognize_ade(const SignedGraph& g);

/// A_n: n+1, D_n: 4, E6: 3, E7: 2, E8: 1.
Int expected_det(const ADEType& t);

/// Vertex order v_1..v_n in which every prefix induces a connected subgraph.
Result<std::vector<int>> peel_order(const SignedGraph& g);

enum class MoveMode { T, TPrime };

struct SearchLimits {
    int max_depth = 25;
    size_t max_states = 4'000'000;
};

struct Reduction {
    ADEType ade;
    Transcript transcript;
    IMat cert;
};

struct NonPositive {
    DefinitenessReport definiteness;
    std::optional<CycleReport> failing_cycle;
    std::optional<MinorCertificate> minor;
};

using ReductionResult = std::variant<Reduction, NonPositive>;

/// Lowers every degree to <= 3 with moves of the given mode (bounded,
/// memoized search). Requires a positive graph.
Result<std::pair<SignedGraph, std::vector<MoveRecord>>> degree_normalize(
    const SignedGraph& g, MoveMode mode, const SearchLimits& limits = {});

/// Classification of a connected signed graph: exact definiteness gate, then
/// peel-and-reinsert induction with a bounded best-first move search per
/// stage. On positive input the result carries a diagram of the same rank, a
/// replayable transcript from the input graph, and a verified unimodular
/// congruence certificate. Search exhaustion on positive input signals an
/// internal failure, never a verdict.
Result<ReductionResult> reduce_to_ade(const SignedGraph& g, MoveMode mode,
                                      const SearchLimits& limits = {});

struct ComponentReport {
    std::vector<int> vertices;
    DefinitenessReport definiteness;
    std::optional<CycleReport> failing_cycle;
    std::optional<MinorCertificate> minor;
    std::optional<Reduction> reduction;
};

struct ClassifyReport {
    bool all_positive = true;
    DefinitenessReport definiteness;  // of the whole graph
    std::vector<ComponentReport> components;
};

/// Bundled report (componentwise): definiteness, failing cycle and forbidden
/// minor when present, ADE reduction when positive.
Result<ClassifyReport> classify(const SignedGraph& g, MoveMode mode = MoveMode::T,
                                const SearchLimits& limits = {});

}  // namespace adeg
