#pragma once

#include "adeg/exact.hpp"
#include "adeg/gram.hpp"
#include "adeg/graph.hpp"
#include "adeg/result.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adeg {

inline constexpr int kCycleEnumBound = 12;

struct CycleReport {
    std::vector<int> cycle;  // vertex ids in cyclic order
    int length = 0;
    int negative_count = 0;
    bool positive = false;  // length and negative_count have different parity
};

/// All simple cycles of the underlying graph. Guarded by a vertex bound.
Result<std::vector<CycleReport>> enumerate_cycles(const SignedGraph& g,
                                                  int bound = kCycleEnumBound);

struct CyclesVerdict {
    bool all_positive = true;
    std::optional<CycleReport> failing;
};

Result<CyclesVerdict> all_cycles_positive(const SignedGraph& g, int bound = kCycleEnumBound);

struct MinorCertificate {
    std::string pattern_name;
    /// pattern vertex id -> host vertex id, injective
    std::vector<std::pair<int, int>> embedding;
};

/// A mined minimal non-positive tree. Patterns are unsigned (signs on a tree
/// never matter); `shape` carries all-positive signs.
struct MinorPattern {
    std::string name;
    std::string alias;  // provisional letter from the usual forbidden list
    SignedGraph shape;
    Int gram_det;
    std::vector<Int> kernel;
};

/// Cycles are covered by the parity rule instead of explicit patterns: the
/// length-n cycle class with negative count == n (mod 2) is non-positive.
struct CycleClass {
    int length = 0;
    int bad_parity = 0;  // length % 2
};

struct MinorCatalog {
    int max_n = 0;
    std::vector<MinorPattern> trees;
    std::vector<CycleClass> cycle_classes;
};

/// Exact backtracking induced-subgraph search over the catalog trees.
std::optional<MinorCertificate> find_forbidden_minor(const SignedGraph& g,
                                                     const MinorCatalog& catalog);

/// Brute-force derivation of all minimal non-positive trees on <= max_n
/// vertices (every proper connected induced subgraph positive), plus the
/// cycle parity classes. max_n <= 10.
MinorCatalog mine_minimal_minors(int max_n);

/// Shared catalog at the default mining bound of 9 vertices.
const MinorCatalog& default_catalog();

/// All free trees on n vertices up to isomorphism, all-positive signs,
/// vertex ids 0..n-1. Deterministic order.
std::vector<SignedGraph> enumerate_trees(int n);

/// Induced-subgraph embedding of `pattern`'s underlying graph into `host`'s,
/// if one exists (pattern id -> host id).
std::optional<std::vector<std::pair<int, int>>> induced_embedding(const SignedGraph& pattern,
                                                                  const SignedGraph& host);

}  // namespace adeg
