#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace adeg {

struct Edge {
    int u = 0;
    int v = 0;
    int sign = 1;
};

/// Simple graph with +-1 edge signs and a stable, ordered vertex-id list.
/// The stored order defines matrix indexing everywhere in the library.
/// Values are immutable in practice: operations return modified copies.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(std::vector<int> vertex_ids);

    int n() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& vertex_ids() const { return ids_; }
    bool has_vertex(int id) const;
    int pos_of(int id) const;  // throws std::out_of_range on unknown id
    int id_at(int pos) const { return ids_[pos]; }

    /// Edge sign by vertex ids, 0 when absent.
    int sign(int u, int v) const;
    int sign_at(int i, int j) const { return adj_[static_cast<size_t>(i) * n() + j]; }

    /// Construction-time edge insertion; rejects loops, duplicates and
    /// unknown endpoints.
    void add_edge(int u, int v, int sign);
    /// Low-level sign assignment by position (0 removes the edge). The move
    /// engine copies first, then patches.
    void set_sign_at(int i, int j, int s);

    int edge_count() const;
    std::vector<Edge> edges() const;  // ordered by (pos(u), pos(v))
    int degree(int id) const;
    std::vector<int> neighbors(int id) const;  // ids in stored order

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    /// Induced subgraph; keeps the stored order restricted to the subset.
    SignedGraph induced(const std::vector<int>& subset_ids) const;
    /// Same graph with the stored vertex order permuted.
    SignedGraph reordered(const std::vector<int>& new_id_order) const;

    bool operator==(const SignedGraph& o) const = default;

private:
    std::vector<int> ids_;
    std::vector<int8_t> adj_;
};

/// Flips the sign of every edge incident to v (congruence by diag(-1 at v)).
SignedGraph switched(const SignedGraph& g, int v);

/// Switching-equivalent graph whose BFS spanning forest is all-positive,
/// together with the list of switched vertices that produces it.
std::pair<SignedGraph, std::vector<int>> tree_normalized(const SignedGraph& g);

inline constexpr int kCanonicalKeyBound = 10;

/// Opaque key equal for two graphs iff they are isomorphic as signed graphs
/// up to switching. Exponential in the worst case; guarded by `bound`.
/// Throws std::length_error above the bound.
std::string canonical_key(const SignedGraph& g, int bound = kCanonicalKeyBound);

/// Same, ignoring signs (plain graph isomorphism).
std::string canonical_key_unsigned(const SignedGraph& g, int bound = kCanonicalKeyBound);

/// Cheap exact encoding of the labelled graph (no quotient); usable as a
/// memoization key when the canonical one is out of bounds.
std::string exact_key(const SignedGraph& g);

/// Stable vertex classes of the underlying graph under iterated degree
/// refinement; values are isomorphism-invariant class indices by position.
std::vector<int> refinement_colors(const SignedGraph& g);

}  // namespace adeg
