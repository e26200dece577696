#pragma once

#include "adeg/graph.hpp"
#include "adeg/moves.hpp"
#include "adeg/reducer.hpp"
#include "adeg/result.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace adeg {

/// Oriented plane graph: a signed payload, one direction per edge, and a
/// rotation system (cyclic neighbour order per vertex). Faces are derived by
/// tracing; `outer_face` indexes the traced face list.
struct PlaneGraph {
    SignedGraph graph;
    std::map<std::pair<int, int>, int> dir;  // key (min,max); +1 = min->max
    std::map<int, std::vector<int>> rotation;
    int outer_face = 0;
};

int edge_dir(const PlaneGraph& p, int u, int v);  // +1 if u->v, -1 if v->u
void set_edge_dir(PlaneGraph& p, int tail, int head);

struct Face {
    std::vector<std::pair<int, int>> darts;  // (from,to) in walk order
};

/// Face orbits of the rotation system, in deterministic trace order.
/// Fails with euler_violation when some component is not plane (V-E+F != 2).
Result<std::vector<Face>> faces(const PlaneGraph& p);

struct CheckerboardReport {
    bool valid = false;
    /// per traced face: 0/1 for bounded faces, -1 for unbounded
    std::vector<int> coloring;
    /// a bounded face whose boundary is not a directed cycle, if any
    std::optional<int> bad_face;
    /// odd closed walk in the bounded-face adjacency graph, if any
    std::vector<int> odd_dual_cycle;
};

/// Checkerboard validity: every bounded face boundary is a coherently
/// directed simple cycle and the bounded-face dual is bipartite.
Result<CheckerboardReport> validate_checkerboard(const PlaneGraph& p);

/// t'-move on the payload plus a local rotation repair (new edges enter next
/// to the moved edge); the move is rejected when the result is not a valid
/// checkerboard embedding.
Result<std::pair<PlaneGraph, MoveRecord>> checkerboard_move(const PlaneGraph& p, int x, int y);

struct PlaneReduction {
    ADEType ade;
    Transcript transcript;  // payload-level moves, replayable on p.graph
    IMat cert;
    PlaneGraph end;
};

using PlaneReductionResult = std::variant<PlaneReduction, NonPositive>;

/// Reduction restricted to moves that keep checkerboard validity.
Result<PlaneReductionResult> reduce_checkerboard(const PlaneGraph& p,
                                                 const SearchLimits& limits = {});

}  // namespace adeg
