#pragma once

#include "adeg/exact.hpp"
#include "adeg/gram.hpp"
#include "adeg/graph.hpp"
#include "adeg/result.hpp"

#include <utility>
#include <vector>

namespace adeg {

enum class MoveKind { TMove, Switch, Permute };

/// One replayable rewriting step. TMove records the pivot x (the modified
/// vertex), the other endpoint y and the edge sign at application time, so a
/// transcript is unambiguous on its own.
struct MoveRecord {
    MoveKind kind = MoveKind::TMove;
    int pivot = -1;
    int other = -1;
    int epsilon = 0;
    int vertex = -1;                // Switch
    std::vector<int> permutation;   // Permute: vertex ids in new stored order

    bool operator==(const MoveRecord& o) const = default;
};

struct Transcript {
    SignedGraph start;
    std::vector<MoveRecord> moves;
    SignedGraph end;
};

/// Toggles the pivot's edges against the other endpoint's neighbours with
/// epsilon-dependent signs, then negates the moved edge. Fails with
/// not_representable when a triangle through (x, y) is not positive, i.e. the
/// congruent matrix would leave {-1,0,1}.
Result<std::pair<SignedGraph, MoveRecord>> t_move(const SignedGraph& g, int x, int y);

/// t_move restricted to deg(y) in {1,2,3}.
Result<std::pair<SignedGraph, MoveRecord>> t_prime_move(const SignedGraph& g, int x, int y);

Result<SignedGraph> apply_move(const SignedGraph& g, const MoveRecord& rec);

/// Replays a move list; reports the first inapplicable move with its index.
Result<SignedGraph> apply_transcript(const SignedGraph& start,
                                     const std::vector<MoveRecord>& moves);

/// Ordered product of elementary matrices realizing the transcript, so that
/// U^t gram(start) U = gram(end) with |det U| = 1.
Result<IMat> certificate(const SignedGraph& start, const std::vector<MoveRecord>& moves);
Result<IMat> certificate(const Transcript& t);

Result<bool> verify_certificate(const GramMatrix& m0, const IMat& u, const GramMatrix& m1);

}  // namespace adeg
