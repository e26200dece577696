#pragma once

#include "adeg/exact.hpp"
#include "adeg/gram.hpp"
#include "adeg/graph.hpp"
#include "adeg/reducer.hpp"
#include "adeg/result.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adeg {

struct BraidWord {
    int strands = 2;
    std::vector<int> letters;  // generator indices in [1, strands-1]
};

/// Accepts whitespace-separated `s<k>` tokens or bare integers, with an
/// optional `strands=<s>` prefix; otherwise strands = 1 + max index.
Result<BraidWord> parse_braid(const std::string& text);

/// Upper-triangular integer matrix with unit diagonal; m = v + v^t.
struct SeifertForm {
    IMat v;
    GramMatrix m;
};

/// A brick: two consecutive occurrences of the same generator.
struct Brick {
    int column = 0;  // generator index
    int top = 0;     // word positions, 0-based
    int bottom = 0;
};

struct LinkingGraph {
    SignedGraph graph;
    SeifertForm form;
    std::vector<Brick> bricks;  // vertex i of `graph` is bricks[i]
};

/// Brick intersection graph of a positive braid word. Vertices are bricks;
/// edges join consecutive bricks in a column and interleaved bricks in
/// adjacent columns. Signs follow the plumbing convention validated by the
/// torus-link cross-checks in the tests: -1 within a column, +-1 across
/// columns by interleaving direction.
LinkingGraph linking_graph(const BraidWord& b);

/// n_plus - n_minus of m, exactly.
int signature(const SeifertForm& form);

struct LinkClassification {
    BraidWord word;
    LinkingGraph linking;
    DefinitenessReport definiteness;
    int rank = 0;
    int sig = 0;
    Int det = 1;
    bool maximal = false;                 // signature == rank
    std::optional<Reduction> reduction;   // present when maximal and rank > 0
};

/// Theorem-1.1-style pipeline: Seifert form, signature, and on a positive
/// form the ADE reduction of the linking graph.
Result<LinkClassification> classify_link(const BraidWord& b, bool run_reduction = true);

}  // namespace adeg
