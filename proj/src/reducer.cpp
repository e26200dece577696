#include "adeg/reducer.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace adeg {

std::string ade_name(const ADEType& t) {
    switch (t.family) {
        case ADEFamily::A: return "A" + std::to_string(t.rank);
        case ADEFamily::D: return "D" + std::to_string(t.rank);
        case ADEFamily::E: return "E" + std::to_string(t.rank);
    }
    return "?";
}

namespace {

struct Arm {
    std::vector<int> ids;  // from the branch outward, branch excluded
};

std::vector<int> path_order(const SignedGraph& g) {
    // g is a path; return ids from the endpoint with the smaller id
    const int n = g.n();
    int e1 = -1, e2 = -1;
    for (int i = 0; i < n; ++i) {
        if (g.degree(g.id_at(i)) <= 1) (e1 < 0 ? e1 : e2) = i;
    }
    int start = g.id_at(e1);
    if (e2 >= 0) start = std::min(start, g.id_at(e2));
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        for (int nb : g.neighbors(cur)) {
            if (nb != prev) {
                order.push_back(nb);
                prev = cur;
                cur = nb;
                break;
            }
        }
    }
    return order;
}

}  // namespace

std::optional<ADEType> recognize_ade(const SignedGraph& g) {
    const int n = g.n();
    if (n == 0 || !g.is_connected() || g.edge_count() != n - 1) return std::nullopt;

    int branch = -1, maxdeg = 0;
    for (int i = 0; i < n; ++i) {
        int d = g.degree(g.id_at(i));
        maxdeg = std::max(maxdeg, d);
        if (d == 3) branch = i;
        if (d > 3) return std::nullopt;
    }

    if (maxdeg <= 2) {
        ADEType t;
        t.family = ADEFamily::A;
        t.rank = n;
        t.vertex_map = n == 1 ? std::vector<int>{g.id_at(0)} : path_order(g);
        return t;
    }

    int deg3 = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(g.id_at(i)) == 3) ++deg3;
    if (deg3 != 1) return std::nullopt;

    const int branch_id = g.id_at(branch);
    std::vector<Arm> arms;
    for (int nb : g.neighbors(branch_id)) {
        Arm a;
        int prev = branch_id, cur = nb;
        while (true) {
            a.ids.push_back(cur);
            int follow = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) follow = w;
            if (follow < 0) break;
            prev = cur;
            cur = follow;
        }
        arms.push_back(std::move(a));
    }
    std::sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b) {
        if (a.ids.size() != b.ids.size()) return a.ids.size() < b.ids.size();
        return a.ids.back() < b.ids.back();
    });
    const size_t l0 = arms[0].ids.size(), l1 = arms[1].ids.size(), l2 = arms[2].ids.size();

    ADEType t;
    if (l0 == 1 && l1 == 1) {
        t.family = ADEFamily::D;  // arms (1,1,k)
        t.rank = n;
    } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
        t.family = ADEFamily::E;  // arms (1,2,2|3|4)
        t.rank = n;
    } else {
        return std::nullopt;
    }

    // canonical layout: path positions 0..n-2, leaf position n-1 attached at
    // position 1 (D) or 2 (E)
    std::vector<int>& vm = t.vertex_map;
    vm.assign(n, -1);
    if (t.family == ADEFamily::D) {
        // positions: arm0-end, branch, long arm...; leaf arm1 at the end slot
        vm[0] = arms[0].ids[0];
        vm[1] = branch_id;
        for (size_t i = 0; i < l2; ++i) vm[2 + i] = arms[2].ids[i];
        vm[n - 1] = arms[1].ids[0];
    } else {
        // positions: short(2) arm reversed, branch, long arm...; leaf at end
        vm[0] = arms[1].ids[1];
        vm[1] = arms[1].ids[0];
        vm[2] = branch_id;
        for (size_t i = 0; i < l2; ++i) vm[3 + i] = arms[2].ids[i];
        vm[n - 1] = arms[0].ids[0];
    }
    return t;
}

Int expected_det(const ADEType& t) {
    switch (t.family) {
        case ADEFamily::A: return Int(t.rank + 1);
        case ADEFamily::D: return Int(4);
        case ADEFamily::E: return Int(9 - t.rank);  // E6:3 E7:2 E8:1
    }
    return Int(0);
}

Result<std::vector<int>> peel_order(const SignedGraph& g) {
    if (!g.is_connected())
        return make_error(Errc::invalid_input, "peel_order: graph is disconnected");
    std::vector<int> alive = g.vertex_ids();
    std::vector<int> removal;
    while (alive.size() > 1) {
        int pick = -1;
        // remove the largest-id vertex whose removal keeps the rest connected
        for (auto it = alive.rbegin(); it != alive.rend(); ++it) {
            std::vector<int> rest;
            for (int id : alive)
                if (id != *it) rest.push_back(id);
            if (g.induced(rest).is_connected()) { pick = *it; break; }
        }
        removal.push_back(pick);
        alive.erase(std::find(alive.begin(), alive.end(), pick));
    }
    removal.push_back(alive[0]);
    std::reverse(removal.begin(), removal.end());
    return removal;
}

namespace {

struct Score {
    int edges;
    int cycles;
    int maxdeg;
    auto operator<=>(const Score&) const = default;
};

Score score_of(const SignedGraph& g) {
    int e = g.edge_count();
    int comps = static_cast<int>(g.components().size());
    int md = 0;
    for (int i = 0; i < g.n(); ++i) md = std::max(md, g.degree(g.id_at(i)));
    return Score{e, e - g.n() + comps, md};
}

std::string memo_key(const SignedGraph& g) {
    return g.n() <= kCanonicalKeyBound ? canonical_key(g) : exact_key(g);
}

// Best-first search over move sequences of the given mode. Successors are
// generated in (pivot id, other id) order and ties in the priority queue are
// broken by insertion sequence, so the returned transcript is deterministic.
Result<std::vector<MoveRecord>> move_search(const SignedGraph& start, MoveMode mode,
                                            const std::function<bool(const SignedGraph&)>& goal,
                                            const SearchLimits& limits) {
    struct Node {
        SignedGraph g;
        int parent;
        MoveRecord move;
        int depth;
    };
    auto reconstruct = [](const std::vector<Node>& nodes, int idx) {
        std::vector<MoveRecord> moves;
        for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) moves.push_back(nodes[i].move);
        std::reverse(moves.begin(), moves.end());
        return moves;
    };

    if (goal(start)) return std::vector<MoveRecord>{};

    std::vector<Node> nodes;
    nodes.push_back({start, -1, {}, 0});
    std::unordered_set<std::string> visited{memo_key(start)};

    using Entry = std::pair<Score, int>;  // (score, node index); index orders ties
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> open(cmp);
    open.push({score_of(start), 0});

    while (!open.empty()) {
        auto [sc, idx] = open.top();
        open.pop();
        Node cur = nodes[idx];  // copy: nodes may reallocate below
        if (cur.depth >= limits.max_depth) continue;

        std::vector<int> ids = cur.g.vertex_ids();
        std::sort(ids.begin(), ids.end());
        for (int x : ids) {
            for (int y : ids) {
                if (x == y || cur.g.sign(x, y) == 0) continue;
                if (mode == MoveMode::TPrime && cur.g.degree(y) > 3) continue;
                auto mv = t_move(cur.g, x, y);
                if (!mv) continue;  // not representable here
                auto& [h, rec] = mv.value();
                std::string key = memo_key(h);
                if (!visited.insert(std::move(key)).second) continue;
                nodes.push_back({std::move(h), idx, std::move(rec), cur.depth + 1});
                int ni = static_cast<int>(nodes.size()) - 1;
                if (goal(nodes[ni].g)) return reconstruct(nodes, ni);
                if (nodes.size() > limits.max_states)
                    return make_error(Errc::search_exhausted, "move search: state budget");
                open.push({score_of(nodes[ni].g), ni});
            }
        }
    }
    return make_error(Errc::search_exhausted, "move search: frontier exhausted");
}

std::optional<CycleReport> failing_cycle_of(const SignedGraph& g) {
    if (g.n() > kCycleEnumBound) return std::nullopt;
    auto r = all_cycles_positive(g);
    if (r && !r.value().all_positive) return r.value().failing;
    return std::nullopt;
}

}  // namespace

Result<std::pair<SignedGraph, std::vector<MoveRecord>>> degree_normalize(
    const SignedGraph& g, MoveMode mode, const SearchLimits& limits) {
    DefinitenessReport rep = definiteness(gram_matrix(g));
    if (rep.verdict != Verdict::PositiveDefinite)
        return make_error(Errc::not_positive, "degree_normalize: graph is not positive");
    auto goal = [](const SignedGraph& h) {
        for (int i = 0; i < h.n(); ++i)
            if (h.degree(h.id_at(i)) > 3) return false;
        return true;
    };
    auto moves = move_search(g, mode, goal, limits);
    if (!moves) return moves.error();
    auto end = apply_transcript(g, moves.value());
    if (!end) return end.error();
    return std::pair{std::move(end).value(), std::move(moves).value()};
}

Result<ReductionResult> reduce_to_ade(const SignedGraph& g, MoveMode mode,
                                      const SearchLimits& limits) {
    if (!g.is_connected())
        return make_error(Errc::invalid_input, "reduce_to_ade: use classify on disconnected input");

    DefinitenessReport rep = definiteness(gram_matrix(g));
    if (rep.verdict != Verdict::PositiveDefinite) {
        NonPositive np;
        np.definiteness = std::move(rep);
        np.failing_cycle = failing_cycle_of(g);
        np.minor = find_forbidden_minor(g, default_catalog());
        return ReductionResult{std::move(np)};
    }

    auto [normalized, switches] = tree_normalized(g);
    std::vector<MoveRecord> moves;
    for (int v : switches) {
        MoveRecord r;
        r.kind = MoveKind::Switch;
        r.vertex = v;
        moves.push_back(std::move(r));
    }

    auto order = peel_order(normalized);
    if (!order) return order.error();
    const std::vector<int>& peel = order.value();

    SignedGraph cur = normalized;
    for (size_t k = 2; k <= peel.size(); ++k) {
        std::vector<int> prefix(peel.begin(), peel.begin() + k);
        SignedGraph sub = cur.induced(prefix);
        auto goal = [](const SignedGraph& h) { return recognize_ade(h).has_value(); };
        auto found = move_search(sub, mode, goal, limits);
        if (!found) return found.error();
        for (const MoveRecord& rec : found.value()) {
            auto next = apply_move(cur, rec);
            if (!next)
                return make_error(Errc::search_exhausted,
                                  "reduce_to_ade: prefix move failed on the full graph");
            cur = std::move(next).value();
            moves.push_back(rec);
        }
    }

    auto ade = recognize_ade(cur);
    if (!ade)
        return make_error(Errc::search_exhausted, "reduce_to_ade: end state is not a diagram");

    if (ade->vertex_map != cur.vertex_ids()) {
        MoveRecord perm;
        perm.kind = MoveKind::Permute;
        perm.permutation = ade->vertex_map;
        cur = cur.reordered(perm.permutation);
        moves.push_back(std::move(perm));
        ade = recognize_ade(cur);
    }

    auto u = certificate(g, moves);
    if (!u) return u.error();

    Reduction red;
    red.ade = std::move(*ade);
    red.transcript = Transcript{g, std::move(moves), cur};
    red.cert = std::move(u).value();
    return ReductionResult{std::move(red)};
}

Result<ClassifyReport> classify(const SignedGraph& g, MoveMode mode, const SearchLimits& limits) {
    ClassifyReport out;
    out.definiteness = definiteness(gram_matrix(g));
    out.all_positive = out.definiteness.verdict == Verdict::PositiveDefinite;
    for (const std::vector<int>& comp : g.components()) {
        ComponentReport c;
        c.vertices = comp;
        SignedGraph sub = g.induced(comp);
        auto red = reduce_to_ade(sub, mode, limits);
        if (!red) return red.error();
        if (auto* ok = std::get_if<Reduction>(&red.value())) {
            c.definiteness = definiteness(gram_matrix(sub));
            c.reduction = std::move(*ok);
        } else {
            auto& np = std::get<NonPositive>(red.value());
            c.definiteness = std::move(np.definiteness);
            c.failing_cycle = std::move(np.failing_cycle);
            c.minor = std::move(np.minor);
        }
        out.components.push_back(std::move(c));
    }
    return out;
}

}  // namespace adeg
