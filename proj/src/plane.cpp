#include "adeg/plane.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace adeg {

namespace {

std::pair<int, int> norm(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

int edge_dir(const PlaneGraph& p, int u, int v) {
    auto it = p.dir.find(norm(u, v));
    if (it == p.dir.end()) return 0;
    return (u < v) ? it->second : -it->second;
}

void set_edge_dir(PlaneGraph& p, int tail, int head) {
    p.dir[norm(tail, head)] = tail < head ? 1 : -1;
}

Result<std::vector<Face>> faces(const PlaneGraph& p) {
    const SignedGraph& g = p.graph;
    // structural checks: rotations must match neighbourhoods, every edge
    // needs a direction
    for (int i = 0; i < g.n(); ++i) {
        int id = g.id_at(i);
        std::vector<int> nb = g.neighbors(id);
        auto it = p.rotation.find(id);
        std::vector<int> rot = it == p.rotation.end() ? std::vector<int>{} : it->second;
        std::vector<int> a = nb, b = rot;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return make_error(Errc::invalid_input,
                              "plane: rotation at vertex " + std::to_string(id) +
                                  " does not list its neighbours");
    }
    for (const Edge& e : g.edges())
        if (edge_dir(p, e.u, e.v) == 0)
            return make_error(Errc::invalid_input, "plane: edge without direction");

    std::map<std::pair<int, int>, int> next_pos;  // dart -> index of 'from' in rotation[to]
    for (const auto& [v, rot] : p.rotation)
        for (size_t i = 0; i < rot.size(); ++i) next_pos[{rot[i], v}] = static_cast<int>(i);

    std::set<std::pair<int, int>> seen;
    std::vector<Face> out;
    for (int i = 0; i < g.n(); ++i) {
        int v = g.id_at(i);
        auto it = p.rotation.find(v);
        if (it == p.rotation.end()) continue;
        for (int w : it->second) {
            std::pair<int, int> start{v, w};
            if (seen.count(start)) continue;
            Face f;
            std::pair<int, int> d = start;
            do {
                seen.insert(d);
                f.darts.push_back(d);
                const std::vector<int>& rot = p.rotation.at(d.second);
                int idx = next_pos.at(d);
                int nxt = rot[(idx + 1) % rot.size()];
                d = {d.second, nxt};
            } while (d != start);
            out.push_back(std::move(f));
        }
    }

    // Euler per component (isolated vertices carry no faces and are fine)
    std::map<int, int> comp_of;
    auto comps = g.components();
    for (size_t c = 0; c < comps.size(); ++c)
        for (int id : comps[c]) comp_of[id] = static_cast<int>(c);
    std::vector<int> fcount(comps.size(), 0);
    for (const Face& f : out) ++fcount[comp_of[f.darts[0].first]];
    for (size_t c = 0; c < comps.size(); ++c) {
        int vc = static_cast<int>(comps[c].size());
        if (vc == 1) continue;
        int ec = g.induced(comps[c]).edge_count();
        if (vc - ec + fcount[c] != 2)
            return make_error(Errc::euler_violation,
                              "plane: rotation system is not a planar embedding");
    }
    return out;
}

namespace {

// Per-component unbounded face: the annotated one for its component, the
// longest boundary elsewhere (disjointly drawn components share the plane's
// unbounded region).
std::vector<char> unbounded_mask(const PlaneGraph& p, const std::vector<Face>& fs) {
    std::map<int, int> comp_of;
    auto comps = p.graph.components();
    for (size_t c = 0; c < comps.size(); ++c)
        for (int id : comps[c]) comp_of[id] = static_cast<int>(c);
    std::vector<char> mask(fs.size(), 0);
    std::vector<int> chosen(comps.size(), -1);
    if (p.outer_face >= 0 && p.outer_face < static_cast<int>(fs.size()))
        chosen[comp_of[fs[p.outer_face].darts[0].first]] = p.outer_face;
    for (size_t c = 0; c < comps.size(); ++c) {
        if (chosen[c] >= 0) continue;
        size_t best = 0;
        int best_idx = -1;
        for (size_t f = 0; f < fs.size(); ++f) {
            if (comp_of[fs[f].darts[0].first] != static_cast<int>(c)) continue;
            if (best_idx < 0 || fs[f].darts.size() > best) {
                best = fs[f].darts.size();
                best_idx = static_cast<int>(f);
            }
        }
        if (best_idx >= 0) chosen[c] = best_idx;
    }
    for (int f : chosen)
        if (f >= 0) mask[f] = 1;
    return mask;
}

}  // namespace

Result<CheckerboardReport> validate_checkerboard(const PlaneGraph& p) {
    auto fs = faces(p);
    if (!fs) return fs.error();
    const std::vector<Face>& faces_ = fs.value();
    if (p.graph.edge_count() > 0 &&
        (p.outer_face < 0 || p.outer_face >= static_cast<int>(faces_.size())))
        return make_error(Errc::invalid_input, "plane: outer face index out of range");

    CheckerboardReport rep;
    std::vector<char> outer = unbounded_mask(p, faces_);

    // (a) bounded faces are coherently directed simple cycles
    for (size_t f = 0; f < faces_.size(); ++f) {
        if (outer[f]) continue;
        const Face& face = faces_[f];
        bool all_fwd = true, all_bwd = true;
        std::set<int> verts;
        for (const auto& [u, v] : face.darts) {
            verts.insert(u);
            int d = edge_dir(p, u, v);
            if (d > 0) all_bwd = false;
            if (d < 0) all_fwd = false;
        }
        if (!(all_fwd || all_bwd) || verts.size() != face.darts.size()) {
            rep.valid = false;
            rep.bad_face = static_cast<int>(f);
            return rep;
        }
    }

    // (b) bounded-face dual (faces sharing an edge) is bipartite
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t f = 0; f < faces_.size(); ++f)
        for (const auto& [u, v] : faces_[f].darts)
            edge_faces[norm(u, v)].push_back(static_cast<int>(f));
    std::vector<std::vector<int>> dual(faces_.size());
    for (const auto& [e, flist] : edge_faces) {
        if (flist.size() != 2) continue;
        int a = flist[0], b = flist[1];
        if (a == b || outer[a] || outer[b]) continue;
        dual[a].push_back(b);
        dual[b].push_back(a);
    }
    rep.coloring.assign(faces_.size(), -1);
    std::vector<int> parent(faces_.size(), -1);
    for (size_t s = 0; s < faces_.size(); ++s) {
        if (outer[s] || rep.coloring[s] != -1) continue;
        rep.coloring[s] = 0;
        std::vector<int> queue{static_cast<int>(s)};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int f = queue[qi];
            for (int t : dual[f]) {
                if (rep.coloring[t] == -1) {
                    rep.coloring[t] = 1 - rep.coloring[f];
                    parent[t] = f;
                    queue.push_back(t);
                } else if (rep.coloring[t] == rep.coloring[f]) {
                    // odd closed walk: paths to the common root plus this edge
                    std::vector<int> pa{f}, pb{t};
                    for (int v = f; parent[v] >= 0; v = parent[v]) pa.push_back(parent[v]);
                    for (int v = t; parent[v] >= 0; v = parent[v]) pb.push_back(parent[v]);
                    while (pa.size() > 1 && pb.size() > 1 &&
                           pa[pa.size() - 2] == pb[pb.size() - 2]) {
                        pa.pop_back();
                        pb.pop_back();
                    }
                    rep.odd_dual_cycle = pa;
                    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it)
                        rep.odd_dual_cycle.push_back(*it);
                    rep.valid = false;
                    return rep;
                }
            }
        }
    }
    rep.valid = true;
    return rep;
}

Result<std::pair<PlaneGraph, MoveRecord>> checkerboard_move(const PlaneGraph& p, int x, int y) {
    auto mv = t_prime_move(p.graph, x, y);
    if (!mv) return mv.error();
    auto& [h, rec] = mv.value();

    if (!p.rotation.count(x) || !p.rotation.count(y))
        return make_error(Errc::invalid_input, "checkerboard_move: missing rotation data");

    PlaneGraph q;
    q.graph = h;
    q.dir = p.dir;
    q.rotation = p.rotation;

    std::vector<int> removed, added;
    for (int v : p.graph.vertex_ids()) {
        if (v == x) continue;
        int before = p.graph.sign(x, v) != 0;
        int after = h.sign(x, v) != 0;
        if (before && !after) removed.push_back(v);
        if (!before && after) added.push_back(v);
    }

    for (int v : removed) {
        q.dir.erase(norm(x, v));
        auto& rx = q.rotation[x];
        if (auto it = std::find(rx.begin(), rx.end(), v); it != rx.end()) rx.erase(it);
        auto& rv = q.rotation[v];
        if (auto it = std::find(rv.begin(), rv.end(), x); it != rv.end()) rv.erase(it);
    }

    // new edges inherit the direction of the edge they shadow at y and enter
    // the rotations next to the moved edge
    std::vector<int> add_order;
    {
        const auto& ry = p.rotation.at(y);
        int xi = static_cast<int>(std::find(ry.begin(), ry.end(), x) - ry.begin());
        for (size_t k = 1; k <= ry.size(); ++k) {
            int v = ry[(xi + k) % ry.size()];
            if (std::find(added.begin(), added.end(), v) != added.end()) add_order.push_back(v);
        }
    }
    for (int v : add_order) {
        if (edge_dir(p, y, v) > 0)
            set_edge_dir(q, x, v);
        else
            set_edge_dir(q, v, x);
        auto& rv = q.rotation[v];
        auto pos = std::find(rv.begin(), rv.end(), y);
        rv.insert(pos == rv.end() ? rv.end() : pos + 1, x);
    }
    {
        auto& rx = q.rotation[x];
        auto pos = std::find(rx.begin(), rx.end(), y);
        rx.insert(pos == rx.end() ? rx.end() : pos + 1, add_order.begin(), add_order.end());
    }

    // re-designate the unbounded face: first surviving dart of the old outer walk
    auto old_faces = faces(p);
    auto new_faces = faces(q);
    if (!new_faces) return make_error(Errc::not_checkerboard, new_faces.error().message);
    q.outer_face = 0;
    if (old_faces && p.outer_face >= 0 &&
        p.outer_face < static_cast<int>(old_faces.value().size())) {
        const Face& old_outer = old_faces.value()[p.outer_face];
        int found = -1;
        for (const auto& dart : old_outer.darts) {
            if (q.graph.sign(dart.first, dart.second) == 0) continue;
            for (size_t f = 0; f < new_faces.value().size() && found < 0; ++f)
                for (const auto& d2 : new_faces.value()[f].darts)
                    if (d2 == dart) { found = static_cast<int>(f); break; }
            if (found >= 0) break;
        }
        if (found < 0) {
            size_t best = 0;
            for (size_t f = 0; f < new_faces.value().size(); ++f)
                if (new_faces.value()[f].darts.size() >
                    new_faces.value()[best].darts.size())
                    best = f;
            found = static_cast<int>(best);
        }
        q.outer_face = found;
    }

    auto rep = validate_checkerboard(q);
    if (!rep) return rep.error();
    if (!rep.value().valid)
        return make_error(Errc::not_checkerboard,
                          "checkerboard_move: result is not a valid checkerboard embedding");
    return std::pair{std::move(q), rec};
}

namespace {

std::string plane_key(const PlaneGraph& p) {
    std::string k = exact_key(p.graph);
    k += '|';
    for (const auto& [e, d] : p.dir) {
        k += std::to_string(e.first) + (d > 0 ? ">" : "<") + std::to_string(e.second) + ";";
    }
    k += '|';
    for (const auto& [v, rot] : p.rotation) {
        k += std::to_string(v) + ":";
        for (int w : rot) k += std::to_string(w) + ",";
        k += ";";
    }
    k += '|' + std::to_string(p.outer_face);
    return k;
}

}  // namespace

Result<PlaneReductionResult> reduce_checkerboard(const PlaneGraph& p, const SearchLimits& limits) {
    {
        auto rep = validate_checkerboard(p);
        if (!rep) return rep.error();
        if (!rep.value().valid)
            return make_error(Errc::not_checkerboard,
                              "reduce_checkerboard: input is not a valid checkerboard embedding");
    }
    DefinitenessReport def = definiteness(gram_matrix(p.graph));
    if (def.verdict != Verdict::PositiveDefinite) {
        NonPositive np;
        np.definiteness = std::move(def);
        if (p.graph.n() <= kCycleEnumBound) {
            auto cv = all_cycles_positive(p.graph);
            if (cv && !cv.value().all_positive) np.failing_cycle = cv.value().failing;
        }
        np.minor = find_forbidden_minor(p.graph, default_catalog());
        return PlaneReductionResult{std::move(np)};
    }

    struct Node {
        PlaneGraph p;
        int parent;
        MoveRecord move;
        int depth;
    };
    std::vector<Node> nodes;
    nodes.push_back({p, -1, {}, 0});
    std::unordered_set<std::string> visited{plane_key(p)};

    auto finish = [&](int idx) -> Result<PlaneReductionResult> {
        std::vector<MoveRecord> moves;
        for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) moves.push_back(nodes[i].move);
        std::reverse(moves.begin(), moves.end());
        PlaneReduction red;
        red.end = nodes[idx].p;
        auto ade = recognize_ade(red.end.graph);
        red.ade = *ade;
        red.transcript = Transcript{p.graph, moves, red.end.graph};
        auto u = certificate(p.graph, moves);
        if (!u) return u.error();
        red.cert = std::move(u).value();
        return PlaneReductionResult{std::move(red)};
    };
    if (recognize_ade(p.graph)) return finish(0);

    struct Entry {
        int edges;
        int seq;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.edges != b.edges) return a.edges > b.edges;
        return a.seq > b.seq;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> open(cmp);
    open.push({p.graph.edge_count(), 0});

    while (!open.empty()) {
        Entry e = open.top();
        open.pop();
        Node cur = nodes[e.seq];
        if (cur.depth >= limits.max_depth) continue;
        std::vector<int> ids = cur.p.graph.vertex_ids();
        std::sort(ids.begin(), ids.end());
        for (int x : ids)
            for (int y : ids) {
                if (x == y || cur.p.graph.sign(x, y) == 0) continue;
                auto mv = checkerboard_move(cur.p, x, y);
                if (!mv) continue;
                auto& [np, rec] = mv.value();
                if (!visited.insert(plane_key(np)).second) continue;
                nodes.push_back({std::move(np), e.seq, std::move(rec), cur.depth + 1});
                int ni = static_cast<int>(nodes.size()) - 1;
                if (recognize_ade(nodes[ni].p.graph)) return finish(ni);
                if (nodes.size() > limits.max_states)
                    return make_error(Errc::search_exhausted, "reduce_checkerboard: state budget");
                open.push({nodes[ni].p.graph.edge_count(), ni});
            }
    }
    return make_error(Errc::search_exhausted, "reduce_checkerboard: frontier exhausted");
}

}  // namespace adeg
